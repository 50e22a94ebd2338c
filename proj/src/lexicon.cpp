#include "gk/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <istream>
#include <ostream>
#include <set>
#include <sstream>
#include <unordered_set>

#include <json.hpp>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace gk {

namespace {

bool ascii_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\v' || c == '\f';
}

bool ascii_punct(char c) {
    return std::ispunct(static_cast<unsigned char>(c)) != 0;
}

// Entries large enough that scanning them in parallel pays off.
constexpr size_t kParallelEntries = 4096;

} // namespace

std::string normalize_token(std::string_view raw) {
    size_t b = 0, e = raw.size();
    while (b < e && ascii_space(raw[b]))
        ++b;
    while (e > b && ascii_space(raw[e - 1]))
        --e;
    while (b < e && ascii_punct(raw[b]))
        ++b;
    while (e > b && ascii_punct(raw[e - 1]))
        --e;
    if (b == e)
        throw EmptyToken(std::string(raw));
    std::string out(raw.substr(b, e - b));
    for (char &c : out)
        if (c >= 'A' && c <= 'Z')
            c = static_cast<char>(c - 'A' + 'a');
    return out;
}

ValidationError::ValidationError(ValidationReport r)
    : std::runtime_error("dictionary is not closed: " +
                         std::to_string(r.missing_words.size()) + " missing word(s), " +
                         std::to_string(r.empty_definitions.size()) + " empty definition(s), " +
                         std::to_string(r.duplicate_definienda.size()) + " duplicate(s)"),
      report(std::move(r)) {}

ValidationReport validate(const RawEntries &entries) {
    ValidationReport report;

    std::unordered_set<std::string_view> defined;
    defined.reserve(entries.size() * 2);
    {
        std::unordered_set<std::string_view> seen;
        seen.reserve(entries.size() * 2);
        for (const RawEntry &e : entries) {
            if (!seen.insert(e.word).second)
                report.duplicate_definienda.push_back(e.word);
            defined.insert(e.word);
        }
    }

    const auto n = static_cast<int64_t>(entries.size());
    std::vector<std::pair<std::string, std::string>> missing;
    std::vector<std::string> empty;
    std::vector<std::string> selfdef;

#ifdef _OPENMP
    if (entries.size() >= kParallelEntries) {
#pragma omp parallel
        {
            std::vector<std::pair<std::string, std::string>> lmissing;
            std::vector<std::string> lempty, lself;
#pragma omp for nowait schedule(static)
            for (int64_t i = 0; i < n; ++i) {
                const RawEntry &e = entries[static_cast<size_t>(i)];
                if (e.definientes.empty())
                    lempty.push_back(e.word);
                for (const std::string &d : e.definientes) {
                    if (d == e.word)
                        lself.push_back(e.word);
                    if (!defined.contains(d))
                        lmissing.emplace_back(e.word, d);
                }
            }
#pragma omp critical
            {
                missing.insert(missing.end(), lmissing.begin(), lmissing.end());
                empty.insert(empty.end(), lempty.begin(), lempty.end());
                selfdef.insert(selfdef.end(), lself.begin(), lself.end());
            }
        }
    } else
#endif
    {
        for (int64_t i = 0; i < n; ++i) {
            const RawEntry &e = entries[static_cast<size_t>(i)];
            if (e.definientes.empty())
                empty.push_back(e.word);
            for (const std::string &d : e.definientes) {
                if (d == e.word)
                    selfdef.push_back(e.word);
                if (!defined.contains(d))
                    missing.emplace_back(e.word, d);
            }
        }
    }

    auto sort_unique = [](auto &v) {
        std::sort(v.begin(), v.end());
        v.erase(std::unique(v.begin(), v.end()), v.end());
    };
    sort_unique(missing);
    sort_unique(empty);
    sort_unique(selfdef);
    sort_unique(report.duplicate_definienda);
    report.missing_words = std::move(missing);
    report.empty_definitions = std::move(empty);
    report.self_definitions = std::move(selfdef);
    return report;
}

Dictionary Dictionary::from_entries(const RawEntries &entries, bool allow_open) {
    ValidationReport report = validate(entries);
    const bool acceptable =
        report.ok() || (allow_open && report.empty_definitions.empty() &&
                        report.duplicate_definienda.empty());
    if (!acceptable)
        throw ValidationError(std::move(report));

    Dictionary dict;
    dict.entry_count_ = static_cast<int32_t>(entries.size());

    dict.words_.reserve(entries.size() + report.missing_words.size());
    for (const RawEntry &e : entries) {
        if (e.word.empty() ||
            std::any_of(e.word.begin(), e.word.end(), ascii_space))
            throw std::invalid_argument("invalid word token '" + e.word + "'");
        dict.words_.push_back(e.word);
    }
    for (const auto &[w, missing] : report.missing_words)
        dict.words_.push_back(missing);
    std::sort(dict.words_.begin(), dict.words_.end());
    dict.words_.erase(std::unique(dict.words_.begin(), dict.words_.end()), dict.words_.end());

    auto id_of = [&dict](const std::string &token) {
        auto it = std::lower_bound(dict.words_.begin(), dict.words_.end(), token);
        return static_cast<int32_t>(it - dict.words_.begin());
    };

    dict.defs_.assign(dict.words_.size(), {});
    const auto n = static_cast<int64_t>(entries.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(static) if (entries.size() >= kParallelEntries)
#endif
    for (int64_t i = 0; i < n; ++i) {
        const RawEntry &e = entries[static_cast<size_t>(i)];
        std::vector<int32_t> ids;
        ids.reserve(e.definientes.size());
        for (const std::string &d : e.definientes)
            ids.push_back(id_of(d));
        // definientes are sorted strings and ids are order-isomorphic to
        // tokens, so ids are already sorted
        dict.defs_[static_cast<size_t>(id_of(e.word))] = std::move(ids);
    }

    for (const auto &d : dict.defs_)
        dict.definiens_total_ += static_cast<int64_t>(d.size());
    return dict;
}

std::optional<int32_t> Dictionary::find(std::string_view token) const {
    auto it = std::lower_bound(words_.begin(), words_.end(), token);
    if (it == words_.end() || *it != token)
        return std::nullopt;
    return static_cast<int32_t>(it - words_.begin());
}

void Dictionary::serialize(std::ostream &os) const {
    for (size_t v = 0; v < words_.size(); ++v) {
        if (defs_[v].empty())
            continue; // free words have no entry
        os << words_[v] << " :";
        for (int32_t d : defs_[v])
            os << ' ' << words_[static_cast<size_t>(d)];
        os << '\n';
    }
}

namespace {

void append_entry(RawEntries &entries, std::unordered_set<std::string> &seen,
                  std::string word, std::vector<std::string> defs) {
    std::sort(defs.begin(), defs.end());
    defs.erase(std::unique(defs.begin(), defs.end()), defs.end());
    if (!seen.insert(word).second)
        throw DuplicateEntry(word);
    entries.push_back({std::move(word), std::move(defs)});
}

} // namespace

RawEntries parse_text_entries(std::istream &in) {
    RawEntries entries;
    std::unordered_set<std::string> seen;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line_no == 1 && line.starts_with("\xEF\xBB\xBF"))
            line.erase(0, 3); // UTF-8 BOM
        size_t first = line.find_first_not_of(" \t\r\n\v\f");
        if (first == std::string::npos || line[first] == '#')
            continue;
        size_t colon = line.find(':');
        if (colon == std::string::npos)
            throw SyntaxError(line_no, "expected 'word : definition'");

        std::string word;
        try {
            word = normalize_token(std::string_view(line).substr(0, colon));
        } catch (const EmptyToken &) {
            throw SyntaxError(line_no, "empty definiendum");
        }
        if (std::any_of(word.begin(), word.end(), ascii_space))
            throw SyntaxError(line_no, "definiendum must be a single token");

        std::vector<std::string> defs;
        std::istringstream rhs(line.substr(colon + 1));
        std::string tok;
        while (rhs >> tok) {
            try {
                defs.push_back(normalize_token(tok));
            } catch (const EmptyToken &) {
                throw SyntaxError(line_no, "token '" + tok + "' is empty after normalization");
            }
        }
        if (defs.empty())
            throw SyntaxError(line_no, "empty definition for '" + word + "'");
        append_entry(entries, seen, std::move(word), std::move(defs));
    }
    return entries;
}

RawEntries parse_json_entries(std::istream &in) {
    using nlohmann::json;

    // The DOM keeps only the last value of a repeated key, so duplicates are
    // caught during parsing via the event callback.
    std::unordered_set<std::string> raw_keys;
    std::string duplicate;
    json::parser_callback_t cb = [&](int depth, json::parse_event_t event, json &parsed) {
        if (event == json::parse_event_t::key && depth == 1) {
            auto key = parsed.get<std::string>();
            if (!raw_keys.insert(key).second && duplicate.empty())
                duplicate = key;
        }
        return true;
    };

    json doc;
    try {
        doc = json::parse(in, cb);
    } catch (const json::parse_error &e) {
        throw SyntaxError(0, e.what());
    }
    if (!duplicate.empty())
        throw DuplicateEntry(normalize_token(duplicate));
    if (!doc.is_object())
        throw SyntaxError(0, "top-level JSON value must be an object");

    RawEntries entries;
    std::unordered_set<std::string> seen;
    for (const auto &[key, value] : doc.items()) {
        std::string word;
        try {
            word = normalize_token(key);
        } catch (const EmptyToken &) {
            throw SyntaxError(0, "key '" + key + "' is empty after normalization");
        }
        if (!value.is_array())
            throw SyntaxError(0, "definition of '" + word + "' must be an array");
        if (value.empty())
            throw SyntaxError(0, "empty definition for '" + word + "'");
        std::vector<std::string> defs;
        defs.reserve(value.size());
        for (const auto &item : value) {
            if (!item.is_string())
                throw SyntaxError(0, "definition of '" + word + "' must contain only strings");
            try {
                defs.push_back(normalize_token(item.get<std::string>()));
            } catch (const EmptyToken &) {
                throw SyntaxError(0, "definiens of '" + word + "' is empty after normalization");
            }
        }
        append_entry(entries, seen, std::move(word), std::move(defs));
    }
    return entries;
}

Dictionary parse_text(std::istream &in, bool allow_open) {
    return Dictionary::from_entries(parse_text_entries(in), allow_open);
}

Dictionary parse_json(std::istream &in, bool allow_open) {
    return Dictionary::from_entries(parse_json_entries(in), allow_open);
}

} // namespace gk
