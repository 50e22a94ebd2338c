#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "gk/errors.hpp"

namespace gk {

// Normalizes a raw token into a word: trims whitespace, strips leading and
// trailing ASCII punctuation, lowercases ASCII letters. Interior characters
// (including non-ASCII bytes) are preserved verbatim. Throws EmptyToken when
// nothing remains.
std::string normalize_token(std::string_view raw);

// One parsed entry: a definiendum and its definientes. Tokens are expected
// to be normalized already; definientes are sorted and deduplicated.
struct RawEntry {
    std::string word;
    std::vector<std::string> definientes;

    bool operator==(const RawEntry &) const = default;
};
using RawEntries = std::vector<RawEntry>;

// Defects found in a set of raw entries. All lists are sorted.
// self_definitions is informational only (a word may define itself) and does
// not affect ok().
struct ValidationReport {
    std::vector<std::pair<std::string, std::string>> missing_words; // (definiendum, undefined definiens)
    std::vector<std::string> empty_definitions;
    std::vector<std::string> duplicate_definienda;
    std::vector<std::string> self_definitions;

    bool ok() const {
        return missing_words.empty() && empty_definitions.empty() &&
               duplicate_definienda.empty();
    }
};

// Checks that every definiens has its own entry, that no definition is empty
// and that no definiendum repeats. Defects are data, not errors.
ValidationReport validate(const RawEntries &entries);

struct ValidationError : std::runtime_error {
    ValidationReport report;
    explicit ValidationError(ValidationReport r);
};

// An immutable dictionary: every word is defined and (in strict mode) every
// defining word is itself defined. Words are interned; the id of a word is
// its position in the lexicographically sorted word list, so iterating ids
// in order yields tokens in lexicographic order.
class Dictionary {
public:
    Dictionary() = default;

    // Builds a dictionary from raw entries, validating first. In strict mode
    // any defect throws ValidationError. With allow_open, definientes without
    // an entry of their own are admitted as free words: they become ids with
    // an empty definiens list.
    static Dictionary from_entries(const RawEntries &entries, bool allow_open = false);

    int32_t size() const { return static_cast<int32_t>(words_.size()); }
    int32_t entry_count() const { return entry_count_; }
    const std::vector<std::string> &words() const { return words_; }
    const std::string &word(int32_t id) const { return words_[static_cast<size_t>(id)]; }
    std::span<const int32_t> definientes(int32_t id) const {
        return defs_[static_cast<size_t>(id)];
    }
    bool is_defined(int32_t id) const { return !defs_[static_cast<size_t>(id)].empty(); }
    std::optional<int32_t> find(std::string_view token) const;
    // true when free words were admitted (allow_open and at least one hit)
    bool open() const { return entry_count_ != size(); }
    int64_t definiens_total() const { return definiens_total_; }

    // Writes the text format; parsing the output reproduces this dictionary.
    void serialize(std::ostream &os) const;

    bool operator==(const Dictionary &) const = default;

private:
    std::vector<std::string> words_;         // sorted, unique
    std::vector<std::vector<int32_t>> defs_; // sorted ids; empty = free word
    int32_t entry_count_ = 0;
    int64_t definiens_total_ = 0;
};

// Text format: one entry per line, `word : tok tok ...`. `#` starts a
// comment line, blank lines are ignored. Throws SyntaxError (with the
// 1-based line number) and DuplicateEntry.
RawEntries parse_text_entries(std::istream &in);

// JSON format: a single object mapping words to arrays of words.
RawEntries parse_json_entries(std::istream &in);

Dictionary parse_text(std::istream &in, bool allow_open = false);
Dictionary parse_json(std::istream &in, bool allow_open = false);

} // namespace gk
