#pragma once

#include <stdexcept>
#include <string>

namespace gk {

// A raw token that is nothing but whitespace/punctuation normalizes to the
// empty string, which is not a word.
struct EmptyToken : std::runtime_error {
    explicit EmptyToken(const std::string &raw)
        : std::runtime_error("token '" + raw + "' is empty after normalization") {}
};

// Malformed dictionary input. line is 1-based; 0 when no line is known
// (e.g. structural errors reported by the JSON parser).
struct SyntaxError : std::runtime_error {
    int line;
    SyntaxError(int line_, const std::string &msg)
        : std::runtime_error(line_ > 0 ? "line " + std::to_string(line_) + ": " + msg : msg),
          line(line_) {}
};

struct DuplicateEntry : std::runtime_error {
    std::string word;
    explicit DuplicateEntry(std::string w)
        : std::runtime_error("duplicate definiendum '" + w + "'"), word(std::move(w)) {}
};

struct UnknownWord : std::runtime_error {
    std::string word;
    explicit UnknownWord(std::string w)
        : std::runtime_error("unknown word '" + w + "'"), word(std::move(w)) {}
};

struct InvalidPercent : std::runtime_error {
    int value;
    explicit InvalidPercent(int v)
        : std::runtime_error("percentage " + std::to_string(v) + " outside [0, 100]"), value(v) {}
};

// Guard for the deliberately exponential searches.
struct TooLarge : std::runtime_error {
    explicit TooLarge(const std::string &msg) : std::runtime_error(msg) {}
};

} // namespace gk
