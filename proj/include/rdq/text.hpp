#pragma once

#include <cctype>
#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace rdq {

// Malformed text input (bad header, unknown symbol, out-of-range value, ...).
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A computed result contradicts an invariant the library guarantees; always a bug.
struct internal_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace detail {
inline constexpr std::string_view symbol_alphabet =
    "0123456789abcdefghijklmnopqrstuvwxyz";
}

// Largest order whose elements are written as single characters.
inline constexpr int max_symbolic_order = 36;

// Render one element value: single character 0-9a-z while the ambient
// order permits, plain decimal beyond that.
inline std::string format_symbol(int value, int order) {
    if (order <= max_symbolic_order)
        return std::string(1, detail::symbol_alphabet[static_cast<std::size_t>(value)]);
    return std::to_string(value);
}

// Parse one element token.  Single characters are looked up in the symbol
// alphabet when the order permits; anything else must be a decimal integer.
inline int parse_symbol(std::string_view token, int order) {
    if (token.empty()) throw parse_error("empty element token");
    int value = -1;
    if (token.size() == 1 && order <= max_symbolic_order) {
        auto pos = detail::symbol_alphabet.find(token[0]);
        if (pos == std::string_view::npos)
            throw parse_error("unknown element symbol '" + std::string(token) + "'");
        value = static_cast<int>(pos);
    } else {
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size())
            throw parse_error("expected a decimal element value, got '" + std::string(token) + "'");
    }
    if (value < 0 || value >= order)
        throw parse_error("element '" + std::string(token) + "' out of range for order " +
                          std::to_string(order));
    return value;
}

// Parse a plain decimal integer token (headers, counts, parameters).
inline int parse_int(std::string_view token, std::string_view what) {
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size())
        throw parse_error("expected an integer for " + std::string(what) + ", got '" +
                          std::string(token) + "'");
    return value;
}

// Split an input stream into whitespace-separated token lines.  Everything
// from '#' to end of line is a comment; blank lines are skipped.
inline std::vector<std::vector<std::string>> token_lines(std::istream& in) {
    std::vector<std::vector<std::string>> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::vector<std::string> tokens;
        std::istringstream ls(line);
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (!tokens.empty()) lines.push_back(std::move(tokens));
    }
    return lines;
}

inline std::vector<std::vector<std::string>> token_lines(std::string_view text) {
    std::istringstream in{std::string(text)};
    return token_lines(in);
}

}  // namespace rdq
