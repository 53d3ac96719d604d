#pragma once

#include <cctype>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

// Small string helpers shared by the parser, binder and consistency checker.
// Literal prose is matched loosely (case and whitespace folded); quoted
// arguments are kept byte-for-byte.

namespace uiverify::text {

inline char ascii_lower(char c) {
    return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c;
}

inline bool is_space(char c) {
    return c == ' ' || c == '\t' || c == '\r' || c == '\n' || c == '\f' || c == '\v';
}

inline std::string_view trim(std::string_view s) {
    size_t b = 0;
    size_t e = s.size();
    while (b < e && is_space(s[b])) ++b;
    while (e > b && is_space(s[e - 1])) --e;
    return s.substr(b, e - b);
}

inline std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (char c : s) out.push_back(ascii_lower(c));
    return out;
}

inline bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (size_t i = 0; i < a.size(); ++i) {
        if (ascii_lower(a[i]) != ascii_lower(b[i])) return false;
    }
    return true;
}

/// Lowercases, trims, and collapses whitespace runs to single spaces.
inline std::string fold_literal(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    bool pending_space = false;
    for (char c : trim(s)) {
        if (is_space(c)) {
            pending_space = true;
            continue;
        }
        if (pending_space && !out.empty()) out.push_back(' ');
        pending_space = false;
        out.push_back(ascii_lower(c));
    }
    return out;
}

/// A step text split at its double quotes: n quoted arguments surrounded by
/// n+1 literal pieces. Returns nullopt on an unterminated quote.
struct QuoteSplit {
    std::vector<std::string> literals;
    std::vector<std::string> args;
};

inline std::optional<QuoteSplit> split_quoted(std::string_view s) {
    QuoteSplit out;
    std::string current;
    bool in_arg = false;
    for (char c : s) {
        if (c == '"') {
            if (in_arg) {
                out.args.push_back(current);
            } else {
                out.literals.push_back(current);
            }
            current.clear();
            in_arg = !in_arg;
            continue;
        }
        current.push_back(c);
    }
    if (in_arg) return std::nullopt;
    out.literals.push_back(current);
    return out;
}

/// Key under which two phrase shapes collide: the folded literal pieces
/// joined by an unprintable separator. Equal keys = the same step texts match.
inline std::string literal_signature(const std::vector<std::string>& literals) {
    std::string key;
    for (const auto& lit : literals) {
        key += fold_literal(lit);
        key.push_back('\x1f');
    }
    return key;
}

} // namespace uiverify::text
