#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "uiverify/errors.hpp"

// Schema plumbing shared by the ontology and prototype loaders. All
// failures surface as SyntaxError; JSON parse errors carry line/column.

namespace uiverify::jsonu {

using nlohmann::json;

inline SourcePos pos_from_offset(std::string_view text, size_t byte_offset) {
    SourcePos pos{1, 1};
    size_t limit = byte_offset == 0 ? 0 : byte_offset - 1;
    if (limit > text.size()) limit = text.size();
    for (size_t i = 0; i < limit; ++i) {
        if (text[i] == '\n') {
            ++pos.line;
            pos.column = 1;
        } else {
            ++pos.column;
        }
    }
    return pos;
}

inline json parse_document(std::string_view text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw SyntaxError(std::string("JSON parse error: ") + e.what(),
                          pos_from_offset(text, e.byte));
    }
}

inline const json& require(const json& obj, const char* key, const std::string& path) {
    if (!obj.is_object()) {
        throw SyntaxError(path + ": expected an object");
    }
    auto it = obj.find(key);
    if (it == obj.end()) {
        throw SyntaxError(path + ": missing required key \"" + key + "\"");
    }
    return *it;
}

inline std::string require_string(const json& obj, const char* key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_string()) {
        throw SyntaxError(path + "." + key + ": expected a string");
    }
    return v.get<std::string>();
}

inline std::string optional_string(const json& obj, const char* key, const std::string& fallback) {
    if (!obj.is_object()) return fallback;
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return fallback;
    if (!it->is_string()) {
        throw SyntaxError(std::string(key) + ": expected a string");
    }
    return it->get<std::string>();
}

inline bool optional_bool(const json& obj, const char* key, bool fallback, const std::string& path) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return fallback;
    if (!it->is_boolean()) {
        throw SyntaxError(path + "." + key + ": expected a boolean");
    }
    return it->get<bool>();
}

inline const json& require_array(const json& obj, const char* key, const std::string& path) {
    const json& v = require(obj, key, path);
    if (!v.is_array()) {
        throw SyntaxError(path + "." + key + ": expected an array");
    }
    return v;
}

inline std::vector<std::string> string_array(const json& arr, const std::string& path) {
    if (!arr.is_array()) {
        throw SyntaxError(path + ": expected an array of strings");
    }
    std::vector<std::string> out;
    out.reserve(arr.size());
    for (const auto& v : arr) {
        if (!v.is_string()) {
            throw SyntaxError(path + ": expected an array of strings");
        }
        out.push_back(v.get<std::string>());
    }
    return out;
}

} // namespace uiverify::jsonu
