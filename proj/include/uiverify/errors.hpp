#pragma once

#include <stdexcept>
#include <string>

namespace uiverify {

/// 1-based source position; line 0 means "unknown".
struct SourcePos {
    int line = 0;
    int column = 0;
    bool operator==(const SourcePos&) const = default;
};

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed input document (story text, ontology/prototype JSON).
class SyntaxError : public Error {
public:
    SyntaxError(const std::string& message, SourcePos pos = {})
        : Error(message), pos_(pos) {}
    SourcePos pos() const { return pos_; }

private:
    SourcePos pos_;
};

/// Structurally well-formed input that violates a model constraint
/// (unknown element class, abstract class instantiated, bad property value, ...).
class ValidationError : public Error {
public:
    ValidationError(const std::string& message, std::string locus = {})
        : Error(message), locus_(std::move(locus)) {}
    const std::string& locus() const { return locus_; }

private:
    std::string locus_;
};

class UnknownClassError : public Error {
public:
    explicit UnknownClassError(const std::string& id)
        : Error("unknown element class: " + id), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

class UnknownBehaviorError : public Error {
public:
    explicit UnknownBehaviorError(const std::string& id)
        : Error("unknown behavior: " + id), id_(id) {}
    const std::string& id() const { return id_; }

private:
    std::string id_;
};

class IoError : public Error {
public:
    using Error::Error;
};

} // namespace uiverify
