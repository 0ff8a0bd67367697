#pragma once

#include <stdexcept>
#include <string>

namespace supportlab {

// Every error carries a short machine-parsable category; the CLI prints it
// as the first token of its single-line failure message.
class Error : public std::runtime_error {
public:
    Error(std::string category, const std::string& what)
        : std::runtime_error(what), category_(std::move(category)) {}
    const std::string& category() const noexcept { return category_; }

private:
    std::string category_;
};

struct ConfigError : Error {
    explicit ConfigError(const std::string& what) : Error("config", what) {}
};

struct ArgumentError : Error {
    explicit ArgumentError(const std::string& what) : Error("argument", what) {}
};

struct LookupError : Error {
    explicit LookupError(const std::string& what) : Error("lookup", what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error("io", what) {}
};

struct FormatError : Error {
    explicit FormatError(const std::string& what) : Error("format", what) {}
};

// Non-finite value in a loss or gradient. `where` names the frame index or
// parameter block that went bad.
struct NumericalError : Error {
    NumericalError(const std::string& what, std::string where)
        : Error("numerical", what), where_(std::move(where)) {}
    const std::string& where() const noexcept { return where_; }

private:
    std::string where_;
};

}  // namespace supportlab
