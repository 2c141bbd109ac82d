#pragma once

#include <stdexcept>
#include <string>

namespace perron {

// Error category, doubling as the process exit code of the CLI.
enum class ErrorKind : int {
    invalid_input = 2,         // malformed or rejected input
    assumption_violated = 3,   // a precondition of the requested quantity fails
    numeric_failure = 4,       // a numeric routine could not meet its tolerance
};

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, std::string code, const std::string& message)
        : std::runtime_error(message), kind_(kind), code_(std::move(code)) {}

    ErrorKind kind() const noexcept { return kind_; }
    // Stable machine-readable identifier, e.g. "SymbolOutOfRange".
    const std::string& code() const noexcept { return code_; }

private:
    ErrorKind kind_;
    std::string code_;
};

[[noreturn]] inline void throw_invalid(const std::string& code, const std::string& msg) {
    throw Error(ErrorKind::invalid_input, code, msg);
}
[[noreturn]] inline void throw_assumption(const std::string& code, const std::string& msg) {
    throw Error(ErrorKind::assumption_violated, code, msg);
}
[[noreturn]] inline void throw_numeric(const std::string& code, const std::string& msg) {
    throw Error(ErrorKind::numeric_failure, code, msg);
}

}  // namespace perron
