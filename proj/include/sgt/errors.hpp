#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace sgt {

// Failure class drives the CLI exit code: input -> 2, numerical -> 3,
// precondition -> 4.
enum class ErrorCategory { Input, Numerical, Precondition };

class Error : public std::runtime_error {
public:
    Error(ErrorCategory category, std::string kind, const std::string& message)
        : std::runtime_error(kind + ": " + message),
          category_(category),
          kind_(std::move(kind)) {}

    ErrorCategory category() const noexcept { return category_; }
    const std::string& kind() const noexcept { return kind_; }

    static Error input(std::string kind, const std::string& msg) {
        return {ErrorCategory::Input, std::move(kind), msg};
    }
    static Error numerical(std::string kind, const std::string& msg) {
        return {ErrorCategory::Numerical, std::move(kind), msg};
    }
    static Error precondition(std::string kind, const std::string& msg) {
        return {ErrorCategory::Precondition, std::move(kind), msg};
    }

private:
    ErrorCategory category_;
    std::string kind_;
};

} // namespace sgt
