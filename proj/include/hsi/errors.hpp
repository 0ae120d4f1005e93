#pragma once

#include <stdexcept>
#include <string>

namespace hsi {

/// Malformed textual input (CLI exit code 2).
class ParseError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input outside an operation's domain (CLI exit code 3).
class DomainError : public std::runtime_error {
   public:
    DomainError(std::string kind, const std::string& what)
        : std::runtime_error(kind + ": " + what), kind_(std::move(kind)) {}
    const std::string& kind() const noexcept { return kind_; }

   private:
    std::string kind_;
};

}  // namespace hsi
