#ifndef EDGEMTA_ERROR_HPP
#define EDGEMTA_ERROR_HPP

#include <stdexcept>
#include <string>

namespace edgemta {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Malformed instance/config document. Carries the 1-based line when known.
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0)
        : Error(line ? "line " + std::to_string(line) + ": " + what : what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// Well-formed input that breaks a domain invariant.
class ValidationError : public Error {
public:
    using Error::Error;
};

// The exact solver refuses instances whose search space exceeds its budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

} // namespace edgemta

#endif // EDGEMTA_ERROR_HPP
