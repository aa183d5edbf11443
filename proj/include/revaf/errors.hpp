#ifndef revaf_errors_hpp
#define revaf_errors_hpp

#include <cstddef>
#include <stdexcept>
#include <string>

namespace revaf {

// Base class for everything this library throws on purpose.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Violated operation contract: unknown argument key, set not drawn from the
// framework, empty corpus, bad generator parameters, and the like.
class DomainError : public Error {
public:
    explicit DomainError(const std::string& msg) : Error(msg) {}
};

// Malformed input text. line/column are 1-based; 0 means "not applicable".
class ParseError : public Error {
public:
    ParseError(const std::string& msg, std::size_t line = 0, std::size_t column = 0)
        : Error(format(msg, line, column)), line_(line), column_(column) {}

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    static std::string format(const std::string& msg, std::size_t line, std::size_t column) {
        if (line == 0) return msg;
        std::string out = msg + " (line " + std::to_string(line);
        if (column != 0) out += ", column " + std::to_string(column);
        out += ")";
        return out;
    }

    std::size_t line_;
    std::size_t column_;
};

// Framework too large for exhaustive enumeration.
class SizeLimitError : public Error {
public:
    SizeLimitError(std::size_t actual, std::size_t bound)
        : Error("framework has " + std::to_string(actual) +
                " arguments, exceeding the enumeration bound of " + std::to_string(bound)),
          actual_(actual), bound_(bound) {}

    std::size_t actual() const { return actual_; }
    std::size_t bound() const { return bound_; }

private:
    std::size_t actual_;
    std::size_t bound_;
};

} // namespace revaf

#endif
