#ifndef CONTAINERKIT_ERRORS_HPP
#define CONTAINERKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace containerkit {

// Thrown when an enumeration or construction would exceed the configured
// desk-scale limits. CLI maps this to exit code 3.
class ResourceLimitError : public std::runtime_error {
public:
    explicit ResourceLimitError(const std::string& what)
        : std::runtime_error(what) {}
};

// Input file could not be parsed. Carries a 1-based line number when the
// failure is attributable to a specific line (0 otherwise).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& what, int line = 0)
        : std::runtime_error(line > 0 ? what + " (line " + std::to_string(line) + ")"
                                      : what),
          line_(line) {}
    int line() const { return line_; }

private:
    int line_;
};

// A guaranteed-by-theorem search came back empty. Only reachable when the
// caller violated the theorem's preconditions.
class NotFoundError : public std::runtime_error {
public:
    explicit NotFoundError(const std::string& what)
        : std::runtime_error(what) {}
};

// An arithmetic contract that the implementation itself guarantees was
// violated; indicates a bug, not bad input.
class InternalError : public std::logic_error {
public:
    explicit InternalError(const std::string& what)
        : std::logic_error(what) {}
};

} // namespace containerkit

#endif
