#pragma once

#include <stdexcept>
#include <string>

namespace happy {

// Input file could not be parsed; carries the offending line number (1-based).
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string &what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

// An enumeration or DP exceeded its configured budget.
class ResourceLimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A solver or reduction produced something its own contract forbids.
// Always indicates a bug; never swallowed.
class InternalError : public std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace happy
