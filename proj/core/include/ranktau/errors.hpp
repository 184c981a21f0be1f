#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace ranktau {

// Input text could not be turned into scores or ranks.
class ParseError : public std::runtime_error {
public:
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line == 0 ? what : "line " + std::to_string(line) + ": " + what),
          line_(line) {}

    // 1-based line of the offending record, 0 when the whole input is at fault.
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

// The requested correlation value does not exist for the given inputs, e.g.
// a vector with zero weighted norm, or no concordant/discordant weight for gamma.
class UndefinedCorrelation : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// AP correlation is only defined for tie-free score vectors.
class TiesNotAllowed : public std::runtime_error {
public:
    TiesNotAllowed(int which_input, const std::string& what)
        : std::runtime_error(what), which_(which_input) {}

    // 1 = first vector carries ties, 2 = second.
    int which_input() const noexcept { return which_; }

private:
    int which_;
};

}  // namespace ranktau
