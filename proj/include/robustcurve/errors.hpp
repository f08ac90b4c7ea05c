#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace robustcurve {

/// Invalid or infeasible arguments (generator parameters, curve specs, shapes).
class ParameterError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Malformed external data: edge lists, record files, manifests.
class FormatError : public std::runtime_error {
  public:
    explicit FormatError(const std::string& what) : std::runtime_error(what) {}
    FormatError(const std::string& what, std::size_t line)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    /// 1-based line number, or 0 when the error is not tied to a line.
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_ = 0;
};

/// Lookup of an element that is not part of the graph.
class LookupError : public std::out_of_range {
  public:
    using std::out_of_range::out_of_range;
};

}  // namespace robustcurve
