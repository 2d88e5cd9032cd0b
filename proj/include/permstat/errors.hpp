#ifndef PERMSTAT_ERRORS_HPP
#define PERMSTAT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace permstat {

/// Malformed textual input (permutation or vincular pattern syntax).
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// A statistic, bijection or suite name that is not registered.
class UnknownNameError : public std::runtime_error {
public:
  explicit UnknownNameError(const std::string& what) : std::runtime_error(what) {}
};

/// An operation was applied outside its domain, e.g. a bijection to a
/// permutation containing the forbidden pattern. The message names the
/// violated requirement.
class PreconditionError : public std::runtime_error {
public:
  explicit PreconditionError(const std::string& what) : std::runtime_error(what) {}
};

/// A requested length exceeds the configured safety bound.
class BoundExceededError : public std::runtime_error {
public:
  explicit BoundExceededError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace permstat

#endif
