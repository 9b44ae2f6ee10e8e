#pragma once

#include <stdexcept>

namespace twistfuse {

/// A caller supplied something outside an operation's domain: a
/// non-monotone signature, a label that is not level-permissible, k out of
/// range. The message names the violated constraint.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// An internal invariant failed. Always a bug, never bad input.
class InternalError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// The evaluation route broke down: singular character table, rounding
/// residual above threshold, or a negative structure constant.
class RouteFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace twistfuse
