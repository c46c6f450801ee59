#pragma once

#include <stdexcept>
#include <string>

namespace lensracks {

enum class Err {
  NotSquare,
  EntryOutOfRange,
  ColumnNotPermutation,
  SelfDistributivityFailure,
  UnresolvedReference,
  OrderTooLarge,
  SyntaxError,
  ValidationError,
  ComponentOutOfRange,
  ArcOutOfRange,
  IndexOutOfRange,
  SearchSpaceTooLarge,
  ClosureConflict,
  BadArgument,
};

// Domain error carrying a machine-checkable kind plus a human message.
// Witness indices (first offender in row-major scan order) are baked into
// the message text by the throw site.
class Error : public std::runtime_error {
 public:
  Error(Err kind, std::string msg) : std::runtime_error(std::move(msg)), kind_(kind) {}
  Err kind() const { return kind_; }

 private:
  Err kind_;
};

[[noreturn]] inline void fail(Err kind, const std::string& msg) { throw Error(kind, msg); }

}  // namespace lensracks
