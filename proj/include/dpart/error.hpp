#ifndef DPART_ERROR_HPP
#define DPART_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace dpart {

enum class ErrorKind {
  ZeroColumn,
  NegativeEntry,
  Overflow,
  IndexOutOfRange,
  CollinearColumns,
  NotCoprime,
  BetaTooLarge,
  BetaZero,
  EmptyEliminationSet,
  TableMismatch,
  PreconditionFailed,
  Budget,
  InnerSolverFailure,
  InternalNegative,
  Parse,
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library carries a kind so callers (and the
/// CLI exit-code mapping) can dispatch without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace dpart

#endif  // DPART_ERROR_HPP
