#pragma once

#include <stdexcept>
#include <string>

namespace acd {

/// Broad failure class. The CLI maps each one to a distinct exit status.
enum class ErrorKind {
  invalid_argument,       // caller passed values outside the model's domain
  unreachable_target,     // no admissible control drives i_B up to the target
  inadmissible_singular,  // singular control would leave [0, 1]
  regime_mismatch,        // operation needs a root regime the params do not have
  verification_failed,    // an internal numerical cross-check disagreed
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// True for errors caused by the inputs rather than by the numerics.
  bool is_precondition() const noexcept { return kind_ != ErrorKind::verification_failed; }

 private:
  ErrorKind kind_;
};

}  // namespace acd
