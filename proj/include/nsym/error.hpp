#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace nsym {

enum class ErrorCode {
  kInvalidArgument = 1,
  kBoundExceeded,
  kOverflow,
  kBasisMismatch,
  kClassViolation,
  kParse,
};

// Every failure raised by the library carries one of the codes above so the
// C layer can translate it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) {
  throw Error(code, what);
}

using Coeff = std::int64_t;

inline Coeff checked_add(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::kOverflow, "coefficient overflow in addition");
  return out;
}

inline Coeff checked_mul(Coeff a, Coeff b) {
  Coeff out;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::kOverflow, "coefficient overflow in multiplication");
  return out;
}

}  // namespace nsym
