#ifndef QUADCDR_ERROR_HPP
#define QUADCDR_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace quadcdr {

enum class ErrorCode {
    InvalidRing,
    InvalidIdeal,
    InvalidArgument,
    RingMismatch,
    ZeroIdeal,
    ParseError,
    NotPrime,
    ConductorPrime,
    NoContainingPrime,
    NotDivisible,
    ChainExceeded,
    InternalArithmeticBug,
};

/// Stable machine-readable name, e.g. "not_divisible".
std::string_view error_code_name(ErrorCode code);

class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

}  // namespace quadcdr

#endif
