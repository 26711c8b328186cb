#include "quadcdr/error.hpp"

namespace quadcdr {

std::string_view error_code_name(ErrorCode code) {
    switch (code) {
        case ErrorCode::InvalidRing: return "invalid_ring";
        case ErrorCode::InvalidIdeal: return "invalid_ideal";
        case ErrorCode::InvalidArgument: return "invalid_argument";
        case ErrorCode::RingMismatch: return "ring_mismatch";
        case ErrorCode::ZeroIdeal: return "zero_ideal";
        case ErrorCode::ParseError: return "parse_error";
        case ErrorCode::NotPrime: return "not_prime";
        case ErrorCode::ConductorPrime: return "conductor_prime";
        case ErrorCode::NoContainingPrime: return "no_containing_prime";
        case ErrorCode::NotDivisible: return "not_divisible";
        case ErrorCode::ChainExceeded: return "chain_exceeded";
        case ErrorCode::InternalArithmeticBug: return "internal_arithmetic_bug";
    }
    return "unknown";
}

}  // namespace quadcdr
