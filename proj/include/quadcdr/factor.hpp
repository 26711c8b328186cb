#ifndef QUADCDR_FACTOR_HPP
#define QUADCDR_FACTOR_HPP

#include <optional>
#include <span>
#include <vector>

#include "quadcdr/error.hpp"
#include "quadcdr/ideal.hpp"

namespace quadcdr {

enum class SplitKind { Split, Inert, Ramified };

const char* split_kind_name(SplitKind kind);

struct SplitResult {
    Int p;
    SplitKind kind;
    std::vector<Ideal> primes;  // canonical order
};

/// Decomposition of the rational prime p (coprime to the conductor) by
/// factoring x^2 - T*x + Nc modulo p.
///
/// Throws NotPrime for composite p, ConductorPrime when p | f.
SplitResult split_rational_prime(const RingSpec& ring, const Int& p);

/// Every prime ideal lying over p, in canonical order. Works at conductor
/// primes too, by enumerating ideals of norm p and p^2.
std::vector<Ideal> primes_above(const RingSpec& ring, const Int& p);

struct ChainStep {
    Ideal prime;
    Ideal quotient;  // previous = quotient * prime
};

struct DivisorChain {
    Ideal start;
    std::vector<ChainStep> steps;
    bool stationary = false;  // reached the unit ideal

    /// start, quotient_1, ..., quotient_m
    std::vector<Ideal> ideals() const;
};

struct Factorization {
    std::vector<Ideal> factors;  // extraction order
    DivisorChain chain;
};

/// floor(log2 norm(I)) + 1
unsigned long default_max_steps(const Ideal& I);

/// Peels off prime ideals one at a time: take the smallest rational prime p
/// dividing the current norm, the canonically first prime over p containing
/// the current ideal, and divide it out. Stops at the unit ideal.
///
/// Throws NoContainingPrime, NotDivisible (a containment-division
/// violation) or ChainExceeded when max_steps divisions were not enough.
/// The partial chain is available from the thrown FactorError.
Factorization factor_ideal(const Ideal& I, std::optional<unsigned long> max_steps = {});

class FactorError : public Error {
  public:
    FactorError(ErrorCode code, const std::string& what, DivisorChain partial)
        : Error(code, what), partial_(std::move(partial)) {}

    const DivisorChain& partial_chain() const { return partial_; }

  private:
    DivisorChain partial_;
};

struct DiccCheck {
    bool is_divisor_chain = false;
    std::optional<std::size_t> stationary_at;
};

/// is_divisor_chain: every I[j+1] divides I[j]. stationary_at: smallest m
/// with I[i] = I[m] for all i >= m, nullopt when the last two entries differ.
DiccCheck check_dicc_chain(std::span<const Ideal> chain);

}  // namespace quadcdr

#endif
