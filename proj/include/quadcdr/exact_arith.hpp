#ifndef QUADCDR_EXACT_ARITH_HPP
#define QUADCDR_EXACT_ARITH_HPP

#include <optional>
#include <span>
#include <string>

#include <gmpxx.h>

namespace quadcdr {

using Int = mpz_class;

struct Vec2 {
    Int x0;  // coefficient of 1
    Int x1;  // coefficient of theta

    friend bool operator==(const Vec2&, const Vec2&) = default;
};

/// Column basis {(a, 0), (b, c)} of a full-rank sublattice of Z^2,
/// with a >= 1, c >= 1 and 0 <= b < a.
struct HnfBasis {
    Int a;
    Int b;
    Int c;

    Int index() const { return a * c; }
    bool contains(const Vec2& v) const;

    friend bool operator==(const HnfBasis&, const HnfBasis&) = default;
};

struct Xgcd {
    Int g;
    Int s;
    Int t;
};

/// g = gcd(u, v) >= 0 with s*u + t*v = g.
Xgcd xgcd(const Int& u, const Int& v);

/// Remainder in [0, |m|).
Int mod_floor(const Int& x, const Int& m);

/// Canonical basis of the integer span of `columns`; nullopt when the span
/// has rank < 2.
std::optional<HnfBasis> hnf_2xk(std::span<const Vec2> columns);

/// Sublattice {x in lattice : alpha*x0 + beta*x1 = 0 (mod m)}, m >= 1.
HnfBasis restrict_congruence(const HnfBasis& lattice, const Int& alpha,
                             const Int& beta, const Int& m);

/// Smallest prime factor of n >= 2, by trial division.
Int smallest_prime_factor(const Int& n);

bool is_probable_prime(const Int& n);

/// Number of prime factors of n >= 1 counted with multiplicity.
unsigned long big_omega(Int n);

/// floor(log2 n) + 1 for n >= 1.
unsigned long bit_length(const Int& n);

std::string to_string(const Int& v);

}  // namespace quadcdr

#endif
