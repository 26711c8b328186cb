#ifndef QUADCDR_IDEAL_HPP
#define QUADCDR_IDEAL_HPP

#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "quadcdr/exact_arith.hpp"
#include "quadcdr/quadratic_order.hpp"

namespace quadcdr {

/// Nonzero integral ideal Z*a + Z*(b + c*theta) in canonical HNF.
///
/// Invariants: a >= 1, c >= 1, 0 <= b < a, c | a, c | b and
/// a*c | b^2 + T*b*c + Nc*c^2 (closure under multiplication by theta).
/// Two ideals of one ring are equal iff their triples are equal. The zero
/// ideal is not representable.
class Ideal {
  public:
    const RingSpec& ring() const { return ring_; }
    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    Int norm() const { return a_ * c_; }
    bool is_unit() const { return a_ == 1; }

    HnfBasis basis() const { return {a_, b_, c_}; }
    Element first_generator() const { return {a_, Int(0)}; }
    Element second_generator() const { return {b_, c_}; }

    /// Canonical order: (norm, a, b).
    friend bool operator<(const Ideal& x, const Ideal& y) {
        Int nx = x.norm(), ny = y.norm();
        return std::tie(nx, x.a_, x.b_) < std::tie(ny, y.a_, y.b_);
    }
    friend bool operator==(const Ideal& x, const Ideal& y) {
        return x.ring_ == y.ring_ && x.a_ == y.a_ && x.b_ == y.b_ && x.c_ == y.c_;
    }

  private:
    Ideal(RingSpec ring, Int a, Int b, Int c)
        : ring_(std::move(ring)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {}

    friend Ideal validate_hnf(const RingSpec&, const Int&, const Int&, const Int&);

    RingSpec ring_;
    Int a_, b_, c_;
};

/// Ideals of one ring sorted by (norm, a, b) without duplicates.
struct IdealSet {
    RingSpec ring;
    std::vector<Ideal> members;
};

/// Throws Error(InvalidIdeal) naming the first violated invariant.
Ideal validate_hnf(const RingSpec& ring, const Int& a, const Int& b, const Int& c);

Ideal unit_ideal(const RingSpec& ring);

/// Smallest ideal containing every generator; nullopt when all are zero.
std::optional<Ideal> from_generators(const RingSpec& ring, std::span<const Element> gens);

Ideal principal(const RingSpec& ring, const Element& g);

inline Int norm(const Ideal& ideal) { return ideal.norm(); }

/// True iff I is a subset of J.
bool contains(const Ideal& J, const Ideal& I);

Ideal mul(const Ideal& I, const Ideal& J);

/// (I : J) = { x in R : x*J is a subset of I }.
Ideal colon(const Ideal& I, const Ideal& J);

/// H with H*J = I when one exists. The colon ideal is the largest such H,
/// so it is returned whenever any witness exists.
std::optional<Ideal> divide_exact(const Ideal& I, const Ideal& J);

/// Every ideal of norm exactly n, in canonical order.
IdealSet enumerate_of_norm(const RingSpec& ring, const Int& n);

/// Union of enumerate_of_norm for 1..max_norm.
IdealSet enumerate_up_to(const RingSpec& ring, const Int& max_norm);

/// True iff P is a maximal ideal.
bool is_prime(const Ideal& P);

/// "[a, b+c*w]"
std::string render(const Ideal& ideal);

/// "(a, b, c)"
std::string render_triple(const Ideal& ideal);

void require_same_ring(const Ideal& I, const Ideal& J);

}  // namespace quadcdr

#endif
