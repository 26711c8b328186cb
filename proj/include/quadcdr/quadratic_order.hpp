#ifndef QUADCDR_QUADRATIC_ORDER_HPP
#define QUADCDR_QUADRATIC_ORDER_HPP

#include <string>
#include <string_view>

#include "quadcdr/exact_arith.hpp"

namespace quadcdr {

/// The order Z + Z*theta of conductor f in Q(sqrt(d)), where theta = f*omega
/// and omega is (1 + sqrt(d))/2 when d = 1 (mod 4), sqrt(d) otherwise.
/// theta satisfies theta^2 = T*theta - Nc.
struct RingSpec {
    Int d;
    Int f;
    Int T;
    Int Nc;
    Int disc;  // f^2 * disc_K

    bool is_maximal() const { return f == 1; }

    friend bool operator==(const RingSpec& x, const RingSpec& y) {
        return x.d == y.d && x.f == y.f;
    }
};

/// Throws Error(InvalidRing) unless d is squarefree, d not in {0, 1}, f >= 1.
RingSpec make_ring(const Int& d, const Int& f);

/// Parses "d=<int>,f=<int>" (whitespace tolerated, either order).
RingSpec parse_ring_spec(std::string_view text);

std::string describe(const RingSpec& ring);

/// x + y*theta
struct Element {
    Int x;
    Int y;

    friend bool operator==(const Element&, const Element&) = default;
};

inline Element elem_add(const Element& u, const Element& v) {
    return {u.x + v.x, u.y + v.y};
}

inline Element elem_sub(const Element& u, const Element& v) {
    return {u.x - v.x, u.y - v.y};
}

inline Element elem_scale(const Int& k, const Element& u) {
    return {k * u.x, k * u.y};
}

Element elem_mul(const RingSpec& ring, const Element& u, const Element& v);

/// theta * u, the second lattice generator contributed by u.
Element elem_mul_theta(const RingSpec& ring, const Element& u);

Int elem_norm(const RingSpec& ring, const Element& u);

inline Vec2 as_vec(const Element& u) { return {u.x, u.y}; }

}  // namespace quadcdr

#endif
