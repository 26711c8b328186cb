#include "quadcdr/ideal.hpp"

#include <algorithm>
#include <array>

#include "quadcdr/error.hpp"

namespace quadcdr {

namespace {

bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

// A lattice produced by ideal arithmetic must already be an ideal; anything
// else means the arithmetic itself is wrong.
Ideal ideal_from_lattice(const RingSpec& ring, const std::optional<HnfBasis>& basis,
                         const char* where) {
    if (!basis)
        throw Error(ErrorCode::InternalArithmeticBug,
                    std::string(where) + ": lattice is rank deficient");
    try {
        return validate_hnf(ring, basis->a, basis->b, basis->c);
    } catch (const Error& e) {
        throw Error(ErrorCode::InternalArithmeticBug,
                    std::string(where) + ": result is not an ideal (" + e.what() + ")");
    }
}

}  // namespace

Ideal validate_hnf(const RingSpec& ring, const Int& a, const Int& b, const Int& c) {
    auto fail = [](const std::string& what) { throw Error(ErrorCode::InvalidIdeal, what); };
    if (a < 1)
        fail("a >= 1 violated (a = " + to_string(a) + ")");
    if (c < 1)
        fail("c >= 1 violated (c = " + to_string(c) + ")");
    if (b < 0 || b >= a)
        fail("0 <= b < a violated (b = " + to_string(b) + ", a = " + to_string(a) + ")");
    if (!divides(c, a))
        fail("c | a violated");
    if (!divides(c, b))
        fail("c | b violated");
    Int closure = b * b + ring.T * b * c + ring.Nc * c * c;
    Int index = a * c;
    if (!divides(index, closure))
        fail("theta-closure violated: " + to_string(index) + " does not divide " +
             to_string(closure));
    return Ideal(ring, a, b, c);
}

void require_same_ring(const Ideal& I, const Ideal& J) {
    if (!(I.ring() == J.ring()))
        throw Error(ErrorCode::RingMismatch, "ideals belong to different rings (" +
                                                 describe(I.ring()) + " vs " +
                                                 describe(J.ring()) + ")");
}

Ideal unit_ideal(const RingSpec& ring) { return validate_hnf(ring, 1, 0, 1); }

std::optional<Ideal> from_generators(const RingSpec& ring, std::span<const Element> gens) {
    std::vector<Vec2> columns;
    columns.reserve(2 * gens.size());
    for (const Element& g : gens) {
        columns.push_back(as_vec(g));
        columns.push_back(as_vec(elem_mul_theta(ring, g)));
    }
    auto basis = hnf_2xk(columns);
    if (!basis)
        return std::nullopt;
    return ideal_from_lattice(ring, basis, "from_generators");
}

Ideal principal(const RingSpec& ring, const Element& g) {
    auto ideal = from_generators(ring, std::span<const Element>(&g, 1));
    if (!ideal)
        throw Error(ErrorCode::ZeroIdeal, "the zero element generates the zero ideal");
    return *ideal;
}

bool contains(const Ideal& J, const Ideal& I) {
    require_same_ring(I, J);
    HnfBasis lattice = J.basis();
    return lattice.contains(as_vec(I.first_generator())) &&
           lattice.contains(as_vec(I.second_generator()));
}

Ideal mul(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    const RingSpec& ring = I.ring();
    const std::array<Element, 2> gi = {I.first_generator(), I.second_generator()};
    const std::array<Element, 2> gj = {J.first_generator(), J.second_generator()};
    std::array<Vec2, 4> columns;
    std::size_t k = 0;
    for (const Element& x : gi)
        for (const Element& y : gj)
            columns[k++] = as_vec(elem_mul(ring, x, y));
    return ideal_from_lattice(ring, hnf_2xk(columns), "mul");
}

Ideal colon(const Ideal& I, const Ideal& J) {
    require_same_ring(I, J);
    const RingSpec& ring = I.ring();

    // Membership in I: x1 = 0 (mod c) and x0 - (b/c)*x1 = 0 (mod a).
    const Int bc = I.b() / I.c();

    // For x = u + v*theta, x*g = u*g + v*(theta*g) is linear in (u, v).
    HnfBasis lattice{1, 0, 1};
    for (const Element& g : {J.first_generator(), J.second_generator()}) {
        Element tg = elem_mul_theta(ring, g);
        lattice = restrict_congruence(lattice, g.y, tg.y, I.c());
        lattice = restrict_congruence(lattice, g.x - bc * g.y, tg.x - bc * tg.y, I.a());
    }
    return ideal_from_lattice(ring, lattice, "colon");
}

std::optional<Ideal> divide_exact(const Ideal& I, const Ideal& J) {
    Ideal witness = colon(I, J);
    if (mul(witness, J) == I)
        return witness;
    return std::nullopt;
}

IdealSet enumerate_of_norm(const RingSpec& ring, const Int& n) {
    if (n < 1)
        throw Error(ErrorCode::InvalidArgument, "norm must be >= 1, got " + to_string(n));
    IdealSet out{ring, {}};
    for (Int c = 1; c * c <= n; ++c) {
        if (!divides(c, n))
            continue;
        Int a = n / c;
        if (!divides(c, a))
            continue;
        for (Int b = 0; b < a; b += c) {
            Int closure = b * b + ring.T * b * c + ring.Nc * c * c;
            if (divides(n, closure))
                out.members.push_back(validate_hnf(ring, a, b, c));
        }
    }
    std::sort(out.members.begin(), out.members.end());
    return out;
}

IdealSet enumerate_up_to(const RingSpec& ring, const Int& max_norm) {
    IdealSet out{ring, {}};
    for (Int n = 1; n <= max_norm; ++n) {
        IdealSet level = enumerate_of_norm(ring, n);
        out.members.insert(out.members.end(), level.members.begin(), level.members.end());
    }
    return out;
}

bool is_prime(const Ideal& P) {
    const Int n = P.norm();
    if (n == 1)
        return false;
    if (is_probable_prime(n))
        return true;
    if (!mpz_perfect_square_p(n.get_mpz_t()))
        return false;
    Int p = sqrt(n);
    if (!is_probable_prime(p))
        return false;
    // Any ideal strictly between P and R has norm p.
    for (const Ideal& Q : enumerate_of_norm(P.ring(), p).members) {
        if (contains(Q, P))
            return false;
    }
    return true;
}

std::string render(const Ideal& ideal) {
    return "[" + to_string(ideal.a()) + ", " + to_string(ideal.b()) + "+" +
           to_string(ideal.c()) + "*w]";
}

std::string render_triple(const Ideal& ideal) {
    return "(" + to_string(ideal.a()) + ", " + to_string(ideal.b()) + ", " +
           to_string(ideal.c()) + ")";
}

}  // namespace quadcdr
