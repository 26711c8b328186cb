#include "quadcdr/exact_arith.hpp"

#include <cstdlib>

namespace quadcdr {

bool HnfBasis::contains(const Vec2& v) const {
    if (!mpz_divisible_p(v.x1.get_mpz_t(), c.get_mpz_t()))
        return false;
    Int k = v.x1 / c;
    Int r = v.x0 - k * b;
    return mpz_divisible_p(r.get_mpz_t(), a.get_mpz_t()) != 0;
}

Xgcd xgcd(const Int& u, const Int& v) {
    Xgcd r;
    mpz_gcdext(r.g.get_mpz_t(), r.s.get_mpz_t(), r.t.get_mpz_t(),
               u.get_mpz_t(), v.get_mpz_t());
    return r;
}

Int mod_floor(const Int& x, const Int& m) {
    Int r;
    Int am = abs(m);
    mpz_fdiv_r(r.get_mpz_t(), x.get_mpz_t(), am.get_mpz_t());
    return r;
}

std::optional<HnfBasis> hnf_2xk(std::span<const Vec2> columns) {
    // Running state: every column seen so far lies in Z*(a,0) + Z*(b,c),
    // and (a,0), (b,c) lie in the span of those columns.
    Int a = 0, b = 0, c = 0;
    for (const Vec2& w : columns) {
        if (w.x1 == 0) {
            a = gcd(a, w.x0);
            continue;
        }
        Xgcd e = xgcd(c, w.x1);
        // [[s, t], [w1/g, -c/g]] is unimodular.
        Int p = w.x1 / e.g;
        Int q = c / e.g;
        Int residue = p * b - q * w.x0;
        b = e.s * b + e.t * w.x0;
        c = e.g;
        a = gcd(a, residue);
    }
    if (a == 0 || c == 0)
        return std::nullopt;
    return HnfBasis{a, mod_floor(b, a), c};
}

HnfBasis restrict_congruence(const HnfBasis& lattice, const Int& alpha,
                             const Int& beta, const Int& m) {
    if (m == 1)
        return lattice;
    // Images of the two basis vectors under the functional, mod m.
    Int r1 = mod_floor(alpha * lattice.a, m);
    Int r2 = mod_floor(alpha * lattice.b + beta * lattice.c, m);

    // Kernel of (k1, k2) -> r1*k1 + r2*k2 mod m is spanned by
    // (n1, 0) and (k1, step).
    Int g1 = gcd(r1, m);
    Int n1 = m / g1;
    Int step = g1 / gcd(g1, r2);
    Int k1 = 0;
    if (n1 != 1) {
        Int unit = r1 / g1;
        Int inv;
        mpz_invert(inv.get_mpz_t(), unit.get_mpz_t(), n1.get_mpz_t());
        Int rhs = -(r2 * step / g1);
        k1 = mod_floor(rhs * inv, n1);
    }
    const Vec2 cols[2] = {
        {n1 * lattice.a, Int(0)},
        {k1 * lattice.a + step * lattice.b, step * lattice.c},
    };
    return *hnf_2xk(cols);
}

Int smallest_prime_factor(const Int& n) {
    if (mpz_even_p(n.get_mpz_t()))
        return 2;
    for (Int p = 3; p * p <= n; p += 2) {
        if (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t()))
            return p;
    }
    return n;
}

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

unsigned long big_omega(Int n) {
    unsigned long count = 0;
    while (n > 1) {
        Int p = smallest_prime_factor(n);
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            n /= p;
            ++count;
        }
    }
    return count;
}

unsigned long bit_length(const Int& n) {
    return static_cast<unsigned long>(mpz_sizeinbase(n.get_mpz_t(), 2));
}

std::string to_string(const Int& v) { return v.get_str(); }

}  // namespace quadcdr
