#include "quadcdr/factor.hpp"

#include <algorithm>

namespace quadcdr {

namespace {

// Square root of a quadratic residue n modulo an odd prime p (Tonelli-Shanks).
Int sqrt_mod(const Int& n, const Int& p) {
    Int q = p - 1;
    unsigned long s = 0;
    while (mpz_even_p(q.get_mpz_t())) {
        q /= 2;
        ++s;
    }
    Int z = 2;
    while (mpz_legendre(z.get_mpz_t(), p.get_mpz_t()) != -1)
        ++z;

    auto powm = [&p](const Int& base, const Int& e) {
        Int r;
        mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), p.get_mpz_t());
        return r;
    };
    Int c = powm(z, q);
    Int x = powm(n, (q + 1) / 2);
    Int t = powm(n, q);
    unsigned long m = s;
    while (t != 1) {
        unsigned long i = 0;
        Int tt = t;
        while (tt != 1) {
            tt = tt * tt % p;
            ++i;
        }
        Int b = c;
        for (unsigned long j = 0; j + i + 1 < m; ++j)
            b = b * b % p;
        x = x * b % p;
        c = b * b % p;
        t = t * c % p;
        m = i;
    }
    return x;
}

// Roots of x^2 - T*x + Nc modulo p, ascending, without repetition.
std::vector<Int> poly_roots_mod(const RingSpec& ring, const Int& p) {
    std::vector<Int> roots;
    if (p == 2) {
        for (Int r = 0; r < 2; ++r) {
            if (mod_floor(r * r - ring.T * r + ring.Nc, p) == 0)
                roots.push_back(r);
        }
        return roots;
    }
    Int delta = mod_floor(ring.disc, p);
    Int half;
    Int two = 2;
    mpz_invert(half.get_mpz_t(), two.get_mpz_t(), p.get_mpz_t());
    if (delta == 0) {
        roots.push_back(mod_floor(ring.T * half, p));
        return roots;
    }
    if (mpz_legendre(delta.get_mpz_t(), p.get_mpz_t()) != 1)
        return roots;
    Int s = sqrt_mod(delta, p);
    roots.push_back(mod_floor((ring.T + s) * half, p));
    roots.push_back(mod_floor((ring.T - s) * half, p));
    std::sort(roots.begin(), roots.end());
    return roots;
}

}  // namespace

const char* split_kind_name(SplitKind kind) {
    switch (kind) {
        case SplitKind::Split: return "split";
        case SplitKind::Inert: return "inert";
        case SplitKind::Ramified: return "ramified";
    }
    return "unknown";
}

SplitResult split_rational_prime(const RingSpec& ring, const Int& p) {
    if (p < 2 || !is_probable_prime(p))
        throw Error(ErrorCode::NotPrime, to_string(p) + " is not a rational prime");
    if (mpz_divisible_p(ring.f.get_mpz_t(), p.get_mpz_t()))
        throw Error(ErrorCode::ConductorPrime,
                    to_string(p) + " divides the conductor " + to_string(ring.f) +
                        "; use primes_above for conductor primes");

    // Root r of the minimal polynomial gives the prime (p, theta - r).
    std::vector<Int> roots = poly_roots_mod(ring, p);
    SplitResult out{p, SplitKind::Inert, {}};
    if (roots.empty()) {
        out.primes.push_back(validate_hnf(ring, p, 0, p));
        return out;
    }
    out.kind = roots.size() == 2 ? SplitKind::Split : SplitKind::Ramified;
    for (const Int& r : roots)
        out.primes.push_back(validate_hnf(ring, p, mod_floor(-r, p), 1));
    std::sort(out.primes.begin(), out.primes.end());
    return out;
}

std::vector<Ideal> primes_above(const RingSpec& ring, const Int& p) {
    if (!mpz_divisible_p(ring.f.get_mpz_t(), p.get_mpz_t()))
        return split_rational_prime(ring, p).primes;
    if (p < 2 || !is_probable_prime(p))
        throw Error(ErrorCode::NotPrime, to_string(p) + " is not a rational prime");
    std::vector<Ideal> out;
    for (const Int& n : {p, Int(p * p)}) {
        for (Ideal& P : enumerate_of_norm(ring, n).members) {
            if (is_prime(P))
                out.push_back(std::move(P));
        }
    }
    return out;
}

std::vector<Ideal> DivisorChain::ideals() const {
    std::vector<Ideal> out{start};
    for (const ChainStep& s : steps)
        out.push_back(s.quotient);
    return out;
}

unsigned long default_max_steps(const Ideal& I) { return bit_length(I.norm()); }

Factorization factor_ideal(const Ideal& I, std::optional<unsigned long> max_steps) {
    const unsigned long limit = max_steps.value_or(default_max_steps(I));
    if (limit < 1)
        throw Error(ErrorCode::InvalidArgument, "max_steps must be >= 1");

    Factorization out{{}, DivisorChain{I, {}, false}};
    Ideal current = I;
    while (!current.is_unit()) {
        if (out.chain.steps.size() >= limit)
            throw FactorError(ErrorCode::ChainExceeded,
                              "divisor chain from " + render(I) + " did not reach the unit ideal within " +
                                  std::to_string(limit) + " steps",
                              out.chain);

        Int p = smallest_prime_factor(current.norm());
        std::optional<Ideal> chosen;
        for (const Ideal& P : primes_above(I.ring(), p)) {
            if (contains(P, current)) {
                chosen = P;
                break;
            }
        }
        if (!chosen)
            throw FactorError(ErrorCode::NoContainingPrime,
                              "no prime above " + to_string(p) + " contains " + render(current),
                              out.chain);

        auto quotient = divide_exact(current, *chosen);
        if (!quotient)
            throw FactorError(ErrorCode::NotDivisible,
                              "containment-division violation: " + render(current) +
                                  " is contained in the prime " + render(*chosen) +
                                  " but is not divisible by it",
                              out.chain);

        out.factors.push_back(*chosen);
        out.chain.steps.push_back({*chosen, *quotient});
        current = *quotient;
    }
    out.chain.stationary = true;
    return out;
}

DiccCheck check_dicc_chain(std::span<const Ideal> chain) {
    if (chain.empty())
        throw Error(ErrorCode::InvalidArgument, "chain must be nonempty");
    for (const Ideal& I : chain)
        require_same_ring(chain.front(), I);

    DiccCheck out;
    out.is_divisor_chain = true;
    for (std::size_t j = 0; j + 1 < chain.size(); ++j) {
        if (!divide_exact(chain[j], chain[j + 1])) {
            out.is_divisor_chain = false;
            break;
        }
    }
    std::size_t m = chain.size() - 1;
    while (m > 0 && chain[m - 1] == chain[m])
        --m;
    if (chain.size() == 1 || m < chain.size() - 1)
        out.stationary_at = m;
    return out;
}

}  // namespace quadcdr
