#include <doctest.h>

#include "quadcdr/factor.hpp"
#include "test_support.hpp"

using namespace quadcdr;
using quadcdr::testing::ideal;
using quadcdr::testing::principal_int;
using quadcdr::testing::ring;

namespace {

ErrorCode code_of_factor(const Ideal& I) {
    try {
        factor_ideal(I);
    } catch (const Error& e) {
        return e.code();
    }
    return ErrorCode::InternalArithmeticBug;
}

Ideal product(const RingSpec& R, const std::vector<Ideal>& factors) {
    Ideal out = unit_ideal(R);
    for (const Ideal& P : factors)
        out = mul(out, P);
    return out;
}

// Residue-degree-2 factors contribute 2 to big_omega of the norm.
unsigned long inert_count(const std::vector<Ideal>& factors) {
    unsigned long n = 0;
    for (const Ideal& P : factors)
        n += P.c() != 1 ? 1 : 0;
    return n;
}

}  // namespace

TEST_CASE("split_rational_prime examples") {
    RingSpec g = ring(-1);
    SplitResult two = split_rational_prime(g, 2);
    CHECK(two.kind == SplitKind::Ramified);
    REQUIRE(two.primes.size() == 1);
    CHECK(two.primes[0] == ideal(g, 2, 1, 1));
    CHECK(mul(two.primes[0], two.primes[0]) == principal_int(g, 2));

    RingSpec r5 = ring(-5);
    SplitResult three = split_rational_prime(r5, 3);
    CHECK(three.kind == SplitKind::Split);
    REQUIRE(three.primes.size() == 2);
    CHECK(three.primes[0] == ideal(r5, 3, 1, 1));
    CHECK(three.primes[1] == ideal(r5, 3, 2, 1));

    SplitResult eleven = split_rational_prime(r5, 11);
    CHECK(eleven.kind == SplitKind::Inert);
    REQUIRE(eleven.primes.size() == 1);
    CHECK(eleven.primes[0] == principal_int(r5, 11));
}

TEST_CASE("split_rational_prime errors") {
    auto code_of = [](const RingSpec& R, long p) {
        try {
            split_rational_prime(R, p);
        } catch (const Error& e) {
            return e.code();
        }
        return ErrorCode::InternalArithmeticBug;
    };
    CHECK(code_of(ring(-3, 2), 2) == ErrorCode::ConductorPrime);
    CHECK(code_of(ring(-1), 15) == ErrorCode::NotPrime);
    CHECK(code_of(ring(-1), 1) == ErrorCode::NotPrime);
}

TEST_CASE("split results multiply back to (p) and are prime") {
    for (const RingSpec& R : quadcdr::testing::full_zoo()) {
        for (long p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 101, 1009}) {
            if (mpz_divisible_ui_p(R.f.get_mpz_t(), static_cast<unsigned long>(p)))
                continue;
            INFO(describe(R) << " p = " << p);
            SplitResult s = split_rational_prime(R, p);
            Ideal prod = unit_ideal(R);
            for (const Ideal& P : s.primes) {
                REQUIRE(is_prime(P));
                prod = mul(prod, P);
            }
            if (s.kind == SplitKind::Ramified)
                prod = mul(prod, s.primes[0]);
            REQUIRE(prod == principal_int(R, p));
            // Cross-check the kind against the Kronecker symbol.
            int k = mpz_kronecker_ui(R.disc.get_mpz_t(), static_cast<unsigned long>(p));
            REQUIRE((k == 1) == (s.kind == SplitKind::Split));
            REQUIRE((k == -1) == (s.kind == SplitKind::Inert));
        }
    }
}

TEST_CASE("primes_above at a conductor prime") {
    RingSpec r = ring(-3, 2);
    auto primes = primes_above(r, 2);
    REQUIRE(primes.size() == 1);
    CHECK(primes[0] == ideal(r, 2, 0, 1));
}

TEST_CASE("factor_ideal examples") {
    RingSpec r5 = ring(-5);
    Factorization unit = factor_ideal(unit_ideal(r5));
    CHECK(unit.factors.empty());
    CHECK(unit.chain.steps.empty());
    CHECK(unit.chain.stationary);

    Factorization six = factor_ideal(principal_int(r5, 6));
    REQUIRE(six.factors.size() == 4);
    CHECK(six.factors[0] == ideal(r5, 2, 1, 1));
    CHECK(six.factors[1] == ideal(r5, 2, 1, 1));
    CHECK(six.factors[2] == ideal(r5, 3, 1, 1));
    CHECK(six.factors[3] == ideal(r5, 3, 2, 1));
    CHECK(product(r5, six.factors) == principal_int(r5, 6));

    RingSpec r = ring(-3, 2);
    try {
        factor_ideal(principal_int(r, 2));
        FAIL("expected NotDivisible");
    } catch (const FactorError& e) {
        CHECK(e.code() == ErrorCode::NotDivisible);
        CHECK(e.partial_chain().steps.empty());
    }
}

TEST_CASE("factor_ideal errors") {
    RingSpec g = ring(-1);
    Ideal eight = principal_int(g, 8);
    try {
        factor_ideal(eight, 3);
        FAIL("expected ChainExceeded");
    } catch (const FactorError& e) {
        CHECK(e.code() == ErrorCode::ChainExceeded);
        CHECK(e.partial_chain().steps.size() == 3);
    }
    CHECK_THROWS_AS(factor_ideal(eight, 0), Error);
    CHECK(code_of_factor(principal_int(ring(-1, 2), 2)) == ErrorCode::NotDivisible);
}

TEST_CASE("factorization in maximal orders") {
    for (const RingSpec& R : quadcdr::testing::maximal_zoo()) {
        for (const Ideal& I : enumerate_up_to(R, 200).members) {
            INFO(describe(R) << " I = " << render(I));
            Factorization fz = factor_ideal(I);
            REQUIRE(product(R, fz.factors) == I);
            for (const Ideal& P : fz.factors)
                REQUIRE(is_prime(P));
            const std::size_t len = fz.chain.steps.size();
            REQUIRE(len == fz.factors.size());
            REQUIRE(len + inert_count(fz.factors) == big_omega(I.norm()));
            REQUIRE(len <= bit_length(I.norm()));

            Ideal prev = fz.chain.start;
            for (const ChainStep& s : fz.chain.steps) {
                REQUIRE(mul(s.quotient, s.prime) == prev);
                REQUIRE(contains(s.quotient, prev));
                prev = s.quotient;
            }
            REQUIRE(check_dicc_chain(fz.chain.ideals()).is_divisor_chain);
        }
    }
}

TEST_CASE("chain length counts prime ideals, not rational primes") {
    // (3) is prime in Z[i]: one step, while big_omega(norm) = big_omega(9) = 2.
    RingSpec g = ring(-1);
    Factorization fz = factor_ideal(principal_int(g, 3));
    CHECK(fz.chain.steps.size() == 1);
    CHECK(big_omega(Int(9)) == 2);
}

TEST_CASE("check_dicc_chain examples") {
    RingSpec g = ring(-1);
    Ideal I = ideal(g, 5, 2, 1);
    std::vector<Ideal> constant = {I, I, I};
    DiccCheck c = check_dicc_chain(constant);
    CHECK(c.is_divisor_chain);
    CHECK(c.stationary_at == 0u);

    Factorization fz = factor_ideal(principal_int(g, 8));
    std::vector<Ideal> chain = fz.chain.ideals();
    REQUIRE(chain.size() == 7);
    for (std::size_t k = 1; k < chain.size(); ++k) {
        CHECK(contains(chain[k], chain[k - 1]));
        CHECK_FALSE(chain[k] == chain[k - 1]);
        CHECK(chain[k].norm() * 2 == chain[k - 1].norm());
    }
    DiccCheck d = check_dicc_chain(chain);
    CHECK(d.is_divisor_chain);
    CHECK_FALSE(d.stationary_at.has_value());
    chain.push_back(unit_ideal(g));
    CHECK(check_dicc_chain(chain).stationary_at == 6u);

    std::vector<Ideal> coprime = {principal_int(g, 2), principal_int(g, 3)};
    DiccCheck e = check_dicc_chain(coprime);
    CHECK_FALSE(e.is_divisor_chain);
    CHECK_FALSE(e.stationary_at.has_value());

    std::vector<Ideal> single = {I};
    CHECK(check_dicc_chain(single).stationary_at == 0u);

    std::vector<Ideal> mixed = {I, unit_ideal(ring(-5))};
    CHECK_THROWS_AS(check_dicc_chain(mixed), Error);
}

TEST_CASE("non-maximal orders: ascending chain that is not a divisor chain") {
    // (2) in (2, theta) in R for R = Z[1+sqrt(-3)]: containment without division.
    RingSpec r = ring(-3, 2);
    std::vector<Ideal> chain = {principal_int(r, 2), ideal(r, 2, 0, 1), unit_ideal(r)};
    DiccCheck c = check_dicc_chain(chain);
    CHECK_FALSE(c.is_divisor_chain);
}
