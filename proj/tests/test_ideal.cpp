#include <doctest.h>

#include "quadcdr/error.hpp"
#include "quadcdr/ideal.hpp"
#include "test_support.hpp"

using namespace quadcdr;
using quadcdr::testing::ideal;
using quadcdr::testing::principal_int;
using quadcdr::testing::ring;
using quadcdr::testing::Rng;

namespace {

bool element_in(const Ideal& I, const Element& x) { return I.basis().contains(as_vec(x)); }

// Kronecker-symbol divisor sum: number of ideals of norm n in a maximal order.
long divisor_sum_count(const Int& disc, long n) {
    long total = 0;
    for (long m = 1; m <= n; ++m) {
        if (n % m == 0)
            total += mpz_kronecker_ui(disc.get_mpz_t(), static_cast<unsigned long>(m));
    }
    return total;
}

}  // namespace

TEST_CASE("from_generators examples") {
    Element two{2, 0};
    CHECK(from_generators(ring(-1), std::span(&two, 1)) == ideal(ring(-1), 2, 0, 2));

    std::vector<Element> g5 = {{2, 0}, {1, 1}};
    CHECK(from_generators(ring(-5), g5) == ideal(ring(-5), 2, 1, 1));

    std::vector<Element> g3 = {{2, 0}, {0, 1}};
    CHECK(from_generators(ring(-3, 2), g3) == ideal(ring(-3, 2), 2, 0, 1));

    std::vector<Element> zeros = {{0, 0}, {0, 0}};
    CHECK_FALSE(from_generators(ring(-1), zeros).has_value());
}

TEST_CASE("validate_hnf") {
    CHECK(validate_hnf(ring(-1), 1, 0, 1).is_unit());
    CHECK(validate_hnf(ring(-5), 2, 1, 1).norm() == 2);

    auto message_of = [](long a, long b, long c) -> std::string {
        try {
            validate_hnf(ring(-5), a, b, c);
        } catch (const Error& e) {
            CHECK(e.code() == ErrorCode::InvalidIdeal);
            return e.what();
        }
        return "";
    };
    // (3, 1+theta) is the split prime over 3; (3, theta) is not closed.
    CHECK_NOTHROW(validate_hnf(ring(-5), 3, 1, 1));
    CHECK(message_of(3, 0, 1).find("closure") != std::string::npos);
    CHECK(message_of(0, 0, 1).find("a >= 1") != std::string::npos);
    CHECK(message_of(2, 0, 0).find("c >= 1") != std::string::npos);
    CHECK(message_of(2, 2, 1).find("0 <= b < a") != std::string::npos);
    CHECK(message_of(3, 0, 2).find("c | a") != std::string::npos);
    CHECK(message_of(4, 1, 2).find("c | b") != std::string::npos);
}

TEST_CASE("norm examples") {
    CHECK(norm(unit_ideal(ring(-7))) == 1);
    CHECK(norm(ideal(ring(-5), 2, 1, 1)) == 2);
    CHECK(norm(ideal(ring(-1), 2, 0, 2)) == 4);
}

TEST_CASE("contains examples") {
    RingSpec r = ring(-3, 2);
    CHECK(contains(ideal(r, 2, 0, 1), ideal(r, 2, 0, 2)));
    CHECK_FALSE(contains(ideal(r, 2, 0, 2), ideal(r, 2, 0, 1)));
    RingSpec g = ring(-1);
    CHECK_FALSE(contains(ideal(g, 3, 0, 3), ideal(g, 2, 0, 2)));
    CHECK_THROWS_AS(contains(unit_ideal(g), unit_ideal(r)), Error);
}

TEST_CASE("mul examples") {
    RingSpec r5 = ring(-5);
    Ideal P2 = ideal(r5, 2, 1, 1);
    CHECK(mul(P2, unit_ideal(r5)) == P2);
    CHECK(mul(P2, P2) == ideal(r5, 2, 0, 2));

    RingSpec r = ring(-3, 2);
    Ideal P = ideal(r, 2, 0, 1);
    Ideal P_sq = mul(P, P);
    CHECK(P_sq == ideal(r, 4, 0, 2));
    CHECK(P_sq == mul(principal_int(r, 2), P));
    CHECK_FALSE(P_sq == principal_int(r, 2));
    // Norm is not multiplicative at the conductor.
    CHECK(P_sq.norm() == 8);
}

TEST_CASE("colon examples") {
    RingSpec r = ring(-3, 2);
    Ideal two = principal_int(r, 2);
    CHECK(colon(two, unit_ideal(r)) == two);
    CHECK(colon(two, ideal(r, 2, 0, 1)) == ideal(r, 2, 0, 1));

    RingSpec g = ring(-1);
    CHECK(colon(ideal(g, 4, 0, 4), ideal(g, 2, 0, 2)) == ideal(g, 2, 0, 2));
}

TEST_CASE("divide_exact examples") {
    RingSpec g = ring(-1);
    CHECK(divide_exact(ideal(g, 4, 0, 4), ideal(g, 2, 0, 2)) == ideal(g, 2, 0, 2));

    RingSpec r5 = ring(-5);
    CHECK(divide_exact(ideal(r5, 2, 0, 2), ideal(r5, 2, 1, 1)) == ideal(r5, 2, 1, 1));

    RingSpec r = ring(-3, 2);
    CHECK_FALSE(divide_exact(ideal(r, 2, 0, 2), ideal(r, 2, 0, 1)).has_value());
    // Not contained, so not divisible either.
    CHECK_FALSE(divide_exact(ideal(g, 2, 0, 2), ideal(g, 3, 0, 3)).has_value());
}

TEST_CASE("enumerate_of_norm examples") {
    RingSpec g = ring(-1);
    auto one = enumerate_of_norm(g, 1).members;
    REQUIRE(one.size() == 1);
    CHECK(one[0].is_unit());
    CHECK(enumerate_of_norm(g, 3).members.empty());
    auto five = enumerate_of_norm(g, 5).members;
    REQUIRE(five.size() == 2);
    CHECK(five[0] == ideal(g, 5, 2, 1));
    CHECK(five[1] == ideal(g, 5, 3, 1));
    CHECK_THROWS_AS(enumerate_of_norm(g, 0), Error);
}

TEST_CASE("is_prime examples") {
    CHECK_FALSE(is_prime(unit_ideal(ring(-5))));
    CHECK(is_prime(ideal(ring(-5), 2, 1, 1)));
    CHECK_FALSE(is_prime(ideal(ring(-1), 2, 0, 2)));
    CHECK(is_prime(ideal(ring(-1), 3, 0, 3)));         // 3 inert
    CHECK(is_prime(ideal(ring(-3, 2), 2, 0, 1)));      // conductor prime
    CHECK_FALSE(is_prime(ideal(ring(-3, 2), 2, 0, 2)));
    CHECK_FALSE(is_prime(ideal(ring(-1), 5, 0, 5)));   // 5 splits
}

TEST_CASE("Gaussian ideal counts match the divisor-sum oracle") {
    const long expected[] = {1, 1, 0, 1, 2, 0, 0, 1, 1, 2};
    RingSpec g = ring(-1);
    for (long n = 1; n <= 10; ++n) {
        CHECK(divisor_sum_count(g.disc, n) == expected[n - 1]);
        CHECK(enumerate_of_norm(g, n).members.size() == static_cast<std::size_t>(expected[n - 1]));
    }
}

TEST_CASE("maximal-order ideal counts match the divisor-sum oracle") {
    for (const RingSpec& R : quadcdr::testing::maximal_zoo()) {
        for (long n = 1; n <= 60; ++n) {
            INFO("d = " << R.d.get_si() << ", n = " << n);
            CHECK(enumerate_of_norm(R, n).members.size() ==
                  static_cast<std::size_t>(divisor_sum_count(R.disc, n)));
        }
    }
}

TEST_CASE("properties over enumerated universes") {
    for (const RingSpec& R : quadcdr::testing::full_zoo()) {
        INFO("ring " << describe(R));
        const auto universe = enumerate_up_to(R, 20).members;
        for (std::size_t k = 1; k < universe.size(); ++k)
            REQUIRE(universe[k - 1] < universe[k]);

        for (const Ideal& I : universe) {
            // Canonicity: the basis regenerates the same triple.
            std::vector<Element> gens = {I.first_generator(), I.second_generator()};
            REQUIRE(from_generators(R, gens) == I);

            for (const Ideal& J : universe) {
                const bool c = contains(J, I);
                if (c) {
                    Int nI = I.norm(), nJ = J.norm();
                    REQUIRE(mpz_divisible_p(nI.get_mpz_t(), nJ.get_mpz_t()));
                }
                if (auto H = divide_exact(I, J)) {
                    REQUIRE(mul(*H, J) == I);
                    REQUIRE(c);
                }
                Ideal Q = colon(I, J);
                REQUIRE(contains(I, mul(Q, J)));
                REQUIRE(contains(Q, I));
            }
        }
    }
}

TEST_CASE("colon matches pointwise membership") {
    for (const RingSpec& R : {ring(-1), ring(-5), ring(-3, 2), ring(5, 2), ring(13)}) {
        const auto universe = enumerate_up_to(R, 9).members;
        for (const Ideal& I : universe) {
            for (const Ideal& J : universe) {
                Ideal Q = colon(I, J);
                for (long u = -9; u <= 9; ++u) {
                    for (long v = -9; v <= 9; ++v) {
                        Element x{u, v};
                        bool expected = element_in(I, elem_mul(R, x, J.first_generator())) &&
                                        element_in(I, elem_mul(R, x, J.second_generator()));
                        REQUIRE(element_in(Q, x) == expected);
                    }
                }
            }
        }
    }
}

TEST_CASE("colon contains every exhaustive witness") {
    for (const RingSpec& R : {ring(-1), ring(-5), ring(-3, 2), ring(-1, 2)}) {
        const auto universe = enumerate_up_to(R, 12).members;
        for (const Ideal& I : universe) {
            for (const Ideal& J : universe) {
                Ideal Q = colon(I, J);
                for (const Ideal& H : universe) {
                    if (H.norm() > I.norm())
                        break;
                    if (mul(H, J) == I)
                        REQUIRE(contains(Q, H));
                }
            }
        }
    }
}

TEST_CASE("norm multiplicativity in maximal orders") {
    for (const RingSpec& R : quadcdr::testing::maximal_zoo()) {
        const auto universe = enumerate_up_to(R, 30).members;
        for (const Ideal& I : universe)
            for (const Ideal& J : universe)
                REQUIRE(mul(I, J).norm() == I.norm() * J.norm());
    }
    // Must-fail witness outside the maximal order.
    RingSpec r = ring(-3, 2);
    Ideal P = ideal(r, 2, 0, 1);
    CHECK(mul(P, P).norm() == 8);
    CHECK(mul(P, P).norm() != P.norm() * P.norm());
}

TEST_CASE("mul is commutative and associative") {
    for (const RingSpec& R : quadcdr::testing::full_zoo()) {
        const auto universe = enumerate_up_to(R, 12).members;
        for (const Ideal& I : universe) {
            for (const Ideal& J : universe) {
                Ideal IJ = mul(I, J);
                REQUIRE(IJ == mul(J, I));
                for (const Ideal& K : universe)
                    REQUIRE(mul(IJ, K) == mul(I, mul(J, K)));
            }
        }
    }
}

TEST_CASE("principal ideals have norm |N(g)| and contain their generator") {
    Rng rng(0x1dea1);
    for (const RingSpec& R : quadcdr::testing::full_zoo()) {
        for (int i = 0; i < 300; ++i) {
            Element g = rng.element(40);
            if (g == Element{0, 0})
                continue;
            Ideal P = principal(R, g);
            REQUIRE(P.norm() == abs(elem_norm(R, g)));
            REQUIRE(element_in(P, g));
            REQUIRE(element_in(P, elem_mul(R, g, rng.element(40))));
        }
    }
}

TEST_CASE("from_generators yields the smallest containing ideal") {
    Rng rng(0x1dea2);
    for (const RingSpec& R : {ring(-1), ring(-5), ring(-3, 2), ring(5, 2)}) {
        const auto universe = enumerate_up_to(R, 30).members;
        for (int i = 0; i < 200; ++i) {
            std::vector<Element> gens = {rng.element(12), rng.element(12)};
            auto I = from_generators(R, gens);
            if (!I)
                continue;
            for (const Element& g : gens)
                REQUIRE(element_in(*I, g));
            for (const Ideal& J : universe) {
                bool has_all = element_in(J, gens[0]) && element_in(J, gens[1]);
                REQUIRE(has_all == contains(J, *I));
            }
        }
    }
}
