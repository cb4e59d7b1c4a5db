#include <cmath>
#include <limits>
#include <numbers>

#include "bctk/hyperbolic.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace bctk;
using oracle::close;

namespace {
const Hyperbolic J = Hyperbolic::j();
const Hyperbolic E1 = Hyperbolic::e1();
const Hyperbolic E2 = Hyperbolic::e2();
constexpr double kPi = std::numbers::pi;
}  // namespace

TEST_CASE("idempotent basis identities") {
    CHECK(E1 * E2 == Hyperbolic(0.0));
    CHECK(E1 + E2 == Hyperbolic(1.0));
    CHECK(J * J == Hyperbolic(1.0));
    CHECK(Hyperbolic::cartesian(0.5, 0.5) == E1);
}

TEST_CASE("cartesian-idempotent round trip") {
    oracle::Rng rng(11);
    for (int it = 0; it < 1000; ++it) {
        const Hyperbolic z = rng.hyperbolic();
        const Hyperbolic back = Hyperbolic::cartesian(z.x(), z.y());
        CHECK(close(back, z, 0.0, 4e-16));
    }
}

TEST_CASE("ring operations") {
    CHECK((Hyperbolic(1.0) + J) * (Hyperbolic(1.0) - J) == Hyperbolic(0.0));

    const Hyperbolic z = Hyperbolic::cartesian(2.5, -1.25);
    CHECK(z.conj() == Hyperbolic::cartesian(2.5, 1.25));

    const Hyperbolic lhs = Hyperbolic::idempotent(2, 3) *
                           Hyperbolic::idempotent(5, 7);
    CHECK(lhs == Hyperbolic::idempotent(10, 21));

    // The Cartesian multiplication oracle agrees with the idempotent path.
    oracle::Rng rng(12);
    for (int it = 0; it < 1000; ++it) {
        const Hyperbolic a = rng.hyperbolic(), b = rng.hyperbolic();
        const Hyperbolic want =
            oracle::to_hyperbolic(oracle::mul(oracle::from(a), oracle::from(b)));
        CHECK(close(a * b, want, 1e-12, 1e-12));
    }
}

TEST_CASE("square modulus") {
    CHECK(square_modulus(Hyperbolic(1.0) + J) == 0.0);
    CHECK(square_modulus(J) == -1.0);
    CHECK(square_modulus(Hyperbolic::idempotent(2, 3)) == 6.0);
}

TEST_CASE("units and inversion") {
    CHECK(J.inverse() == J);
    CHECK(Hyperbolic::idempotent(2, 4).inverse() ==
          Hyperbolic::idempotent(0.5, 0.25));
    CHECK_THROWS_AS((void)E1.inverse(), NotInvertible);
    CHECK_THROWS_AS((void)Hyperbolic(0.0).inverse(), NotInvertible);
    CHECK(E1.is_zero_divisor());
    CHECK_FALSE(J.is_zero_divisor());

    oracle::Rng rng(13);
    for (int it = 0; it < 200; ++it) {
        Hyperbolic z = rng.hyperbolic();
        if (!z.is_unit()) continue;
        CHECK(close(z * z.inverse(), Hyperbolic(1.0)));
    }
}

TEST_CASE("lattice operations and absolute value") {
    CHECK(abs(Hyperbolic::idempotent(2, -3)) == Hyperbolic::idempotent(2, 3));
    CHECK(abs(J) == Hyperbolic(1.0));
    CHECK(sup(Hyperbolic(1.0), J) == Hyperbolic(1.0));
    CHECK(inf(Hyperbolic(1.0), J) == J);
}

TEST_CASE("order predicates") {
    CHECK(strictly_less(Hyperbolic(1.0), Hyperbolic(2.0)));
    CHECK(lt(Hyperbolic(0.0), E1));
    CHECK_FALSE(strictly_less(Hyperbolic(0.0), E1));
    CHECK(leq(J, Hyperbolic(1.0)));
    CHECK_FALSE(leq(Hyperbolic(1.0), J));
}

TEST_CASE("riesz norm") {
    CHECK(riesz_norm(Hyperbolic(1.0)) == 1.0);
    CHECK(riesz_norm(J) == 1.0);
    CHECK(riesz_norm(Hyperbolic::idempotent(2, 0)) == 2.0);
}

TEST_CASE("positive square root") {
    CHECK(sqrt_positive(Hyperbolic::idempotent(4, 9)) ==
          Hyperbolic::idempotent(2, 3));
    CHECK(sqrt_positive(Hyperbolic(0.0)) == Hyperbolic(0.0));
    CHECK(sqrt_positive(Hyperbolic(1.0)) == Hyperbolic(1.0));
    CHECK_THROWS_AS((void)sqrt_positive(-Hyperbolic(1.0)), NotPositive);

    oracle::Rng rng(14);
    for (int it = 0; it < 200; ++it) {
        const Hyperbolic u = abs(rng.hyperbolic());
        const Hyperbolic r = sqrt_positive(u);
        CHECK(is_positive(r));
        CHECK(close(r * r, u));
    }
}

TEST_CASE("exponential and logarithm") {
    CHECK(exp(Hyperbolic(0.0)) == Hyperbolic(1.0));
    CHECK(close(exp(Hyperbolic::idempotent(std::log(2.0), 0.0)),
                Hyperbolic::idempotent(2, 1)));
    const Hyperbolic z = Hyperbolic::cartesian(3, -2);
    CHECK(close(log(exp(z)), z));
    CHECK_THROWS_AS((void)log(E1), DomainError);
    CHECK_THROWS_AS((void)log(Hyperbolic(-1.0)), DomainError);
}

TEST_CASE("exp is a lattice- and conjugation-preserving homomorphism") {
    oracle::Rng rng(15);
    for (int it = 0; it < 1000; ++it) {
        const Hyperbolic z = rng.hyperbolic(-5, 5), w = rng.hyperbolic(-5, 5);
        CHECK(close(exp(z + w), exp(z) * exp(w), 1e-12, 1e-12));
        CHECK(exp(z.conj()) == exp(z).conj());
        CHECK(exp(sup(z, w)) == sup(exp(z), exp(w)));
        CHECK(exp(inf(z, w)) == inf(exp(z), exp(w)));
    }
}

TEST_CASE("sign decomposition") {
    {
        const auto [eps, mag] = sign_decompose(Hyperbolic(-3.0));
        CHECK(eps == Sign::minus_one);
        CHECK(mag == Hyperbolic(3.0));
    }
    {
        const auto [eps, mag] = sign_decompose(J);
        CHECK(eps == Sign::plus_j);
        CHECK(mag == Hyperbolic(1.0));
    }
    {
        const auto [eps, mag] = sign_decompose(Hyperbolic::idempotent(2, -3));
        CHECK(eps == Sign::plus_j);
        CHECK(mag == Hyperbolic::idempotent(2, 3));
    }
    CHECK_THROWS_AS((void)sign_decompose(E1), NotInvertible);

    oracle::Rng rng(16);
    for (int it = 0; it < 500; ++it) {
        const Hyperbolic z = rng.hyperbolic();
        if (!z.is_unit()) continue;
        const auto [eps, mag] = sign_decompose(z);
        CHECK(to_hyperbolic(eps) * mag == z);  // exact reconstruction
    }
}

TEST_CASE("sign group closure") {
    const Sign all[] = {Sign::plus_one, Sign::minus_one, Sign::plus_j,
                        Sign::minus_j};
    for (Sign a : all) {
        CHECK(a * a == Sign::plus_one);  // every element is an involution
        for (Sign b : all) {
            CHECK(to_hyperbolic(a * b) == to_hyperbolic(a) * to_hyperbolic(b));
        }
    }
}

TEST_CASE("intervals") {
    const Interval closed(Hyperbolic(0.0), Hyperbolic(kPi),
                          IntervalKind::closed);
    CHECK(closed.contains(Hyperbolic::idempotent(0, kPi)));

    const Interval arg_range(Hyperbolic(-kPi), Hyperbolic(kPi),
                             IntervalKind::half_open_left);
    CHECK_FALSE(arg_range.contains(Hyperbolic(-kPi)));
    CHECK(arg_range.contains(Hyperbolic(kPi)));

    const Interval unit(Hyperbolic(-1.0), Hyperbolic(1.0),
                        IntervalKind::closed);
    CHECK(unit.contains(J));

    CHECK_THROWS_AS(Interval(Hyperbolic(1.0), Hyperbolic(0.0),
                             IntervalKind::closed),
                    BadParameters);
    // Open sides need lo << hi, not just lo <= hi.
    CHECK_THROWS_AS(Interval(Hyperbolic(0.0), E1, IntervalKind::open),
                    BadParameters);
}

TEST_CASE("cone membership") {
    CHECK(in_cone(Hyperbolic(5.0), Sign::plus_one));
    CHECK(in_cone(J, Sign::plus_j));
    const Hyperbolic z = Hyperbolic::cartesian(1, 2);  // components (3, -1)
    CHECK_FALSE(in_cone(z, Sign::plus_one));
    CHECK_FALSE(in_cone(z, Sign::minus_one));
    CHECK(in_cone(z, Sign::plus_j));
    CHECK_FALSE(in_cone(z, Sign::minus_j));
}

TEST_CASE("hyperbolic integers") {
    CHECK(is_hyperbolic_integer(Hyperbolic::idempotent(3, -2)));
    CHECK_FALSE(is_hyperbolic_integer(Hyperbolic(0.5)));
    CHECK(is_hyperbolic_integer(J));
    CHECK(is_hyperbolic_integer(Hyperbolic::idempotent(3 + 1e-12, -2)));
    CHECK_FALSE(is_hyperbolic_integer(Hyperbolic::idempotent(3.1, -2)));
}

TEST_CASE("f-algebra axioms on random samples") {
    oracle::Rng rng(17);
    for (int it = 0; it < 1000; ++it) {
        const Hyperbolic z = rng.hyperbolic(), w = rng.hyperbolic();
        const Hyperbolic a = abs(z), b = abs(w);
        CHECK(is_positive(a * b));
        CHECK(is_positive(z * z));
        CHECK(abs(z * w) == abs(z) * abs(w));  // exact componentwise

        // Disjoint pair: a' ^ b' = 0 implies (a' c) ^ b' = 0 for c >= 0.
        const Hyperbolic da = Hyperbolic::idempotent(std::fabs(z.p1()), 0);
        const Hyperbolic db = Hyperbolic::idempotent(0, std::fabs(w.p2()));
        CHECK(inf(da, db) == Hyperbolic(0.0));
        const Hyperbolic c = abs(rng.hyperbolic());
        CHECK(inf(da * c, db) == Hyperbolic(0.0));
    }
}

TEST_CASE("riesz norm axioms N1 and N2") {
    oracle::Rng rng(18);
    CHECK(riesz_norm(Hyperbolic(1.0)) == 1.0);
    for (int it = 0; it < 1000; ++it) {
        const Hyperbolic z = rng.hyperbolic(), w = rng.hyperbolic();
        if (leq(abs(z), abs(w))) {
            CHECK(riesz_norm(z) <= riesz_norm(w));
        }
        CHECK(riesz_norm(z * w) <=
              riesz_norm(z) * riesz_norm(w) * (1.0 + 1e-12));
    }
}

TEST_CASE("finite sets have componentwise suprema") {
    oracle::Rng rng(19);
    for (int it = 0; it < 200; ++it) {
        Hyperbolic running = rng.hyperbolic();
        double m1 = running.p1(), m2 = running.p2();
        for (int k = 0; k < 6; ++k) {
            const Hyperbolic z = rng.hyperbolic();
            running = sup(running, z);
            m1 = std::max(m1, z.p1());
            m2 = std::max(m2, z.p2());
        }
        CHECK(running == Hyperbolic::idempotent(m1, m2));
    }
}

TEST_CASE("non-finite components are rejected") {
    CHECK_THROWS_AS(Hyperbolic(std::numeric_limits<double>::quiet_NaN()),
                    DomainError);
    CHECK_THROWS_AS(
        Hyperbolic::idempotent(1.0, std::numeric_limits<double>::infinity()),
        DomainError);
}

TEST_CASE("display and JSON round trip") {
    const Hyperbolic z = Hyperbolic::cartesian(1.5, -2.25);
    CHECK(to_string(z) == "1.5-2.25j");
    const Hyperbolic back = hyperbolic_from_json(to_json(z));
    CHECK(back == z);
}
