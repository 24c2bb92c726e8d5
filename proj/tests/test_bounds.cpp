#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "dilates/bounds.hpp"

using namespace dilates;

namespace {

constexpr double kPi = 3.14159265358979323846;

// independent long-double bisection for g^{-1}, used as a regression oracle
long double oracle_g_inverse(long double y) {
    long double lo = 1e-18L, hi = 3.141592653589793238462643383279502884L;
    for (int i = 0; i < 200; ++i) {
        const long double mid = 0.5L * (lo + hi);
        if (std::sin(mid) / mid - y > 0)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5L * (lo + hi);
}

}  // namespace

TEST_CASE("sinc_g reference points") {
    CHECK(sinc_g(kPi / 2) == doctest::Approx(2.0 / kPi).epsilon(1e-14));
    CHECK(sinc_g(kPi / 4) == doctest::Approx(2.0 * std::sqrt(2.0) / kPi).epsilon(1e-14));
    CHECK(std::abs(sinc_g(kPi)) < 1e-15);
    CHECK_THROWS_AS(sinc_g(0.0), DomainError);
    CHECK_THROWS_AS(sinc_g(3.2), DomainError);
}

TEST_CASE("sinc_g_inverse reference points and round trip") {
    CHECK(sinc_g_inverse(0.0) == doctest::Approx(kPi).epsilon(1e-14));
    CHECK(sinc_g_inverse(2.0 / kPi) == doctest::Approx(kPi / 2).epsilon(1e-10));
    CHECK(sinc_g_inverse(sinc_g(1.0)) == doctest::Approx(1.0).epsilon(1e-10));
    CHECK_THROWS_AS(sinc_g_inverse(1.0), DomainError);
    CHECK_THROWS_AS(sinc_g_inverse(-0.1), DomainError);
    for (int i = 0; i <= 100; ++i) {
        const double y = 0.999 * i / 100.0;
        CHECK(sinc_g(sinc_g_inverse(y)) == doctest::Approx(y).epsilon(1e-10));
    }
}

TEST_CASE("critical_density") {
    CHECK(critical_density(2) == doctest::Approx(0.028595479208968266).epsilon(1e-12));
    CHECK(critical_density(3) == 0.0);
    CHECK(critical_density(-3) == 0.0);
    CHECK(std::abs(critical_density(10000000) - 0.04984) < 1e-4);
    CHECK(critical_density(-2) == critical_density(2));
    CHECK_THROWS_AS(critical_density(1), DomainError);
    CHECK_THROWS_AS(critical_density(0), DomainError);
    for (std::int64_t t = 2; t <= 50; ++t) {
        CHECK(critical_density(t) >= 0.0);
        CHECK(critical_density(t) < 0.5);
    }
}

TEST_CASE("f_t reference values") {
    CHECK(f_t(2, 0.0) == doctest::Approx(2.080083823051904).epsilon(1e-10));
    CHECK(f_t(2, critical_density(2)) == 2.0);
    CHECK(f_t(2, 0.5) == 2.0);
    // Corollary-proof point: f_2(c) = 2.08 at c = 1/34410.7...
    CHECK(f_t(2, 2.9060707365524685e-05) == doctest::Approx(2.08).epsilon(1e-6));
    CHECK(std::abs(f_t(10000000, 0.0) - 2.15409) < 1e-4);
    CHECK(f_t(3, 0.0) == 2.0);
    CHECK(f_t(3, 0.2) == 2.0);
    CHECK(f_t(-2, 0.01) == f_t(2, 0.01));
    CHECK_THROWS_AS(f_t(1, 0.1), DomainError);
    CHECK_THROWS_AS(f_t(2, -0.1), DomainError);
    CHECK_THROWS_AS(f_t(2, 1.1), DomainError);
}

TEST_CASE("f_t is non-increasing in c and pinned to 2 above c0") {
    for (std::int64_t t = 2; t <= 10; ++t) {
        double prev = f_t(t, 0.0);
        CHECK(prev >= 2.0);
        for (int i = 1; i <= 1000; ++i) {
            const double c = i / 1000.0;
            const double f = f_t(t, c);
            CHECK(f <= prev + 1e-12);
            CHECK(f >= 2.0);
            prev = f;
        }
        const double c0 = critical_density(t);
        CHECK(f_t(t, std::min(1.0, c0 + 1e-9)) == 2.0);
        if (c0 > 0) CHECK(f_t(t, c0 * 0.5) > 2.0);
    }
}

TEST_CASE("defining-equation residual at the returned root") {
    for (std::int64_t t : {2, 3, 4, 5, 7, 12}) {
        const double c0 = critical_density(t);
        for (int i = 0; i < 20; ++i) {
            const double c = c0 * i / 20.0;
            const double x = f_t(t, c);
            double lhs, rhs;
            if (t == 2) {
                lhs = 3.0 * (1.0 - c * x);
                rhs = std::pow(x, 1.5);
            } else {
                lhs = (t + 1) * std::sin(kPi / (t + 1)) * (1.0 - c * x);
                rhs = std::pow(x, 1.5) * std::sin(kPi / x);
            }
            CHECK(std::abs(lhs - rhs) <= 1e-10 * std::abs(rhs));
        }
    }
}

TEST_CASE("f_t_inverse_density") {
    const double c = f_t_inverse_density(2, 2.08);
    CHECK(1.0 / c == doctest::Approx(34410.7).epsilon(1e-4));
    // cross-route: solve f_2(c) = 2.08 by bisection over c
    double lo = 0, hi = critical_density(2);
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f_t(2, mid) > 2.08)
            lo = mid;
        else
            hi = mid;
    }
    CHECK(c == doctest::Approx(0.5 * (lo + hi)).epsilon(1e-9));

    CHECK(f_t_inverse_density(2, 2.0) ==
          doctest::Approx(critical_density(2)).epsilon(1e-12));
    CHECK(std::abs(f_t_inverse_density(2, f_t(2, 0.0))) < 1e-12);
    CHECK_THROWS_AS(f_t_inverse_density(2, 1.9), DomainError);
    CHECK_THROWS_AS(f_t_inverse_density(2, 2.2), DomainError);
}

TEST_CASE("concentration_M") {
    for (double beta : {0.1, 0.25, 0.5}) {
        const auto b = concentration_M(beta, 1.0);
        CHECK(b.term_cosine == 1.0);
        CHECK(b.term_sinc == 1.0);
        CHECK(b.m == 1.0);
    }
    const auto z = concentration_M(0.2, 0.0);
    CHECK(z.term_sinc == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(z.m == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(z.term_cosine < 0);

    // regression point, both closed forms recomputed independently
    const auto b = concentration_M(1.0 / 3.0, 0.6);
    const long double pb = 3.141592653589793238462643383279502884L / 3.0L;
    const long double cospb = std::cos(pb);
    const long double tc = (0.6L + 1.0L - 2.0L * cospb) / (2.0L * (1.0L - cospb));
    const long double ts = pb / oracle_g_inverse(0.6L * std::sin(pb) / pb);
    CHECK(b.term_cosine == doctest::Approx(static_cast<double>(tc)).epsilon(1e-12));
    CHECK(b.term_sinc == doctest::Approx(static_cast<double>(ts)).epsilon(1e-10));
    CHECK(b.m == doctest::Approx(static_cast<double>(std::max(tc, ts))).epsilon(1e-10));

    CHECK_THROWS_AS(concentration_M(0.0, 0.5), DomainError);
    CHECK_THROWS_AS(concentration_M(0.6, 0.5), DomainError);
    CHECK_THROWS_AS(concentration_M(0.2, 1.5), DomainError);
}

TEST_CASE("w_constant table and configuration") {
    CHECK(w_constant(2) == 2);
    CHECK(w_constant(-3) == 4);
    CHECK(w_constant(4) == 10);
    CHECK_THROWS_AS(w_constant(5), UnknownConstant);
    WTable table;
    table.set(5, 14);
    CHECK(w_constant(5, table) == 14);
    CHECK(w_constant(-5, table) == 14);
    CHECK(w_constant(2, table) == 2);
}

TEST_CASE("theorem1_bound") {
    const double b = theorem1_bound(1000003, 10, 2);
    CHECK(std::abs(b - 18.80) < 0.01);
    CHECK(b == doctest::Approx(f_t(2, 10.0 / 1000003.0) * 10 - 2).epsilon(1e-12));
    CHECK(theorem1_bound(11, 4, 2) == doctest::Approx(6.0));
    CHECK(theorem1_bound(7, 7, 2) == doctest::Approx(7.0));
    CHECK_THROWS_AS(theorem1_bound(11, 0, 2), DomainError);
    CHECK_THROWS_AS(theorem1_bound(11, 3, 5), UnknownConstant);
}

TEST_CASE("integer_reference_bound") {
    CHECK(integer_reference_bound(2, 3, IntegerBoundRule::trivial3) == 7);
    CHECK(integer_reference_bound(3, 3, IntegerBoundRule::exact_t3) == 8);
    CHECK(integer_reference_bound(3, 4, IntegerBoundRule::nathanson) == 12);
    CHECK(integer_reference_bound(3, 5, IntegerBoundRule::prime_t) == 16);
    CHECK(integer_reference_bound(2, 3, IntegerBoundRule::universal) == 7);
    CHECK(integer_reference_bound(-3, 3, IntegerBoundRule::exact_t3) == 8);
    CHECK_THROWS_AS(integer_reference_bound(2, 4, IntegerBoundRule::nathanson),
                    RuleNotApplicable);
    CHECK_THROWS_AS(integer_reference_bound(2, 4, IntegerBoundRule::exact_t3),
                    RuleNotApplicable);
    CHECK_THROWS_AS(integer_reference_bound(4, 4, IntegerBoundRule::prime_t),
                    RuleNotApplicable);
    CHECK_THROWS_AS(integer_reference_bound(5, 4, IntegerBoundRule::universal),
                    UnknownConstant);
    CHECK_THROWS_AS(integer_reference_bound(2, 0, IntegerBoundRule::trivial3),
                    DomainError);
}

TEST_CASE("bound profile") {
    const auto prof = make_bound_profile(3, 0.1);
    CHECK(prof.f_value == 2.0);
    CHECK_FALSE(prof.improves_on_cauchy_davenport);
    const auto p2 = make_bound_profile(2, std::int64_t{1000003}, std::int64_t{10});
    CHECK(p2.improves_on_cauchy_davenport);
    CHECK(p2.theorem_bound.has_value());
    const auto p5 = make_bound_profile(5, 0.001);
    CHECK_FALSE(p5.w.has_value());
}
