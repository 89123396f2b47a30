#include "eventstudy/student_t.hpp"

#include "oracles.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <cmath>

using namespace eventstudy;

TEST_SUITE("student_t") {

TEST_CASE("cdf fixed points") {
    CHECK_EQ(student_t_cdf(0.0, 7.0), doctest::Approx(0.5).epsilon(1e-14));
    // df = 1 is the Cauchy distribution: F(1) = 3/4.
    CHECK_EQ(student_t_cdf(1.0, 1.0), doctest::Approx(0.75).epsilon(1e-12));
    CHECK_EQ(student_t_cdf(-1.0, 1.0), doctest::Approx(0.25).epsilon(1e-12));
}

TEST_CASE("cdf is symmetric and monotone") {
    for (double df : {2.0, 5.0, 17.0, 39.0, 120.0}) {
        double previous = 0.0;
        for (double t = -6.0; t <= 6.0; t += 0.25) {
            const double c = student_t_cdf(t, df);
            CHECK_EQ(c + student_t_cdf(-t, df), doctest::Approx(1.0).epsilon(1e-12));
            CHECK_GE(c, previous);
            previous = c;
        }
    }
}

TEST_CASE("cdf agrees with quadrature of the density") {
    for (double df : {3.0, 17.0, 39.0}) {
        for (double t : {-3.1, -0.7, 0.4, 1.9, 2.8}) {
            CHECK_EQ(student_t_cdf(t, df),
                     doctest::Approx(oracles::t_cdf_quadrature(t, df)).epsilon(1e-10));
        }
    }
}

TEST_CASE("two-sided critical values match reference values to 1e-6") {
    // Reference quantiles t_{0.975, df}.
    CHECK_LT(std::fabs(student_t_critical(0.05, 5) - 2.5705818356363141), 1e-6);
    CHECK_LT(std::fabs(student_t_critical(0.05, 17) - 2.1098155778331806), 1e-6);
    CHECK_LT(std::fabs(student_t_critical(0.05, 39) - 2.0226909200367604), 1e-6);
}

TEST_CASE("critical values agree with the quadrature oracle") {
    for (double df : {5.0, 17.0, 39.0}) {
        for (double alpha : {0.01, 0.05, 0.10, 0.5}) {
            CHECK_LT(std::fabs(student_t_critical(alpha, df) -
                               oracles::t_critical_quadrature(alpha, df)),
                     1e-8);
        }
    }
}

TEST_CASE("critical value edge behaviour") {
    CHECK_EQ(student_t_critical(1.0, 17), 0.0);
    // alpha -> 0 drives the critical value monotonically into the tail.
    CHECK_GT(student_t_critical(1e-12, 17), student_t_critical(1e-6, 17));
    CHECK_GT(student_t_critical(1e-6, 17), student_t_critical(0.05, 17));
    CHECK_GT(student_t_critical(1e-12, 17), 15.0);
    // The round trip tail probability is consistent.
    const double crit = student_t_critical(0.05, 17);
    const double tail = 2.0 * (1.0 - student_t_cdf(crit, 17));
    CHECK_EQ(tail, doctest::Approx(0.05).epsilon(1e-9));

    CHECK_ERROR_CODE(InvalidConfig, student_t_critical(0.0, 17));
    CHECK_ERROR_CODE(InvalidConfig, student_t_critical(0.05, 0.0));
}

} // TEST_SUITE
