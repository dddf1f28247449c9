#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kfe/errors.hpp>
#include <kfe/frobenius.hpp>

#include "oracles.hpp"

using namespace kfe;

namespace
{

const Scalar M = Scalar::variable(Symbol::mu);
const Scalar one(1);

Scalar q(long p, long d = 1) { return Scalar(Rational(p, d)); }

} // namespace

TEST_CASE("degenerate_F")
{
    const PowerSeries f1 = degenerate_F(Rational(1), 6);
    CHECK(f1[0] == (one - M).inverse());
    CHECK(f1[1] == -((one - M).pow(2)).inverse());
    const PowerSeries fh = degenerate_F(Rational(1, 2), 6);
    CHECK(fh[0] == (one - M).inverse());
    CHECK(fh[1] == -((one - M).pow(2)).inverse());
    CHECK_THROWS_AS(degenerate_F(Rational(0), 6), parameter_error);
    CHECK_THROWS_AS(FrobeniusMode::degenerate(Rational(0)), parameter_error);
    CHECK(frobenius_F(FrobeniusMode::limit(), 6) == euler_F(6));
}

TEST_CASE("Frobenius-Euler numbers")
{
    const FrobeniusSequence h = frobenius_euler_numbers(10);
    CHECK(h.values[0] == one);
    CHECK(h.values[1] == -(one - M).inverse());
    CHECK(h.values[2] == (one + M) / (one - M).pow(2));
    for (unsigned n = 0; n <= 10; ++n) {
        // (1-mu)^n H_n is a polynomial
        CHECK_FALSE(((one - M).pow(n) * h.values[n]).is_ratfun());
    }
    // (e^t - mu) sum H_n t^n/n! = 1 - mu
    std::vector<Scalar> ex, hs;
    for (unsigned n = 0; n <= 10; ++n) {
        ex.push_back(Scalar(factorial(n).inverse()) - (n == 0 ? M : q(0)));
        hs.push_back(h.values[n] / Scalar(factorial(n)));
    }
    const Domain d = Domain::symbolic(Symbol::mu);
    const PowerSeries prod = ps_mul(PowerSeries(d, ex), PowerSeries(d, hs));
    CHECK(prod[0] == one - M);
    for (std::size_t k = 1; k <= 10; ++k) {
        CHECK(prod[k].is_zero());
    }
}

TEST_CASE("triangle_b examples")
{
    const TriangleB lim = triangle_b_recurrence(FrobeniusMode::limit(), 3);
    CHECK(lim.at(0, 0) == one);
    CHECK(lim.at(1, 0) == one);
    CHECK(lim.at(1, 1) == M);
    CHECK(lim.at(2, 1) == q(3) * M);
    CHECK(lim.at(2, 2) == q(2) * M * M);
    CHECK(lim.at(1, 4) == q(0));

    const TriangleB lc = triangle_b_closed(FrobeniusMode::limit(), 6);
    for (std::size_t n = 1; n <= 6; ++n) {
        CHECK(lc.at(n, 1) == M * q((1L << n) - 1));
    }
    CHECK(lc.at(3, 1) == q(7) * M);

    for (const Rational &r : sample_points(5)) {
        const TriangleB deg = triangle_b_recurrence(FrobeniusMode::degenerate(r), 3);
        CHECK(deg.at(2, 1) == M * (Scalar(r) + q(3)));
        CHECK(deg.at(2, 2) == q(2) * M * M);
    }
    const TriangleB d1 = triangle_b_closed(FrobeniusMode::degenerate(Rational(1)), 3);
    CHECK(d1.at(3, 0) == q(6));
    for (std::size_t j = 0; j <= 3; ++j) {
        CHECK(d1.at(j, j) == M.pow(static_cast<unsigned>(j)) * Scalar(factorial(static_cast<unsigned>(j))));
    }
}

TEST_CASE("triangle_b recurrence equals closed form up to N = 12")
{
    CHECK(triangle_b_recurrence(FrobeniusMode::limit(), 12) == triangle_b_closed(FrobeniusMode::limit(), 12));
    for (const Rational &r : sample_points(5)) {
        const FrobeniusMode mode = FrobeniusMode::degenerate(r);
        const TriangleB rec = triangle_b_recurrence(mode, 12);
        CHECK(rec == triangle_b_closed(mode, 12));
        for (unsigned n = 1; n <= 12; ++n) {
            CHECK(rec.at(n, 0) ==
                  gen_falling_factorial(Scalar(r) * q(n - 1) + one, Scalar(r), n - 1));
        }
    }
    const TriangleB lim = triangle_b_recurrence(FrobeniusMode::limit(), 12);
    for (unsigned n = 0; n <= 12; ++n) {
        CHECK(lim.at(n, 0) == one);
        CHECK(lim.at(n, n) == M.pow(n) * Scalar(factorial(n)));
    }
}

TEST_CASE("brute-force oracle rows match the recurrence")
{
    for (const FrobeniusMode &mode : {FrobeniusMode::limit(), FrobeniusMode::degenerate(Rational(3, 2))}) {
        const TriangleB t = triangle_b_recurrence(mode, 4);
        for (unsigned n = 0; n <= 4; ++n) {
            const auto row = oracle::frobenius_row(mode, n, 10);
            REQUIRE(row.size() == n + 1);
            for (unsigned j = 0; j <= n; ++j) {
                CHECK(row[j] == t.at(n, j));
            }
        }
    }
}

TEST_CASE("ODE examples")
{
    const FrobeniusMode deg = FrobeniusMode::degenerate(Rational(2));
    for (unsigned n : {0u, 1u, 3u}) {
        const VerifyReport r = verify_ode_frobenius(n, deg, 16);
        CHECK(r.passed);
        CHECK(r.identity == "ode-frobenius");
    }
    const VerifyReport lim = verify_ode_frobenius(6, FrobeniusMode::limit(), 24);
    CHECK(lim.passed);
    CHECK(lim.identity == "ode-euler");

    // first derivative against -1/(1+lambda t) (F + mu F^2) directly
    const Rational r(-1, 3);
    const PowerSeries f = degenerate_F(r, 12);
    const PowerSeries rhs =
        ps_scale(ps_mul(ps_rescale(ps_binomial_pow(q(-1), 12), Scalar(r)), ps_add(f, ps_scale(ps_mul(f, f), M))), q(-1));
    CHECK(compare_series("direct", {}, LaurentSeries(ps_derivative(f)), LaurentSeries(rhs)).passed);

    TriangleB bad = triangle_b_recurrence(FrobeniusMode::limit(), 3);
    bad.rows[2][1] += one;
    CHECK_FALSE(verify_ode_frobenius(bad, 2, 16).passed);
}

TEST_CASE("limit consistency")
{
    const TriangleB interp = interpolate_limit_triangle(5);
    CHECK(interp == triangle_b_recurrence(FrobeniusMode::limit(), 5));
    CHECK(verify_limit_consistency(5).passed);
}
