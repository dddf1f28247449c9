#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kfe/errors.hpp>
#include <kfe/loginv.hpp>

#include "oracles.hpp"

using namespace kfe;

namespace
{

std::vector<Rational> coeffs_of(const DerivativeFormula &f)
{
    std::vector<Rational> out;
    for (const auto &t : f.terms) {
        out.push_back(t.coeff);
    }
    return out;
}

} // namespace

TEST_CASE("harmonic table")
{
    const HarmonicTable h = harmonic_table(20);
    for (std::size_t n = 0; n <= 20; ++n) {
        CHECK(h.at(n, 0) == Rational(1));
    }
    CHECK(h.at(0, 1) == Rational(0));
    CHECK(h.at(3, 1) == Rational(11, 6));
    CHECK(h.at(2, 2) == Rational(1, 2));
    CHECK(h.at(2, 7) == Rational(0));

    Rational harmonic;
    for (std::size_t n = 1; n <= 20; ++n) {
        harmonic += Rational(1, static_cast<long>(n));
        CHECK(h.at(n, 1) == harmonic);
        for (std::size_t j = 0; j <= n; ++j) {
            CHECK(h.at(n, j) > Rational(0));
            if (j <= n - 1) {
                CHECK(h.at(n, j) >= h.at(n - 1, j));
            }
        }
    }
}

TEST_CASE("derivative formula terms")
{
    const DerivativeFormula f1 = loginv_derivative_formula(1);
    CHECK(f1.sign == -1);
    CHECK(f1.factorial == Rational(1));
    CHECK(f1.display_coefficients() == std::vector<Rational>{1});

    const DerivativeFormula f2 = loginv_derivative_formula(2);
    CHECK(f2.sign == 1);
    CHECK(f2.display_coefficients() == std::vector<Rational>{1, 2});

    const DerivativeFormula f3 = loginv_derivative_formula(3);
    CHECK(f3.sign == -1);
    CHECK(f3.factorial == Rational(2));
    CHECK(f3.display_coefficients() == std::vector<Rational>{2, 6, 6});

    const HarmonicTable h = harmonic_table(9);
    for (unsigned n = 1; n <= 10; ++n) {
        const DerivativeFormula f = loginv_derivative_formula(n);
        REQUIRE(f.terms.size() == n);
        for (unsigned i = 2; i <= n + 1; ++i) {
            CHECK(f.terms[i - 2].power == i);
            CHECK(f.terms[i - 2].coeff == factorial(i - 1) * h.at(n - 1, i - 2));
            CHECK(f.terms[i - 2].coeff > Rational(0));
        }
    }
    CHECK(coeffs_of(f3) == std::vector<Rational>{1, 3, 3});
    CHECK_THROWS_AS(loginv_derivative_formula(0), parameter_error);
}

TEST_CASE("1/log(1+t) series")
{
    const LaurentSeries s = loginv_series(8);
    CHECK(s.valuation() == -1);
    CHECK(s.leading() == Scalar(1));
    CHECK(s.coeff(0) == Scalar(Rational(1, 2)));
    CHECK(s.coeff(1) == Scalar(Rational(-1, 12)));
    CHECK(s.coeff(2) == Scalar(Rational(1, 24)));
    // times log(1+t) is one
    const LaurentSeries one = ls_mul(s, LaurentSeries(ps_log1p(8)));
    CHECK(one.coeff(0) == Scalar(1));
    for (long k = 1; k <= one.known_through(); ++k) {
        CHECK(one.coeff(k).is_zero());
    }
}

TEST_CASE("verify_loginv")
{
    for (unsigned n : {1u, 2u, 3u, 7u}) {
        const VerifyReport r = verify_loginv(n, 24);
        CHECK(r.passed);
        CHECK(r.compared.size() >= static_cast<std::size_t>(min_window));
    }
    DerivativeFormula bad = loginv_derivative_formula(3);
    bad.terms[1].coeff += Rational(1);
    const VerifyReport r = verify_loginv(bad, 24);
    CHECK_FALSE(r.passed);
    CHECK(r.mismatch.has_value());
}

TEST_CASE("lambda limit identity")
{
    for (unsigned n = 1; n <= 10; ++n) {
        CHECK(verify_lambda_limit(n).passed);
    }
    const TriangleA t = triangle_a_recurrence(Binding::symbolic(Symbol::lambda), 2);
    CHECK(poly_trailing(t.at(2, 1)) == std::pair<std::size_t, Rational>{0, Rational(1)});
    CHECK(poly_trailing(t.at(2, 2)) == std::pair<std::size_t, Rational>{1, Rational(2)});
    CHECK(poly_trailing(t.at(1, 1)) == std::pair<std::size_t, Rational>{0, Rational(1)});

    TriangleA bad = triangle_a_recurrence(Binding::symbolic(Symbol::lambda), 4);
    bad.rows[4][3] += Scalar(1);
    CHECK_FALSE(verify_lambda_limit(bad, 4).passed);
}
