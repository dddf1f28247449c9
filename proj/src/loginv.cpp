#include <kfe/loginv.hpp>

#include <string>

#include <kfe/errors.hpp>

namespace kfe
{

Rational HarmonicTable::at(std::size_t n, std::size_t j) const
{
    if (j > n) {
        return Rational(0);
    }
    return rows.at(n).at(j);
}

HarmonicTable harmonic_table(std::size_t n_max)
{
    HarmonicTable t;
    t.rows.push_back({Rational(1)});
    for (std::size_t n = 1; n <= n_max; ++n) {
        std::vector<Rational> row(n + 1);
        row[0] = Rational(1);
        for (std::size_t j = 1; j <= n; ++j) {
            Rational sum;
            for (std::size_t i = 1; i <= n; ++i) {
                sum += t.at(i - 1, j - 1) / Rational(static_cast<long>(i));
            }
            row[j] = sum;
        }
        t.rows.push_back(std::move(row));
    }
    return t;
}

std::vector<Rational> DerivativeFormula::display_coefficients() const
{
    std::vector<Rational> out;
    for (const auto &term : terms) {
        out.push_back(factorial * term.coeff);
    }
    return out;
}

DerivativeFormula loginv_derivative_formula(unsigned n)
{
    if (n == 0) {
        throw parameter_error("the derivative formula for 1/log(1+t) holds for N >= 1");
    }
    const HarmonicTable h = harmonic_table(n - 1);
    DerivativeFormula f;
    f.n = n;
    f.sign = n % 2 == 0 ? 1 : -1;
    f.factorial = factorial(n - 1);
    for (unsigned i = 2; i <= n + 1; ++i) {
        f.terms.push_back({i, factorial(i - 1) * h.at(n - 1, i - 2)});
    }
    return f;
}

LaurentSeries loginv_series(std::size_t order)
{
    // log(1+t)/t = sum_k (-1)^k t^k / (k+1)
    std::vector<Scalar> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        c[k] = Rational(k % 2 == 0 ? 1 : -1, static_cast<long>(k + 1));
    }
    return LaurentSeries(-1, ps_invert(PowerSeries(Domain::rational(), std::move(c))));
}

VerifyReport verify_loginv(const DerivativeFormula &formula, std::size_t order)
{
    const LaurentSeries l = loginv_series(order);
    LaurentSeries lhs = l;
    for (unsigned k = 0; k < formula.n; ++k) {
        lhs = ls_derivative(lhs);
    }

    LaurentSeries power = ls_mul(l, l);
    LaurentSeries sum = LaurentSeries::zero(Domain::rational(), power.known_through());
    for (const auto &term : formula.terms) {
        while (power.valuation() > -static_cast<long>(term.power)) {
            power = ls_mul(power, l);
        }
        sum = ls_add(sum, ls_scale(power, Scalar(term.coeff)));
    }
    const Scalar pre = Scalar(formula.factorial) * Scalar(formula.sign);
    const PowerSeries prefactor = ps_scale(ps_binomial_pow(Scalar(-static_cast<long>(formula.n)), order), pre);
    const LaurentSeries rhs = ls_mul(LaurentSeries(prefactor), sum);

    return compare_series("loginv", {{"N", std::to_string(formula.n)}, {"order", std::to_string(order)}}, lhs, rhs);
}

VerifyReport verify_loginv(unsigned n, std::size_t order)
{
    return verify_loginv(loginv_derivative_formula(n), order);
}

VerifyReport verify_lambda_limit(const TriangleA &triangle, unsigned n)
{
    if (n == 0) {
        throw parameter_error("the lambda -> 0 limit identity holds for N >= 1");
    }
    if (!triangle.lambda.is_symbolic()) {
        throw parameter_error("the lambda -> 0 limit needs a symbolic-lambda triangle");
    }
    if (triangle.n_max() < n) {
        throw parameter_error("triangle has fewer than N+1 rows");
    }
    const HarmonicTable h = harmonic_table(n - 1);
    ScalarCheck check("lambda-limit", {{"N", std::to_string(n)}});
    for (unsigned i = 2; i <= n + 1; ++i) {
        const std::string pos = "N=" + std::to_string(n) + ",i=" + std::to_string(i);
        const Scalar entry = triangle.at(n, i - 1);
        const Rational expected = factorial(i - 1) * factorial(n - 1) * h.at(n - 1, i - 2);
        if (entry.is_zero() || entry.is_ratfun()) {
            check.expect(pos, false, entry.to_string(), "polynomial with lambda^" + std::to_string(i - 2) + " term "
                                                            + expected.to_string());
            continue;
        }
        const auto [valuation, lead] = poly_trailing(entry);
        if (!check.expect(pos + ",valuation", valuation >= i - 2, std::to_string(valuation),
                          ">=" + std::to_string(i - 2))) {
            continue;
        }
        const Rational c = entry.is_rational() ? (i == 2 ? entry.as_rational() : Rational(0))
                                               : entry.as_poly().coeff(i - 2);
        check.expect_equal(pos + ",coeff", Scalar(c), Scalar(expected));
    }
    return std::move(check).finish("i=2.." + std::to_string(n + 1));
}

VerifyReport verify_lambda_limit(unsigned n)
{
    return verify_lambda_limit(triangle_a_recurrence(Binding::symbolic(Symbol::lambda), n), n);
}

} // namespace kfe
