#include <kfe/korobov.hpp>

#include <algorithm>
#include <string>

#include <kfe/errors.hpp>

namespace kfe
{

namespace
{

void check_lambda(const Binding &lambda)
{
    if (lambda.symbol() != Symbol::lambda) {
        throw parameter_error("korobov family expects a lambda binding");
    }
    if (!lambda.is_symbolic() && lambda.bound_value()->is_zero()) {
        throw parameter_error("lambda = 0 is excluded; use the 1/log(1+t) formula or the limit-mode Frobenius triangle");
    }
}

Scalar lambda_pow(const Binding &lambda, long e)
{
    const Scalar l = lambda.value();
    return e >= 0 ? l.pow(static_cast<unsigned>(e)) : l.inverse().pow(static_cast<unsigned>(-e));
}

std::string label(unsigned n, unsigned big_n)
{
    return "n=" + std::to_string(n) + ",N=" + std::to_string(big_n);
}

} // namespace

Scalar TriangleA::at(std::size_t n, std::size_t j) const
{
    if (j > n) {
        return Scalar(0);
    }
    return rows.at(n).at(j);
}

// ((1+t)^lambda - 1) / (lambda t) has t^k coefficient (lambda - 1)_k / (k+1)!.
static PowerSeries korobov_unit(const Binding &lambda, std::size_t order)
{
    const Scalar base = lambda.value() - Scalar(1);
    std::vector<Scalar> c(order + 1);
    Scalar ff(1);
    for (std::size_t k = 0; k <= order; ++k) {
        c[k] = ff / Scalar(factorial(static_cast<unsigned>(k + 1)));
        ff *= base - Scalar(static_cast<long>(k));
    }
    return PowerSeries(lambda.domain(), std::move(c));
}

PowerSeries korobov_gf(const Binding &lambda, std::size_t order)
{
    check_lambda(lambda);
    return ps_invert(korobov_unit(lambda, order));
}

KorobovSequence korobov_numbers(const Binding &lambda, std::size_t n_max, unsigned m)
{
    if (m == 0) {
        throw parameter_error("Korobov numbers of order m need m >= 1");
    }
    const PowerSeries gf = korobov_gf(lambda, n_max);
    PowerSeries power = gf;
    for (unsigned k = 1; k < m; ++k) {
        power = ps_mul(power, gf);
    }
    KorobovSequence seq;
    seq.order = m;
    for (std::size_t n = 0; n <= n_max; ++n) {
        seq.values.push_back(power[n] * Scalar(factorial(static_cast<unsigned>(n))));
    }
    return seq;
}

KorobovSequence korobov_polynomials(const Binding &lambda, const Binding &x, std::size_t n_max)
{
    if (x.symbol() != Symbol::x) {
        throw parameter_error("korobov polynomials expect an x binding");
    }
    if (lambda.is_symbolic() == x.is_symbolic()) {
        throw parameter_error("exactly one of lambda and x must be symbolic");
    }
    const PowerSeries series = ps_mul(korobov_gf(lambda, n_max), ps_binomial_pow(x.value(), n_max));
    KorobovSequence seq;
    for (std::size_t n = 0; n <= n_max; ++n) {
        seq.values.push_back(series[n] * Scalar(factorial(static_cast<unsigned>(n))));
    }
    return seq;
}

TriangleA triangle_a_recurrence(const Binding &lambda, std::size_t n_max)
{
    check_lambda(lambda);
    const Scalar l = lambda.value();
    TriangleA tri{lambda, {}};
    tri.rows.push_back({l.inverse()});
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto &prev = tri.rows[n];
        std::vector<Scalar> next(n + 2);
        for (std::size_t i = 1; i <= n + 2; ++i) {
            Scalar v;
            if (i - 1 <= n) {
                v += (Scalar(static_cast<long>(n)) + Scalar(static_cast<long>(i)) * l) * prev[i - 1];
            }
            if (i >= 2) {
                v += l * Scalar(static_cast<long>(i - 1)) * prev[i - 2];
            }
            next[i - 1] = std::move(v);
        }
        tri.rows.push_back(std::move(next));
    }
    return tri;
}

TriangleA triangle_a_closed(const Binding &lambda, std::size_t n_max)
{
    check_lambda(lambda);
    const Scalar l = lambda.value();
    TriangleA tri{lambda, {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        tri.rows.emplace_back(n + 1);
    }
    tri.rows[0][0] = l.inverse();
    for (std::size_t n = 1; n <= n_max; ++n) {
        tri.rows[n][0] = falling_factorial(Scalar(static_cast<long>(n)) + l - Scalar(1), static_cast<unsigned>(n - 1));
    }
    for (std::size_t j = 1; j <= n_max; ++j) {
        const Scalar jl = Scalar(static_cast<long>(j)) * l;
        for (std::size_t n = j; n <= n_max; ++n) {
            const Scalar base = Scalar(static_cast<long>(n)) + Scalar(static_cast<long>(j + 1)) * l - Scalar(1);
            Scalar sum;
            for (std::size_t i = 0; i <= n - j; ++i) {
                sum += falling_factorial(base, static_cast<unsigned>(i)) * tri.rows[n - i - 1][j - 1];
            }
            tri.rows[n][j] = jl * sum;
        }
    }
    return tri;
}

LaurentSeries korobov_F(const Binding &lambda, std::size_t order)
{
    check_lambda(lambda);
    const PowerSeries inv = ps_invert(korobov_unit(lambda, order));
    return LaurentSeries(-1, ps_scale(inv, lambda.value().inverse()));
}

VerifyReport verify_ode_korobov(const TriangleA &triangle, unsigned n, std::size_t order)
{
    if (triangle.n_max() < n) {
        throw parameter_error("triangle has fewer than N+1 rows");
    }
    const Binding &lambda = triangle.lambda;
    const LaurentSeries f = korobov_F(lambda, order);

    LaurentSeries lhs = f;
    for (unsigned k = 0; k < n; ++k) {
        lhs = ls_derivative(lhs);
    }

    LaurentSeries power = f;
    LaurentSeries sum = ls_scale(f, triangle.at(n, 0));
    for (unsigned i = 2; i <= n + 1; ++i) {
        power = ls_mul(power, f);
        sum = ls_add(sum, ls_scale(power, triangle.at(n, i - 1)));
    }
    const Scalar sign(n % 2 == 0 ? 1 : -1);
    const PowerSeries prefactor = ps_scale(ps_binomial_pow(Scalar(-static_cast<long>(n)), order), sign * lambda.value());
    const LaurentSeries rhs = ls_mul(LaurentSeries(prefactor), sum);

    return compare_series("ode-korobov",
                          {{"N", std::to_string(n)}, {"lambda", lambda.to_string()}, {"order", std::to_string(order)}},
                          lhs, rhs);
}

VerifyReport verify_ode_korobov(unsigned n, const Binding &lambda, std::size_t order)
{
    return verify_ode_korobov(triangle_a_recurrence(lambda, n), n, order);
}

VerifyReport verify_order_m_identity(unsigned n, unsigned big_n, const Binding &lambda)
{
    if (big_n == 0) {
        throw parameter_error("order-m identity is stated for N >= 1");
    }
    const TriangleA tri = triangle_a_recurrence(lambda, big_n);
    std::vector<KorobovSequence> k_seq; // k_seq[m-1] = K^{(m)}
    for (unsigned m = 1; m <= big_n + 1; ++m) {
        k_seq.push_back(korobov_numbers(lambda, n, m));
    }

    Scalar lhs;
    for (unsigned i = 0; i <= std::min(n, big_n); ++i) {
        lhs += lambda_pow(lambda, static_cast<long>(i) - static_cast<long>(big_n) + 1)
               * falling_factorial(Scalar(static_cast<long>(n)), i) * tri.at(big_n, big_n - i)
               * k_seq[big_n - i].values[n - i];
    }

    Scalar rhs;
    if (n <= big_n) {
        rhs = Scalar(factorial(big_n)) * falling_factorial(Scalar(static_cast<long>(big_n)), n);
    } else {
        for (unsigned l = 0; l + big_n + 1 <= n; ++l) {
            rhs += Scalar(binomial(static_cast<long>(big_n), static_cast<long>(l))) * k_seq[0].values[n - l] / Scalar(static_cast<long>(n - l))
                   * falling_factorial(Scalar(static_cast<long>(n)), big_n + 1 + l);
        }
        if (big_n % 2 == 1) {
            rhs = -rhs;
        }
    }

    ScalarCheck check("order-m", {{"n", std::to_string(n)}, {"N", std::to_string(big_n)}, {"lambda", lambda.to_string()}});
    check.expect_equal(label(n, big_n), lhs, rhs);
    return std::move(check).finish(n <= big_n ? "branch n<=N" : "branch n>=N+1");
}

VerifyReport verify_order_m_series(unsigned big_n, const Binding &lambda, std::size_t order)
{
    if (big_n == 0) {
        throw parameter_error("order-m identity is stated for N >= 1");
    }
    LaurentSeries deriv = korobov_F(lambda, order);
    for (unsigned k = 0; k < big_n; ++k) {
        deriv = ls_derivative(deriv);
    }
    const LaurentSeries lhs =
        ls_mul(LaurentSeries(ps_binomial_pow(Scalar(static_cast<long>(big_n)), order)), ls_shift(deriv, big_n + 1));

    const KorobovSequence k1 = korobov_numbers(lambda, order, 1);
    const Scalar inv_lambda = lambda.value().inverse();
    std::vector<Scalar> c(order + 1);
    for (unsigned n = 0; n <= order; ++n) {
        Scalar v;
        if (n <= big_n) {
            v = Scalar(factorial(big_n)) * falling_factorial(Scalar(static_cast<long>(big_n)), n);
            if (big_n % 2 == 1) {
                v = -v;
            }
        } else {
            for (unsigned l = 0; l + big_n + 1 <= n; ++l) {
                v += Scalar(binomial(static_cast<long>(big_n), static_cast<long>(l))) * k1.values[n - l] / Scalar(static_cast<long>(n - l))
                     * falling_factorial(Scalar(static_cast<long>(n)), big_n + 1 + l);
            }
        }
        c[n] = inv_lambda * v / Scalar(factorial(n));
    }
    const LaurentSeries rhs(PowerSeries(lambda.domain(), std::move(c)));

    return compare_series("order-m-series",
                          {{"N", std::to_string(big_n)}, {"lambda", lambda.to_string()}, {"order", std::to_string(order)}},
                          lhs, rhs);
}

} // namespace kfe
