#include <kfe/frobenius.hpp>

#include <string>

#include <kfe/errors.hpp>

namespace kfe
{

FrobeniusMode FrobeniusMode::degenerate(Rational lambda)
{
    if (lambda.is_zero()) {
        throw parameter_error("degenerate mode needs lambda != 0; use the limit mode for lambda -> 0");
    }
    return FrobeniusMode(std::move(lambda));
}

Scalar TriangleB::at(std::size_t n, std::size_t j) const
{
    if (j > n) {
        return Scalar(0);
    }
    return rows.at(n).at(j);
}

namespace
{

const Domain mu_domain = Domain::symbolic(Symbol::mu);

// 1/(g - mu) for a rational series g with g(0) = 1.
PowerSeries shifted_inverse(const PowerSeries &g)
{
    std::vector<Scalar> c = g.coeffs();
    c[0] -= Scalar::variable(Symbol::mu);
    return ps_invert(PowerSeries(mu_domain, std::move(c)));
}

Scalar mu()
{
    return Scalar::variable(Symbol::mu);
}

} // namespace

PowerSeries degenerate_F(const Rational &lambda, std::size_t order)
{
    if (lambda.is_zero()) {
        throw parameter_error("degenerate_F needs lambda != 0; use euler_F for the limit");
    }
    // (1+lambda t)^(1/lambda) = exp(log(1 + lambda t) / lambda)
    const PowerSeries log_term = ps_scale(ps_rescale(ps_log1p(order), Scalar(lambda)), Scalar(lambda.inverse()));
    return shifted_inverse(ps_exp(log_term));
}

PowerSeries euler_F(std::size_t order)
{
    std::vector<Scalar> c(order + 1);
    for (std::size_t k = 0; k <= order; ++k) {
        c[k] = factorial(static_cast<unsigned>(k)).inverse();
    }
    return shifted_inverse(PowerSeries(Domain::rational(), std::move(c)));
}

PowerSeries frobenius_F(const FrobeniusMode &mode, std::size_t order)
{
    return mode.is_limit() ? euler_F(order) : degenerate_F(mode.lambda(), order);
}

FrobeniusSequence frobenius_euler_numbers(std::size_t n_max)
{
    const PowerSeries f = euler_F(n_max);
    const Scalar one_minus_mu = Scalar(1) - mu();
    FrobeniusSequence seq;
    for (std::size_t n = 0; n <= n_max; ++n) {
        seq.values.push_back(f[n] * one_minus_mu * Scalar(factorial(static_cast<unsigned>(n))));
    }
    return seq;
}

TriangleB triangle_b_recurrence(const FrobeniusMode &mode, std::size_t n_max)
{
    const Scalar l(mode.lambda());
    TriangleB tri{mode, {}};
    tri.rows.push_back({Scalar(1)});
    for (std::size_t n = 0; n < n_max; ++n) {
        const auto &prev = tri.rows[n];
        std::vector<Scalar> next(n + 2);
        for (std::size_t i = 1; i <= n + 2; ++i) {
            Scalar v;
            if (i - 1 <= n) {
                v += (Scalar(static_cast<long>(n)) * l + Scalar(static_cast<long>(i))) * prev[i - 1];
            }
            if (i >= 2) {
                v += mu() * Scalar(static_cast<long>(i - 1)) * prev[i - 2];
            }
            next[i - 1] = std::move(v);
        }
        tri.rows.push_back(std::move(next));
    }
    return tri;
}

TriangleB triangle_b_closed(const FrobeniusMode &mode, std::size_t n_max)
{
    const Scalar l(mode.lambda());
    TriangleB tri{mode, {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        tri.rows.emplace_back(n + 1);
    }
    tri.rows[0][0] = Scalar(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        tri.rows[n][0] = mode.is_limit()
                             ? Scalar(1)
                             : gen_falling_factorial(Scalar(static_cast<long>(n - 1)) * l + Scalar(1), l,
                                                     static_cast<unsigned>(n - 1));
    }
    for (std::size_t j = 1; j <= n_max; ++j) {
        const Scalar jmu = Scalar(static_cast<long>(j)) * mu();
        for (std::size_t n = j; n <= n_max; ++n) {
            const Scalar base = Scalar(static_cast<long>(n - 1)) * l + Scalar(static_cast<long>(j + 1));
            Scalar sum;
            for (std::size_t i = 0; i <= n - j; ++i) {
                const Scalar weight = mode.is_limit() ? Scalar(static_cast<long>(j + 1)).pow(static_cast<unsigned>(i))
                                                      : gen_falling_factorial(base, l, static_cast<unsigned>(i));
                sum += weight * tri.rows[n - i - 1][j - 1];
            }
            tri.rows[n][j] = jmu * sum;
        }
    }
    return tri;
}

TriangleB interpolate_limit_triangle(std::size_t n_max)
{
    const std::vector<Rational> samples = sample_points(n_max + 1, {Rational(0)});
    std::vector<TriangleB> sampled;
    for (const auto &r : samples) {
        sampled.push_back(triangle_b_recurrence(FrobeniusMode::degenerate(r), n_max));
    }
    TriangleB tri{FrobeniusMode::limit(), {}};
    for (std::size_t n = 0; n <= n_max; ++n) {
        // Lagrange weights at lambda = 0 through samples[0..n].
        std::vector<Rational> weights(n + 1, Rational(1));
        for (std::size_t k = 0; k <= n; ++k) {
            for (std::size_t m = 0; m <= n; ++m) {
                if (m != k) {
                    weights[k] *= (-samples[m]) / (samples[k] - samples[m]);
                }
            }
        }
        std::vector<Scalar> row(n + 1);
        for (std::size_t j = 0; j <= n; ++j) {
            Scalar v;
            for (std::size_t k = 0; k <= n; ++k) {
                v += Scalar(weights[k]) * sampled[k].at(n, j);
            }
            row[j] = std::move(v);
        }
        tri.rows.push_back(std::move(row));
    }
    return tri;
}

VerifyReport verify_ode_frobenius(const TriangleB &triangle, unsigned n, std::size_t order)
{
    if (triangle.n_max() < n) {
        throw parameter_error("triangle has fewer than N+1 rows");
    }
    const FrobeniusMode &mode = triangle.mode;
    const PowerSeries f = frobenius_F(mode, order);

    PowerSeries lhs = f;
    for (unsigned k = 0; k < n; ++k) {
        lhs = ps_derivative(lhs);
    }

    PowerSeries power = f;
    PowerSeries sum = ps_scale(f, triangle.at(n, 0));
    for (unsigned i = 2; i <= n + 1; ++i) {
        power = ps_mul(power, f);
        sum = ps_add(sum, ps_scale(power, triangle.at(n, i - 1)));
    }
    const Scalar sign(n % 2 == 0 ? 1 : -1);
    PowerSeries rhs = ps_scale(sum, sign);
    if (!mode.is_limit()) {
        const PowerSeries prefactor =
            ps_rescale(ps_binomial_pow(Scalar(-static_cast<long>(n)), order), Scalar(mode.lambda()));
        rhs = ps_mul(prefactor, rhs);
    }

    return compare_series(mode.is_limit() ? "ode-euler" : "ode-frobenius",
                          {{"N", std::to_string(n)}, {"lambda", mode.to_string()}, {"order", std::to_string(order)}},
                          LaurentSeries(lhs), LaurentSeries(rhs));
}

VerifyReport verify_ode_frobenius(unsigned n, const FrobeniusMode &mode, std::size_t order)
{
    return verify_ode_frobenius(triangle_b_recurrence(mode, n), n, order);
}

VerifyReport verify_limit_consistency(std::size_t n_max)
{
    const TriangleB interpolated = interpolate_limit_triangle(n_max);
    const TriangleB limit = triangle_b_recurrence(FrobeniusMode::limit(), n_max);
    ScalarCheck check("limit-consistency", {{"nmax", std::to_string(n_max)}});
    for (std::size_t n = 0; n <= n_max; ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            check.expect_equal("b_" + std::to_string(j) + "(" + std::to_string(n) + ")", interpolated.at(n, j),
                               limit.at(n, j));
        }
    }
    return std::move(check).finish("0<=j<=N<=" + std::to_string(n_max));
}

} // namespace kfe
