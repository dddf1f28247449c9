#ifndef KFE_FROBENIUS_HPP
#define KFE_FROBENIUS_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <kfe/rational.hpp>
#include <kfe/report.hpp>
#include <kfe/series.hpp>

namespace kfe
{

/// Degenerate mode binds lambda to a nonzero rational; limit mode is lambda -> 0.
/// mu is always symbolic.
class FrobeniusMode
{
public:
    static FrobeniusMode limit() { return FrobeniusMode(std::nullopt); }
    static FrobeniusMode degenerate(Rational lambda);

    bool is_limit() const { return !m_lambda; }
    /// Zero in limit mode.
    Rational lambda() const { return m_lambda.value_or(Rational(0)); }
    std::string to_string() const { return m_lambda ? m_lambda->to_string() : "limit"; }

private:
    explicit FrobeniusMode(std::optional<Rational> l) : m_lambda(std::move(l)) {}
    std::optional<Rational> m_lambda;
};

/// b_j(N; lambda, mu) with
///   F^(N) = (-1)^N (1+lambda t)^(-N) sum_{i=1}^{N+1} b_{i-1}(N) F^i,
/// F = 1/((1+lambda t)^(1/lambda) - mu), or F = 1/(e^t - mu) in limit mode.
struct TriangleB {
    FrobeniusMode mode;
    std::vector<std::vector<Scalar>> rows;

    std::size_t n_max() const { return rows.size() - 1; }
    Scalar at(std::size_t n, std::size_t j) const;

    friend bool operator==(const TriangleB &a, const TriangleB &b) { return a.rows == b.rows; }
};

struct FrobeniusSequence {
    std::vector<Scalar> values; // H_n(mu)

    std::size_t n_max() const { return values.size() - 1; }
};

/// 1/((1+lambda t)^(1/lambda) - mu) over Q(mu).
PowerSeries degenerate_F(const Rational &lambda, std::size_t order);
/// 1/(e^t - mu) over Q(mu).
PowerSeries euler_F(std::size_t order);
/// Dispatches on the mode.
PowerSeries frobenius_F(const FrobeniusMode &mode, std::size_t order);

/// H_n(mu) = n! (1-mu) [t^n] 1/(e^t - mu).
FrobeniusSequence frobenius_euler_numbers(std::size_t n_max);

/// b_{i-1}(N+1) = (N lambda + i) b_{i-1}(N) + mu (i-1) b_{i-2}(N), b_0(0) = 1.
TriangleB triangle_b_recurrence(const FrobeniusMode &mode, std::size_t n_max);

/// b_0(N) = ((N-1) lambda + 1 | lambda)_{N-1} and
/// b_j(N) = j mu sum_{i=0}^{N-j} ((N-1) lambda + j + 1 | lambda)_i b_{j-1}(N-i-1);
/// in limit mode b_0 = 1 and the product becomes (j+1)^i.
TriangleB triangle_b_closed(const FrobeniusMode &mode, std::size_t n_max);

/// Limit-mode triangle recovered from degenerate triangles: each entry is a
/// polynomial of degree <= N in lambda, interpolated through N+1 sampled
/// lambdas and evaluated at lambda = 0.
TriangleB interpolate_limit_triangle(std::size_t n_max);

VerifyReport verify_ode_frobenius(const TriangleB &triangle, unsigned n, std::size_t order);
VerifyReport verify_ode_frobenius(unsigned n, const FrobeniusMode &mode, std::size_t order);

/// interpolate_limit_triangle(n_max) against triangle_b_recurrence(limit).
VerifyReport verify_limit_consistency(std::size_t n_max);

} // namespace kfe

#endif
