#ifndef KFE_KOROBOV_HPP
#define KFE_KOROBOV_HPP

#include <cstddef>
#include <vector>

#include <kfe/binding.hpp>
#include <kfe/report.hpp>
#include <kfe/series.hpp>

namespace kfe
{

/// Coefficients a_j(N; lambda) expressing the N-th derivative of
/// F = 1/((1+t)^lambda - 1) as
///   F^(N) = (-1)^N lambda (1+t)^(-N) sum_{i=1}^{N+1} a_{i-1}(N) F^i.
struct TriangleA {
    Binding lambda;
    std::vector<std::vector<Scalar>> rows; // rows[N][j], 0 <= j <= N

    std::size_t n_max() const { return rows.size() - 1; }
    /// a_j(N), zero for j > N.
    Scalar at(std::size_t n, std::size_t j) const;

    friend bool operator==(const TriangleA &a, const TriangleA &b) { return a.rows == b.rows; }
};

struct KorobovSequence {
    unsigned order = 1; // m
    std::vector<Scalar> values; // values[n] = K_n^{(m)}

    std::size_t n_max() const { return values.size() - 1; }
};

/// lambda t / ((1+t)^lambda - 1) through t^order.
PowerSeries korobov_gf(const Binding &lambda, std::size_t order);

/// K_n^{(m)}(lambda) for n = 0..n_max.
KorobovSequence korobov_numbers(const Binding &lambda, std::size_t n_max, unsigned m = 1);

/// K_n(lambda, x) for n = 0..n_max; exactly one of lambda and x is symbolic.
KorobovSequence korobov_polynomials(const Binding &lambda, const Binding &x, std::size_t n_max);

/// Row-by-row build from a_{i-1}(N+1) = (N + i lambda) a_{i-1}(N) + lambda (i-1) a_{i-2}(N).
TriangleA triangle_a_recurrence(const Binding &lambda, std::size_t n_max);

/// Column-by-column build from
///   a_0(N) = (N + lambda - 1)_{N-1},
///   a_j(N) = j lambda sum_{i=0}^{N-j} (N + (j+1) lambda - 1)_i a_{j-1}(N-i-1).
TriangleA triangle_a_closed(const Binding &lambda, std::size_t n_max);

/// F = 1/((1+t)^lambda - 1) with valuation -1, known through t^(order-1).
LaurentSeries korobov_F(const Binding &lambda, std::size_t order);

/// Residual check of the N-th derivative ODE for F using the given triangle.
VerifyReport verify_ode_korobov(const TriangleA &triangle, unsigned n, std::size_t order);
VerifyReport verify_ode_korobov(unsigned n, const Binding &lambda, std::size_t order);

/// sum_{i=0}^{min(n,N)} lambda^(i-N+1) (n)_i a_{N-i}(N) K_{n-i}^{(N+1-i)}(lambda) against
/// N!(N)_n (n <= N) or (-1)^N sum_l binom(N,l) K_{n-l}/(n-l) (n)_{N+1+l} (n > N).
VerifyReport verify_order_m_identity(unsigned n, unsigned big_n, const Binding &lambda);

/// Series identity behind the order-m identity:
///   (1+t)^N t^(N+1) F^(N) = (1/lambda) [(-1)^N N! sum_{n<=N} (N)_n t^n/n!
///                           + sum_{n>N} sum_l binom(N,l) K_{n-l}/(n-l) (n)_{N+1+l} t^n/n!].
VerifyReport verify_order_m_series(unsigned big_n, const Binding &lambda, std::size_t order);

} // namespace kfe

#endif
