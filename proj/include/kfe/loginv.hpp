#ifndef KFE_LOGINV_HPP
#define KFE_LOGINV_HPP

#include <cstddef>
#include <vector>

#include <kfe/korobov.hpp>
#include <kfe/rational.hpp>
#include <kfe/report.hpp>
#include <kfe/series.hpp>

namespace kfe
{

/// H_{N,j} for 0 <= j <= N <= n_max:
///   H_{N,0} = 1, H_{N,j} = sum_{i=1}^N H_{i-1,j-1} / i (j >= 1), H_{0,j} = 0 (j >= 1).
struct HarmonicTable {
    std::vector<std::vector<Rational>> rows; // rows[N][j]

    std::size_t n_max() const { return rows.size() - 1; }
    /// Zero outside the triangle (j > N).
    Rational at(std::size_t n, std::size_t j) const;
};

HarmonicTable harmonic_table(std::size_t n_max);

/// d^N/dt^N 1/log(1+t) = sign * factorial / (1+t)^N * sum_i c_i / log^i(1+t),
/// with sign = (-1)^N, factorial = (N-1)! and c_i = (i-1)! H_{N-1,i-2}.
struct DerivativeFormula {
    struct Term {
        unsigned power; // i
        Rational coeff; // c_i
    };

    unsigned n = 1;
    int sign = -1;
    Rational factorial;
    std::vector<Term> terms; // i = 2..N+1

    /// factorial * c_i, the numerators as they appear once the (N-1)! is distributed.
    std::vector<Rational> display_coefficients() const;
};

DerivativeFormula loginv_derivative_formula(unsigned n);

/// 1/log(1+t) as a Laurent series of valuation -1, known through t^(order-1).
LaurentSeries loginv_series(std::size_t order);

VerifyReport verify_loginv(const DerivativeFormula &formula, std::size_t order);
VerifyReport verify_loginv(unsigned n, std::size_t order);

/// For i = 2..N+1: lambda-valuation of a_{i-1}(N; lambda) is >= i-2 and its
/// lambda^(i-2) coefficient equals (i-1)!(N-1)! H_{N-1,i-2}.
VerifyReport verify_lambda_limit(const TriangleA &triangle, unsigned n);
VerifyReport verify_lambda_limit(unsigned n);

} // namespace kfe

#endif
