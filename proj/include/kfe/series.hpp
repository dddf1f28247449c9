#ifndef KFE_SERIES_HPP
#define KFE_SERIES_HPP

#include <cstddef>
#include <optional>
#include <vector>

#include <kfe/scalar.hpp>

namespace kfe
{

/// Coefficient domain of a series: Q when symbol is empty, otherwise Q(symbol).
struct Domain {
    std::optional<Symbol> symbol;

    static Domain rational() { return Domain{}; }
    static Domain symbolic(Symbol s) { return Domain{s}; }

    bool admits(const Scalar &c) const;
    friend bool operator==(const Domain &, const Domain &) = default;
};

/// Q is contained in every Q(s); two different symbols cannot be combined.
Domain unify(const Domain &a, const Domain &b);

/// Truncated power series c_0 + c_1 t + ... + c_order t^order + O(t^(order+1)).
/// Coefficients beyond the order are unknown, not zero.
class PowerSeries
{
public:
    PowerSeries(Domain d, std::vector<Scalar> coeffs);

    static PowerSeries constant(Domain d, const Scalar &c, std::size_t order);
    /// Polynomial c_0 + c_1 t + ... embedded at the given order (missing terms 0).
    static PowerSeries from_coeffs(Domain d, const std::vector<Scalar> &c, std::size_t order);

    const Domain &domain() const { return m_domain; }
    std::size_t order() const { return m_coeffs.size() - 1; }
    const std::vector<Scalar> &coeffs() const { return m_coeffs; }
    /// Throws precision_error past the truncation order.
    const Scalar &operator[](std::size_t k) const;

    PowerSeries truncated(std::size_t order) const;

    friend bool operator==(const PowerSeries &, const PowerSeries &) = default;

private:
    Domain m_domain;
    std::vector<Scalar> m_coeffs;
};

PowerSeries ps_add(const PowerSeries &a, const PowerSeries &b);
PowerSeries ps_sub(const PowerSeries &a, const PowerSeries &b);
/// Exact through min(a.order, b.order).
PowerSeries ps_mul(const PowerSeries &a, const PowerSeries &b);
PowerSeries ps_scale(const PowerSeries &a, const Scalar &c);
/// Multiplicative inverse; the constant term must be nonzero.
PowerSeries ps_invert(const PowerSeries &a);
/// Order drops by one; throws on order-0 input.
PowerSeries ps_derivative(const PowerSeries &a);
/// t - t^2/2 + t^3/3 - ... through t^order.
PowerSeries ps_log1p(std::size_t order);
/// exp(a) for a with zero constant term.
PowerSeries ps_exp(const PowerSeries &a);
/// (1+t)^e, coefficient k equal to binomial(e, k).
PowerSeries ps_binomial_pow(const Scalar &exponent, std::size_t order);
/// a(c t).
PowerSeries ps_rescale(const PowerSeries &a, const Scalar &c);

inline PowerSeries operator+(const PowerSeries &a, const PowerSeries &b) { return ps_add(a, b); }
inline PowerSeries operator-(const PowerSeries &a, const PowerSeries &b) { return ps_sub(a, b); }
inline PowerSeries operator*(const PowerSeries &a, const PowerSeries &b) { return ps_mul(a, b); }

/// Truncated Laurent series sum_{k=v}^{K} c_k t^k + O(t^(K+1)) with a tight
/// valuation v (c_v != 0). K is the "known through" exponent. A series whose
/// known coefficients all vanish is the dedicated zero value O(t^(K+1)).
class LaurentSeries
{
public:
    /// Coefficient k of `body` multiplies t^(valuation + k); leading zeros are
    /// stripped so the stored valuation is tight.
    LaurentSeries(long valuation, const PowerSeries &body);
    LaurentSeries(Domain d, long valuation, std::vector<Scalar> coeffs);
    explicit LaurentSeries(const PowerSeries &ps) : LaurentSeries(0, ps) {}

    static LaurentSeries zero(Domain d, long known_through);

    const Domain &domain() const { return m_domain; }
    bool is_zero() const { return m_coeffs.empty(); }
    /// Smallest exponent with a nonzero coefficient; known_through()+1 for zero.
    long valuation() const { return m_valuation; }
    long known_through() const { return m_known_through; }
    /// Coefficient of t^exponent; zero below the valuation, throws precision_error
    /// past known_through().
    Scalar coeff(long exponent) const;
    const Scalar &leading() const;
    /// The unit part: coefficients from the valuation up to known_through().
    PowerSeries body() const;

    friend bool operator==(const LaurentSeries &, const LaurentSeries &) = default;

private:
    Domain m_domain;
    long m_valuation;
    long m_known_through;
    std::vector<Scalar> m_coeffs;
};

LaurentSeries ls_add(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries ls_sub(const LaurentSeries &a, const LaurentSeries &b);
/// Exact for exponents <= min(K_a + v_b, K_b + v_a).
LaurentSeries ls_mul(const LaurentSeries &a, const LaurentSeries &b);
LaurentSeries ls_scale(const LaurentSeries &a, const Scalar &c);
/// Multiply by t^k.
LaurentSeries ls_shift(const LaurentSeries &a, long k);
/// Inverse of a nonzero series: t^(-v) * invert(body).
LaurentSeries ls_invert(const LaurentSeries &a);
LaurentSeries ls_derivative(const LaurentSeries &a);
/// a^i for i >= 1; throws on zero input.
LaurentSeries ls_pow(const LaurentSeries &a, unsigned i);

inline LaurentSeries operator+(const LaurentSeries &a, const LaurentSeries &b) { return ls_add(a, b); }
inline LaurentSeries operator-(const LaurentSeries &a, const LaurentSeries &b) { return ls_sub(a, b); }
inline LaurentSeries operator*(const LaurentSeries &a, const LaurentSeries &b) { return ls_mul(a, b); }

} // namespace kfe

#endif
