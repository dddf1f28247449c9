#ifndef KFE_SCALAR_HPP
#define KFE_SCALAR_HPP

#include <optional>
#include <string>
#include <variant>

#include <kfe/poly.hpp>
#include <kfe/ratfun.hpp>
#include <kfe/rational.hpp>

namespace kfe
{

/// Exact coefficient: a rational, a polynomial or a rational function in a
/// single symbol. Results are always demoted to the simplest representation
/// (RatFun with constant denominator -> Poly, constant Poly -> Rational), so
/// structural equality is value equality.
class Scalar
{
public:
    using value_type = std::variant<Rational, Poly, RatFun>;

    Scalar() : m_value(Rational(0)) {}
    Scalar(long n) : m_value(Rational(n)) {}
    Scalar(Rational r) : m_value(std::move(r)) {}
    Scalar(Poly p);
    Scalar(RatFun f);

    static Scalar variable(Symbol s) { return Scalar(Poly::variable(s)); }

    const value_type &value() const { return m_value; }
    bool is_rational() const { return std::holds_alternative<Rational>(m_value); }
    bool is_poly() const { return std::holds_alternative<Poly>(m_value); }
    bool is_ratfun() const { return std::holds_alternative<RatFun>(m_value); }
    const Rational &as_rational() const { return std::get<Rational>(m_value); }
    const Poly &as_poly() const { return std::get<Poly>(m_value); }
    const RatFun &as_ratfun() const { return std::get<RatFun>(m_value); }

    /// Symbol carried by the value, if any (rationals carry none).
    std::optional<Symbol> symbol() const;

    bool is_zero() const;
    bool is_one() const;

    /// Numerator/denominator split; denominator is 1 unless this is a RatFun.
    Poly numerator(Symbol fallback) const;
    Poly denominator(Symbol fallback) const;

    Scalar inverse() const;
    Scalar pow(unsigned e) const;
    /// Substitute a rational value for the symbol.
    Rational eval(const Rational &at) const;

    Scalar operator-() const;
    Scalar &operator+=(const Scalar &o);
    Scalar &operator-=(const Scalar &o);
    Scalar &operator*=(const Scalar &o);
    Scalar &operator/=(const Scalar &o);

    friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

    friend bool operator==(const Scalar &a, const Scalar &b) { return a.m_value == b.m_value; }

    /// Compact human-readable form, e.g. "1+3*lambda" or "(1/2)/(lambda)".
    std::string to_string() const;

private:
    value_type m_value;
};

/// (x)_n = x(x-1)...(x-n+1), empty product 1.
Scalar falling_factorial(const Scalar &base, unsigned n);
/// (x|step)_n = x(x-step)...(x-(n-1)step).
Scalar gen_falling_factorial(const Scalar &base, const Scalar &step, unsigned n);
/// binomial(e, k) = (e)_k / k! for an arbitrary exact e.
Scalar binomial(const Scalar &e, unsigned k);

/// (valuation, coefficient) of the lowest-order term of a polynomial scalar;
/// a nonzero rational has valuation 0. Throws on zero or on a RatFun whose
/// denominator vanishes at 0.
std::pair<std::size_t, Rational> poly_trailing(const Scalar &s);

/// Deterministic parameter samples 2, 3/2, -1/3, 5, 7/4, then primes
/// 3, 7, 11, ... with duplicates and any excluded value skipped.
std::vector<Rational> sample_points(std::size_t count, const std::vector<Rational> &excluded = {});

} // namespace kfe

#endif
