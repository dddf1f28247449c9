#ifndef KFE_RATFUN_HPP
#define KFE_RATFUN_HPP

#include <string>

#include <kfe/poly.hpp>

namespace kfe
{

/// Reduced rational function num/den in one symbol: gcd(num, den) = 1 and
/// den is monic.
class RatFun
{
public:
    explicit RatFun(Poly num);
    /// Normalizing constructor, see ratfun_normalize().
    RatFun(Poly num, Poly den);

    Symbol symbol() const { return m_num.symbol(); }
    const Poly &num() const { return m_num; }
    const Poly &den() const { return m_den; }

    bool is_zero() const { return m_num.is_zero(); }
    bool is_polynomial() const { return m_den.is_constant(); }

    RatFun inverse() const;
    /// Throws zero_division_error when the denominator vanishes at the point.
    Rational eval(const Rational &at) const;

    RatFun operator-() const;
    friend RatFun operator+(const RatFun &a, const RatFun &b);
    friend RatFun operator-(const RatFun &a, const RatFun &b);
    friend RatFun operator*(const RatFun &a, const RatFun &b);
    friend RatFun operator/(const RatFun &a, const RatFun &b);

    friend bool operator==(const RatFun &a, const RatFun &b) { return a.m_num == b.m_num && a.m_den == b.m_den; }

    std::string to_string() const;

private:
    struct reduced_tag {};
    RatFun(Poly num, Poly den, reduced_tag) : m_num(std::move(num)), m_den(std::move(den)) {}

    Poly m_num;
    Poly m_den;
};

RatFun ratfun_normalize(const Poly &num, const Poly &den);

} // namespace kfe

#endif
