#include <kfe/ratfun.hpp>

#include <kfe/errors.hpp>

namespace kfe
{

RatFun ratfun_normalize(const Poly &num, const Poly &den)
{
    return RatFun(num, den);
}

RatFun::RatFun(Poly num) : m_num(std::move(num)), m_den(m_num.symbol(), Rational(1)) {}

RatFun::RatFun(Poly num, Poly den) : m_num(std::move(num)), m_den(std::move(den))
{
    if (m_den.is_zero()) {
        throw zero_division_error("rational function with zero denominator");
    }
    check_same_symbol(m_num, m_den);
    if (m_num.is_zero()) {
        m_den = Poly(m_den.symbol(), Rational(1));
        m_num = Poly(m_den.symbol());
        return;
    }
    const Poly g = gcd(m_num, m_den);
    if (!g.is_constant()) {
        m_num = exact_div(m_num, g);
        m_den = exact_div(m_den, g);
    }
    const Rational lead = m_den.leading();
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        m_num *= inv;
        m_den *= inv;
    }
}

RatFun RatFun::inverse() const
{
    if (is_zero()) {
        throw zero_division_error("inverse of zero rational function");
    }
    return RatFun(m_den, m_num);
}

Rational RatFun::eval(const Rational &at) const
{
    const Rational d = m_den.eval(at);
    if (d.is_zero()) {
        throw zero_division_error("rational function evaluated at a pole");
    }
    return m_num.eval(at) / d;
}

RatFun RatFun::operator-() const
{
    return RatFun(-m_num, m_den, reduced_tag{});
}

RatFun operator+(const RatFun &a, const RatFun &b)
{
    check_same_symbol(a.m_num, b.m_num);
    if (a.m_den == b.m_den) {
        return RatFun(a.m_num + b.m_num, a.m_den);
    }
    if (a.m_den.is_constant()) {
        return RatFun(a.m_num * b.m_den + b.m_num, b.m_den, RatFun::reduced_tag{});
    }
    if (b.m_den.is_constant()) {
        return RatFun(a.m_num + b.m_num * a.m_den, a.m_den, RatFun::reduced_tag{});
    }
    const Poly g = gcd(a.m_den, b.m_den);
    if (g.is_constant()) {
        return RatFun(a.m_num * b.m_den + b.m_num * a.m_den, a.m_den * b.m_den);
    }
    const Poly ca = exact_div(b.m_den, g);
    const Poly cb = exact_div(a.m_den, g);
    return RatFun(a.m_num * ca + b.m_num * cb, a.m_den * ca);
}

RatFun operator-(const RatFun &a, const RatFun &b)
{
    return a + (-b);
}

RatFun operator*(const RatFun &a, const RatFun &b)
{
    check_same_symbol(a.m_num, b.m_num);
    if (a.is_zero() || b.is_zero()) {
        const Symbol s = a.is_zero() ? a.symbol() : b.symbol();
        return RatFun(Poly(s));
    }
    // Inputs are reduced, so only cross factors can cancel.
    Poly an = a.m_num, ad = a.m_den, bn = b.m_num, bd = b.m_den;
    const Poly g1 = gcd(an, bd);
    if (!g1.is_constant()) {
        an = exact_div(an, g1);
        bd = exact_div(bd, g1);
    }
    const Poly g2 = gcd(bn, ad);
    if (!g2.is_constant()) {
        bn = exact_div(bn, g2);
        ad = exact_div(ad, g2);
    }
    Poly num = an * bn;
    Poly den = ad * bd;
    const Rational lead = den.leading();
    if (!lead.is_one()) {
        const Rational inv = lead.inverse();
        num *= inv;
        den *= inv;
    }
    return RatFun(std::move(num), std::move(den), RatFun::reduced_tag{});
}

RatFun operator/(const RatFun &a, const RatFun &b)
{
    return a * b.inverse();
}

std::string RatFun::to_string() const
{
    if (m_den.is_constant()) {
        return m_num.to_string();
    }
    return "(" + m_num.to_string() + ")/(" + m_den.to_string() + ")";
}

} // namespace kfe
