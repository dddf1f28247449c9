#include <kfe/scalar.hpp>

#include <kfe/errors.hpp>

namespace kfe
{

namespace
{

Scalar::value_type demote(Poly p)
{
    if (p.is_constant()) {
        return p.coeff(0);
    }
    return p;
}

Scalar::value_type demote(RatFun f)
{
    if (f.is_polynomial()) {
        return demote(f.num());
    }
    return f;
}

std::optional<Symbol> common_symbol(const Scalar &a, const Scalar &b)
{
    const auto sa = a.symbol();
    const auto sb = b.symbol();
    if (sa && sb && *sa != *sb) {
        throw symbol_mismatch_error("scalars in '" + std::string(symbol_name(*sa)) + "' and '"
                                    + std::string(symbol_name(*sb)) + "' cannot be combined");
    }
    return sa ? sa : sb;
}

Poly to_poly(const Scalar &s, Symbol sym)
{
    if (s.is_rational()) {
        return Poly(sym, s.as_rational());
    }
    return s.as_poly();
}

RatFun to_ratfun(const Scalar &s, Symbol sym)
{
    if (s.is_ratfun()) {
        return s.as_ratfun();
    }
    return RatFun(to_poly(s, sym));
}

} // namespace

Scalar::Scalar(Poly p) : m_value(demote(std::move(p))) {}

Scalar::Scalar(RatFun f) : m_value(demote(std::move(f))) {}

std::optional<Symbol> Scalar::symbol() const
{
    if (is_poly()) {
        return as_poly().symbol();
    }
    if (is_ratfun()) {
        return as_ratfun().symbol();
    }
    return std::nullopt;
}

bool Scalar::is_zero() const
{
    return is_rational() && as_rational().is_zero();
}

bool Scalar::is_one() const
{
    return is_rational() && as_rational().is_one();
}

Poly Scalar::numerator(Symbol fallback) const
{
    const Symbol s = symbol().value_or(fallback);
    if (is_ratfun()) {
        return as_ratfun().num();
    }
    return to_poly(*this, s);
}

Poly Scalar::denominator(Symbol fallback) const
{
    const Symbol s = symbol().value_or(fallback);
    if (is_ratfun()) {
        return as_ratfun().den();
    }
    return Poly(s, Rational(1));
}

Scalar Scalar::inverse() const
{
    if (is_rational()) {
        return as_rational().inverse();
    }
    const Symbol s = *symbol();
    return Scalar(to_ratfun(*this, s).inverse());
}

Scalar Scalar::pow(unsigned e) const
{
    Scalar result(1);
    Scalar base = *this;
    while (e) {
        if (e & 1u) {
            result *= base;
        }
        e >>= 1;
        if (e) {
            base *= base;
        }
    }
    return result;
}

Rational Scalar::eval(const Rational &at) const
{
    if (is_rational()) {
        return as_rational();
    }
    if (is_poly()) {
        return as_poly().eval(at);
    }
    return as_ratfun().eval(at);
}

Scalar Scalar::operator-() const
{
    return std::visit([](const auto &v) { return Scalar(-v); }, m_value);
}

Scalar &Scalar::operator+=(const Scalar &o)
{
    const auto s = common_symbol(*this, o);
    if (!s) {
        m_value = as_rational() + o.as_rational();
    } else if (is_ratfun() || o.is_ratfun()) {
        m_value = demote(to_ratfun(*this, *s) + to_ratfun(o, *s));
    } else {
        m_value = demote(to_poly(*this, *s) + to_poly(o, *s));
    }
    return *this;
}

Scalar &Scalar::operator-=(const Scalar &o)
{
    return *this += -o;
}

Scalar &Scalar::operator*=(const Scalar &o)
{
    const auto s = common_symbol(*this, o);
    if (!s) {
        m_value = as_rational() * o.as_rational();
    } else if (is_zero() || o.is_zero()) {
        m_value = Rational(0);
    } else if (o.is_rational()) {
        if (is_poly()) {
            m_value = demote(as_poly() * o.as_rational());
        } else {
            const auto &f = as_ratfun();
            m_value = demote(RatFun(f.num() * o.as_rational(), f.den()));
        }
    } else if (is_rational()) {
        Scalar tmp = o;
        tmp *= *this;
        *this = std::move(tmp);
    } else if (is_ratfun() || o.is_ratfun()) {
        m_value = demote(to_ratfun(*this, *s) * to_ratfun(o, *s));
    } else {
        m_value = demote(as_poly() * o.as_poly());
    }
    return *this;
}

Scalar &Scalar::operator/=(const Scalar &o)
{
    if (o.is_zero()) {
        throw zero_division_error("scalar division by zero");
    }
    if (o.is_rational()) {
        return *this *= Scalar(o.as_rational().inverse());
    }
    return *this *= o.inverse();
}

std::string Scalar::to_string() const
{
    return std::visit([](const auto &v) { return v.to_string(); }, m_value);
}

Scalar falling_factorial(const Scalar &base, unsigned n)
{
    return gen_falling_factorial(base, Scalar(1), n);
}

Scalar gen_falling_factorial(const Scalar &base, const Scalar &step, unsigned n)
{
    Scalar result(1);
    Scalar factor = base;
    for (unsigned k = 0; k < n; ++k) {
        result *= factor;
        if (k + 1 < n) {
            factor -= step;
        }
    }
    return result;
}

Scalar binomial(const Scalar &e, unsigned k)
{
    return falling_factorial(e, k) / Scalar(factorial(k));
}

std::pair<std::size_t, Rational> poly_trailing(const Scalar &s)
{
    if (s.is_zero()) {
        throw std::invalid_argument("trailing term of zero");
    }
    if (s.is_rational()) {
        return {0, s.as_rational()};
    }
    if (s.is_poly()) {
        return s.as_poly().trailing();
    }
    throw std::invalid_argument("trailing term requested for a rational function");
}

namespace
{

bool is_prime(long n)
{
    if (n < 2) {
        return false;
    }
    for (long d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

std::vector<Rational> sample_points(std::size_t count, const std::vector<Rational> &excluded)
{
    std::vector<Rational> out;
    auto offer = [&](const Rational &r) {
        if (out.size() >= count) {
            return;
        }
        for (const auto &e : excluded) {
            if (e == r) {
                return;
            }
        }
        for (const auto &o : out) {
            if (o == r) {
                return;
            }
        }
        out.push_back(r);
    };
    for (const Rational &r : {Rational(2), Rational(3, 2), Rational(-1, 3), Rational(5), Rational(7, 4)}) {
        offer(r);
    }
    for (long p = 2; out.size() < count; ++p) {
        if (is_prime(p)) {
            offer(Rational(p));
        }
    }
    return out;
}

} // namespace kfe
