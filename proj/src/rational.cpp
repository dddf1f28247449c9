#include <kfe/rational.hpp>

#include <cctype>
#include <ostream>

#include <kfe/errors.hpp>

namespace kfe
{

Rational::Rational(long num, long den) : Rational(mpz_class(num), mpz_class(den)) {}

Rational::Rational(const mpz_class &num, const mpz_class &den)
{
    if (den == 0) {
        throw zero_division_error("rational with zero denominator");
    }
    m_value = mpq_class(num, den);
    m_value.canonicalize();
}

Rational::Rational(mpq_class q) : m_value(std::move(q))
{
    m_value.canonicalize();
}

namespace
{

bool is_integer_literal(std::string_view s, bool allow_sign)
{
    if (!s.empty() && allow_sign && (s.front() == '-' || s.front() == '+')) {
        s.remove_prefix(1);
    }
    if (s.empty()) {
        return false;
    }
    for (char c : s) {
        if (!std::isdigit(static_cast<unsigned char>(c))) {
            return false;
        }
    }
    return true;
}

mpz_class to_mpz(std::string_view s)
{
    if (!s.empty() && s.front() == '+') {
        s.remove_prefix(1);
    }
    return mpz_class(std::string(s), 10);
}

} // namespace

Rational Rational::parse(std::string_view text)
{
    const auto slash = text.find('/');
    const auto num = text.substr(0, slash);
    if (!is_integer_literal(num, true)) {
        throw parse_error("invalid rational literal '" + std::string(text) + "'");
    }
    if (slash == std::string_view::npos) {
        return Rational(to_mpz(num));
    }
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den, false)) {
        throw parse_error("invalid rational literal '" + std::string(text) + "'");
    }
    const mpz_class d = to_mpz(den);
    if (d == 0) {
        throw parse_error("zero denominator in '" + std::string(text) + "'");
    }
    return Rational(to_mpz(num), d);
}

Rational Rational::inverse() const
{
    if (is_zero()) {
        throw zero_division_error("inverse of rational zero");
    }
    return Rational(mpq_class(1) / m_value);
}

Rational Rational::pow(unsigned e) const
{
    mpz_class n, d;
    mpz_pow_ui(n.get_mpz_t(), m_value.get_num_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), m_value.get_den_mpz_t(), e);
    mpq_class r(n, d);
    return Rational(std::move(r));
}

std::string Rational::to_string() const
{
    if (is_integer()) {
        return m_value.get_num().get_str();
    }
    return m_value.get_num().get_str() + "/" + m_value.get_den().get_str();
}

Rational &Rational::operator+=(const Rational &o)
{
    m_value += o.m_value;
    return *this;
}

Rational &Rational::operator-=(const Rational &o)
{
    m_value -= o.m_value;
    return *this;
}

Rational &Rational::operator*=(const Rational &o)
{
    m_value *= o.m_value;
    return *this;
}

Rational &Rational::operator/=(const Rational &o)
{
    if (o.is_zero()) {
        throw zero_division_error("rational division by zero");
    }
    m_value /= o.m_value;
    return *this;
}

std::ostream &operator<<(std::ostream &os, const Rational &r)
{
    return os << r.to_string();
}

Rational factorial(unsigned n)
{
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Rational(f);
}

Rational binomial(long n, long k)
{
    if (k < 0) {
        return Rational(0);
    }
    mpz_class r;
    if (n >= 0) {
        mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    } else {
        mpz_bin_ui(r.get_mpz_t(), mpz_class(n).get_mpz_t(), static_cast<unsigned long>(k));
    }
    return Rational(r);
}

} // namespace kfe
