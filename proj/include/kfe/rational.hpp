#ifndef KFE_RATIONAL_HPP
#define KFE_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace kfe
{

/// Arbitrary-precision rational number, always kept in canonical form
/// (positive denominator, coprime numerator and denominator, zero is 0/1).
class Rational
{
public:
    Rational() = default;
    Rational(long n) : m_value(n) {}
    Rational(long num, long den);
    explicit Rational(const mpz_class &n) : m_value(n) {}
    Rational(const mpz_class &num, const mpz_class &den);
    explicit Rational(mpq_class q);

    /// Parses "p/q" or "p" (optional leading sign on p).
    static Rational parse(std::string_view text);

    mpz_class numerator() const { return m_value.get_num(); }
    mpz_class denominator() const { return m_value.get_den(); }
    const mpq_class &value() const { return m_value; }

    bool is_zero() const { return sgn(m_value) == 0; }
    bool is_one() const { return m_value == 1; }
    bool is_integer() const { return m_value.get_den() == 1; }
    int sign() const { return sgn(m_value); }

    Rational inverse() const;
    Rational pow(unsigned e) const;

    /// "p/q", or "p" when q = 1.
    std::string to_string() const;

    Rational operator-() const { return Rational(mpq_class(-m_value)); }
    Rational &operator+=(const Rational &o);
    Rational &operator-=(const Rational &o);
    Rational &operator*=(const Rational &o);
    Rational &operator/=(const Rational &o);

    friend Rational operator+(Rational a, const Rational &b) { return a += b; }
    friend Rational operator-(Rational a, const Rational &b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational &b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational &b) { return a /= b; }

    friend bool operator==(const Rational &a, const Rational &b) { return a.m_value == b.m_value; }
    friend std::strong_ordering operator<=>(const Rational &a, const Rational &b)
    {
        const int c = cmp(a.m_value, b.m_value);
        return c < 0 ? std::strong_ordering::less : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

private:
    mpq_class m_value;
};

std::ostream &operator<<(std::ostream &os, const Rational &r);

Rational factorial(unsigned n);
Rational binomial(long n, long k);

} // namespace kfe

#endif
