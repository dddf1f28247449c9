#ifndef KFE_POLY_HPP
#define KFE_POLY_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <kfe/rational.hpp>

namespace kfe
{

/// The formal parameters a symbolic coefficient may carry.
enum class Symbol { lambda, mu, x };

std::string_view symbol_name(Symbol s);
Symbol parse_symbol(std::string_view name);

/// Dense univariate polynomial over Q. Index i of coeffs() holds the
/// coefficient of symbol^i; the highest stored coefficient is nonzero, so the
/// zero polynomial has no coefficients at all.
class Poly
{
public:
    explicit Poly(Symbol s) : m_symbol(s) {}
    Poly(Symbol s, std::vector<Rational> coeffs);
    Poly(Symbol s, const Rational &c);

    static Poly variable(Symbol s) { return Poly(s, std::vector<Rational>{Rational(0), Rational(1)}); }
    /// c * symbol^k
    static Poly monomial(Symbol s, const Rational &c, std::size_t k);

    Symbol symbol() const { return m_symbol; }
    const std::vector<Rational> &coeffs() const { return m_coeffs; }

    bool is_zero() const { return m_coeffs.empty(); }
    bool is_constant() const { return m_coeffs.size() <= 1; }
    /// std::nullopt for the zero polynomial.
    std::optional<std::size_t> degree() const;
    Rational coeff(std::size_t k) const;
    const Rational &leading() const;

    Rational eval(const Rational &at) const;
    Poly monic() const;

    /// (valuation, coefficient) of the lowest nonzero term; throws on zero.
    std::pair<std::size_t, Rational> trailing() const;

    Poly operator-() const;
    Poly &operator+=(const Poly &o);
    Poly &operator-=(const Poly &o);
    Poly &operator*=(const Poly &o);
    Poly &operator*=(const Rational &c);

    friend Poly operator+(Poly a, const Poly &b) { return a += b; }
    friend Poly operator-(Poly a, const Poly &b) { return a -= b; }
    friend Poly operator*(Poly a, const Poly &b) { return a *= b; }
    friend Poly operator*(Poly a, const Rational &c) { return a *= c; }
    friend Poly operator*(const Rational &c, Poly a) { return a *= c; }

    friend bool operator==(const Poly &a, const Poly &b)
    {
        return a.m_coeffs == b.m_coeffs && (a.is_zero() || a.m_symbol == b.m_symbol);
    }

    std::string to_string() const;

private:
    void trim();

    Symbol m_symbol;
    std::vector<Rational> m_coeffs;
};

void check_same_symbol(const Poly &a, const Poly &b);

/// Euclidean division: a = q*b + r with deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b);
/// Exact quotient; throws std::logic_error if b does not divide a.
Poly exact_div(const Poly &a, const Poly &b);
/// Monic gcd (zero only if both inputs are zero).
Poly gcd(const Poly &a, const Poly &b);

} // namespace kfe

#endif
