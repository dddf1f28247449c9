#include <kfe/poly.hpp>

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <stdexcept>

#include <kfe/errors.hpp>

namespace kfe
{

std::string_view symbol_name(Symbol s)
{
    switch (s) {
        case Symbol::lambda:
            return "lambda";
        case Symbol::mu:
            return "mu";
        case Symbol::x:
            return "x";
    }
    return "?";
}

Symbol parse_symbol(std::string_view name)
{
    if (name == "lambda") {
        return Symbol::lambda;
    }
    if (name == "mu") {
        return Symbol::mu;
    }
    if (name == "x") {
        return Symbol::x;
    }
    throw parse_error("unknown symbol '" + std::string(name) + "'");
}

Poly::Poly(Symbol s, std::vector<Rational> coeffs) : m_symbol(s), m_coeffs(std::move(coeffs))
{
    trim();
}

Poly::Poly(Symbol s, const Rational &c) : m_symbol(s)
{
    if (!c.is_zero()) {
        m_coeffs.push_back(c);
    }
}

Poly Poly::monomial(Symbol s, const Rational &c, std::size_t k)
{
    if (c.is_zero()) {
        return Poly(s);
    }
    std::vector<Rational> v(k + 1);
    v[k] = c;
    return Poly(s, std::move(v));
}

void Poly::trim()
{
    while (!m_coeffs.empty() && m_coeffs.back().is_zero()) {
        m_coeffs.pop_back();
    }
}

std::optional<std::size_t> Poly::degree() const
{
    if (m_coeffs.empty()) {
        return std::nullopt;
    }
    return m_coeffs.size() - 1;
}

Rational Poly::coeff(std::size_t k) const
{
    return k < m_coeffs.size() ? m_coeffs[k] : Rational(0);
}

const Rational &Poly::leading() const
{
    if (m_coeffs.empty()) {
        throw std::logic_error("leading coefficient of the zero polynomial");
    }
    return m_coeffs.back();
}

Rational Poly::eval(const Rational &at) const
{
    Rational acc;
    for (auto it = m_coeffs.rbegin(); it != m_coeffs.rend(); ++it) {
        acc *= at;
        acc += *it;
    }
    return acc;
}

Poly Poly::monic() const
{
    if (is_zero()) {
        return *this;
    }
    return *this * leading().inverse();
}

std::pair<std::size_t, Rational> Poly::trailing() const
{
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        if (!m_coeffs[k].is_zero()) {
            return {k, m_coeffs[k]};
        }
    }
    throw std::invalid_argument("trailing term of the zero polynomial");
}

Poly Poly::operator-() const
{
    Poly r(*this);
    for (auto &c : r.m_coeffs) {
        c = -c;
    }
    return r;
}

void check_same_symbol(const Poly &a, const Poly &b)
{
    if (a.symbol() != b.symbol() && !a.is_zero() && !b.is_zero()) {
        throw symbol_mismatch_error("polynomials in '" + std::string(symbol_name(a.symbol())) + "' and '"
                                    + std::string(symbol_name(b.symbol())) + "' cannot be combined");
    }
}

Poly &Poly::operator+=(const Poly &o)
{
    check_same_symbol(*this, o);
    if (is_zero()) {
        m_symbol = o.m_symbol;
    }
    if (o.m_coeffs.size() > m_coeffs.size()) {
        m_coeffs.resize(o.m_coeffs.size());
    }
    for (std::size_t k = 0; k < o.m_coeffs.size(); ++k) {
        m_coeffs[k] += o.m_coeffs[k];
    }
    trim();
    return *this;
}

Poly &Poly::operator-=(const Poly &o)
{
    return *this += -o;
}

Poly &Poly::operator*=(const Poly &o)
{
    check_same_symbol(*this, o);
    if (is_zero() || o.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    std::vector<mpq_class> prod(m_coeffs.size() + o.m_coeffs.size() - 1);
    for (std::size_t i = 0; i < m_coeffs.size(); ++i) {
        if (m_coeffs[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < o.m_coeffs.size(); ++j) {
            prod[i + j] += m_coeffs[i].value() * o.m_coeffs[j].value();
        }
    }
    m_coeffs.clear();
    m_coeffs.reserve(prod.size());
    for (auto &c : prod) {
        m_coeffs.emplace_back(std::move(c));
    }
    trim();
    return *this;
}

Poly &Poly::operator*=(const Rational &c)
{
    if (c.is_zero()) {
        m_coeffs.clear();
        return *this;
    }
    for (auto &x : m_coeffs) {
        x *= c;
    }
    return *this;
}

std::string Poly::to_string() const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = 0; k < m_coeffs.size(); ++k) {
        const Rational &c = m_coeffs[k];
        if (c.is_zero()) {
            continue;
        }
        const bool negative = c.sign() < 0;
        const Rational mag = negative ? -c : c;
        if (negative) {
            os << '-';
        } else if (!first) {
            os << '+';
        }
        first = false;
        if (k == 0) {
            os << mag.to_string();
            continue;
        }
        if (!mag.is_one()) {
            os << (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") << '*';
        }
        os << symbol_name(m_symbol);
        if (k > 1) {
            os << '^' << k;
        }
    }
    return os.str();
}

std::pair<Poly, Poly> divmod(const Poly &a, const Poly &b)
{
    check_same_symbol(a, b);
    if (b.is_zero()) {
        throw zero_division_error("polynomial division by zero");
    }
    const Symbol s = a.is_zero() ? b.symbol() : a.symbol();
    if (a.is_zero() || a.coeffs().size() < b.coeffs().size()) {
        return {Poly(s), a};
    }
    std::vector<mpq_class> rem;
    rem.reserve(a.coeffs().size());
    for (const auto &c : a.coeffs()) {
        rem.push_back(c.value());
    }
    const std::size_t db = b.coeffs().size() - 1;
    const mpq_class inv_lead = 1 / b.leading().value();
    std::vector<Rational> quot(a.coeffs().size() - db);
    for (std::size_t k = rem.size(); k-- > db;) {
        if (sgn(rem[k]) == 0) {
            continue;
        }
        const mpq_class q = rem[k] * inv_lead;
        for (std::size_t j = 0; j <= db; ++j) {
            rem[k - db + j] -= q * b.coeffs()[j].value();
        }
        quot[k - db] = Rational(q);
    }
    std::vector<Rational> r;
    r.reserve(db);
    for (std::size_t k = 0; k < db; ++k) {
        r.emplace_back(std::move(rem[k]));
    }
    return {Poly(s, std::move(quot)), Poly(s, std::move(r))};
}

Poly exact_div(const Poly &a, const Poly &b)
{
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) {
        throw std::logic_error("exact_div: divisor does not divide dividend");
    }
    return q;
}

namespace
{

// Coprimality certificate modulo the Mersenne prime 2^61 - 1. If both leading
// coefficients survive reduction, deg gcd mod p >= deg gcd over Q, so a
// constant modular gcd proves the inputs coprime.
constexpr std::uint64_t modulus = (std::uint64_t(1) << 61) - 1;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b)
{
    const unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(p & modulus);
    std::uint64_t hi = static_cast<std::uint64_t>(p >> 61);
    std::uint64_t s = lo + hi;
    while (s >= modulus) {
        s -= modulus;
    }
    return s;
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) {
            r = mulmod(r, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    return r;
}

std::optional<std::uint64_t> reduce(const Rational &c)
{
    const std::uint64_t d = mpz_fdiv_ui(c.value().get_den_mpz_t(), modulus);
    if (d == 0) {
        return std::nullopt;
    }
    const std::uint64_t n = mpz_fdiv_ui(c.value().get_num_mpz_t(), modulus);
    return mulmod(n, powmod(d, modulus - 2));
}

std::optional<std::vector<std::uint64_t>> reduce(const Poly &p)
{
    std::vector<std::uint64_t> out;
    out.reserve(p.coeffs().size());
    for (const auto &c : p.coeffs()) {
        auto r = reduce(c);
        if (!r) {
            return std::nullopt;
        }
        out.push_back(*r);
    }
    if (out.empty() || out.back() == 0) {
        return std::nullopt;
    }
    return out;
}

void trim_mod(std::vector<std::uint64_t> &v)
{
    while (!v.empty() && v.back() == 0) {
        v.pop_back();
    }
}

bool certainly_coprime(const Poly &a, const Poly &b)
{
    auto ra = reduce(a);
    auto rb = reduce(b);
    if (!ra || !rb) {
        return false;
    }
    std::vector<std::uint64_t> x = std::move(*ra), y = std::move(*rb);
    if (x.size() < y.size()) {
        std::swap(x, y);
    }
    while (!y.empty()) {
        if (y.size() == 1) {
            return true;
        }
        const std::uint64_t inv = powmod(y.back(), modulus - 2);
        while (x.size() >= y.size()) {
            const std::uint64_t q = mulmod(x.back(), inv);
            const std::size_t shift = x.size() - y.size();
            for (std::size_t j = 0; j < y.size(); ++j) {
                const std::uint64_t t = mulmod(q, y[j]);
                x[shift + j] = x[shift + j] >= t ? x[shift + j] - t : x[shift + j] + modulus - t;
            }
            trim_mod(x);
            if (x.empty()) {
                break;
            }
        }
        std::swap(x, y);
    }
    return x.size() == 1;
}

} // namespace

Poly gcd(const Poly &a, const Poly &b)
{
    check_same_symbol(a, b);
    const Symbol s = a.is_zero() ? b.symbol() : a.symbol();
    if (a.is_zero()) {
        return b.monic();
    }
    if (b.is_zero()) {
        return a.monic();
    }
    if (a.is_constant() || b.is_constant() || certainly_coprime(a, b)) {
        return Poly(s, Rational(1));
    }
    Poly x = a.monic(), y = b.monic();
    while (!y.is_zero()) {
        Poly r = divmod(x, y).second.monic();
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

} // namespace kfe
