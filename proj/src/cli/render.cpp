#include <kfe/render.hpp>

#include <sstream>

namespace kfe
{

namespace
{

std::string sup(std::size_t k)
{
    return k < 10 ? "^" + std::to_string(k) : "^{" + std::to_string(k) + "}";
}

mpz_class denominator_lcm(const Poly &p)
{
    mpz_class l = 1;
    for (const auto &c : p.coeffs()) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.denominator().get_mpz_t());
    }
    return l;
}

// Integer-coefficient polynomial, highest degree first.
std::string latex_integer_poly(const Poly &p)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.coeffs().size(); k-- > 0;) {
        const Rational &c = p.coeffs()[k];
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
        if (k == 0 || !mag.is_one()) {
            os << mag.to_string();
        }
        if (k > 0) {
            os << latex_symbol(p.symbol());
            if (k > 1) {
                os << sup(k);
            }
        }
    }
    return os.str();
}

std::string latex_rational(const Rational &r)
{
    if (r.is_integer()) {
        return r.to_string();
    }
    const std::string frac = "\\frac{" + mpz_class(abs(r.numerator())).get_str() + "}{" + r.denominator().get_str() + "}";
    return r.sign() < 0 ? "-" + frac : frac;
}

std::size_t term_count(const Poly &p)
{
    std::size_t n = 0;
    for (const auto &c : p.coeffs()) {
        n += c.is_zero() ? 0 : 1;
    }
    return n;
}

} // namespace

std::string latex_symbol(Symbol s)
{
    switch (s) {
        case Symbol::lambda:
            return "\\lambda";
        case Symbol::mu:
            return "\\mu";
        case Symbol::x:
            return "x";
    }
    return "?";
}

std::string latex(const Poly &p)
{
    const mpz_class d = denominator_lcm(p);
    const Poly cleared = p * Rational(d);
    if (d == 1) {
        return latex_integer_poly(cleared);
    }
    const std::string body = latex_integer_poly(cleared);
    return "\\frac{1}{" + d.get_str() + "}" + (term_count(cleared) > 1 ? "(" + body + ")" : body);
}

std::string latex(const Scalar &s)
{
    if (s.is_rational()) {
        return latex_rational(s.as_rational());
    }
    if (s.is_poly()) {
        return latex(s.as_poly());
    }
    const RatFun &f = s.as_ratfun();
    mpz_class l = denominator_lcm(f.num());
    const mpz_class dd = denominator_lcm(f.den());
    mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), dd.get_mpz_t());
    return "\\frac{" + latex_integer_poly(f.num() * Rational(l)) + "}{" + latex_integer_poly(f.den() * Rational(l)) + "}";
}

std::string render_plain(const DerivativeFormula &f)
{
    const auto coeffs = f.display_coefficients();
    const std::string sign = f.sign < 0 ? "-" : "";
    if (f.n == 1) {
        return sign + coeffs[0].to_string() + "/((1+t) log^2(1+t))";
    }
    std::ostringstream os;
    os << sign << "1/(1+t)^" << f.n << " (";
    for (std::size_t k = 0; k < f.terms.size(); ++k) {
        if (k > 0) {
            os << " + ";
        }
        os << coeffs[k].to_string() << "/log^" << f.terms[k].power << "(1+t)";
    }
    os << ")";
    return os.str();
}

std::string render_latex(const DerivativeFormula &f)
{
    const auto coeffs = f.display_coefficients();
    std::ostringstream os;
    if (f.n == 1) {
        os << "\\frac{d}{dt}";
    } else {
        os << "\\frac{d" << sup(f.n) << "}{dt" << sup(f.n) << "}";
    }
    os << "\\frac{1}{\\log(1+t)}=\\frac{" << (f.sign < 0 ? "-1" : "1") << "}{";
    os << (f.n == 1 ? std::string("1+t") : "(1+t)" + sup(f.n)) << "}";
    auto term = [&](std::size_t k) {
        const Rational &c = coeffs[k];
        const std::string log_pow = "\\log" + sup(f.terms[k].power) + "(1+t)";
        if (c.is_integer()) {
            return "\\frac{" + c.to_string() + "}{" + log_pow + "}";
        }
        return "\\frac{" + c.numerator().get_str() + "}{" + c.denominator().get_str() + log_pow + "}";
    };
    if (f.terms.size() == 1) {
        os << term(0);
    } else {
        os << "\\left(";
        for (std::size_t k = 0; k < f.terms.size(); ++k) {
            os << (k > 0 ? "+" : "") << term(k);
        }
        os << "\\right)";
    }
    return os.str();
}

json render_json(const DerivativeFormula &f)
{
    json terms = json::array();
    const auto display = f.display_coefficients();
    for (std::size_t k = 0; k < f.terms.size(); ++k) {
        terms.push_back(json{{"power", f.terms[k].power},
                             {"coeff", to_json(f.terms[k].coeff)},
                             {"display", to_json(display[k])}});
    }
    return json{{"N", f.n},
                {"sign", f.sign},
                {"factorial", to_json(f.factorial)},
                {"prefactor_power", -static_cast<long>(f.n)},
                {"terms", std::move(terms)}};
}

} // namespace kfe
