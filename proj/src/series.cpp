#include <kfe/series.hpp>

#include <algorithm>
#include <stdexcept>
#include <string>

#include <kfe/errors.hpp>

namespace kfe
{

bool Domain::admits(const Scalar &c) const
{
    const auto s = c.symbol();
    return !s || s == symbol;
}

Domain unify(const Domain &a, const Domain &b)
{
    if (a.symbol && b.symbol && *a.symbol != *b.symbol) {
        throw symbol_mismatch_error("series over Q(" + std::string(symbol_name(*a.symbol)) + ") and Q("
                                    + std::string(symbol_name(*b.symbol)) + ") cannot be combined");
    }
    return a.symbol ? a : b;
}

namespace
{

Domain domain_of(const Domain &d, const Scalar &c)
{
    return unify(d, Domain{c.symbol()});
}

void check_domain(const Domain &d, const std::vector<Scalar> &coeffs)
{
    for (const auto &c : coeffs) {
        if (!d.admits(c)) {
            throw symbol_mismatch_error("coefficient " + c.to_string() + " outside the series domain");
        }
    }
}

// Cauchy product of the first n terms.
std::vector<Scalar> convolve(const std::vector<Scalar> &a, const std::vector<Scalar> &b, std::size_t n)
{
    std::vector<Scalar> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        Scalar acc;
        for (std::size_t i = 0; i <= k; ++i) {
            if (a[i].is_zero() || b[k - i].is_zero()) {
                continue;
            }
            acc += a[i] * b[k - i];
        }
        out[k] = std::move(acc);
    }
    return out;
}

} // namespace

PowerSeries::PowerSeries(Domain d, std::vector<Scalar> coeffs) : m_domain(d), m_coeffs(std::move(coeffs))
{
    if (m_coeffs.empty()) {
        throw std::invalid_argument("power series needs at least one coefficient");
    }
    check_domain(m_domain, m_coeffs);
}

PowerSeries PowerSeries::constant(Domain d, const Scalar &c, std::size_t order)
{
    std::vector<Scalar> v(order + 1);
    v[0] = c;
    return PowerSeries(d, std::move(v));
}

PowerSeries PowerSeries::from_coeffs(Domain d, const std::vector<Scalar> &c, std::size_t order)
{
    std::vector<Scalar> v(order + 1);
    std::copy_n(c.begin(), std::min(c.size(), order + 1), v.begin());
    return PowerSeries(d, std::move(v));
}

const Scalar &PowerSeries::operator[](std::size_t k) const
{
    if (k >= m_coeffs.size()) {
        throw precision_error("coefficient t^" + std::to_string(k) + " beyond truncation order "
                              + std::to_string(order()));
    }
    return m_coeffs[k];
}

PowerSeries PowerSeries::truncated(std::size_t new_order) const
{
    if (new_order > order()) {
        throw precision_error("cannot raise the truncation order of a series");
    }
    return PowerSeries(m_domain, std::vector<Scalar>(m_coeffs.begin(), m_coeffs.begin() + new_order + 1));
}

PowerSeries ps_add(const PowerSeries &a, const PowerSeries &b)
{
    const Domain d = unify(a.domain(), b.domain());
    const std::size_t n = std::min(a.order(), b.order()) + 1;
    std::vector<Scalar> out(n);
    for (std::size_t k = 0; k < n; ++k) {
        out[k] = a.coeffs()[k] + b.coeffs()[k];
    }
    return PowerSeries(d, std::move(out));
}

PowerSeries ps_sub(const PowerSeries &a, const PowerSeries &b)
{
    return ps_add(a, ps_scale(b, Scalar(-1)));
}

PowerSeries ps_mul(const PowerSeries &a, const PowerSeries &b)
{
    const Domain d = unify(a.domain(), b.domain());
    const std::size_t n = std::min(a.order(), b.order()) + 1;
    return PowerSeries(d, convolve(a.coeffs(), b.coeffs(), n));
}

PowerSeries ps_scale(const PowerSeries &a, const Scalar &c)
{
    const Domain d = domain_of(a.domain(), c);
    std::vector<Scalar> out;
    out.reserve(a.coeffs().size());
    for (const auto &x : a.coeffs()) {
        out.push_back(x * c);
    }
    return PowerSeries(d, std::move(out));
}

PowerSeries ps_invert(const PowerSeries &a)
{
    if (a.coeffs()[0].is_zero()) {
        throw zero_division_error("power series with zero constant term is not invertible");
    }
    const std::size_t n = a.order() + 1;
    const Scalar inv0 = a.coeffs()[0].inverse();
    std::vector<Scalar> out(n);
    out[0] = inv0;
    for (std::size_t k = 1; k < n; ++k) {
        Scalar acc;
        for (std::size_t i = 1; i <= k; ++i) {
            if (a.coeffs()[i].is_zero() || out[k - i].is_zero()) {
                continue;
            }
            acc += a.coeffs()[i] * out[k - i];
        }
        out[k] = -(acc * inv0);
    }
    return PowerSeries(a.domain(), std::move(out));
}

PowerSeries ps_derivative(const PowerSeries &a)
{
    if (a.order() == 0) {
        throw precision_error("derivative of an order-0 series has no known coefficients");
    }
    std::vector<Scalar> out(a.order());
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a.coeffs()[k + 1] * Scalar(static_cast<long>(k + 1));
    }
    return PowerSeries(a.domain(), std::move(out));
}

PowerSeries ps_log1p(std::size_t order)
{
    std::vector<Scalar> out(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        out[k] = Rational(k % 2 == 1 ? 1 : -1, static_cast<long>(k));
    }
    return PowerSeries(Domain::rational(), std::move(out));
}

PowerSeries ps_exp(const PowerSeries &a)
{
    if (!a.coeffs()[0].is_zero()) {
        throw std::invalid_argument("exp of a series with nonzero constant term");
    }
    // E' = a' E  =>  k e_k = sum_{j=1}^k j a_j e_{k-j}
    const std::size_t n = a.order() + 1;
    std::vector<Scalar> out(n);
    out[0] = Scalar(1);
    for (std::size_t k = 1; k < n; ++k) {
        Scalar acc;
        for (std::size_t j = 1; j <= k; ++j) {
            if (a.coeffs()[j].is_zero() || out[k - j].is_zero()) {
                continue;
            }
            acc += Scalar(static_cast<long>(j)) * a.coeffs()[j] * out[k - j];
        }
        out[k] = acc / Scalar(static_cast<long>(k));
    }
    return PowerSeries(a.domain(), std::move(out));
}

PowerSeries ps_binomial_pow(const Scalar &exponent, std::size_t order)
{
    std::vector<Scalar> out(order + 1);
    out[0] = Scalar(1);
    for (std::size_t k = 1; k <= order; ++k) {
        out[k] = out[k - 1] * (exponent - Scalar(static_cast<long>(k - 1))) / Scalar(static_cast<long>(k));
    }
    return PowerSeries(Domain{exponent.symbol()}, std::move(out));
}

PowerSeries ps_rescale(const PowerSeries &a, const Scalar &c)
{
    const Domain d = domain_of(a.domain(), c);
    std::vector<Scalar> out(a.coeffs().size());
    Scalar power(1);
    for (std::size_t k = 0; k < out.size(); ++k) {
        out[k] = a.coeffs()[k] * power;
        power *= c;
    }
    return PowerSeries(d, std::move(out));
}

// ---------------------------------------------------------------------------

LaurentSeries::LaurentSeries(long valuation, const PowerSeries &body)
    : LaurentSeries(body.domain(), valuation, body.coeffs())
{
}

LaurentSeries::LaurentSeries(Domain d, long valuation, std::vector<Scalar> coeffs)
    : m_domain(d), m_valuation(valuation), m_known_through(valuation + static_cast<long>(coeffs.size()) - 1)
{
    if (coeffs.empty()) {
        throw std::invalid_argument("Laurent series needs at least one coefficient");
    }
    check_domain(m_domain, coeffs);
    auto first = std::find_if(coeffs.begin(), coeffs.end(), [](const Scalar &c) { return !c.is_zero(); });
    if (first == coeffs.end()) {
        m_valuation = m_known_through + 1;
        return;
    }
    m_valuation += static_cast<long>(first - coeffs.begin());
    m_coeffs.assign(std::make_move_iterator(first), std::make_move_iterator(coeffs.end()));
}

LaurentSeries LaurentSeries::zero(Domain d, long known_through)
{
    return LaurentSeries(d, known_through, std::vector<Scalar>{Scalar(0)});
}

Scalar LaurentSeries::coeff(long exponent) const
{
    if (exponent > m_known_through) {
        throw precision_error("coefficient t^" + std::to_string(exponent) + " unknown; series known through t^"
                              + std::to_string(m_known_through));
    }
    if (exponent < m_valuation) {
        return Scalar(0);
    }
    return m_coeffs[static_cast<std::size_t>(exponent - m_valuation)];
}

const Scalar &LaurentSeries::leading() const
{
    if (is_zero()) {
        throw std::logic_error("leading coefficient of a zero Laurent series");
    }
    return m_coeffs.front();
}

PowerSeries LaurentSeries::body() const
{
    if (is_zero()) {
        throw std::logic_error("zero Laurent series has no unit part");
    }
    return PowerSeries(m_domain, m_coeffs);
}

LaurentSeries ls_add(const LaurentSeries &a, const LaurentSeries &b)
{
    const Domain d = unify(a.domain(), b.domain());
    const long lo = std::min(a.valuation(), b.valuation());
    const long hi = std::min(a.known_through(), b.known_through());
    if (hi < lo) {
        return LaurentSeries::zero(d, hi);
    }
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) {
        out.push_back(a.coeff(e) + b.coeff(e));
    }
    return LaurentSeries(d, lo, std::move(out));
}

LaurentSeries ls_sub(const LaurentSeries &a, const LaurentSeries &b)
{
    return ls_add(a, ls_scale(b, Scalar(-1)));
}

LaurentSeries ls_mul(const LaurentSeries &a, const LaurentSeries &b)
{
    const Domain d = unify(a.domain(), b.domain());
    const long hi = std::min(a.known_through() + b.valuation(), b.known_through() + a.valuation());
    if (a.is_zero() || b.is_zero()) {
        return LaurentSeries::zero(d, hi);
    }
    const long lo = a.valuation() + b.valuation();
    const auto n = static_cast<std::size_t>(hi - lo + 1);
    const PowerSeries pa = a.body(), pb = b.body();
    return LaurentSeries(d, lo, convolve(pa.coeffs(), pb.coeffs(), n));
}

LaurentSeries ls_scale(const LaurentSeries &a, const Scalar &c)
{
    const Domain d = domain_of(a.domain(), c);
    if (a.is_zero() || c.is_zero()) {
        return LaurentSeries::zero(d, a.known_through());
    }
    return LaurentSeries(a.valuation(), ps_scale(a.body(), c));
}

LaurentSeries ls_shift(const LaurentSeries &a, long k)
{
    if (a.is_zero()) {
        return LaurentSeries::zero(a.domain(), a.known_through() + k);
    }
    return LaurentSeries(a.valuation() + k, a.body());
}

LaurentSeries ls_invert(const LaurentSeries &a)
{
    if (a.is_zero()) {
        throw zero_division_error("inverse of a zero Laurent series");
    }
    return LaurentSeries(-a.valuation(), ps_invert(a.body()));
}

LaurentSeries ls_derivative(const LaurentSeries &a)
{
    if (a.is_zero()) {
        return LaurentSeries::zero(a.domain(), a.known_through() - 1);
    }
    const long lo = a.valuation() - 1;
    const long hi = a.known_through() - 1;
    if (hi < lo) {
        throw precision_error("derivative leaves no known coefficients; raise the order");
    }
    std::vector<Scalar> out;
    out.reserve(static_cast<std::size_t>(hi - lo + 1));
    for (long e = lo; e <= hi; ++e) {
        out.push_back(a.coeff(e + 1) * Scalar(e + 1));
    }
    return LaurentSeries(a.domain(), lo, std::move(out));
}

LaurentSeries ls_pow(const LaurentSeries &a, unsigned i)
{
    if (i == 0) {
        throw std::invalid_argument("ls_pow requires an exponent >= 1");
    }
    if (a.is_zero()) {
        throw zero_division_error("ls_pow of a zero series");
    }
    LaurentSeries r = a;
    for (unsigned k = 1; k < i; ++k) {
        r = ls_mul(r, a);
    }
    return r;
}

} // namespace kfe
