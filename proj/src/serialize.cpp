#include <kfe/serialize.hpp>

#include <kfe/errors.hpp>

namespace kfe
{

json to_json(const Rational &r)
{
    return r.to_string();
}

json to_json(const Poly &p)
{
    json coeffs = json::array();
    for (const auto &c : p.coeffs()) {
        coeffs.push_back(to_json(c));
    }
    return json{{"symbol", std::string(symbol_name(p.symbol()))}, {"coeffs", std::move(coeffs)}};
}

json to_json(const RatFun &f)
{
    return json{{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

json to_json(const Scalar &s)
{
    return std::visit([](const auto &v) { return to_json(v); }, s.value());
}

namespace
{

json series_json(long valuation, long order, const std::vector<Scalar> &coeffs)
{
    json c = json::array();
    for (const auto &x : coeffs) {
        c.push_back(to_json(x));
    }
    return json{{"valuation", valuation}, {"order", order}, {"coeffs", std::move(c)}};
}

} // namespace

json to_json(const PowerSeries &s)
{
    return series_json(0, static_cast<long>(s.order()), s.coeffs());
}

json to_json(const LaurentSeries &s)
{
    if (s.is_zero()) {
        return series_json(s.known_through(), 0, {Scalar(0)});
    }
    return series_json(s.valuation(), s.known_through() - s.valuation(), s.body().coeffs());
}

json to_json(const VerifyReport &r)
{
    json params = json::object();
    for (const auto &[k, v] : r.parameters) {
        params[k] = v;
    }
    json out{{"identity", r.identity},
             {"parameters", std::move(params)},
             {"status", r.passed ? "pass" : "fail"},
             {"window", r.window},
             {"compared", r.compared}};
    if (r.mismatch) {
        out["mismatch"] = json{{"position", r.mismatch->position}, {"lhs", r.mismatch->lhs}, {"rhs", r.mismatch->rhs}};
    }
    return out;
}

Rational rational_from_json(const json &j)
{
    if (!j.is_string()) {
        throw parse_error("rational must be encoded as a string");
    }
    return Rational::parse(j.get<std::string>());
}

Poly poly_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("symbol") || !j.contains("coeffs") || !j["coeffs"].is_array()) {
        throw parse_error("polynomial must be {\"symbol\", \"coeffs\"}");
    }
    const Symbol s = parse_symbol(j["symbol"].get<std::string>());
    std::vector<Rational> c;
    for (const auto &x : j["coeffs"]) {
        c.push_back(rational_from_json(x));
    }
    if (!c.empty() && c.back().is_zero()) {
        throw parse_error("polynomial encoding has a zero leading coefficient");
    }
    return Poly(s, std::move(c));
}

RatFun ratfun_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("num") || !j.contains("den")) {
        throw parse_error("rational function must be {\"num\", \"den\"}");
    }
    return RatFun(poly_from_json(j["num"]), poly_from_json(j["den"]));
}

Scalar scalar_from_json(const json &j)
{
    if (j.is_string()) {
        return Scalar(rational_from_json(j));
    }
    if (j.is_object() && j.contains("symbol")) {
        return Scalar(poly_from_json(j));
    }
    if (j.is_object() && j.contains("num")) {
        return Scalar(ratfun_from_json(j));
    }
    throw parse_error("unrecognized scalar encoding: " + j.dump());
}

LaurentSeries laurent_from_json(const json &j)
{
    if (!j.is_object() || !j.contains("valuation") || !j.contains("order") || !j.contains("coeffs")) {
        throw parse_error("series must be {\"valuation\", \"order\", \"coeffs\"}");
    }
    std::vector<Scalar> c;
    Domain d;
    for (const auto &x : j["coeffs"]) {
        c.push_back(scalar_from_json(x));
        d = unify(d, Domain{c.back().symbol()});
    }
    if (static_cast<long>(c.size()) != j["order"].get<long>() + 1) {
        throw parse_error("series coefficient count does not match its order");
    }
    return LaurentSeries(d, j["valuation"].get<long>(), std::move(c));
}

} // namespace kfe
