#ifndef KFE_SERIALIZE_HPP
#define KFE_SERIALIZE_HPP

#include <json.hpp>

#include <kfe/poly.hpp>
#include <kfe/ratfun.hpp>
#include <kfe/rational.hpp>
#include <kfe/report.hpp>
#include <kfe/scalar.hpp>
#include <kfe/series.hpp>

namespace kfe
{

using json = nlohmann::ordered_json;

// Rational: "p/q" (or "p"); Poly: {"symbol", "coeffs"}; RatFun: {"num", "den"}.
json to_json(const Rational &r);
json to_json(const Poly &p);
json to_json(const RatFun &f);
json to_json(const Scalar &s);
/// {"valuation", "order", "coeffs"}, order being the index of the last stored coefficient.
json to_json(const PowerSeries &s);
json to_json(const LaurentSeries &s);
json to_json(const VerifyReport &r);

Rational rational_from_json(const json &j);
Poly poly_from_json(const json &j);
RatFun ratfun_from_json(const json &j);
Scalar scalar_from_json(const json &j);
LaurentSeries laurent_from_json(const json &j);

} // namespace kfe

#endif
