#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <kfe/errors.hpp>
#include <kfe/korobov.hpp>
#include <kfe/serialize.hpp>

#include "oracles.hpp"

using namespace kfe;

TEST_CASE("scalar encoding")
{
    CHECK(to_json(Scalar(Rational(-3, 4))) == json("-3/4"));
    CHECK(to_json(Scalar(5)) == json("5"));
    const json p = to_json(Scalar(Poly(Symbol::lambda, std::vector<Rational>{1, 3})));
    CHECK(p["symbol"] == "lambda");
    CHECK(p["coeffs"] == json::array({"1", "3"}));
    const json f = to_json(Scalar::variable(Symbol::mu).inverse());
    CHECK(f["num"]["coeffs"] == json::array({"1"}));
    CHECK(f["den"]["coeffs"] == json::array({"0", "1"}));
    CHECK_THROWS_AS(scalar_from_json(json(3)), parse_error);
    CHECK_THROWS_AS(scalar_from_json(json("1/0")), parse_error);
}

TEST_CASE("scalar round trip (property)")
{
    oracle::Generator gen(5);
    for (Symbol s : {Symbol::lambda, Symbol::mu, Symbol::x}) {
        for (int trial = 0; trial < 100; ++trial) {
            const Scalar v = gen.scalar(s);
            const json j = to_json(v);
            CHECK(scalar_from_json(j) == v);
            CHECK(scalar_from_json(json::parse(j.dump())) == v);
            CHECK(to_json(scalar_from_json(j)).dump() == j.dump());
        }
    }
}

TEST_CASE("Laurent round trip")
{
    const LaurentSeries f = korobov_F(Binding::symbolic(Symbol::lambda), 10);
    CHECK(laurent_from_json(json::parse(to_json(f).dump())) == f);
    const LaurentSeries z = LaurentSeries::zero(Domain::rational(), 4);
    CHECK(laurent_from_json(to_json(z)) == z);
    const LaurentSeries d = ls_derivative(ls_derivative(f));
    CHECK(laurent_from_json(to_json(d)) == d);
}

TEST_CASE("reports serialize deterministically")
{
    const VerifyReport r = verify_ode_korobov(2, Binding::symbolic(Symbol::lambda), 12);
    const std::string a = to_json(r).dump();
    const std::string b = to_json(verify_ode_korobov(2, Binding::symbolic(Symbol::lambda), 12)).dump();
    CHECK(a == b);
    CHECK(to_json(r)["status"] == "pass");
}
