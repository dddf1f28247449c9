// Acceptance gate: one PASS/FAIL line per criterion. Every comparison is exact
// equality over Q or Q(s); there is no numeric tolerance anywhere.
#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <kfe/cli.hpp>
#include <kfe/frobenius.hpp>
#include <kfe/korobov.hpp>
#include <kfe/loginv.hpp>
#include <kfe/serialize.hpp>

#include "oracles.hpp"

using namespace kfe;

namespace
{

constexpr const char *tolerance = "exact";
constexpr std::size_t order = 24;
constexpr std::size_t samples = 5;

const Binding sym_lambda = Binding::symbolic(Symbol::lambda);

struct Outcome {
    bool passed = true;
    std::string detail;

    void fail(const std::string &why)
    {
        if (passed) {
            detail = why;
        }
        passed = false;
    }
    void require(bool ok, const std::string &why)
    {
        if (!ok) {
            fail(why);
        }
    }
    void report(const VerifyReport &r)
    {
        if (!r.passed) {
            std::string where = r.identity;
            for (const auto &[k, v] : r.parameters) {
                where += " " + k + "=" + v;
            }
            if (r.mismatch) {
                where += " at " + r.mismatch->position + ": " + r.mismatch->lhs + " != " + r.mismatch->rhs;
            }
            fail(where);
        }
    }
};

int run_cli(const std::vector<std::string> &args, std::string *out = nullptr)
{
    std::ostringstream o, e;
    const int code = cli::run(args, o, e);
    if (out) {
        *out = o.str();
    }
    return code;
}

Outcome intro_table()
{
    Outcome o;
    const Scalar l = Scalar::variable(Symbol::lambda);
    const Scalar x = Scalar::variable(Symbol::x);
    bool coefficient_convention = true;
    auto compare = [&](const KorobovSequence &s, const std::vector<Scalar> &printed, const std::string &where) {
        for (unsigned n = 0; n <= 3; ++n) {
            if (s.values[n] != printed[n]) {
                o.fail(where + ": K_" + std::to_string(n) + " = " + s.values[n].to_string() + ", table shows " +
                       printed[n].to_string());
            }
            if (s.values[n] != Scalar(factorial(n)) * printed[n]) {
                coefficient_convention = false;
            }
        }
    };
    for (const Rational &r : sample_points(samples)) {
        compare(korobov_polynomials(Binding::bound(Symbol::lambda, r), Binding::symbolic(Symbol::x), 3),
                oracle::printed_korobov_table(Scalar(r), x), "lambda=" + r.to_string());
    }
    for (const Rational &r : sample_points(samples)) {
        compare(korobov_polynomials(sym_lambda, Binding::bound(Symbol::x, r), 3),
                oracle::printed_korobov_table(l, Scalar(r)), "x=" + r.to_string());
    }
    if (!o.passed && coefficient_convention) {
        o.detail += "; every printed entry equals K_n/n! at all 10 instances";
    }
    return o;
}

Outcome derivative_examples()
{
    Outcome o;
    const std::vector<std::vector<std::string>> expected{{"1"}, {"1", "2"}, {"2", "6", "6"}};
    const std::vector<std::string> latex{
        "\\frac{d}{dt}\\frac{1}{\\log(1+t)}=\\frac{-1}{1+t}\\frac{1}{\\log^2(1+t)}",
        "\\frac{d^2}{dt^2}\\frac{1}{\\log(1+t)}=\\frac{1}{(1+t)^2}\\left(\\frac{1}{\\log^2(1+t)}+\\frac{2}{\\log^3(1+t)}\\right)",
        "\\frac{d^3}{dt^3}\\frac{1}{\\log(1+t)}=\\frac{-1}{(1+t)^3}\\left(\\frac{2}{\\log^2(1+t)}+\\frac{6}{\\log^3(1+t)}+\\frac{6}{\\log^4(1+t)}\\right)",
    };
    auto strip = [](std::string s) {
        std::erase_if(s, [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
        return s;
    };
    for (unsigned n = 1; n <= 3; ++n) {
        std::string out;
        o.require(run_cli({"formula", std::to_string(n), "--format", "json"}, &out) == 0, "formula exit code");
        const json j = json::parse(out);
        std::vector<std::string> got;
        for (const auto &t : j["terms"]) {
            got.push_back(t["display"]);
        }
        o.require(got == expected[n - 1], "coefficients for N=" + std::to_string(n));
        o.require(j["sign"] == (n % 2 == 0 ? 1 : -1), "sign for N=" + std::to_string(n));
        o.require(j["prefactor_power"] == -static_cast<int>(n), "prefactor for N=" + std::to_string(n));
        o.require(run_cli({"formula", std::to_string(n), "--format", "latex"}, &out) == 0, "latex exit code");
        o.require(strip(out) == strip(latex[n - 1]), "latex for N=" + std::to_string(n) + ": " + out);
        o.report(verify_loginv(n, order));
    }
    return o;
}

Outcome korobov_ode()
{
    Outcome o;
    const TriangleA t = triangle_a_recurrence(sym_lambda, 8);
    for (unsigned n = 0; n <= 8; ++n) {
        o.report(verify_ode_korobov(t, n, order));
    }
    return o;
}

Outcome korobov_closed_form()
{
    Outcome o;
    const Scalar l = Scalar::variable(Symbol::lambda);
    const TriangleA rec = triangle_a_recurrence(sym_lambda, 12);
    const TriangleA closed = triangle_a_closed(sym_lambda, 12);
    for (std::size_t n = 0; n <= 12; ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            o.require(rec.at(n, j) == closed.at(n, j), "a_" + std::to_string(j) + "(" + std::to_string(n) + ")");
        }
        if (n >= 1) {
            const unsigned un = static_cast<unsigned>(n);
            o.require(rec.at(n, 0) == falling_factorial(Scalar(static_cast<long>(n) - 1) + l, un - 1),
                      "a_0 boundary at N=" + std::to_string(n));
            o.require(rec.at(n, n) == l.pow(un - 1) * Scalar(factorial(un)), "a_N boundary at N=" + std::to_string(n));
        }
    }
    return o;
}

Outcome lambda_limit()
{
    Outcome o;
    const TriangleA t = triangle_a_recurrence(sym_lambda, 10);
    for (unsigned n = 1; n <= 10; ++n) {
        o.report(verify_lambda_limit(t, n));
    }
    return o;
}

Outcome order_m()
{
    Outcome o;
    for (unsigned big_n = 1; big_n <= 6; ++big_n) {
        for (unsigned n = 0; n <= 12; ++n) {
            o.report(verify_order_m_identity(n, big_n, sym_lambda));
        }
        o.report(verify_order_m_series(big_n, sym_lambda, order));
    }
    return o;
}

Outcome degenerate_ode()
{
    Outcome o;
    for (const Rational &r : sample_points(samples)) {
        const TriangleB t = triangle_b_recurrence(FrobeniusMode::degenerate(r), 8);
        for (unsigned n = 0; n <= 8; ++n) {
            o.report(verify_ode_frobenius(t, n, order));
        }
    }
    return o;
}

Outcome limit_mode()
{
    Outcome o;
    const Scalar mu = Scalar::variable(Symbol::mu);
    const TriangleB rec = triangle_b_recurrence(FrobeniusMode::limit(), 12);
    for (unsigned n = 0; n <= 8; ++n) {
        o.report(verify_ode_frobenius(rec, n, order));
    }
    o.require(rec == triangle_b_closed(FrobeniusMode::limit(), 12), "closed form differs from the recurrence");
    for (unsigned n = 0; n <= 12; ++n) {
        o.require(rec.at(n, 0) == Scalar(1), "b_0 at N=" + std::to_string(n));
        o.require(rec.at(n, n) == mu.pow(n) * Scalar(factorial(n)), "b_N at N=" + std::to_string(n));
    }
    o.report(verify_limit_consistency(8));
    return o;
}

Outcome oracle_independence()
{
    Outcome o;
    const TriangleA a = triangle_a_recurrence(sym_lambda, 4);
    for (unsigned n = 0; n <= 4; ++n) {
        o.require(oracle::korobov_row(sym_lambda, n, 12) == a.rows[n], "korobov row " + std::to_string(n));
    }
    std::vector<FrobeniusMode> modes{FrobeniusMode::limit()};
    for (const Rational &r : sample_points(samples)) {
        modes.push_back(FrobeniusMode::degenerate(r));
    }
    for (const FrobeniusMode &mode : modes) {
        const TriangleB b = triangle_b_recurrence(mode, 4);
        for (unsigned n = 0; n <= 4; ++n) {
            o.require(oracle::frobenius_row(mode, n, 12) == b.rows[n],
                      "frobenius row " + std::to_string(n) + " mode " + mode.to_string());
        }
    }
    return o;
}

Outcome serialization()
{
    Outcome o;
    const std::vector<std::vector<std::string>> tables{
        {"--family", "korobov", "--lambda", "sym"},
        {"--family", "korobov-poly", "--lambda", "7/4", "--x", "sym"},
        {"--family", "korobov-poly", "--lambda", "sym", "--x", "-1/3"},
        {"--family", "korobov-order-m", "--lambda", "sym", "--m", "3"},
        {"--family", "frobenius-euler", "--mu", "sym"},
        {"--family", "triangle-a", "--lambda", "sym"},
        {"--family", "triangle-b", "--lambda", "3/2", "--mu", "sym"},
        {"--family", "triangle-b", "--lambda", "0", "--mu", "sym"},
        {"--family", "harmonic"},
    };
    for (const auto &flags : tables) {
        std::vector<std::string> args{"table", "--nmax", "8", "--format", "json"};
        args.insert(args.end(), flags.begin(), flags.end());
        std::string first, second;
        o.require(run_cli(args, &first) == 0, "table " + flags[1] + " exit code");
        run_cli(args, &second);
        o.require(first == second, "table " + flags[1] + " is not byte-identical");
        const json j = json::parse(first);
        const json &body = j.contains("rows") ? j["rows"] : j["values"];
        json rebuilt = json::array();
        for (const auto &v : body) {
            if (v.is_array()) {
                json row = json::array();
                for (const auto &e : v) {
                    row.push_back(to_json(scalar_from_json(e)));
                }
                rebuilt.push_back(row);
            } else {
                rebuilt.push_back(to_json(scalar_from_json(v)));
            }
        }
        o.require(rebuilt == body, "table " + flags[1] + " does not round-trip");
    }
    {
        // values decoded from the document equal the library values
        std::string out;
        run_cli({"table", "--family", "triangle-a", "--nmax", "8", "--format", "json"}, &out);
        const TriangleA t = triangle_a_recurrence(sym_lambda, 8);
        const json j = json::parse(out);
        for (std::size_t n = 0; n <= 8; ++n) {
            for (std::size_t k = 0; k <= n; ++k) {
                o.require(scalar_from_json(j["rows"][n][k]) == t.at(n, k), "decoded triangle entry");
            }
        }
    }
    const std::vector<std::string> verify{"verify", "--suite", "all", "--nmax", "3", "--index-max", "4", "--order", "16"};
    std::string v1, v2;
    o.require(run_cli(verify, &v1) == 0, "verify all exit code");
    run_cli(verify, &v2);
    o.require(v1 == v2, "verify output is not byte-identical");
    o.require(run_cli({"verify", "--suite", "ode-korobov", "--nmax", "3", "--inject-fault"}) == 1, "injected fault exit code");
    o.require(run_cli({"verify", "--suite", "triangle-a", "--nmax", "3", "--inject-fault"}) == 1, "injected fault exit code");
    o.require(run_cli({"table", "--family", "korobov", "--lambda", "0"}) == 2, "lambda=0 exit code");
    o.require(run_cli({"table", "--family", "frobenius-euler", "--mu", "1"}) == 2, "mu=1 exit code");
    o.require(run_cli({"formula", "0"}) == 2, "formula 0 exit code");
    return o;
}

} // namespace

int main()
{
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"intro table K_0..K_3", intro_table},
        {"derivative examples N=1..3", derivative_examples},
        {"Korobov ODE N=0..8", korobov_ode},
        {"a_j(N) closed form N<=12", korobov_closed_form},
        {"lambda->0 limit N<=10", lambda_limit},
        {"order-m identity n<=12 N<=6", order_m},
        {"degenerate Frobenius ODE N=0..8", degenerate_ode},
        {"limit-mode Frobenius", limit_mode},
        {"oracle independence N<=4", oracle_independence},
        {"serialization and exit codes", serialization},
    };
    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception &e) {
            o.fail(std::string("exception: ") + e.what());
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::ostringstream line;
        line.precision(2);
        line << std::fixed << (o.passed ? "PASS" : "FAIL") << " " << (i + 1) << " " << criteria[i].first
             << " [tolerance: " << tolerance << ", " << secs << "s]";
        if (!o.passed) {
            line << " -- " << o.detail;
            ++failures;
        }
        std::cout << line.str() << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
