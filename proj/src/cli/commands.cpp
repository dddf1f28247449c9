#include <kfe/cli.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include <kfe/binding.hpp>
#include <kfe/errors.hpp>
#include <kfe/frobenius.hpp>
#include <kfe/korobov.hpp>
#include <kfe/loginv.hpp>
#include <kfe/render.hpp>
#include <kfe/serialize.hpp>

namespace kfe::cli
{

namespace
{

struct Options {
    std::string family;
    std::optional<std::string> lambda;
    std::optional<std::string> mu;
    std::optional<std::string> x;
    unsigned m = 1;
    std::optional<unsigned> nmax;
    unsigned nmin = 0;
    unsigned index_max = 12;
    std::size_t order = 24;
    std::string format = "json";
    std::string out;
    std::string suite = "all";
    unsigned formula_n = 1;
    bool inject_fault = false;
};

Binding parse_binding(Symbol s, const std::optional<std::string> &text, const std::string &fallback)
{
    const std::string v = text.value_or(fallback);
    if (v == "sym") {
        return Binding::symbolic(s);
    }
    return Binding::bound(s, Rational::parse(v));
}

void check_mu(const Binding &mu)
{
    if (!mu.is_symbolic() && mu.bound_value()->is_one()) {
        throw parameter_error("mu = 1 is excluded");
    }
}

Scalar bind_mu(const Scalar &s, const Binding &mu)
{
    return mu.is_symbolic() ? s : Scalar(s.eval(*mu.bound_value()));
}

// ---------------------------------------------------------------------------
// Tables

struct Table {
    std::string family;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string label; // LaTeX name with {n}/{N},{j} placeholders filled per entry
    bool triangular = false;
    std::vector<std::vector<Scalar>> rows; // sequences use a single row
};

std::string sequence_label(const Table &t, std::size_t n)
{
    std::string s = t.label;
    const auto pos = s.find("{n}");
    if (pos != std::string::npos) {
        s.replace(pos, 3, "{" + std::to_string(n) + "}");
    }
    return s;
}

std::string triangle_label(const Table &t, std::size_t n, std::size_t j)
{
    std::string s = t.label;
    auto rep = [&](const std::string &key, std::size_t v) {
        const auto pos = s.find(key);
        if (pos != std::string::npos) {
            s.replace(pos, key.size(), std::to_string(v));
        }
    };
    rep("{N}", n);
    rep("{j}", j);
    return s;
}

std::string latex_param(const Binding &b)
{
    return b.is_symbolic() ? latex_symbol(b.symbol()) : latex(Scalar(*b.bound_value()));
}

Table build_table(const Options &o)
{
    const std::size_t nmax = o.nmax.value_or(8);
    Table t;
    t.family = o.family;
    if (o.family == "korobov" || o.family == "korobov-order-m") {
        const unsigned m = o.family == "korobov" ? 1 : o.m;
        if (o.family == "korobov" && o.m != 1) {
            throw parameter_error("--m applies to family korobov-order-m");
        }
        const Binding lambda = parse_binding(Symbol::lambda, o.lambda, "sym");
        t.parameters = {{"lambda", lambda.to_string()}, {"m", std::to_string(m)}};
        t.label = m == 1 ? "K_{n}(" + latex_param(lambda) + ")"
                         : "K_{n}^{(" + std::to_string(m) + ")}(" + latex_param(lambda) + ")";
        t.rows.push_back(korobov_numbers(lambda, nmax, m).values);
    } else if (o.family == "korobov-poly") {
        const Binding lambda = parse_binding(Symbol::lambda, o.lambda, "sym");
        const Binding x = parse_binding(Symbol::x, o.x, "sym");
        t.parameters = {{"lambda", lambda.to_string()}, {"x", x.to_string()}};
        t.label = "K_{n}(" + latex_param(lambda) + "," + latex_param(x) + ")";
        t.rows.push_back(korobov_polynomials(lambda, x, nmax).values);
    } else if (o.family == "frobenius-euler") {
        const Binding mu = parse_binding(Symbol::mu, o.mu, "sym");
        check_mu(mu);
        t.parameters = {{"mu", mu.to_string()}};
        t.label = "H_{n}(" + latex_param(mu) + ")";
        std::vector<Scalar> row;
        for (const auto &v : frobenius_euler_numbers(nmax).values) {
            row.push_back(bind_mu(v, mu));
        }
        t.rows.push_back(std::move(row));
    } else if (o.family == "triangle-a") {
        const Binding lambda = parse_binding(Symbol::lambda, o.lambda, "sym");
        t.parameters = {{"lambda", lambda.to_string()}};
        t.label = "a_{{j}}({N})";
        t.triangular = true;
        TriangleA tri = triangle_a_recurrence(lambda, nmax);
        if (o.inject_fault) {
            tri.rows[nmax][nmax / 2] += Scalar(1);
        }
        t.rows = std::move(tri.rows);
    } else if (o.family == "triangle-b") {
        const std::string l = o.lambda.value_or("0");
        if (l == "sym") {
            throw parameter_error("triangle-b keeps mu symbolic; bind lambda to a rational (0 = limit mode)");
        }
        const Rational lv = Rational::parse(l);
        const FrobeniusMode mode = lv.is_zero() ? FrobeniusMode::limit() : FrobeniusMode::degenerate(lv);
        const Binding mu = parse_binding(Symbol::mu, o.mu, "sym");
        check_mu(mu);
        t.parameters = {{"lambda", mode.is_limit() ? "0" : lv.to_string()}, {"mu", mu.to_string()}};
        t.label = "b_{{j}}({N})";
        t.triangular = true;
        TriangleB tri = triangle_b_recurrence(mode, nmax);
        if (o.inject_fault) {
            tri.rows[nmax][nmax / 2] += Scalar(1);
        }
        for (auto &row : tri.rows) {
            for (auto &v : row) {
                v = bind_mu(v, mu);
            }
        }
        t.rows = std::move(tri.rows);
    } else if (o.family == "harmonic") {
        t.label = "H_{{N},{j}}";
        t.triangular = true;
        for (const auto &row : harmonic_table(nmax).rows) {
            t.rows.emplace_back(row.begin(), row.end());
        }
    } else {
        throw parameter_error("unknown family '" + o.family + "'");
    }
    return t;
}

void render_table(const Table &t, const std::string &format, std::ostream &os)
{
    if (format == "json") {
        json params = json::object();
        for (const auto &[k, v] : t.parameters) {
            params[k] = v;
        }
        json doc{{"family", t.family}, {"parameters", std::move(params)}, {"nmax", t.triangular ? t.rows.size() - 1 : t.rows[0].size() - 1}};
        if (t.triangular) {
            json rows = json::array();
            for (const auto &row : t.rows) {
                json r = json::array();
                for (const auto &v : row) {
                    r.push_back(to_json(v));
                }
                rows.push_back(std::move(r));
            }
            doc["rows"] = std::move(rows);
        } else {
            json values = json::array();
            for (const auto &v : t.rows[0]) {
                values.push_back(to_json(v));
            }
            doc["values"] = std::move(values);
        }
        os << doc.dump(2) << '\n';
    } else if (format == "csv") {
        if (t.triangular) {
            os << "N,j,value\n";
            for (std::size_t n = 0; n < t.rows.size(); ++n) {
                for (std::size_t j = 0; j < t.rows[n].size(); ++j) {
                    os << n << ',' << j << ',' << t.rows[n][j].to_string() << '\n';
                }
            }
        } else {
            os << "n,value\n";
            for (std::size_t n = 0; n < t.rows[0].size(); ++n) {
                os << n << ',' << t.rows[0][n].to_string() << '\n';
            }
        }
    } else if (format == "latex") {
        os << "\\begin{align*}\n";
        std::vector<std::string> lines;
        if (t.triangular) {
            for (std::size_t n = 0; n < t.rows.size(); ++n) {
                for (std::size_t j = 0; j < t.rows[n].size(); ++j) {
                    lines.push_back(triangle_label(t, n, j) + "&=" + latex(t.rows[n][j]));
                }
            }
        } else {
            for (std::size_t n = 0; n < t.rows[0].size(); ++n) {
                lines.push_back(sequence_label(t, n) + "&=" + latex(t.rows[0][n]));
            }
        }
        for (std::size_t k = 0; k < lines.size(); ++k) {
            os << lines[k] << (k + 1 < lines.size() ? ",\\\\\n" : ".\n");
        }
        os << "\\end{align*}\n";
    } else {
        throw parameter_error("unknown format '" + format + "'");
    }
}

// ---------------------------------------------------------------------------
// Verification suites

using Params = std::vector<std::pair<std::string, std::string>>;

VerifyReport triangle_a_equivalence(const Binding &lambda, std::size_t nmax, bool fault)
{
    const TriangleA rec = triangle_a_recurrence(lambda, nmax);
    TriangleA closed = triangle_a_closed(lambda, nmax);
    if (fault) {
        closed.rows[nmax][nmax / 2] += Scalar(1);
    }
    ScalarCheck check("triangle-a", Params{{"lambda", lambda.to_string()}, {"nmax", std::to_string(nmax)}});
    const Scalar l = lambda.value();
    for (std::size_t n = 0; n <= nmax; ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            check.expect_equal("a_" + std::to_string(j) + "(" + std::to_string(n) + ")", closed.at(n, j), rec.at(n, j));
        }
        if (n >= 1) {
            check.expect_equal("a_0(" + std::to_string(n) + ") closed form", rec.at(n, 0),
                               falling_factorial(Scalar(static_cast<long>(n)) + l - Scalar(1), static_cast<unsigned>(n - 1)));
            check.expect_equal("a_N(" + std::to_string(n) + ") closed form", rec.at(n, n),
                               l.pow(static_cast<unsigned>(n - 1)) * Scalar(factorial(static_cast<unsigned>(n))));
        }
    }
    return std::move(check).finish("0<=j<=N<=" + std::to_string(nmax));
}

VerifyReport triangle_b_equivalence(const FrobeniusMode &mode, std::size_t nmax, bool fault)
{
    const TriangleB rec = triangle_b_recurrence(mode, nmax);
    TriangleB closed = triangle_b_closed(mode, nmax);
    if (fault) {
        closed.rows[nmax][nmax / 2] += Scalar(1);
    }
    ScalarCheck check("triangle-b", Params{{"lambda", mode.to_string()}, {"nmax", std::to_string(nmax)}});
    const Scalar mu = Scalar::variable(Symbol::mu);
    for (std::size_t n = 0; n <= nmax; ++n) {
        for (std::size_t j = 0; j <= n; ++j) {
            check.expect_equal("b_" + std::to_string(j) + "(" + std::to_string(n) + ")", closed.at(n, j), rec.at(n, j));
        }
        check.expect_equal("b_N(" + std::to_string(n) + ") closed form", rec.at(n, n),
                           mu.pow(static_cast<unsigned>(n)) * Scalar(factorial(static_cast<unsigned>(n))));
        if (mode.is_limit()) {
            check.expect_equal("b_0(" + std::to_string(n) + ") closed form", rec.at(n, 0), Scalar(1));
        }
    }
    return std::move(check).finish("0<=j<=N<=" + std::to_string(nmax));
}

const std::vector<std::string> suite_names = {"triangle-a", "ode-korobov",   "order-m",   "loginv",
                                              "lambda-limit", "triangle-b", "ode-frobenius", "ode-euler",
                                              "limit-consistency"};

std::vector<VerifyReport> run_suite(const std::string &suite, const Options &o)
{
    const unsigned nmax = o.nmax.value_or(8);
    const unsigned nmin = o.nmin;
    const bool fault = o.inject_fault;
    std::vector<VerifyReport> out;

    auto lambda_samples = [&]() {
        std::vector<Rational> v;
        if (o.lambda && *o.lambda != "sym") {
            const Rational r = Rational::parse(*o.lambda);
            if (r.is_zero()) {
                throw parameter_error("lambda = 0 is excluded for the degenerate suites");
            }
            v.push_back(r);
        } else {
            v = sample_points(5, {Rational(0)});
        }
        return v;
    };

    if (suite == "triangle-a") {
        out.push_back(triangle_a_equivalence(parse_binding(Symbol::lambda, o.lambda, "sym"), nmax, fault));
    } else if (suite == "ode-korobov") {
        const Binding lambda = parse_binding(Symbol::lambda, o.lambda, "sym");
        for (unsigned n = nmin; n <= nmax; ++n) {
            TriangleA tri = triangle_a_recurrence(lambda, n);
            if (fault) {
                tri.rows[n][n / 2] += Scalar(1);
            }
            out.push_back(verify_ode_korobov(tri, n, o.order));
        }
    } else if (suite == "order-m") {
        const Binding lambda = parse_binding(Symbol::lambda, o.lambda, "sym");
        for (unsigned big_n = std::max(1u, nmin); big_n <= nmax; ++big_n) {
            for (unsigned n = 0; n <= o.index_max; ++n) {
                out.push_back(verify_order_m_identity(n, big_n, lambda));
            }
            out.push_back(verify_order_m_series(big_n, lambda, o.order));
        }
    } else if (suite == "loginv") {
        for (unsigned n = std::max(1u, nmin); n <= nmax; ++n) {
            DerivativeFormula f = loginv_derivative_formula(n);
            if (fault) {
                f.terms.back().coeff += Rational(1);
            }
            out.push_back(verify_loginv(f, o.order));
        }
    } else if (suite == "lambda-limit") {
        TriangleA tri = triangle_a_recurrence(Binding::symbolic(Symbol::lambda), nmax);
        if (fault) {
            tri.rows[nmax][nmax / 2] += Scalar(1);
        }
        for (unsigned n = std::max(1u, nmin); n <= nmax; ++n) {
            out.push_back(verify_lambda_limit(tri, n));
        }
    } else if (suite == "triangle-b") {
        out.push_back(triangle_b_equivalence(FrobeniusMode::limit(), nmax, fault));
        for (const auto &r : lambda_samples()) {
            out.push_back(triangle_b_equivalence(FrobeniusMode::degenerate(r), nmax, fault));
        }
    } else if (suite == "ode-frobenius" || suite == "ode-euler") {
        std::vector<FrobeniusMode> modes;
        if (suite == "ode-euler") {
            modes.push_back(FrobeniusMode::limit());
        } else {
            for (const auto &r : lambda_samples()) {
                modes.push_back(FrobeniusMode::degenerate(r));
            }
        }
        for (const auto &mode : modes) {
            for (unsigned n = nmin; n <= nmax; ++n) {
                TriangleB tri = triangle_b_recurrence(mode, n);
                if (fault) {
                    tri.rows[n][n / 2] += Scalar(1);
                }
                out.push_back(verify_ode_frobenius(tri, n, o.order));
            }
        }
    } else if (suite == "limit-consistency") {
        out.push_back(verify_limit_consistency(nmax));
    } else {
        throw parameter_error("unknown suite '" + suite + "'");
    }
    return out;
}

std::string params_text(const VerifyReport &r)
{
    std::string s;
    for (const auto &[k, v] : r.parameters) {
        s += (s.empty() ? "" : " ") + k + "=" + v;
    }
    return s;
}

void render_reports(const std::vector<VerifyReport> &reports, const std::string &format, std::ostream &os)
{
    if (format == "json") {
        json arr = json::array();
        for (const auto &r : reports) {
            arr.push_back(to_json(r));
        }
        os << arr.dump(2) << '\n';
    } else if (format == "csv") {
        os << "identity,parameters,status,window,mismatch_position,lhs,rhs\n";
        for (const auto &r : reports) {
            os << r.identity << ',' << params_text(r) << ',' << (r.passed ? "pass" : "fail") << ',' << r.window << ',';
            if (r.mismatch) {
                os << r.mismatch->position << ',' << r.mismatch->lhs << ',' << r.mismatch->rhs;
            } else {
                os << ",,";
            }
            os << '\n';
        }
    } else {
        throw parameter_error("verify supports --format json or csv");
    }
}

// ---------------------------------------------------------------------------

class Output
{
public:
    Output(const std::string &path, std::ostream &fallback) : m_os(&fallback)
    {
        if (!path.empty()) {
            m_file.open(path);
            if (!m_file) {
                throw parameter_error("cannot open output file '" + path + "'");
            }
            m_os = &m_file;
        }
    }
    std::ostream &stream() { return *m_os; }

private:
    std::ofstream m_file;
    std::ostream *m_os;
};

} // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err)
{
    Options o;
    CLI::App app{"Exact Korobov / Frobenius-Euler number tables and identity verification", "kfe"};
    app.require_subcommand(1);

    auto add_common = [&](CLI::App *sub) {
        sub->add_option("--lambda", o.lambda, "rational literal p/q, or 'sym'");
        sub->add_option("--mu", o.mu, "rational literal p/q (!= 1), or 'sym'");
        sub->add_option("--x", o.x, "rational literal p/q, or 'sym'");
        sub->add_option("--nmax", o.nmax, "largest index (default 8)");
        sub->add_option("--order", o.order, "series truncation order (default 24)")->check(CLI::Range(1, 400));
        sub->add_option("--out", o.out, "output file (default stdout)");
    };

    auto *table = app.add_subcommand("table", "emit a coefficient table");
    add_common(table);
    table->add_option("--family", o.family, "table family")
        ->required()
        ->check(CLI::IsMember({"korobov", "korobov-poly", "korobov-order-m", "frobenius-euler", "triangle-a",
                               "triangle-b", "harmonic"}));
    table->add_option("--m", o.m, "order m of the Korobov numbers")->check(CLI::Range(1, 64));
    table->add_option("--format", o.format, "json | csv | latex")->check(CLI::IsMember({"json", "csv", "latex"}));
    table->add_flag("--inject-fault", o.inject_fault)->group("");

    auto *verify = app.add_subcommand("verify", "verify identities; exit 1 on any violation");
    add_common(verify);
    std::vector<std::string> suites = suite_names;
    suites.push_back("all");
    verify->add_option("--suite", o.suite, "identity suite or 'all'")->check(CLI::IsMember(suites));
    verify->add_option("--nmin", o.nmin, "smallest N (default 0)");
    verify->add_option("--index-max", o.index_max, "largest n for the order-m identity (default 12)");
    verify->add_option("--format", o.format, "json | csv")->check(CLI::IsMember({"json", "csv", "latex"}));
    verify->add_flag("--inject-fault", o.inject_fault)->group("");

    auto *formula = app.add_subcommand("formula", "N-th derivative of 1/log(1+t)");
    formula->add_option("N", o.formula_n, "derivative order (>= 1)")->required();
    formula->add_option("--format", o.format, "plain | json | latex")
        ->check(CLI::IsMember({"plain", "json", "latex"}));
    formula->add_option("--out", o.out, "output file (default stdout)");

    std::vector<std::string> argv_store;
    argv_store.push_back("kfe");
    argv_store.insert(argv_store.end(), args.begin(), args.end());
    std::vector<char *> argv;
    for (auto &a : argv_store) {
        argv.push_back(a.data());
    }

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError &e) {
        err << "kfe: " << e.what() << '\n';
        return usage_error;
    }

    try {
        if (table->parsed()) {
            const Table t = build_table(o);
            std::ostringstream buf;
            render_table(t, o.format, buf);
            Output(o.out, out).stream() << buf.str();
            return ok;
        }
        if (formula->parsed()) {
            if (!formula->count("--format")) {
                o.format = "plain";
            }
            const DerivativeFormula f = loginv_derivative_formula(o.formula_n);
            std::ostringstream buf;
            if (o.format == "plain") {
                buf << render_plain(f) << '\n';
            } else if (o.format == "latex") {
                buf << render_latex(f) << '\n';
            } else {
                buf << render_json(f).dump(2) << '\n';
            }
            Output(o.out, out).stream() << buf.str();
            return ok;
        }
        std::vector<VerifyReport> reports;
        if (o.suite == "all") {
            for (const auto &s : suite_names) {
                auto r = run_suite(s, o);
                reports.insert(reports.end(), r.begin(), r.end());
            }
        } else {
            reports = run_suite(o.suite, o);
        }
        std::stable_sort(reports.begin(), reports.end(),
                         [](const VerifyReport &a, const VerifyReport &b) { return a.identity < b.identity; });
        std::ostringstream buf;
        render_reports(reports, o.format, buf);
        Output(o.out, out).stream() << buf.str();
        const bool all_pass = std::all_of(reports.begin(), reports.end(), [](const VerifyReport &r) { return r.passed; });
        return all_pass ? ok : identity_failure;
    } catch (const precision_error &e) {
        err << "kfe: " << e.what() << " (use --order)\n";
        return usage_error;
    } catch (const std::invalid_argument &e) {
        err << "kfe: " << e.what() << '\n';
        return usage_error;
    } catch (const zero_division_error &e) {
        err << "kfe: " << e.what() << '\n';
        return usage_error;
    }
}

} // namespace kfe::cli
