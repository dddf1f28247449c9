#include <kfe/report.hpp>

#include <algorithm>

#include <kfe/errors.hpp>

namespace kfe
{

VerifyReport compare_series(std::string identity, std::vector<std::pair<std::string, std::string>> parameters,
                            const LaurentSeries &lhs, const LaurentSeries &rhs)
{
    const long lo = std::min(lhs.valuation(), rhs.valuation());
    const long hi = std::min(lhs.known_through(), rhs.known_through());
    if (hi - lo + 1 < min_window) {
        throw precision_error(identity + ": comparison window t^" + std::to_string(lo) + "..t^" + std::to_string(hi)
                              + " too small; raise the order");
    }
    VerifyReport r;
    r.identity = std::move(identity);
    r.parameters = std::move(parameters);
    r.window = "t^" + std::to_string(lo) + "..t^" + std::to_string(hi);
    r.passed = true;
    for (long e = lo; e <= hi; ++e) {
        r.compared.push_back("t^" + std::to_string(e));
        if (!r.passed) {
            continue;
        }
        const Scalar a = lhs.coeff(e);
        const Scalar b = rhs.coeff(e);
        if (!(a == b)) {
            r.passed = false;
            r.mismatch = Mismatch{"t^" + std::to_string(e), a.to_string(), b.to_string()};
        }
    }
    return r;
}

ScalarCheck::ScalarCheck(std::string identity, std::vector<std::pair<std::string, std::string>> parameters)
{
    m_report.identity = std::move(identity);
    m_report.parameters = std::move(parameters);
    m_report.passed = true;
}

bool ScalarCheck::expect_equal(const std::string &position, const Scalar &lhs, const Scalar &rhs)
{
    return expect(position, lhs == rhs, lhs.to_string(), rhs.to_string());
}

bool ScalarCheck::expect(const std::string &position, bool ok, const std::string &lhs, const std::string &rhs)
{
    m_report.compared.push_back(position);
    if (!ok && m_report.passed) {
        m_report.passed = false;
        m_report.mismatch = Mismatch{position, lhs, rhs};
    }
    return ok;
}

VerifyReport ScalarCheck::finish(std::string window) &&
{
    m_report.window = std::move(window);
    if (m_report.compared.empty()) {
        m_report.passed = false;
    }
    return std::move(m_report);
}

} // namespace kfe
