#ifndef KFE_REPORT_HPP
#define KFE_REPORT_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <kfe/scalar.hpp>
#include <kfe/series.hpp>

namespace kfe
{

struct Mismatch {
    std::string position;
    std::string lhs;
    std::string rhs;

    friend bool operator==(const Mismatch &, const Mismatch &) = default;
};

/// Evidence for one identity instance. `compared` lists every position that
/// was checked (series exponents as "t^k", index tuples otherwise).
struct VerifyReport {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> parameters;
    std::string window;
    std::vector<std::string> compared;
    bool passed = false;
    std::optional<Mismatch> mismatch;

    friend bool operator==(const VerifyReport &, const VerifyReport &) = default;
};

/// Minimum number of exponents a series identity must compare.
inline constexpr long min_window = 5;

/// Compares two Laurent series coefficient-wise on the common known window,
/// from the lower of the two valuations through the smaller known-through
/// exponent. Throws precision_error when fewer than min_window exponents
/// remain.
VerifyReport compare_series(std::string identity, std::vector<std::pair<std::string, std::string>> parameters,
                            const LaurentSeries &lhs, const LaurentSeries &rhs);

/// Accumulates scalar comparisons; the first failing one is recorded.
class ScalarCheck
{
public:
    ScalarCheck(std::string identity, std::vector<std::pair<std::string, std::string>> parameters);

    /// Returns whether the two values agreed.
    bool expect_equal(const std::string &position, const Scalar &lhs, const Scalar &rhs);
    bool expect(const std::string &position, bool ok, const std::string &lhs, const std::string &rhs);

    VerifyReport finish(std::string window) &&;

private:
    VerifyReport m_report;
};

} // namespace kfe

#endif
