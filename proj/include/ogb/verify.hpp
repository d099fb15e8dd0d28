#ifndef OGB_VERIFY_HPP
#define OGB_VERIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ogb/core.hpp"
#include "ogb/function_spec.hpp"
#include "ogb/interval.hpp"

namespace ogb {

/// One row of the reproduced table: corrected values, table-convention
/// values, and the printed values where the grid hits the printed rows.
struct Table1Row {
    double x = 0.0;
    double nu_corrected = 0.0;
    double nu_table_convention = 0.0;
    double lhs = 0.0; // bounds from the corrected nu
    double rhs = 0.0;
    double actual = 0.0;
    std::optional<double> paper_nu;
    std::optional<double> paper_lhs;
    std::optional<double> paper_rhs;
    std::optional<double> paper_actual;
};

struct ErratumFinding {
    std::string id;
    std::string location;
    std::string description;
    std::optional<double> computed_value;
    std::optional<double> paper_value;
};

struct CheckSummary {
    std::string name;
    long checks = 0;
    long failures = 0;
    double worst_slack = 1e308; // min margin seen; negative means failed
};

struct BatterySummary {
    std::vector<CheckSummary> suites;
    bool all_passed() const;
};

// Closed-form nu for the Beta weight at c = 0, with the incomplete-beta
// term normalized the way the definition requires (sigma * I(x; p+1, q)).
double beta_nu_closed(double x, double p, double q);

// Same formula evaluated with the fully regularized I(x; p+1, q); this is
// the convention that reproduces the printed table column.
double beta_nu_table_convention(double x, double p, double q);

// Closed-form nu for the truncated normal weight at c = 0 (both branches).
double normal_nu_closed(double x, double mu, double s, const Interval& iv);

// Deterministic random cubic on [0,1], coefficients in [-2,2], exact
// derivative range. Stream depends only on (seed, index).
FunctionSpec random_function(std::uint64_t seed, std::uint64_t index);

// Runs every invariant suite over the random battery; any violation is a
// counted failure, not an exception.
BatterySummary run_battery(std::uint64_t seed, int trials);

// Reproduces the table for p = q = 1/2, f(t) = t^2/2; optionally appends
// the discrepancy findings.
std::vector<Table1Row> table1(double step = 0.1,
                              std::vector<ErratumFinding>* errata = nullptr);

std::vector<ErratumFinding> erratum_report();

// The printed rows (x, nu, lhs, rhs, actual) as published.
struct PrintedRow {
    double x, nu, lhs, rhs, actual;
};
const std::vector<PrintedRow>& printed_table1();

} // namespace ogb

#endif
