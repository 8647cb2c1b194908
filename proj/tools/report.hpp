#pragma once

#include "altinv/invariance.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace altinv::cli {

/// One row of a verification report. Every suite maps onto the same fixed
/// columns; `check` narrates what was verified.
struct ReportEntry {
    std::string check;
    double x = 0.0;
    double y = 0.0;
    int n = 0;
    Complex lhs;
    Complex rhs;
    double residual = 0.0;
    double tolerance = 0.0;
    std::string status;      // "pass" | "fail" | "skip:<reason>"
    bool is_control = false; // passes when residual is LARGE; excluded from max_residual
};

struct ReportDocument {
    std::string schema_version = "1.0";
    std::string command;
    std::vector<ReportEntry> entries;

    void add_pass_fail(const std::string& check, double x, double y, int n, Complex lhs,
                       Complex rhs, double residual, double tol);
    void add_skip(const std::string& check, double x, double y, int n,
                  const std::string& reason);
    void add_invariance(const std::string& check, const InvarianceReport& rep);
    // control entries pass when the residual is at least `floor`
    void add_control(const std::string& check, double x, double y, int n, double residual,
                     double floor);

    int total() const { return static_cast<int>(entries.size()); }
    int passed() const;
    int failed() const;
    int skipped() const;
    double max_residual() const;
    bool all_passed() const { return failed() == 0; }

    nlohmann::json to_json() const;
    std::string to_csv() const;
};

} // namespace altinv::cli
