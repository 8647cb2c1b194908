#pragma once

#include "report.hpp"

namespace altinv::cli {

struct VerifyOptions {
    double tol = 0.0; // 0: per-check defaults
    unsigned seed = 0;
    double alpha = 2.0;
    double beta = 2.0;
    std::vector<GridPoint> grid; // empty: suite default
};

ReportDocument suite_euler_identities(const VerifyOptions& opt);
ReportDocument suite_zeta_identities(const VerifyOptions& opt);
ReportDocument suite_gamma_identities(const VerifyOptions& opt);
ReportDocument suite_invariance_all(const VerifyOptions& opt);
ReportDocument suite_convolution_theorems(const VerifyOptions& opt);

/// Seeded rational samples p/q with value in [lo, hi], q <= 24.
std::vector<Rational> sample_rationals(unsigned seed, int count, int lo, int hi);

} // namespace altinv::cli
