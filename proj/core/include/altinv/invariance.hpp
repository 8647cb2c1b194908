#pragma once

#include "altinv/bivariate.hpp"

#include <string>
#include <vector>

namespace altinv {

/// One verification point: the alternating sum at (x, y, n) against f(x, y).
struct InvarianceEntry {
    double x = 0.0;
    double y = 0.0;
    int n = 1;
    Complex lhs;   // sum_{r<n} (-1)^r f(x + r y, n y)
    Complex rhs;   // f(x, y)
    double residual = 0.0;
    bool skipped = false;
    std::string skip_reason;
};

struct InvarianceReport {
    std::vector<InvarianceEntry> entries;
    double tolerance = 0.0;
    double max_residual = 0.0; // over non-skipped entries
    bool passed = false;       // max_residual <= tolerance
    int num_skipped = 0;
};

struct GridPoint {
    Arg x;
    Arg y;
    int n = 1;
};

struct ResidualTriple {
    Complex lhs;
    Complex rhs;
    double residual;
};

/// Alternating sum sum_{r=0}^{n-1} (-1)^r f(x + r y, n y) against f(x, y).
/// n must be odd and positive; any excluded evaluation point raises
/// DomainError, a branch-sensitive point without exact inputs likewise.
ResidualTriple invariance_residual(const BivariateFn& f, const Arg& x, const Arg& y, int n);

/// Runs invariance_residual over the Cartesian product xs x ys x ns,
/// skipping (with a reason) triples that hit excluded or inexact
/// branch-sensitive points. Entries are ordered by (x, y, n).
InvarianceReport check_invariance(const BivariateFn& f,
                                  std::vector<Arg> xs,
                                  std::vector<Arg> ys,
                                  std::vector<int> ns,
                                  double tol);

/// Same, over an explicit list of grid points (kept in the given order
/// after a stable (x, y, n) sort).
InvarianceReport check_invariance(const BivariateFn& f,
                                  std::vector<GridPoint> grid,
                                  double tol);

/// | sum_{r<n} (-1)^r f(x+rmy, ny)  -  sum_{r<m} (-1)^r f(x+rny, my) |
/// for odd m, n: both sides collapse to f(x, y) for members of the class.
double cross_symmetry_residual(const BivariateFn& f, const Arg& x, const Arg& y, int m, int n);

/// Finite-a probe of the boundary characterization
/// f(x+y,y) + f(x,y) = lim_{a->0+} f(x+a,a) + f(x,a):
/// returns |f(x+y,y)+f(x,y) - (f(x+a,a)+f(x,a))| at a = a_small.
/// Diagnostic only; no claim is made at finite a.
double boundary_characterization_residual(const BivariateFn& f, const Arg& x, const Arg& y,
                                          double a_small);

/// Default verification grid: x in {-1.7,-0.4,0.3,0.5,0.9,1.6,3.2} (exact
/// rationals), y in {0.5,1,2}, n in {1,3,5,7}. Covers x<=0, 0<x<=y, x>y.
std::vector<Arg> default_grid_xs();
std::vector<Arg> default_grid_ys();
std::vector<int> default_grid_ns();

namespace detail {
/// Runs fn(i) for i in [0, count) using up to ALTINV_THREADS workers
/// (hardware concurrency by default). Results must be written by index;
/// ordering of observable output is the caller's responsibility.
void parallel_for_index(std::size_t count, const std::function<void(std::size_t)>& fn);
} // namespace detail

} // namespace altinv
