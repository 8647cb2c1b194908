#pragma once

#include "altinv/invariance.hpp"

#include <map>
#include <string>
#include <vector>

namespace altinv::builtins {

/// Builtin identifier: family name plus named parameters, written
/// "name", "name:k=v" or "name:v" (positional values bind in declared
/// order, e.g. "euler:3" == "euler:m=3").
struct BuiltinId {
    std::string name;
    std::vector<std::pair<std::string, std::string>> params;
};

BuiltinId parse_builtin_id(const std::string& text);
std::string to_string(const BuiltinId& id);

/// Families:
///   euler:m          y^m E_m(x/y)
///   zeta:s           y^{-s} zeta_e(s, x/y), s real or "a+bi"
///   gamma-log        log|Gamma~(x/y)/sqrt(y)| with its branch values
///   log-tan          log|tan(pi x / 2y)|, -(-1)^{x/y} log y on x/y in Z
///   csc              (1/y) csc(pi x/y), 0 on x/y in Z
///   parity:a         (-1)^{(a-x)/y} on (a-x)/y in Z, else 0
///   expfrac:a        a^x / (a^y + 1), a > 0, a != 1
///   trig-expfrac:r,theta   (r e^{i theta})^x / ((r e^{i theta})^y + 1)
///   geom:r           (1/y) sum_m r^{(2m+1)/y} e^{i pi (2m+1) x / y}, 0<r<1
///   const:c          constant c
///   xcoord           f(x,y) = x (negative control, not a member)
BivariateFn make_builtin(const BuiltinId& id);
BivariateFn make_builtin(const std::string& id_text);

/// Instantiations of every member family at representative parameters.
std::vector<BuiltinId> default_registry();

/// Per-family invariance tolerance: 1e-12 for closed forms, 1e-8 for the
/// zeta/gamma members.
double default_tolerance(const BuiltinId& id);

/// Core default grid extended with the exact rational pairs (1,1), (-2,1),
/// (3,2) so integer-ratio branch values are exercised exactly.
std::vector<GridPoint> default_registry_grid();

/// check_invariance for every registered builtin over the grid.
std::map<std::string, InvarianceReport> registry_verify_all(const std::vector<GridPoint>& grid,
                                                            double tol);

} // namespace altinv::builtins
