#pragma once

#include <functional>
#include <vector>

namespace s2re::roots {

using Function = std::function<double(double)>;

/// Bisection on a sign-changing bracket [a, b] until the bracket is shorter
/// than xtol. Returns the midpoint of the final bracket.
double bisect(const Function& f, double a, double b, double xtol = 1e-13);

/// One Newton step from x, kept only if it improves |f| and stays within
/// max_move of x.
double newton_polish(const Function& f, const Function& df, double x, double max_move);

/// Uniform scan of (a, b) with n intervals; every sign change (and every exact
/// zero at a sample) is refined by bisection. Roots come back ascending.
std::vector<double> scan_roots(const Function& f, double a, double b, int n, double xtol = 1e-13);

/// Local extremum of a unimodal function on [a, b] by golden-section search.
double golden_section_max(const Function& f, double a, double b, double xtol = 1e-12);

} // namespace s2re::roots
