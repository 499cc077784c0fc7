#include "s2re/roots.hpp"

#include <cmath>

#include "s2re/error.hpp"

namespace s2re::roots {

double bisect(const Function& f, double a, double b, double xtol)
{
    double fa = f(a);
    const double fb = f(b);
    if (fa == 0.0)
        return a;
    if (fb == 0.0)
        return b;
    if ((fa > 0.0) == (fb > 0.0))
        throw Error(Errc::NoRoot, "bracket does not change sign");
    for (int it = 0; it < 200 && std::abs(b - a) > xtol; ++it) {
        const double m = 0.5 * (a + b);
        if (m == a || m == b)
            break;
        const double fm = f(m);
        if (fm == 0.0)
            return m;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

double newton_polish(const Function& f, const Function& df, double x, double max_move)
{
    const double fx = f(x);
    const double d = df(x);
    if (fx == 0.0 || d == 0.0 || !std::isfinite(d))
        return x;
    const double step = fx / d;
    if (!(std::abs(step) <= max_move))
        return x;
    const double y = x - step;
    return std::abs(f(y)) < std::abs(fx) ? y : x;
}

std::vector<double> scan_roots(const Function& f, double a, double b, int n, double xtol)
{
    std::vector<double> out;
    double x0 = a;
    double f0 = f(x0);
    for (int i = 1; i <= n; ++i) {
        const double x1 = a + (b - a) * i / n;
        const double f1 = f(x1);
        if (f0 == 0.0)
            out.push_back(x0);
        else if (f1 != 0.0 && (f0 > 0.0) != (f1 > 0.0))
            out.push_back(bisect(f, x0, x1, xtol));
        x0 = x1;
        f0 = f1;
    }
    if (f0 == 0.0)
        out.push_back(x0);
    return out;
}

double golden_section_max(const Function& f, double a, double b, double xtol)
{
    const double g = 0.5 * (std::sqrt(5.0) - 1.0);
    double c = b - g * (b - a);
    double d = a + g * (b - a);
    double fc = f(c), fd = f(d);
    while (std::abs(b - a) > xtol) {
        if (fc > fd) {
            b = d;
            d = c;
            fd = fc;
            c = b - g * (b - a);
            fc = f(c);
        } else {
            a = c;
            c = d;
            fc = fd;
            d = a + g * (b - a);
            fd = f(d);
        }
    }
    return 0.5 * (a + b);
}

} // namespace s2re::roots
