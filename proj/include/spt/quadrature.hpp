#ifndef SPT_QUADRATURE_HPP
#define SPT_QUADRATURE_HPP

#include <cmath>
#include <functional>

namespace spt {

// Adaptive Simpson with Richardson correction.  Tolerance is absolute.
namespace detail {

template <class F>
double simpson_rec(const F& f, double a, double b, double fa, double fm,
                   double fb, double whole, double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double h6 = (b - a) / 12.0;
    const double left = h6 * (fa + 4.0 * flm + fm);
    const double right = h6 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
        return left + right + delta / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

template <class F>
double integrate(const F& f, double a, double b, double tol = 1e-10,
                 int max_depth = 48) {
    if (a == b) return 0.0;
    const double fa = f(a), fb = f(b), fm = f(0.5 * (a + b));
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    // seed with a few panels so narrow features are not missed
    const int n0 = 8;
    double total = 0.0;
    const double h = (b - a) / n0;
    for (int i = 0; i < n0; ++i) {
        const double x0 = a + i * h, x1 = x0 + h;
        const double g0 = f(x0), g1 = f(x1), gm = f(0.5 * (x0 + x1));
        const double panel = h / 6.0 * (g0 + 4.0 * gm + g1);
        total += detail::simpson_rec(f, x0, x1, g0, gm, g1, panel,
                                     tol / n0, max_depth);
    }
    (void)whole;
    (void)fa;
    (void)fb;
    (void)fm;
    return total;
}

// Integral of f over the whole real axis via the substitution
// k = center + scale * tan(u), which maps (-pi/2, pi/2) onto the line and
// tames Lorentzian-type tails.
template <class F>
double integrate_line(const F& f, double center, double scale,
                      double tol = 1e-10) {
    auto g = [&](double u) {
        const double c = std::cos(u);
        const double k = center + scale * std::tan(u);
        return f(k) * scale / (c * c);
    };
    const double lim = M_PI / 2.0 - 1e-12;
    return integrate(g, -lim, lim, tol);
}

} // namespace spt

#endif
