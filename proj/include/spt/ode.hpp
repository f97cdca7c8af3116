#ifndef SPT_ODE_HPP
#define SPT_ODE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace spt {

// Adaptive embedded Runge-Kutta (Cash-Karp 5(4)) on complex state vectors.
// rhs(t, y, dydt) fills dydt; the callback, when given, is invoked after each
// accepted step.

struct OdeOptions {
    double rel_tol = 1e-8;
    double abs_tol = 1e-12;
    double h_init = 0.0; // 0 = (t1-t0)/100
    double h_max = 0.0;  // 0 = t1-t0
    std::size_t max_steps = 50'000'000;
};

template <class Rhs, class Callback>
void ode_integrate(Rhs&& rhs, double t0, double t1,
                   std::vector<std::complex<double>>& y, const OdeOptions& opt,
                   Callback&& on_accept) {
    using cplx = std::complex<double>;
    static constexpr double a21 = 1.0 / 5.0;
    static constexpr double a31 = 3.0 / 40.0, a32 = 9.0 / 40.0;
    static constexpr double a41 = 3.0 / 10.0, a42 = -9.0 / 10.0, a43 = 6.0 / 5.0;
    static constexpr double a51 = -11.0 / 54.0, a52 = 5.0 / 2.0,
                            a53 = -70.0 / 27.0, a54 = 35.0 / 27.0;
    static constexpr double a61 = 1631.0 / 55296.0, a62 = 175.0 / 512.0,
                            a63 = 575.0 / 13824.0, a64 = 44275.0 / 110592.0,
                            a65 = 253.0 / 4096.0;
    static constexpr double c2 = 1.0 / 5.0, c3 = 3.0 / 10.0, c4 = 3.0 / 5.0,
                            c5 = 1.0, c6 = 7.0 / 8.0;
    static constexpr double b1 = 37.0 / 378.0, b3 = 250.0 / 621.0,
                            b4 = 125.0 / 594.0, b6 = 512.0 / 1771.0;
    static constexpr double d1 = 2825.0 / 27648.0, d3 = 18575.0 / 48384.0,
                            d4 = 13525.0 / 55296.0, d5 = 277.0 / 14336.0,
                            d6 = 1.0 / 4.0;

    if (t1 <= t0) return;
    const std::size_t n = y.size();
    std::vector<cplx> k1(n), k2(n), k3(n), k4(n), k5(n), k6(n), yt(n), ynew(n);

    double t = t0;
    double h = opt.h_init > 0.0 ? opt.h_init : (t1 - t0) / 100.0;
    const double h_max = opt.h_max > 0.0 ? opt.h_max : (t1 - t0);
    h = std::min(h, h_max);

    std::size_t steps = 0;
    while (t < t1) {
        if (++steps > opt.max_steps)
            throw std::runtime_error("ode_integrate: step limit exceeded");
        h = std::min(h, t1 - t);

        rhs(t, y, k1);
        for (std::size_t i = 0; i < n; ++i) yt[i] = y[i] + h * (a21 * k1[i]);
        rhs(t + c2 * h, yt, k2);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a31 * k1[i] + a32 * k2[i]);
        rhs(t + c3 * h, yt, k3);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a41 * k1[i] + a42 * k2[i] + a43 * k3[i]);
        rhs(t + c4 * h, yt, k4);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a51 * k1[i] + a52 * k2[i] + a53 * k3[i] +
                                a54 * k4[i]);
        rhs(t + c5 * h, yt, k5);
        for (std::size_t i = 0; i < n; ++i)
            yt[i] = y[i] + h * (a61 * k1[i] + a62 * k2[i] + a63 * k3[i] +
                                a64 * k4[i] + a65 * k5[i]);
        rhs(t + c6 * h, yt, k6);

        double err = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            const cplx y5 = y[i] + h * (b1 * k1[i] + b3 * k3[i] + b4 * k4[i] +
                                        b6 * k6[i]);
            const cplx y4 = y[i] + h * (d1 * k1[i] + d3 * k3[i] + d4 * k4[i] +
                                        d5 * k5[i] + d6 * k6[i]);
            ynew[i] = y5;
            const double sc = opt.abs_tol +
                              opt.rel_tol * std::max(std::abs(y[i]), std::abs(y5));
            err = std::max(err, std::abs(y5 - y4) / sc);
        }

        if (err <= 1.0) {
            t += h;
            y.swap(ynew);
            on_accept(t, y);
            double fac = err > 0.0 ? 0.9 * std::pow(err, -0.2) : 5.0;
            h = std::min(h * std::clamp(fac, 0.2, 5.0), h_max);
        } else {
            double fac = 0.9 * std::pow(err, -0.25);
            h *= std::clamp(fac, 0.1, 0.9);
            if (!(h > 0.0) || t + h == t)
                throw std::runtime_error("ode_integrate: step underflow");
        }
    }
}

template <class Rhs>
void ode_integrate(Rhs&& rhs, double t0, double t1,
                   std::vector<std::complex<double>>& y,
                   const OdeOptions& opt = {}) {
    ode_integrate(rhs, t0, t1, y, opt,
                  [](double, const std::vector<std::complex<double>>&) {});
}

} // namespace spt

#endif
