#include "spt/analytic.hpp"

#include <cmath>

#include "spt/quadrature.hpp"

namespace spt {

SingleOutcome pt_closed(const SystemParams& params, double tau_t) {
    params.validate();
    if (!(tau_t > 0.0)) throw ModelError("pt_closed: tau_t must be positive");
    const double t1 = params.tau1;
    const double g = params.gamma();
    const double den = (1.0 + t1 * g) * (t1 + tau_t + tau_t * t1 * g);
    SingleOutcome out;
    out.p_t = (t1 + t1 * t1 * g + (t1 * g) * (t1 * g) * tau_t) / den;
    out.p_r = tau_t / den;
    out.p_loss = 1.0 - out.p_t - out.p_r;
    return out;
}

ElasticAmps smatrix_elastic(const SystemParams& params, double k,
                            double qubit_freq) {
    const double g1 = 1.0 / params.tau1;
    const cplx denom(g1 + params.gamma(), qubit_freq - k);
    ElasticAmps a;
    a.r = -g1 / denom;
    a.t = 1.0 + a.r;
    return a;
}

SingleOutcome pt_detuned(const SystemParams& params, double tau_t,
                         double detuning) {
    params.validate();
    if (!(tau_t > 0.0)) throw ModelError("pt_detuned: tau_t must be positive");
    // Pulse carrier at 0, effective qubit at `detuning`; only differences
    // enter the amplitudes.
    const double carrier = 0.0;
    const double a = 1.0 / tau_t;
    const double b = 1.0 / params.tau1 + params.gamma();
    auto spec = [&](double k) {
        const double d = carrier - k;
        return 1.0 / (M_PI * tau_t * (d * d + a * a));
    };
    const double scale = a + b + std::abs(detuning);
    auto integ_t = [&](double k) {
        ElasticAmps s = smatrix_elastic(params, k, detuning);
        return spec(k) * std::norm(s.t);
    };
    auto integ_r = [&](double k) {
        ElasticAmps s = smatrix_elastic(params, k, detuning);
        return spec(k) * std::norm(s.r);
    };
    SingleOutcome out;
    out.p_t = integrate_line(integ_t, carrier, scale, 1e-12);
    out.p_r = integrate_line(integ_r, carrier, scale, 1e-12);
    out.p_loss = 1.0 - out.p_t - out.p_r;
    return out;
}

double p_ex(const SystemParams& params, double tau_c, double t) {
    params.validate();
    if (!(tau_c > 0.0)) throw ModelError("p_ex: tau_c must be positive");
    const double t2 = params.tau2;
    const double g = params.gamma();
    const double den = tau_c + t2 + g * tau_c * t2;
    const double pref = 4.0 * tau_c * t2 / (den * den);
    return pref * std::exp(-std::abs(t) * (2.0 * g + 2.0 / t2));
}

} // namespace spt
