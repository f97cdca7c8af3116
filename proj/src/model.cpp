#include "spt/model.hpp"

#include <cmath>

namespace spt {

void SystemParams::validate() const {
    if (!(omega1 > 0.0) || !(omega2 > 0.0))
        throw ModelError("SystemParams: qubit frequencies must be positive");
    if (!(coupling_j > 0.0) && coupling_j != 0.0)
        throw ModelError("SystemParams: coupling_j must be non-negative and finite");
    if (!(tau1 > 0.0) || !(tau2 > 0.0))
        throw ModelError("SystemParams: lifetimes must be positive");
    if (gamma_r < 0.0 || gamma_phi < 0.0)
        throw ModelError("SystemParams: dissipation rates must be non-negative");
}

void PulseSpec::validate() const {
    if (!(width > 0.0))
        throw ModelError("PulseSpec: width must be positive");
    if (!(carrier > 0.0))
        throw ModelError("PulseSpec: carrier must be positive");
}

LevelScheme level_scheme(const SystemParams& params) {
    params.validate();
    const double w1 = params.omega1, w2 = params.omega2, j = params.coupling_j;
    LevelScheme ls{};
    // H = w1/2 s1z + w2/2 s2z - J s1z s2z, diagonal in {gg,eg,ge,ee}
    ls.e_gg = -0.5 * w1 - 0.5 * w2 - j;
    ls.e_eg = +0.5 * w1 - 0.5 * w2 + j;
    ls.e_ge = -0.5 * w1 + 0.5 * w2 + j;
    ls.e_ee = +0.5 * w1 + 0.5 * w2 - j;
    ls.f_gg_eg = ls.e_eg - ls.e_gg;
    ls.f_gg_ge = ls.e_ge - ls.e_gg;
    ls.f_ge_ee = ls.e_ee - ls.e_ge;
    ls.f_eg_ee = ls.e_ee - ls.e_eg;
    return ls;
}

cplx pulse_amp_freq(const PulseSpec& pulse, double k) {
    pulse.validate();
    const double tau = pulse.width;
    const double det = pulse.carrier - k;
    const double norm = std::sqrt(M_PI * tau);
    // Decaying uses the +i convention, Inverting the -i one.
    const cplx denom = (pulse.shape == PulseShape::Decaying)
                           ? cplx(1.0 / tau, det)
                           : cplx(1.0 / tau, -det);
    cplx amp = 1.0 / (norm * denom);
    if (pulse.delay != 0.0)
        amp *= std::exp(cplx(0.0, k * pulse.delay));
    return amp;
}

cplx pulse_amp_time(const PulseSpec& pulse, double t) {
    pulse.validate();
    const double tau = pulse.width;
    const double s = t - pulse.delay;
    const double norm = std::sqrt(2.0 / tau);
    if (pulse.shape == PulseShape::Decaying) {
        if (s < 0.0) return 0.0;
        return norm * std::exp(-s / tau) * std::exp(cplx(0.0, -pulse.carrier * s));
    }
    if (s > 0.0) return 0.0;
    return norm * std::exp(s / tau) * std::exp(cplx(0.0, -pulse.carrier * s));
}

} // namespace spt
