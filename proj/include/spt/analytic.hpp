#ifndef SPT_ANALYTIC_HPP
#define SPT_ANALYTIC_HPP

#include "spt/model.hpp"

// Closed-form single-photon results: resonant transmission/reflection of a
// Lorentzian wave packet off qubit 1, its detuned generalization, the elastic
// single-qubit scattering amplitudes, and the control-qubit excitation
// probability for an inverting pulse.
//
// Channel convention: p_t and p_r count only the coherently scattered part of
// the photon.  Under pure dephasing p_t + p_r < 1 even though no photon is
// destroyed; the incoherently redistributed weight is reported in p_loss
// together with relaxation loss.  The engine exposes flux-convention numbers
// as well (see engine.hpp).

namespace spt {

struct SingleOutcome {
    double p_t = 0.0;    // transmitted
    double p_r = 0.0;    // reflected
    double p_loss = 0.0; // 1 - p_t - p_r
};

/// Resonant closed form: target carrier equal to the |gg> -> |eg> transition.
SingleOutcome pt_closed(const SystemParams& params, double tau_t);

/// Generalization to a detuned effective qubit, computed by quadrature of the
/// elastic amplitudes against the Lorentzian pulse spectrum.
/// detuning = (effective qubit frequency) - (target carrier).
SingleOutcome pt_detuned(const SystemParams& params, double tau_t,
                         double detuning);

/// Elastic amplitudes for a monochromatic photon at frequency k scattering
/// off qubit 1 (frequency qubit_freq, ground state, single excitation):
///   t(k) = 1 - (1/tau1) / (i (qubit_freq - k) + 1/tau1 + gamma)
///   r(k) = t(k) - 1
struct ElasticAmps {
    cplx t;
    cplx r;
};
ElasticAmps smatrix_elastic(const SystemParams& params, double k,
                            double qubit_freq);

/// Excitation probability of qubit 2 at time t for an inverting control pulse
/// of width tau_c peaking at t = 0:
///   P_ex(t) = 4 tau_c tau2 / (tau_c + tau2 + gamma tau_c tau2)^2
///             * exp(-|t| (2 gamma + 2/tau2))
double p_ex(const SystemParams& params, double tau_c, double t);

} // namespace spt

#endif
