#ifndef SPT_ENGINE_HPP
#define SPT_ENGINE_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "spt/analytic.hpp"
#include "spt/model.hpp"

// Numerical scattering of one target photon (line 1, open waveguide, qubit 1)
// and optionally one control photon (line 2, semi-infinite waveguide, qubit 2)
// off the coupled-qubit scattering center, with relaxation and dephasing.
//
// Two independent backends:
//   Hierarchy               coupled single-photon input sector equations on
//                           the two-qubit space, driven by the time-domain
//                           pulse envelopes (exact for single-photon inputs,
//                           deterministic, handles dephasing without sampling)
//   DiscretizedTrajectories each line discretized into modes, pure-state
//                           evolution in the <= 2 excitation sector,
//                           relaxation/dephasing by Monte-Carlo quantum jumps
//
// Both run in the frame rotating at omega1; carriers appear as detunings.
// Delays enter only through the pulse envelopes, so outputs are invariant
// under a common shift of all delays.
//
// Channel conventions: "coherent" quantities are squared output amplitudes
// with every noise channel projected on vacuum (they reduce to the closed
// forms of analytic.hpp); "flux" quantities are integrated photon number
// currents.  The two coincide when gamma_phi = 0.

namespace spt {

struct ConfigError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Backend { Hierarchy, DiscretizedTrajectories };

struct EngineConfig {
    Backend backend = Backend::Hierarchy;
    double time_step = 0.0; // trajectories integrator step; 0 = tau_min/50
    double t_start = 0.0;   // simulation window; both 0 = automatic
    double t_end = 0.0;
    int n_modes = 0; // modes per line (trajectories); 0 = automatic
    int n_traj = 4000;
    std::uint64_t rng_seed = 0x2545F4914F6CDD1Dull;
    double tolerance = 1e-3; // target accuracy of channel probabilities
    double rel_tol = 1e-8;   // hierarchy integrator relative tolerance
    bool check_convergence = false;
    bool sample_outcomes = true; // trajectories: sample one outcome per run
};

/// Frozen state of qubit 2 during a single-photon run.
enum class SpectatorState { Ground, Excited };

struct SingleScatterResult {
    SingleOutcome coherent;  // Eq-(4)-convention probabilities
    double flux_p_t = 0.0;   // integrated transmitted flux
    double flux_p_r = 0.0;   // integrated reflected flux
    double flux_p_loss = 0.0;
    double sigma_p_t = 0.0; // Monte-Carlo standard errors (trajectories)
    double sigma_p_r = 0.0;
    double conservation_residual = 0.0;
};

struct PairOutcome {
    // joint[target][control], coherent convention;
    // target: 0 transmitted, 1 reflected, 2 lost; control: 0 reflected, 1 lost
    double joint[3][2] = {};
    double p_tc = 0.0; // target transmitted (either control outcome)
    double p_rc = 0.0;
    double p_target_lost = 0.0;
    double p_control_reflected = 0.0;
    double p_control_lost = 0.0;
    // flux-convention marginals
    double flux_target_t = 0.0, flux_target_r = 0.0, flux_target_loss = 0.0;
    double flux_control_r = 0.0, flux_control_loss = 0.0;
    double sigma_p_tc = 0.0;
    double conservation_residual = 0.0;
};

SingleScatterResult scatter_single(const SystemParams& params,
                                   const PulseSpec& target,
                                   const EngineConfig& cfg,
                                   SpectatorState qubit2 = SpectatorState::Ground);

PairOutcome scatter_pair(const SystemParams& params, const PulseSpec& target,
                         const PulseSpec& control, const EngineConfig& cfg);

/// Output amplitudes over a uniform (lab-frame) frequency grid, from the
/// Fourier transform of the output-field time traces.  For a single photon
/// the amplitudes are returned directly; for a photon pair the entries are
/// marginal spectral densities of the coherent two-photon amplitudes.
struct SpectrumResult {
    std::vector<double> freq;
    std::vector<cplx> transmitted; // beta_r(p)   (single photon)
    std::vector<cplx> reflected;   // beta_l(p)
    std::vector<double> transmitted_density; // pair runs
    std::vector<double> reflected_density;
    double total_weight = 0.0; // integral of all |beta|^2 incl. loss channels
};

SpectrumResult coherent_output_spectrum(const SystemParams& params,
                                        const PulseSpec& target,
                                        const EngineConfig& cfg,
                                        const PulseSpec* control = nullptr,
                                        int n_freq = 1024);

// Exposed for tests: excitation probability of qubit 2 under a control pulse
// alone, from the hierarchy equations (flux convention).
std::vector<std::pair<double, double>> control_excitation_trace(
    const SystemParams& params, const PulseSpec& control,
    const EngineConfig& cfg);

} // namespace spt

#endif
