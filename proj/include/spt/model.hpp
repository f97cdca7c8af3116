#ifndef SPT_MODEL_HPP
#define SPT_MODEL_HPP

#include <complex>
#include <stdexcept>
#include <string>

// Unit conventions used throughout:
//   hbar = 1 and omega1 = 1, i.e. all rates and frequencies are dimensionless
//   multiples of the qubit-1 transition frequency and all times are multiples
//   of 1/omega1.
// Sign convention: sigma_z |e> = +|e>, sigma_z |g> = -|g>.
// All simulations run in a frame rotating at omega1 (see engine.hpp); the
// types here are frame-agnostic and store lab-frame values.

namespace spt {

using cplx = std::complex<double>;

struct ModelError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// The scattering center: two qubits coupled by a sigma_z sigma_z interaction,
/// each damped by its transmission line and by relaxation/dephasing.
struct SystemParams {
    double omega1 = 1.0;      // qubit 1 transition frequency
    double omega2 = 1.0;      // qubit 2 transition frequency
    double coupling_j = 0.01; // zz coupling strength J
    double tau1 = 200.0;      // qubit 1 lifetime from line coupling
    double tau2 = 2000.0;     // qubit 2 lifetime from line coupling
    double gamma_r = 0.0;     // relaxation rate
    double gamma_phi = 0.0;   // pure dephasing rate

    // combined coherence decay rate, gamma = gamma_r/2 + gamma_phi = 1/T2*
    double gamma() const { return 0.5 * gamma_r + gamma_phi; }
    double t2_star() const {
        double g = gamma();
        return g > 0.0 ? 1.0 / g : std::numeric_limits<double>::infinity();
    }

    void validate() const;
};

enum class PulseShape { Decaying, Inverting };

/// A normalized single-photon wave packet with Lorentzian spectrum.
/// Decaying pulses turn on at t = delay and decay; inverting pulses are the
/// time-reversed variant, rising until t = delay (the shape that maximally
/// excites a matched qubit).  Positive delay means the pulse arrives later.
struct PulseSpec {
    PulseShape shape = PulseShape::Decaying;
    double carrier = 1.0; // angular carrier frequency
    double width = 1.0;   // temporal width tau
    double delay = 0.0;   // arrival-time offset

    void validate() const;
};

/// Eigenenergies of the two-qubit Hamiltonian and its four transition
/// frequencies.  The Hamiltonian is diagonal in the computational basis, so
/// all values are exact.
struct LevelScheme {
    double e_gg, e_eg, e_ge, e_ee;
    double f_gg_eg; // |gg> -> |eg>, equals omega1 + 2J
    double f_gg_ge; // |gg> -> |ge>, equals omega2 + 2J
    double f_ge_ee; // |ge> -> |ee>, equals f_gg_eg - 4J
    double f_eg_ee; // |eg> -> |ee>, equals f_gg_ge - 4J
};

LevelScheme level_scheme(const SystemParams& params);

/// Frequency-domain amplitude alpha(k), normalized so that
/// integral dk |alpha(k)|^2 = 1.  A nonzero delay T multiplies by exp(i k T).
cplx pulse_amp_freq(const PulseSpec& pulse, double k);

/// Time-domain amplitude, the Fourier transform of pulse_amp_freq,
/// normalized so that integral dt |xi(t)|^2 = 1.
cplx pulse_amp_time(const PulseSpec& pulse, double t);

} // namespace spt

#endif
