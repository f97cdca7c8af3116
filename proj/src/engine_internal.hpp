#ifndef SPT_ENGINE_INTERNAL_HPP
#define SPT_ENGINE_INTERNAL_HPP

#include <algorithm>
#include <cmath>
#include <vector>

#include "spt/engine.hpp"

// Shared machinery of the two backends: rotating-frame pulses, complex level
// energies, piecewise-uniform time grids, and exponential-kernel quadrature
// used by the hierarchy backend (exact integration of e^{w u} against a
// locally quadratic integrand, so grid steps are limited by envelope
// smoothness only, never by phase rotation).

namespace spt::detail {

constexpr double kInvertingSupport = 16.0; // widths of leading tail kept
constexpr double kDecayingSupport = 16.0;  // widths of trailing tail kept

struct RotPulse {
    PulseShape shape;
    double width = 1.0;
    double delay = 0.0;
    double det = 0.0; // carrier - frame frequency

    cplx env(double t) const {
        const double s = t - delay;
        const double a = std::sqrt(2.0 / width);
        if (shape == PulseShape::Decaying) {
            if (s < 0.0) return 0.0;
            return a * std::exp(-s / width) * std::exp(cplx(0.0, -det * s));
        }
        if (s > 0.0) return 0.0;
        return a * std::exp(s / width) * std::exp(cplx(0.0, -det * s));
    }
    double env2(double t) const {
        const double s = t - delay;
        if (shape == PulseShape::Decaying)
            return s < 0.0 ? 0.0 : 2.0 / width * std::exp(-2.0 * s / width);
        return s > 0.0 ? 0.0 : 2.0 / width * std::exp(2.0 * s / width);
    }
    double support_start() const {
        return shape == PulseShape::Decaying ? delay
                                             : delay - kInvertingSupport * width;
    }
    double support_end() const {
        return shape == PulseShape::Decaying ? delay + kDecayingSupport * width
                                             : delay;
    }
};

struct Frame {
    double omega_frame = 1.0;
    double kappa1 = 0.0, kappa2 = 0.0; // line decay rates 2/tau
    double gamma_r = 0.0, gamma_phi = 0.0;
    double gamma = 0.0; // gamma_r/2 + gamma_phi
    // complex rotating-frame energies, E_gg = 0
    cplx e_eg, e_ge, e_ee;

    static Frame make(const SystemParams& p,
                      SpectatorState q2 = SpectatorState::Ground) {
        Frame f;
        f.omega_frame = p.omega1;
        f.kappa1 = 2.0 / p.tau1;
        f.kappa2 = 2.0 / p.tau2;
        f.gamma_r = p.gamma_r;
        f.gamma_phi = p.gamma_phi;
        f.gamma = p.gamma();
        const double d1 = p.omega1 - f.omega_frame;
        const double d2 = p.omega2 - f.omega_frame;
        const double j2 = (q2 == SpectatorState::Ground) ? 2.0 * p.coupling_j
                                                         : -2.0 * p.coupling_j;
        f.e_eg = cplx(d1 + j2, -(1.0 / p.tau1 + f.gamma));
        f.e_ge = cplx(d2 + 2.0 * p.coupling_j, -(1.0 / p.tau2 + f.gamma));
        f.e_ee = cplx(d1 + d2, -(1.0 / p.tau1 + 1.0 / p.tau2 + p.gamma_r +
                                 2.0 * p.gamma_phi));
        return f;
    }
};

// Piecewise-uniform time grid.  seg[i] is the first knot index of segment i;
// spacing is constant within a segment.
struct TimeGrid {
    std::vector<double> t;
    std::vector<std::size_t> seg;

    std::size_t size() const { return t.size(); }
    // index of the last knot of the segment containing interval [i, i+1]
    std::size_t seg_end(std::size_t i) const {
        for (std::size_t s = 1; s < seg.size(); ++s)
            if (i < seg[s]) return seg[s];
        return t.size() - 1;
    }
};

// Build a grid over [t0, t1] from resolution requests (windows with a maximum
// step).  Outside all windows the fallback step applies.
struct StepRequest {
    double lo, hi, h;
};

inline TimeGrid build_grid(double t0, double t1,
                           std::vector<StepRequest> reqs, double h_fallback) {
    // collect breakpoints
    std::vector<double> cuts{t0, t1};
    for (const auto& r : reqs) {
        if (r.lo > t0 && r.lo < t1) cuts.push_back(r.lo);
        if (r.hi > t0 && r.hi < t1) cuts.push_back(r.hi);
    }
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end(),
                           [](double a, double b) {
                               return std::abs(a - b) < 1e-9 * (1.0 + std::abs(a));
                           }),
               cuts.end());
    TimeGrid g;
    g.t.push_back(cuts.front());
    for (std::size_t c = 0; c + 1 < cuts.size(); ++c) {
        const double lo = cuts[c], hi = cuts[c + 1];
        double h = h_fallback;
        const double mid = 0.5 * (lo + hi);
        for (const auto& r : reqs)
            if (mid >= r.lo && mid <= r.hi) h = std::min(h, r.h);
        std::size_t n = std::max<std::size_t>(2, (std::size_t)std::ceil((hi - lo) / h));
        if (n % 2) ++n; // even interval count per segment
        g.seg.push_back(g.t.size() - 1);
        const double hh = (hi - lo) / (double)n;
        for (std::size_t i = 1; i <= n; ++i) g.t.push_back(lo + hh * (double)i);
        g.t.back() = hi;
    }
    return g;
}

// Moments m_k = integral_0^h u^k e^{w u} du, k = 0,1,2, stable for small |wh|.
struct KernelMoments {
    cplx m0, m1, m2;
};

inline KernelMoments kernel_moments(cplx w, double h) {
    KernelMoments m;
    const cplx z = w * h;
    if (std::abs(z) < 1e-3) {
        // series in z
        const cplx z2 = z * z;
        m.m0 = h * (1.0 + z / 2.0 + z2 / 6.0 + z2 * z / 24.0);
        m.m1 = h * h * (0.5 + z / 3.0 + z2 / 8.0 + z2 * z / 30.0);
        m.m2 = h * h * h * (1.0 / 3.0 + z / 4.0 + z2 / 10.0 + z2 * z / 36.0);
    } else {
        const cplx e = std::exp(z);
        m.m0 = (e - 1.0) / w;
        m.m1 = (h * e - m.m0) / w;
        m.m2 = (h * h * e - 2.0 * m.m1) / w;
    }
    return m;
}

// integral_0^h q(u) e^{w u} du with q quadratic through samples at u = 0, h, 2h
inline cplx kernel_step(cplx g0, cplx g1, cplx g2, cplx w, double h) {
    const KernelMoments m = kernel_moments(w, h);
    const cplx a0 = g0;
    const cplx a1 = (4.0 * g1 - 3.0 * g0 - g2) / (2.0 * h);
    const cplx a2 = (g0 - 2.0 * g1 + g2) / (2.0 * h * h);
    return a0 * m.m0 + a1 * m.m1 + a2 * m.m2;
}

// same but with samples at u = -h, 0, h (used for trailing intervals)
inline cplx kernel_step_back(cplx gm, cplx g0, cplx g1, cplx w, double h) {
    const KernelMoments m = kernel_moments(w, h);
    const cplx a0 = g0;
    const cplx a1 = (g1 - gm) / (2.0 * h);
    const cplx a2 = (g1 - 2.0 * g0 + gm) / (2.0 * h * h);
    return a0 * m.m0 + a1 * m.m1 + a2 * m.m2;
}

// Suffix kernel integral F[i] = integral_{t_i}^{t_N} g(s) e^{-i E (s - t_i)} ds
// computed by a backward recurrence with per-interval quadratic quadrature.
inline std::vector<cplx> suffix_kernel(const TimeGrid& grid,
                                       const std::vector<cplx>& g, cplx E) {
    const std::size_t n = grid.t.size();
    std::vector<cplx> out(n);
    const cplx w = cplx(0.0, -1.0) * E; // integrand carries e^{w u}
    out[n - 1] = 0.0;
    for (std::size_t ii = n - 1; ii-- > 0;) {
        const double h = grid.t[ii + 1] - grid.t[ii];
        const std::size_t send = grid.seg_end(ii);
        cplx local;
        if (ii + 2 <= send)
            local = kernel_step(g[ii], g[ii + 1], g[ii + 2], w, h);
        else
            local = kernel_step_back(g[ii - 1], g[ii], g[ii + 1], w, h);
        // out[ii] = local + e^{w h} * out[ii+1]
        out[ii] = local + std::exp(w * h) * out[ii + 1];
    }
    return out;
}

// Suffix plain integral of a real array.
inline std::vector<double> suffix_integral(const TimeGrid& grid,
                                           const std::vector<double>& g) {
    const std::size_t n = grid.t.size();
    std::vector<double> out(n);
    out[n - 1] = 0.0;
    for (std::size_t ii = n - 1; ii-- > 0;) {
        const double h = grid.t[ii + 1] - grid.t[ii];
        const std::size_t send = grid.seg_end(ii);
        double local;
        if (ii + 2 <= send) {
            const double a1 = (4.0 * g[ii + 1] - 3.0 * g[ii] - g[ii + 2]) / (2.0 * h);
            const double a2 = (g[ii] - 2.0 * g[ii + 1] + g[ii + 2]) / (2.0 * h * h);
            local = g[ii] * h + a1 * h * h / 2.0 + a2 * h * h * h / 3.0;
        } else {
            const double a1 = (g[ii + 1] - g[ii - 1]) / (2.0 * h);
            const double a2 = (g[ii + 1] - 2.0 * g[ii] + g[ii - 1]) / (2.0 * h * h);
            local = g[ii] * h + a1 * h * h / 2.0 + a2 * h * h * h / 3.0;
        }
        out[ii] = local + out[ii + 1];
    }
    return out;
}

// Full-grid integral of a real array (quadratic per interval).
inline double grid_integral(const TimeGrid& grid, const std::vector<double>& g) {
    std::vector<double> s = suffix_integral(grid, g);
    return s[0];
}

// Full-grid integral of a complex array.
inline cplx grid_integral(const TimeGrid& grid, const std::vector<cplx>& g) {
    const std::size_t n = grid.t.size();
    cplx acc = 0.0;
    for (std::size_t ii = 0; ii + 1 < n; ++ii) {
        const double h = grid.t[ii + 1] - grid.t[ii];
        const std::size_t send = grid.seg_end(ii);
        if (ii + 2 <= send)
            acc += kernel_step(g[ii], g[ii + 1], g[ii + 2], cplx(0.0), h);
        else
            acc += kernel_step_back(g[ii - 1], g[ii], g[ii + 1], cplx(0.0), h);
    }
    return acc;
}

// Resolved simulation window and grids for a run.
struct RunSetup {
    double t0 = 0.0, t1 = 0.0;
    TimeGrid grid;
    std::vector<RotPulse> pulses;
    Frame frame;
};

RunSetup resolve_setup(const SystemParams& params, const PulseSpec* target,
                       const PulseSpec* control, const EngineConfig& cfg,
                       SpectatorState q2 = SpectatorState::Ground);

// Hierarchy-backend worker entry points (engine_hierarchy.cpp)
SingleScatterResult hierarchy_single(const SystemParams& params,
                                     const PulseSpec& target,
                                     const EngineConfig& cfg,
                                     SpectatorState q2);
PairOutcome hierarchy_pair(const SystemParams& params, const PulseSpec& target,
                           const PulseSpec& control, const EngineConfig& cfg);

// Trajectories-backend worker entry points (engine_modes.cpp)
SingleScatterResult modes_single(const SystemParams& params,
                                 const PulseSpec& target,
                                 const EngineConfig& cfg, SpectatorState q2);
PairOutcome modes_pair(const SystemParams& params, const PulseSpec& target,
                       const PulseSpec& control, const EngineConfig& cfg);

// Coherent single-photon output amplitudes on the hierarchy grid (target line).
struct SingleAmplitudes {
    TimeGrid grid;
    Frame frame;
    std::vector<cplx> beta_t; // transmitted amplitude vs time
    std::vector<cplx> beta_r; // reflected
    double p_loss_coherent = 0.0;
};
SingleAmplitudes hierarchy_single_amplitudes(const SystemParams& params,
                                             const PulseSpec& target,
                                             const EngineConfig& cfg,
                                             SpectatorState q2);

// splitmix64: documented per-trajectory seed derivation
inline std::uint64_t splitmix64(std::uint64_t& state) {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}
inline std::uint64_t trajectory_seed(std::uint64_t base, std::uint64_t index) {
    std::uint64_t s = base ^ (0xD1B54A32D192ED03ull * (index + 1));
    return splitmix64(s);
}

} // namespace spt::detail

#endif
