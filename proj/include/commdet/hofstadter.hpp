#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/experiments.hpp"

#include <optional>
#include <vector>

namespace commdet {

/// Open-boundary magnetic tight-binding square lattice, Landau gauge: unit
/// horizontal hops and vertical hops carrying the Peierls phase
/// e^{2 pi i (p/q) x}, giving flux p/q per plaquette.
struct HofstadterConfig {
    int L = 36;
    int p = 1;
    int q = 3;
    int band = 1;                      // fill the lowest `band` of q bands...
    std::optional<double> fermi;       // ...unless an explicit level is given
    std::vector<int> window_radii = {4, 6, 8, 10};
    double gap_floor_factor = 10.0;    // gap must exceed this x residual
    double tolerance = 0.05;

    void validate() const;
};

/// site index = x + L*y, 0 <= x, y < L.
DenseMatrix hofstadter_hamiltonian(int L, int p, int q);

/// Half-plane indicator diagonals split between columns/rows so no site lies
/// on the boundary; the split point (center) is at coordinate
/// ceil(L/2) - 0.5 in both directions.
std::vector<Complex> half_plane_indicator_x(int L);
std::vector<Complex> half_plane_indicator_y(int L);
double lattice_center(int L);

/// Square window of sites with |x - c| <= r and |y - c| <= r.
std::vector<int> window_sites(int L, int radius);

/// Real-space three-sector estimate of the projector's Chern number:
/// sites within Euclidean `radius` of the center are split into three 120
/// degree sectors A, B, C (counterclockwise) and
///   nu = -24 pi * Im sum_{j in A, k in B, l in C} P_jk P_kl P_lj.
/// Requires margin: radius <= L/2 - q (Error(RadiusTooLarge) otherwise).
double kitaev_local_marker(const DenseMatrix& p, int L, int q, int radius,
                           ExecPolicy policy);
inline double kitaev_local_marker(const DenseMatrix& p, int L, int q, int radius) {
    return kitaev_local_marker(p, L, q, radius, default_policy());
}

struct ChernReport {
    HofstadterConfig cfg;
    double fermi = 0.0;
    double gap = 0.0;
    std::vector<std::pair<int, double>> window_values; // (radius, nu_W)
    double nu = 0.0;          // final window
    int nu_rounded = 0;
    double marker = 0.0;      // independent local-marker oracle at the final radius
    PartialSumSeries trace_class_partials; // singular sums of (e^A-1)(e^B-1)
    bool pass = false;
};

/// Window traces of 2 pi i [PXP, PYP] over growing central windows, the
/// local-marker cross-check, and the trace-class diagnostic of the
/// exponentiated pair. Pass requires the final window value to sit within
/// tolerance of its rounded integer and of the marker.
ChernReport exp_hofstadter_chern(const HofstadterConfig& cfg);

/// Shared analysis used by exp_hofstadter_chern and by trivial-control tests
/// that build their own projector.
ChernReport chern_trace_analysis(const DenseMatrix& p, const HofstadterConfig& cfg,
                                 double fermi, double gap, ExecPolicy policy);

} // namespace commdet
