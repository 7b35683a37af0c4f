#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/windowed.hpp"

#include <optional>
#include <string>
#include <vector>

namespace commdet {

/// Monotone step profile F with F(-inf) = 0, F(+inf) = winding, exponential
/// approach on both tails with the given length scale.
struct StepProfile {
    enum class Kind { Tanh, PiecewiseExp };
    Kind kind = Kind::Tanh;
    double scale = 4.0;
    double winding = 1.0;

    double value(double k) const;
};

/// Growing-window partial sums plus a boundedness verdict based on the final
/// per-site slope.
struct PartialSumSeries {
    std::vector<std::pair<int, double>> partials; // (window size, sum)
    double final_slope = 0.0;                     // per added basis vector
    bool bounded = false;
};

PartialSumSeries classify_partials(std::vector<std::pair<int, double>> partials,
                                   double slope_tol);

struct DiagShiftConfig {
    Complex a = 2.0;
    Complex b = 1.0;
    double scale = 4.0;
    std::vector<int> sizes = {32, 64, 128, 256};
    double tolerance = 1e-8;
    int diag_window_cap = 128; // cap for the dense trace-norm diagnostics
    double slope_tol = 1e-4;
};

struct DiagShiftReport {
    DiagShiftConfig cfg;
    DetEstimate det;
    Complex reference = 0.0; // telescoping limit a/b
    bool pass = false;
    PartialSumSeries kitaev_uv; // (U-1)(V-1)
    PartialSumSeries kitaev_vu; // (V-1)(U-1)
};

/// U = bilateral shift, V = diag(d_k) interpolating a -> b; the commutator is
/// diagonal with entries d_{k-1}/d_k and Fredholm determinant a/b.
DiagShiftReport exp_diag_shift(const DiagShiftConfig& cfg);

struct PhaseStepConfig {
    StepProfile profile;
    std::vector<int> sizes = {64, 128, 256, 512};
    double tolerance = 1e-8;
    int diag_window_cap = 128;
    double slope_tol = 1e-4;
};

struct PhaseStepReport {
    PhaseStepConfig cfg;
    DetEstimate det;
    Complex reference = 0.0; // exp(2 pi i w)
    bool pass = false;
    PartialSumSeries kitaev_uv;
    PartialSumSeries kitaev_vu;
    /// Direct-summation oracle over the same windows: sum |e^{2 pi i F(k)} - 1|.
    /// Its final slope lower-bounds the trace-norm slope (diagonal domination)
    /// and half its value upper-bounds it.
    PartialSumSeries diagonal_oracle;
};

/// U = diag(e^{2 pi i F(k)}), V delta_k = delta_{k+1}; the commutator is
/// diagonal with entries e^{2 pi i (F(k)-F(k-1))} telescoping to e^{2 pi i w}.
PhaseStepReport exp_phase_step(const PhaseStepConfig& cfg);

struct ToeplitzConfig {
    double a = 1.0;
    double b = 1.0;
    int corner = 64;
    int pad = 192;
    double log_tolerance = 1e-3;
    double pad_tolerance = 1e-9;
};

struct ToeplitzReport {
    ToeplitzConfig cfg;
    DetEstimate det;        // finite sections of the padded corner
    Complex log_value = 0.0;
    Complex log_reference = 0.0; // -a*b
    double pad_error = 0.0;
    bool pass = false;
};

/// det(e^{aS} e^{bS*} e^{-aS} e^{-bS*}) against exp(Tr[aS, bS*]) = exp(-ab).
ToeplitzReport exp_toeplitz_hh(const ToeplitzConfig& cfg);

enum class PairFamily { Identity, PhaseStep, DiagShift };

struct KitaevReportConfig {
    PairFamily family = PairFamily::PhaseStep;
    StepProfile profile;            // PhaseStep
    Complex a = 2.0, b = 1.0;       // DiagShift
    double scale = 4.0;             // DiagShift
    std::vector<int> windows = {16, 32, 64, 128};
    double slope_tol = 1e-4;
};

struct KitaevConditionReport {
    KitaevReportConfig cfg;
    PartialSumSeries uv;   // (U-1)(V-1)
    PartialSumSeries vu;   // (V-1)(U-1)
    PartialSumSeries comm; // U V U^-1 V^-1 - 1
    bool implication_ok = false; // comm bounded whenever both products are
    std::optional<Complex> det; // commutator determinant when structured
};

KitaevConditionReport kitaev_condition_report(const KitaevReportConfig& cfg);

} // namespace commdet
