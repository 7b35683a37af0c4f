#include "commdet/experiments.hpp"

#include "commdet/error.hpp"
#include "commdet/lu.hpp"
#include "commdet/padded_product.hpp"
#include "commdet/singular_values.hpp"

#include <algorithm>
#include <cmath>

namespace commdet {

namespace {
constexpr double kTwoPi = 6.283185307179586476925286766559;
}

double StepProfile::value(double k) const {
    switch (kind) {
        case Kind::Tanh:
            return winding * 0.5 * (1.0 + std::tanh(k / scale));
        case Kind::PiecewiseExp:
            return k >= 0.0 ? winding * (1.0 - 0.5 * std::exp(-k / scale))
                            : winding * 0.5 * std::exp(k / scale);
    }
    return 0.0;
}

PartialSumSeries classify_partials(std::vector<std::pair<int, double>> partials,
                                   double slope_tol) {
    PartialSumSeries s;
    s.partials = std::move(partials);
    if (s.partials.size() >= 2) {
        const auto& last = s.partials.back();
        const auto& prev = s.partials[s.partials.size() - 2];
        const int dm = last.first - prev.first;
        s.final_slope = dm > 0 ? (last.second - prev.second) / dm : 0.0;
    }
    s.bounded = s.final_slope <= slope_tol;
    return s;
}

namespace {

// Dense block of a two-diagonal bilateral operator on the centered window of
// size m (lattice indices -(m/2) .. m-1-(m/2)): main diagonal diag(k),
// subdiagonal sub(k) in column k.
template <typename FDiag, typename FSub>
DenseMatrix two_diagonal_block(int m, FDiag diag, FSub sub) {
    DenseMatrix t(m);
    const long k0 = -(m / 2);
    for (int i = 0; i < m; ++i) {
        t(i, i) = diag(k0 + i);
        if (i + 1 < m) t(i + 1, i) = sub(k0 + i);
    }
    return t;
}

std::vector<int> capped_sizes(const std::vector<int>& sizes, int cap) {
    std::vector<int> out;
    for (int s : sizes) out.push_back(std::min(s, cap));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

template <typename FDiag, typename FSub>
PartialSumSeries two_diagonal_partials(const std::vector<int>& sizes, int cap, double slope_tol,
                                       FDiag diag, FSub sub) {
    std::vector<std::pair<int, double>> partials;
    for (int m : capped_sizes(sizes, cap))
        partials.emplace_back(m, trace_norm(two_diagonal_block(m, diag, sub)));
    return classify_partials(std::move(partials), slope_tol);
}

// Commutator diagonal c(k) over the centered window covering the largest
// scheduled size, packaged as a windowed operator with unit-limit tail.
template <typename FC>
WindowedOperator diagonal_commutator_operator(const std::vector<int>& sizes, FC c,
                                              double tail_bound) {
    const int maxm = *std::max_element(sizes.begin(), sizes.end());
    const long h = maxm / 2 + 1;
    std::vector<Complex> d;
    d.reserve(2 * h + 1);
    for (long k = -h; k <= h; ++k) d.push_back(c(k));
    return WindowedOperator::interval(-h, h, DenseMatrix::diagonal(d),
                                      Tail::diagonal_with_limit(1.0, 1.0), tail_bound);
}

// Exact trace-norm partial sums for a diagonal operator: sum of |c(k) - 1|.
template <typename FC>
PartialSumSeries diagonal_partials(const std::vector<int>& sizes, double slope_tol, FC c) {
    std::vector<std::pair<int, double>> partials;
    for (int m : sizes) {
        const long k0 = -(m / 2);
        double sum = 0.0;
        for (long k = k0; k < k0 + m; ++k) sum += std::abs(c(k) - Complex(1.0));
        partials.emplace_back(m, sum);
    }
    return classify_partials(std::move(partials), slope_tol);
}

} // namespace

DiagShiftReport exp_diag_shift(const DiagShiftConfig& cfg) {
    if (cfg.a == Complex(0.0) || cfg.b == Complex(0.0))
        throw Error(ErrorKind::BadArgument, "exp_diag_shift: limits must be nonzero");
    if (cfg.sizes.empty())
        throw Error(ErrorKind::BadArgument, "exp_diag_shift: empty size schedule");

    DiagShiftReport rep;
    rep.cfg = cfg;
    const Complex a = cfg.a, b = cfg.b;
    const double s = cfg.scale;
    auto d = [a, b, s](double k) {
        return 0.5 * (a + b) + 0.5 * (b - a) * std::tanh(k / s);
    };
    auto c = [d](long k) { return d(static_cast<double>(k - 1)) / d(static_cast<double>(k)); };

    const int maxm = *std::max_element(cfg.sizes.begin(), cfg.sizes.end());
    const long h = maxm / 2 + 1;
    double tail_bound = 0.0;
    const long extent = h + static_cast<long>(200.0 * std::max(1.0, s));
    for (long k = h + 1; k <= extent; ++k)
        tail_bound += std::abs(c(k) - Complex(1.0)) + std::abs(c(-k) - Complex(1.0));

    rep.det = fredholm_det(diagonal_commutator_operator(cfg.sizes, c, tail_bound), cfg.sizes,
                           cfg.tolerance);
    rep.reference = a / b;
    rep.pass = std::abs(rep.det.value - rep.reference) <= cfg.tolerance;

    // (U-1)(V-1) and (V-1)(U-1) for U the shift, V = diag(d): main diagonal
    // -(d_k - 1), subdiagonal d_k - 1 resp. d_{k+1} - 1.
    rep.kitaev_uv = two_diagonal_partials(
        cfg.sizes, cfg.diag_window_cap, cfg.slope_tol,
        [d](long k) { return -(d(static_cast<double>(k)) - 1.0); },
        [d](long k) { return d(static_cast<double>(k)) - 1.0; });
    rep.kitaev_vu = two_diagonal_partials(
        cfg.sizes, cfg.diag_window_cap, cfg.slope_tol,
        [d](long k) { return -(d(static_cast<double>(k)) - 1.0); },
        [d](long k) { return d(static_cast<double>(k + 1)) - 1.0; });
    return rep;
}

PhaseStepReport exp_phase_step(const PhaseStepConfig& cfg) {
    if (cfg.sizes.empty())
        throw Error(ErrorKind::BadArgument, "exp_phase_step: empty size schedule");

    PhaseStepReport rep;
    rep.cfg = cfg;
    const StepProfile prof = cfg.profile;
    auto u = [prof](long k) {
        const double f = prof.value(static_cast<double>(k));
        return std::polar(1.0, kTwoPi * f);
    };
    auto c = [prof](long k) {
        const double df = prof.value(static_cast<double>(k)) - prof.value(static_cast<double>(k - 1));
        return std::polar(1.0, kTwoPi * df);
    };

    // |c(k) - 1| <= 2 pi |F(k) - F(k-1)|, summable by the profile's tail
    // bound; estimate the neglected part by direct summation.
    const int maxm = *std::max_element(cfg.sizes.begin(), cfg.sizes.end());
    const long h = maxm / 2 + 1;
    double tail_bound = 0.0;
    const long extent = h + static_cast<long>(200.0 * std::max(1.0, prof.scale));
    for (long k = h + 1; k <= extent; ++k)
        tail_bound += std::abs(c(k) - Complex(1.0)) + std::abs(c(-k) - Complex(1.0));

    rep.det = fredholm_det(diagonal_commutator_operator(cfg.sizes, c, tail_bound), cfg.sizes,
                           cfg.tolerance);
    rep.reference = std::polar(1.0, kTwoPi * prof.winding);
    rep.pass = std::abs(rep.det.value - rep.reference) <= cfg.tolerance;

    // (U-1)(V-1): diagonal -(u_k - 1), subdiagonal u_{k+1} - 1;
    // (V-1)(U-1): diagonal -(u_k - 1), subdiagonal u_k - 1.
    rep.kitaev_uv = two_diagonal_partials(
        cfg.sizes, cfg.diag_window_cap, cfg.slope_tol,
        [u](long k) { return -(u(k) - Complex(1.0)); },
        [u](long k) { return u(k + 1) - Complex(1.0); });
    rep.kitaev_vu = two_diagonal_partials(
        cfg.sizes, cfg.diag_window_cap, cfg.slope_tol,
        [u](long k) { return -(u(k) - Complex(1.0)); },
        [u](long k) { return u(k) - Complex(1.0); });

    rep.diagonal_oracle =
        diagonal_partials(capped_sizes(cfg.sizes, cfg.diag_window_cap), cfg.slope_tol,
                          [u](long k) { return u(k); });
    return rep;
}

ToeplitzReport exp_toeplitz_hh(const ToeplitzConfig& cfg) {
    if (cfg.corner < 8)
        throw Error(ErrorKind::BadArgument, "exp_toeplitz_hh: corner must be >= 8");
    if (cfg.pad < 2 * cfg.corner)
        throw Error(ErrorKind::BadArgument, "exp_toeplitz_hh: pad must be >= 2*corner");

    ToeplitzReport rep;
    rep.cfg = cfg;

    const std::vector<SemiInfiniteFactor> factors = {
        shift_exponential(cfg.a, true),
        shift_exponential(cfg.b, false),
        shift_exponential(-cfg.a, true),
        shift_exponential(-cfg.b, false),
    };
    DenseMatrix w =
        padded_product(factors, cfg.corner, cfg.pad, cfg.pad_tolerance, &rep.pad_error);

    std::vector<int> schedule;
    for (int m = std::max(4, cfg.corner / 8); m < cfg.corner; m *= 2) schedule.push_back(m);
    schedule.push_back(cfg.corner);

    WindowedOperator op = WindowedOperator::interval(0, cfg.corner - 1, std::move(w),
                                                     Tail::identity(), rep.pad_error);
    rep.det = fredholm_det(op, schedule, 1e-8);
    rep.log_value = std::log(rep.det.value);
    rep.log_reference = Complex(-cfg.a * cfg.b, 0.0);
    rep.pass = std::abs(rep.log_value - rep.log_reference) <= cfg.log_tolerance;
    return rep;
}

KitaevConditionReport kitaev_condition_report(const KitaevReportConfig& cfg) {
    if (cfg.windows.empty())
        throw Error(ErrorKind::BadArgument, "kitaev_condition_report: empty window schedule");

    KitaevConditionReport rep;
    rep.cfg = cfg;

    switch (cfg.family) {
        case PairFamily::Identity: {
            std::vector<std::pair<int, double>> zeros;
            for (int m : cfg.windows) zeros.emplace_back(m, 0.0);
            rep.uv = classify_partials(zeros, cfg.slope_tol);
            rep.vu = rep.uv;
            rep.comm = rep.uv;
            rep.det = Complex(1.0);
            break;
        }
        case PairFamily::PhaseStep: {
            PhaseStepConfig pc;
            pc.profile = cfg.profile;
            pc.sizes = cfg.windows;
            pc.slope_tol = cfg.slope_tol;
            PhaseStepReport ps = exp_phase_step(pc);
            rep.uv = ps.kitaev_uv;
            rep.vu = ps.kitaev_vu;
            const StepProfile prof = cfg.profile;
            rep.comm = diagonal_partials(cfg.windows, cfg.slope_tol, [prof](long k) {
                const double df =
                    prof.value(static_cast<double>(k)) - prof.value(static_cast<double>(k - 1));
                return std::polar(1.0, kTwoPi * df);
            });
            rep.det = ps.det.value;
            break;
        }
        case PairFamily::DiagShift: {
            DiagShiftConfig dc;
            dc.a = cfg.a;
            dc.b = cfg.b;
            dc.scale = cfg.scale;
            dc.sizes = cfg.windows;
            dc.slope_tol = cfg.slope_tol;
            DiagShiftReport ds = exp_diag_shift(dc);
            rep.uv = ds.kitaev_uv;
            rep.vu = ds.kitaev_vu;
            const Complex a = cfg.a, b = cfg.b;
            const double s = cfg.scale;
            rep.comm = diagonal_partials(cfg.windows, cfg.slope_tol, [a, b, s](long k) {
                auto d = [&](double x) { return 0.5 * (a + b) + 0.5 * (b - a) * std::tanh(x / s); };
                return d(static_cast<double>(k - 1)) / d(static_cast<double>(k));
            });
            rep.det = ds.det.value;
            break;
        }
    }
    rep.implication_ok = !(rep.uv.bounded && rep.vu.bounded) || rep.comm.bounded;
    return rep;
}

} // namespace commdet
