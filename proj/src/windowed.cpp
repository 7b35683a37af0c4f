#include "commdet/windowed.hpp"

#include "commdet/error.hpp"
#include "commdet/lu.hpp"
#include "commdet/singular_values.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace commdet {

WindowedOperator::WindowedOperator(std::vector<long> window, DenseMatrix block, Tail tail,
                                   double tail_bound)
    : window_(std::move(window)), block_(std::move(block)), tail_(tail),
      tail_bound_(tail_bound) {
    if (static_cast<int>(window_.size()) != block_.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    "WindowedOperator: window size != block dimension");
    if (tail_bound_ < 0.0)
        throw Error(ErrorKind::BadArgument, "WindowedOperator: negative tail bound");
    block_.check_finite();
}

WindowedOperator WindowedOperator::interval(long lo, long hi, DenseMatrix block, Tail tail,
                                            double tail_bound) {
    if (hi < lo) throw Error(ErrorKind::BadArgument, "WindowedOperator: empty interval");
    std::vector<long> idx(static_cast<size_t>(hi - lo + 1));
    std::iota(idx.begin(), idx.end(), lo);
    return WindowedOperator(std::move(idx), std::move(block), tail, tail_bound);
}

std::vector<int> WindowedOperator::central_positions(int m) const {
    if (m < 0 || m > static_cast<int>(window_.size()))
        throw Error(ErrorKind::BadArgument,
                    "central_positions: requested window " + std::to_string(m) +
                        " exceeds stored block of " + std::to_string(window_.size()));
    std::vector<int> pos(window_.size());
    std::iota(pos.begin(), pos.end(), 0);
    std::stable_sort(pos.begin(), pos.end(), [&](int a, int b) {
        long da = std::labs(window_[a]), db = std::labs(window_[b]);
        if (da != db) return da < db;
        return window_[a] < window_[b];
    });
    pos.resize(m);
    std::sort(pos.begin(), pos.end());
    return pos;
}

DetEstimate fredholm_det(const WindowedOperator& op, const std::vector<int>& schedule,
                         double tol, ExecPolicy policy) {
    const Tail& tail = op.tail();
    const bool det_class =
        tail.kind == Tail::Kind::Identity ||
        (tail.kind == Tail::Kind::DiagonalWithLimit && std::abs(tail.lo_limit - 1.0) <= 1e-9 &&
         std::abs(tail.hi_limit - 1.0) <= 1e-9);
    if (!det_class)
        throw Error(ErrorKind::NotDeterminantClass,
                    "fredholm_det: tail declaration is not 1 + trace class");
    if (schedule.empty())
        throw Error(ErrorKind::BadArgument, "fredholm_det: empty schedule");

    DetEstimate est;
    for (int m : schedule) {
        DenseMatrix section = op.block().restricted(op.central_positions(m));
        est.window_sequence.emplace_back(m, lu_det(section, policy));
    }
    est.value = est.window_sequence.back().second;

    const int deltas = static_cast<int>(est.window_sequence.size()) - 1;
    double gap = 0.0;
    for (int k = std::max(0, deltas - 3); k < deltas; ++k)
        gap = std::max(gap, std::abs(est.window_sequence[k + 1].second -
                                     est.window_sequence[k].second));
    est.cauchy_gap = gap;
    est.converged = gap < tol;
    return est;
}

std::vector<double> trace_norm_partials(const WindowedOperator& op, const std::vector<int>& sizes,
                                        ExecPolicy policy) {
    std::vector<double> out;
    out.reserve(sizes.size());
    for (int m : sizes) {
        DenseMatrix section = op.block().restricted(op.central_positions(m));
        out.push_back(trace_norm(section, policy));
    }
    return out;
}

std::vector<double> trace_norm_partials(const DenseMatrix& t,
                                        const std::vector<std::vector<int>>& windows,
                                        ExecPolicy policy) {
    std::vector<double> out;
    out.reserve(windows.size());
    for (const auto& w : windows) out.push_back(trace_norm(t.restricted(w), policy));
    return out;
}

} // namespace commdet
