#pragma once

#include "commdet/dense_matrix.hpp"
#include "commdet/kernels.hpp"

#include <vector>

namespace commdet {

/// Declared behavior of a semi-infinite operator outside its stored window.
struct Tail {
    enum class Kind { Identity, DiagonalWithLimit, Zero };
    Kind kind = Kind::Identity;
    Complex lo_limit = 1.0; // diagonal limit towards -infinity
    Complex hi_limit = 1.0; // towards +infinity

    static Tail identity() { return Tail{}; }
    static Tail diagonal_with_limit(Complex lo, Complex hi) {
        return Tail{Kind::DiagonalWithLimit, lo, hi};
    }
    static Tail zero() { return Tail{Kind::Zero, 0.0, 0.0}; }
};

/// A semi-infinite (or bilateral) operator described by a finite dense block
/// on a set of lattice indices plus a declared tail. `tail_bound` is a bound
/// on the trace norm of the part of (op - tail extension) outside the window,
/// as certified by whoever built the operator.
class WindowedOperator {
public:
    WindowedOperator(std::vector<long> window, DenseMatrix block, Tail tail, double tail_bound);

    /// Convenience for a contiguous 1D interval [lo, hi].
    static WindowedOperator interval(long lo, long hi, DenseMatrix block, Tail tail,
                                     double tail_bound);

    const std::vector<long>& window() const { return window_; }
    const DenseMatrix& block() const { return block_; }
    const Tail& tail() const { return tail_; }
    double tail_bound() const { return tail_bound_; }

    /// Positions (into the block) of the m window indices closest to lattice
    /// index 0; the centered finite sections used by the det/trace schedules.
    std::vector<int> central_positions(int m) const;

private:
    std::vector<long> window_;
    DenseMatrix block_;
    Tail tail_;
    double tail_bound_ = 0.0;
};

struct DetEstimate {
    Complex value = 0.0;
    std::vector<std::pair<int, Complex>> window_sequence; // (window size, partial value)
    bool converged = false;
    double cauchy_gap = 0.0; // max |delta| over the final three refinements
};

/// Finite-section Fredholm determinant over the given window-size schedule.
/// Requires a determinant-class declaration: identity tail, or diagonal tail
/// with both limits equal to 1 (otherwise Error(NotDeterminantClass)).
/// A non-Cauchy sequence is reported via converged=false, not an error.
DetEstimate fredholm_det(const WindowedOperator& op, const std::vector<int>& schedule,
                         double tol, ExecPolicy policy);
inline DetEstimate fredholm_det(const WindowedOperator& op, const std::vector<int>& schedule,
                                double tol) {
    return fredholm_det(op, schedule, tol, default_policy());
}

/// Singular-value partial sums of centered finite sections: the empirical
/// trace-class diagnostic.
std::vector<double> trace_norm_partials(const WindowedOperator& op,
                                        const std::vector<int>& sizes, ExecPolicy policy);
inline std::vector<double> trace_norm_partials(const WindowedOperator& op,
                                               const std::vector<int>& sizes) {
    return trace_norm_partials(op, sizes, default_policy());
}

/// Same for a plain matrix restricted to explicit index windows.
std::vector<double> trace_norm_partials(const DenseMatrix& t,
                                        const std::vector<std::vector<int>>& windows,
                                        ExecPolicy policy);

} // namespace commdet
