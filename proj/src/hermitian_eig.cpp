#include "commdet/hermitian_eig.hpp"

#include "commdet/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace commdet {

namespace {

// One Jacobi rotation for the pivot (p,q), p < q. With phase d = b_pq/|b_pq|
// and the real rotation angle chosen to annihilate the pivot, the combined
// unitary acting on coordinates (p,q) is
//
//     J = [ c        s      ]         (c real, c^2 + s^2 = 1)
//         [ -s e    c e     ],  e = conj(d),
//
// so that J^H B J has zero (p,q) entry. Updates: rows p,q by J^H from the
// left, then columns p,q by J from the right; eigenvectors accumulate V <- VJ.
struct Rotation {
    int p = 0, q = 0;
    double c = 1.0;
    Complex se;  // s * conj(d)
    bool active = false;
};

Rotation make_rotation(const DenseMatrix& b, int p, int q) {
    Rotation r;
    r.p = p;
    r.q = q;
    const Complex bpq = b(p, q);
    const double m = std::abs(bpq);
    if (m == 0.0) return r;
    const double app = b(p, p).real();
    const double aqq = b(q, q).real();
    const Complex d = bpq / m;
    const double zeta = (aqq - app) / (2.0 * m);
    const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::hypot(1.0, zeta));
    r.c = 1.0 / std::sqrt(1.0 + t * t);
    r.se = (t * r.c) * std::conj(d);
    r.active = true;
    return r;
}

// Left update: rows p, q of B by J^H.
inline void apply_rows(DenseMatrix& b, const Rotation& r) {
    const int n = b.dim();
    Complex* rp = b.row(r.p);
    Complex* rq = b.row(r.q);
    const double c = r.c;
    const Complex sce = std::conj(r.se); // s * d
    for (int j = 0; j < n; ++j) {
        const Complex xp = rp[j];
        const Complex xq = rq[j];
        rp[j] = c * xp - sce * xq;
        rq[j] = r.se * xp + c * xq;
    }
}

// Right update: columns p, q of B (or an accumulator) by J.
inline void apply_cols(DenseMatrix& b, const Rotation& r) {
    const int n = b.dim();
    const double c = r.c;
    const Complex se = r.se;
    const Complex sce = std::conj(se);
    for (int i = 0; i < n; ++i) {
        Complex* row = b.row(i);
        const Complex xp = row[r.p];
        const Complex xq = row[r.q];
        row[r.p] = c * xp - se * xq;
        row[r.q] = sce * xp + c * xq;
    }
}

double offdiag_norm(const DenseMatrix& b) {
    const int n = b.dim();
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s += std::norm(b(i, j));
    return std::sqrt(2.0 * s);
}

void serial_sweep(DenseMatrix& b, DenseMatrix& v) {
    const int n = b.dim();
    for (int p = 0; p < n - 1; ++p)
        for (int q = p + 1; q < n; ++q) {
            Rotation r = make_rotation(b, p, q);
            if (!r.active) continue;
            apply_rows(b, r);
            apply_cols(b, r);
            apply_cols(v, r);
        }
}

// Applies every rotation of a round to the columns of b, sweeping rows
// outermost so each row of the row-major storage is touched once,
// contiguously. The pairs are column-disjoint, so the order within a row is
// immaterial for exactness but fixed for determinism.
void apply_cols_round(DenseMatrix& b, const std::vector<Rotation>& rots) {
    const int n = b.dim();
#pragma omp parallel for schedule(static)
    for (int i = 0; i < n; ++i) {
        Complex* row = b.row(i);
        for (const Rotation& r : rots) {
            if (!r.active) continue;
            const Complex xp = row[r.p];
            const Complex xq = row[r.q];
            row[r.p] = r.c * xp - r.se * xq;
            row[r.q] = std::conj(r.se) * xp + r.c * xq;
        }
    }
}

// Round-robin tournament: n slots (one dummy when n is odd), n-1 rounds of
// n/2 disjoint pairs. Rotation parameters are read before any update in the
// round; the row phase touches disjoint row pairs and the column phase
// disjoint column pairs, so each round is order-independent.
void parallel_sweep(DenseMatrix& b, DenseMatrix& v) {
    const int n = b.dim();
    const int slots = (n % 2 == 0) ? n : n + 1;
    std::vector<int> ring(slots);
    std::iota(ring.begin(), ring.end(), 0);

    std::vector<Rotation> rots(slots / 2);
    for (int round = 0; round < slots - 1; ++round) {
        const int pairs = slots / 2;
#pragma omp parallel for schedule(static)
        for (int k = 0; k < pairs; ++k) {
            int p = ring[k];
            int q = ring[slots - 1 - k];
            if (p > q) std::swap(p, q);
            if (q >= n) {
                rots[k].active = false;
                continue;
            }
            rots[k] = make_rotation(b, p, q);
        }
#pragma omp parallel for schedule(static)
        for (int k = 0; k < pairs; ++k)
            if (rots[k].active) apply_rows(b, rots[k]);
        apply_cols_round(b, rots);
        apply_cols_round(v, rots);
        // Advance the tournament: slot 0 fixed, the rest rotate.
        std::rotate(ring.begin() + 1, ring.begin() + 2, ring.end());
    }
}

} // namespace

EigResult hermitian_eig(const DenseMatrix& h, ExecPolicy policy, double herm_tol) {
    const int n = h.dim();
    const double scale = std::max(1.0, h.max_abs());
    double herm_defect = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j)
            herm_defect = std::max(herm_defect, std::abs(h(i, j) - std::conj(h(j, i))));
    if (herm_defect > herm_tol * scale)
        throw Error(ErrorKind::NonHermitian,
                    "hermitian_eig: defect " + std::to_string(herm_defect) + " exceeds tolerance");

    // Work on the exact Hermitian average so rotations stay unitary.
    DenseMatrix b(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) b(i, j) = 0.5 * (h(i, j) + std::conj(h(j, i)));

    DenseMatrix v = DenseMatrix::identity(n);
    const double hnorm = b.frobenius_norm();
    const double target = std::max(hnorm, 1e-300) * 1e-14;

    const int max_sweeps = 60;
    int sweep = 0;
    for (; sweep < max_sweeps; ++sweep) {
        if (offdiag_norm(b) <= target) break;
        if (policy == ExecPolicy::Parallel && n >= 8)
            parallel_sweep(b, v);
        else
            serial_sweep(b, v);
    }
    if (sweep == max_sweeps && offdiag_norm(b) > target * 100.0)
        throw Error(ErrorKind::NoConvergence, "hermitian_eig: Jacobi sweeps did not converge");

    EigResult res;
    res.values.resize(n);
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> diag(n);
    for (int i = 0; i < n; ++i) diag[i] = b(i, i).real();
    std::stable_sort(order.begin(), order.end(),
                     [&](int x, int y) { return diag[x] < diag[y]; });

    res.vectors = DenseMatrix(n);
    for (int k = 0; k < n; ++k) {
        res.values[k] = diag[order[k]];
        for (int i = 0; i < n; ++i) res.vectors(i, k) = v(i, order[k]);
    }
    return res;
}

} // namespace commdet
