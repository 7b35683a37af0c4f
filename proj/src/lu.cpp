#include "commdet/lu.hpp"

#include "commdet/error.hpp"

#include <cmath>
#include <numeric>
#include <vector>

namespace commdet {

namespace {

struct LuFactors {
    DenseMatrix lu;        // packed L (unit diagonal) and U
    std::vector<int> perm; // row permutation
    int sign = 1;
    bool singular = false;
};

LuFactors lu_factor(const DenseMatrix& a, ExecPolicy policy) {
    const int n = a.dim();
    LuFactors f;
    f.lu = a;
    f.perm.resize(n);
    std::iota(f.perm.begin(), f.perm.end(), 0);

    for (int k = 0; k < n; ++k) {
        int piv = k;
        double best = std::abs(f.lu(k, k));
        for (int i = k + 1; i < n; ++i) {
            double v = std::abs(f.lu(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) {
            f.singular = true;
            continue;
        }
        if (piv != k) {
            for (int j = 0; j < n; ++j) std::swap(f.lu(k, j), f.lu(piv, j));
            std::swap(f.perm[k], f.perm[piv]);
            f.sign = -f.sign;
        }
        const Complex pivval = f.lu(k, k);
        const bool par = policy == ExecPolicy::Parallel && n - k > 96;
#pragma omp parallel for schedule(static) if (par)
        for (int i = k + 1; i < n; ++i) {
            const Complex m = f.lu(i, k) / pivval;
            f.lu(i, k) = m;
            if (m == Complex(0.0, 0.0)) continue;
            Complex* ri = f.lu.row(i);
            const Complex* rk = f.lu.row(k);
            for (int j = k + 1; j < n; ++j) ri[j] -= m * rk[j];
        }
    }
    return f;
}

} // namespace

Complex lu_det(const DenseMatrix& m, ExecPolicy policy) {
    if (m.dim() == 0) return 1.0;
    LuFactors f = lu_factor(m, policy);
    if (f.singular) return 0.0;
    Complex det = static_cast<double>(f.sign);
    for (int i = 0; i < m.dim(); ++i) det *= f.lu(i, i);
    return det;
}

DenseMatrix lu_solve(const DenseMatrix& a, const DenseMatrix& b, ExecPolicy policy) {
    require_same_dim(a, b, "lu_solve");
    const int n = a.dim();
    LuFactors f = lu_factor(a, policy);
    if (f.singular)
        throw Error(ErrorKind::BadArgument, "lu_solve: singular matrix");

    DenseMatrix x(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x(i, j) = b(f.perm[i], j);

    // Forward/back substitution on column slices; each thread owns a
    // contiguous range of right-hand-side columns and sweeps rows with
    // vectorizable segment updates.
    const bool par = policy == ExecPolicy::Parallel && n > 96;
    const int slices = par ? 8 : 1;
#pragma omp parallel for schedule(static) if (par)
    for (int s = 0; s < slices; ++s) {
        const int j0 = static_cast<int>(static_cast<long>(n) * s / slices);
        const int j1 = static_cast<int>(static_cast<long>(n) * (s + 1) / slices);
        if (j0 == j1) continue;
        for (int i = 0; i < n; ++i) {
            Complex* xi = x.row(i);
            for (int k = 0; k < i; ++k) {
                const Complex m = f.lu(i, k);
                if (m == Complex(0.0, 0.0)) continue;
                const Complex* xk = x.row(k);
                for (int j = j0; j < j1; ++j) xi[j] -= m * xk[j];
            }
        }
        for (int i = n - 1; i >= 0; --i) {
            Complex* xi = x.row(i);
            for (int k = i + 1; k < n; ++k) {
                const Complex m = f.lu(i, k);
                if (m == Complex(0.0, 0.0)) continue;
                const Complex* xk = x.row(k);
                for (int j = j0; j < j1; ++j) xi[j] -= m * xk[j];
            }
            const Complex d = f.lu(i, i);
            for (int j = j0; j < j1; ++j) xi[j] /= d;
        }
    }
    return x;
}

DenseMatrix inverse(const DenseMatrix& a, ExecPolicy policy) {
    return lu_solve(a, DenseMatrix::identity(a.dim()), policy);
}

DenseMatrix matrix_power(const DenseMatrix& a, int k) {
    if (k == 0) return DenseMatrix::identity(a.dim());
    DenseMatrix base = k < 0 ? inverse(a) : a;
    int e = k < 0 ? -k : k;
    DenseMatrix acc = DenseMatrix::identity(a.dim());
    while (e > 0) {
        if (e & 1) acc = matmul(acc, base);
        base = matmul(base, base);
        e >>= 1;
    }
    return acc;
}

} // namespace commdet
