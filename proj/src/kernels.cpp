#include "commdet/kernels.hpp"

#include "commdet/error.hpp"

namespace commdet {

namespace {
ExecPolicy g_default_policy = ExecPolicy::Parallel;
}

ExecPolicy default_policy() { return g_default_policy; }
void set_default_policy(ExecPolicy p) { g_default_policy = p; }

namespace {

// c_row += s * b_row; the hot inner loop of the i-k-j product.
inline void axpy_row(Complex s, const Complex* b, Complex* c, int n) {
    if (s == Complex(0.0, 0.0)) return;
    for (int j = 0; j < n; ++j) c[j] += s * b[j];
}

void matmul_rows(const DenseMatrix& a, const DenseMatrix& b, DenseMatrix& c, int i) {
    const int n = a.dim();
    Complex* crow = c.row(i);
    const Complex* arow = a.row(i);
    for (int k = 0; k < n; ++k) axpy_row(arow[k], b.row(k), crow, n);
}

} // namespace

DenseMatrix matmul(const DenseMatrix& a, const DenseMatrix& b, ExecPolicy policy) {
    require_same_dim(a, b, "matmul");
    const int n = a.dim();
    DenseMatrix c(n);
    // One loop body for both policies: the if clause only toggles threading,
    // so serial and parallel runs execute identical code per row.
    const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(static) if (par)
    for (int i = 0; i < n; ++i) matmul_rows(a, b, c, i);
    return c;
}

DenseMatrix projector_from_columns(const DenseMatrix& v, const std::vector<int>& columns,
                                   ExecPolicy policy) {
    const int n = v.dim();
    for (int k : columns)
        if (k < 0 || k >= n)
            throw Error(ErrorKind::PositionOutOfRange, "projector_from_columns: bad column");
    const int m = static_cast<int>(columns.size());

    // Gather the selected columns into contiguous rows: buf[i] holds
    // (v(i, k_0), ..., v(i, k_{m-1})), so P(i,j) is a contiguous dot product.
    std::vector<Complex> buf(static_cast<size_t>(n) * m);
    for (int i = 0; i < n; ++i)
        for (int kk = 0; kk < m; ++kk)
            buf[static_cast<size_t>(i) * m + kk] = v(i, columns[kk]);

    DenseMatrix p(n);
    const bool par = policy == ExecPolicy::Parallel;
#pragma omp parallel for schedule(dynamic, 16) if (par)
    for (int i = 0; i < n; ++i) {
        const Complex* bi = buf.data() + static_cast<size_t>(i) * m;
        for (int j = i; j < n; ++j) {
            const Complex* bj = buf.data() + static_cast<size_t>(j) * m;
            Complex acc = 0.0;
            for (int kk = 0; kk < m; ++kk) acc += bi[kk] * std::conj(bj[kk]);
            p(i, j) = acc;
        }
    }
    // Hermitian mirror; reads the finished upper triangle only.
#pragma omp parallel for schedule(static) if (par)
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) p(i, j) = std::conj(p(j, i));
    return p;
}

} // namespace commdet
