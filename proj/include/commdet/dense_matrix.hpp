#pragma once

#include <complex>
#include <initializer_list>
#include <vector>

namespace commdet {

using Complex = std::complex<double>;

/// Square complex matrix, row-major, value semantics. The numeric kernels in
/// kernels.hpp / hermitian_eig.hpp operate on this type; entries must stay
/// finite (check_finite throws on NaN/Inf).
class DenseMatrix {
public:
    DenseMatrix() = default;
    explicit DenseMatrix(int n) : n_(n), a_(static_cast<size_t>(n) * n) {}

    static DenseMatrix identity(int n);
    static DenseMatrix diagonal(const std::vector<Complex>& d);
    /// Builds from row-major data; validates squareness and finiteness.
    static DenseMatrix from_rows(int n, std::vector<Complex> data);
    static DenseMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);

    int dim() const { return n_; }
    bool empty() const { return n_ == 0; }

    Complex& operator()(int i, int j) { return a_[static_cast<size_t>(i) * n_ + j]; }
    const Complex& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * n_ + j]; }

    Complex* row(int i) { return a_.data() + static_cast<size_t>(i) * n_; }
    const Complex* row(int i) const { return a_.data() + static_cast<size_t>(i) * n_; }

    const std::vector<Complex>& data() const { return a_; }

    DenseMatrix adjoint() const;
    Complex trace() const;
    double max_abs() const;
    double frobenius_norm() const;
    double one_norm() const; // max column sum of |entries|

    DenseMatrix& operator+=(const DenseMatrix& rhs);
    DenseMatrix& operator-=(const DenseMatrix& rhs);
    DenseMatrix& operator*=(Complex s);
    friend DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
    friend DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
    friend DenseMatrix operator*(DenseMatrix a, Complex s) { return a *= s; }
    friend DenseMatrix operator*(Complex s, DenseMatrix a) { return a *= s; }

    /// Principal sub-block on the given (sorted) index set.
    DenseMatrix restricted(const std::vector<int>& indices) const;
    /// Leading principal m x m block.
    DenseMatrix leading_block(int m) const;

    /// Throws Error(NonFinite) when any entry is NaN or Inf.
    void check_finite() const;

private:
    int n_ = 0;
    std::vector<Complex> a_;
};

void require_same_dim(const DenseMatrix& a, const DenseMatrix& b, const char* where);

} // namespace commdet
