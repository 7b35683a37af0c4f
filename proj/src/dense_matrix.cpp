#include "commdet/dense_matrix.hpp"

#include "commdet/error.hpp"

#include <cmath>

namespace commdet {

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n);
    for (int i = 0; i < n; ++i) m(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::diagonal(const std::vector<Complex>& d) {
    DenseMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.dim(); ++i) m(i, i) = d[i];
    m.check_finite();
    return m;
}

DenseMatrix DenseMatrix::from_rows(int n, std::vector<Complex> data) {
    if (static_cast<size_t>(n) * n != data.size())
        throw Error(ErrorKind::DimensionMismatch, "from_rows: data size is not n*n");
    DenseMatrix m;
    m.n_ = n;
    m.a_ = std::move(data);
    m.check_finite();
    return m;
}

DenseMatrix DenseMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    int n = static_cast<int>(rows.size());
    std::vector<Complex> data;
    data.reserve(static_cast<size_t>(n) * n);
    for (const auto& r : rows) {
        if (static_cast<int>(r.size()) != n)
            throw Error(ErrorKind::DimensionMismatch, "from_rows: ragged rows");
        data.insert(data.end(), r.begin(), r.end());
    }
    return from_rows(n, std::move(data));
}

DenseMatrix DenseMatrix::adjoint() const {
    DenseMatrix r(n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) r(j, i) = std::conj((*this)(i, j));
    return r;
}

Complex DenseMatrix::trace() const {
    Complex t = 0.0;
    for (int i = 0; i < n_; ++i) t += (*this)(i, i);
    return t;
}

double DenseMatrix::max_abs() const {
    double m = 0.0;
    for (const auto& z : a_) m = std::max(m, std::abs(z));
    return m;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (const auto& z : a_) s += std::norm(z);
    return std::sqrt(s);
}

double DenseMatrix::one_norm() const {
    double best = 0.0;
    for (int j = 0; j < n_; ++j) {
        double s = 0.0;
        for (int i = 0; i < n_; ++i) s += std::abs((*this)(i, j));
        best = std::max(best, s);
    }
    return best;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& rhs) {
    require_same_dim(*this, rhs, "operator+=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] += rhs.a_[k];
    return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& rhs) {
    require_same_dim(*this, rhs, "operator-=");
    for (size_t k = 0; k < a_.size(); ++k) a_[k] -= rhs.a_[k];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(Complex s) {
    for (auto& z : a_) z *= s;
    return *this;
}

DenseMatrix DenseMatrix::restricted(const std::vector<int>& indices) const {
    const int m = static_cast<int>(indices.size());
    DenseMatrix r(m);
    for (int i = 0; i < m; ++i) {
        if (indices[i] < 0 || indices[i] >= n_)
            throw Error(ErrorKind::PositionOutOfRange, "restricted: index out of range");
        for (int j = 0; j < m; ++j) r(i, j) = (*this)(indices[i], indices[j]);
    }
    return r;
}

DenseMatrix DenseMatrix::leading_block(int m) const {
    if (m < 0 || m > n_)
        throw Error(ErrorKind::PositionOutOfRange, "leading_block: size out of range");
    DenseMatrix r(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) r(i, j) = (*this)(i, j);
    return r;
}

void DenseMatrix::check_finite() const {
    for (const auto& z : a_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw Error(ErrorKind::NonFinite, "matrix contains a non-finite entry");
    }
}

void require_same_dim(const DenseMatrix& a, const DenseMatrix& b, const char* where) {
    if (a.dim() != b.dim())
        throw Error(ErrorKind::DimensionMismatch,
                    std::string(where) + ": dimensions " + std::to_string(a.dim()) + " vs " +
                        std::to_string(b.dim()));
}

} // namespace commdet
