// linalg.cpp — see linalg.hpp.
#include "pfrep/linalg.hpp"

namespace pfrep {

Mat::Mat(int rows, int cols, const FieldPtr& f)
    : rows_(rows), cols_(cols), f_(f),
      a_(static_cast<size_t>(rows) * cols, AN::zero(f)) {}

Mat Mat::identity(int n, const FieldPtr& f) {
    Mat m(n, n, f);
    for (int i = 0; i < n; ++i) m.at(i, i) = AN::one(f);
    return m;
}

Mat Mat::transpose() const {
    Mat t(cols_, rows_, f_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

Mat operator*(const Mat& a, const Mat& b) {
    if (a.cols_ != b.rows_) fail(errc::wrong_size, "matrix product shape mismatch");
    Mat c(a.rows_, b.cols_, a.f_);
    for (int i = 0; i < a.rows_; ++i)
        for (int k = 0; k < a.cols_; ++k) {
            const AN& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (int j = 0; j < b.cols_; ++j) {
                const AN& bkj = b.at(k, j);
                if (bkj.is_zero()) continue;
                c.at(i, j) += aik * bkj;
            }
        }
    return c;
}

std::vector<int> Mat::rref() {
    std::vector<int> pivots;
    int r = 0;
    for (int c = 0; c < cols_ && r < rows_; ++c) {
        int p = -1;
        for (int i = r; i < rows_; ++i)
            if (!at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) continue;
        if (p != r)
            for (int j = 0; j < cols_; ++j) std::swap(at(p, j), at(r, j));
        AN inv = at(r, c).inverse();
        for (int j = c; j < cols_; ++j) at(r, j) *= inv;
        for (int i = 0; i < rows_; ++i) {
            if (i == r || at(i, c).is_zero()) continue;
            AN f = at(i, c);
            for (int j = c; j < cols_; ++j) at(i, j) -= f * at(r, j);
        }
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

int Mat::rank() const {
    Mat m = *this;
    return static_cast<int>(m.rref().size());
}

AN Mat::det() const {
    if (rows_ != cols_) fail(errc::wrong_size, "determinant of non-square matrix");
    Mat m = *this;
    AN d = AN::one(f_);
    for (int c = 0; c < cols_; ++c) {
        int p = -1;
        for (int i = c; i < rows_; ++i)
            if (!m.at(i, c).is_zero()) {
                p = i;
                break;
            }
        if (p < 0) return AN::zero(f_);
        if (p != c) {
            for (int j = 0; j < cols_; ++j) std::swap(m.at(p, j), m.at(c, j));
            d = -d;
        }
        d *= m.at(c, c);
        AN inv = m.at(c, c).inverse();
        for (int i = c + 1; i < rows_; ++i) {
            if (m.at(i, c).is_zero()) continue;
            AN f = m.at(i, c) * inv;
            for (int j = c; j < cols_; ++j) m.at(i, j) -= f * m.at(c, j);
        }
    }
    return d;
}

Mat Mat::inverse() const {
    if (rows_ != cols_) fail(errc::wrong_size, "inverse of non-square matrix");
    Mat aug(rows_, 2 * cols_, f_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_ + i) = AN::one(f_);
    }
    auto piv = aug.rref();
    if (static_cast<int>(piv.size()) < rows_)
        fail(errc::singular_matrix, "matrix is singular");
    Mat inv(rows_, cols_, f_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) inv.at(i, j) = aug.at(i, cols_ + j);
    return inv;
}

Mat Mat::kernel() const {
    Mat m = *this;
    auto piv = m.rref();
    std::vector<int> free_cols;
    {
        size_t k = 0;
        for (int c = 0; c < cols_; ++c) {
            if (k < piv.size() && piv[k] == c)
                ++k;
            else
                free_cols.push_back(c);
        }
    }
    Mat ker(cols_, static_cast<int>(free_cols.size()), f_);
    for (int v = 0; v < static_cast<int>(free_cols.size()); ++v) {
        int fc = free_cols[v];
        ker.at(fc, v) = AN::one(f_);
        for (int r = 0; r < static_cast<int>(piv.size()); ++r)
            ker.at(piv[r], v) = -m.at(r, fc);
    }
    return ker;
}

void content_reduce(const FieldPtr& f, std::vector<AN>& v) {
    if (f->is_rational()) return;
    std::vector<Rat> all;
    for (const AN& a : v)
        for (const Rat& r : a.coeffs()) all.push_back(r);
    Int den = common_denominator(all);
    std::vector<Int> z;
    for (Rat r : all) {
        r *= Rat(den);
        z.push_back(r.get_num());
    }
    Int content = integer_content(z);
    if (content == 0) return;
    AN scale = AN::of(f, Rat(den) / Rat(content));
    for (AN& a : v) a *= scale;
}

void content_reduce(Mat& m) {
    std::vector<AN> v;
    v.reserve(static_cast<size_t>(m.rows()) * static_cast<size_t>(m.cols()));
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) v.push_back(m.at(i, j));
    content_reduce(m.field(), v);
    size_t k = 0;
    for (int i = 0; i < m.rows(); ++i)
        for (int j = 0; j < m.cols(); ++j) m.at(i, j) = v[k++];
}

namespace {

AN det_minor(const Mat& m, const std::vector<int>& rows, const std::vector<int>& cols) {
    size_t n = rows.size();
    if (n == 1) return m.at(rows[0], cols[0]);
    AN sum = AN::zero(m.field());
    std::vector<int> sub_rows(rows.begin() + 1, rows.end());
    for (size_t k = 0; k < n; ++k) {
        const AN& a = m.at(rows[0], cols[k]);
        if (a.is_zero()) continue;
        std::vector<int> sub_cols;
        for (size_t j = 0; j < n; ++j)
            if (j != k) sub_cols.push_back(cols[j]);
        AN term = a * det_minor(m, sub_rows, sub_cols);
        if (k % 2 == 0)
            sum += term;
        else
            sum -= term;
    }
    return sum;
}

} // namespace

AN det_by_cofactors(const Mat& m) {
    if (m.rows() != m.cols()) fail(errc::wrong_size, "determinant of non-square matrix");
    if (m.rows() == 0) return AN::one(m.field());
    std::vector<int> idx;
    for (int i = 0; i < m.rows(); ++i) idx.push_back(i);
    return det_minor(m, idx, idx);
}

std::vector<AN> Mat::solve(const std::vector<AN>& b) const {
    if (static_cast<int>(b.size()) != rows_)
        fail(errc::wrong_size, "right-hand side length does not match row count");
    Mat aug(rows_, cols_ + 1, f_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) aug.at(i, j) = at(i, j);
        aug.at(i, cols_) = b[i];
    }
    auto piv = aug.rref();
    if (!piv.empty() && piv.back() == cols_)
        fail(errc::inconsistent_system, "linear system has no solution");
    std::vector<AN> x(cols_, AN::zero(f_));
    for (int r = 0; r < static_cast<int>(piv.size()); ++r) x[piv[r]] = aug.at(r, cols_);
    return x;
}

} // namespace pfrep
