// linalg.hpp — dense exact linear algebra over number-field elements.
//
// Everything here is deterministic: row reduction always pivots on the first
// nonzero entry of the first eligible row, so reduced forms, kernel bases and
// particular solutions are reproducible across runs and platforms.
#pragma once

#include "pfrep/numberfield.hpp"

#include <vector>

namespace pfrep {

class Mat {
public:
    Mat() : rows_(0), cols_(0) {}
    Mat(int rows, int cols, const FieldPtr& f);

    static Mat identity(int n, const FieldPtr& f);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    const FieldPtr& field() const { return f_; }

    AN& at(int i, int j) { return a_[static_cast<size_t>(i) * cols_ + j]; }
    const AN& at(int i, int j) const { return a_[static_cast<size_t>(i) * cols_ + j]; }

    Mat transpose() const;
    friend Mat operator*(const Mat& a, const Mat& b);

    // In-place reduced row echelon form; returns pivot column indices.
    std::vector<int> rref();

    int rank() const;
    AN det() const;          // square only
    Mat inverse() const;     // square, throws SingularMatrix if not invertible

    // Kernel basis as matrix columns, from the RREF: one basis vector per free
    // column, with a 1 in the free position (echelon-normalized, deterministic).
    Mat kernel() const;

    // Solve A x = b. Throws InconsistentSystem if no solution; otherwise the
    // particular solution with every free variable set to zero.
    std::vector<AN> solve(const std::vector<AN>& b) const;

private:
    int rows_, cols_;
    FieldPtr f_;
    std::vector<AN> a_;
};

// Scale a vector of extension elements by a single rational so that their
// concatenated coefficient vectors become coprime integers (no-op over the
// rationals, and on the zero vector). Useful wherever a result is only needed
// up to a scalar: it keeps coordinates small without field inversions, whose
// norm denominators would otherwise compound through a computation.
void content_reduce(const FieldPtr& f, std::vector<AN>& v);
// The same for all entries of a matrix jointly.
void content_reduce(Mat& m);

// Determinant by cofactor expansion: division-free, so over an extension the
// result has no spurious norm denominators. Intended for tiny matrices.
AN det_by_cofactors(const Mat& m);

} // namespace pfrep
