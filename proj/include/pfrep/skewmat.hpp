// skewmat.hpp — skew-symmetric matrices of linear forms and their Pfaffians.
//
// The Pfaffian is computed by last-row expansion:
//   Pf(T) = sum_{pos} (-1)^pos * T(active[pos], last) * Pf(T minus both),
// which for the 4x4 case yields t01*t23 - t02*t13 + t03*t12. Sub-Pfaffians are
// plain Pfaffians of the matrix with one row and column deleted, with no
// additional sign.
#pragma once

#include "pfrep/multipoly.hpp"

#include <string>
#include <vector>

namespace pfrep {

class SkewLinearMatrix {
public:
    SkewLinearMatrix(int n, FieldPtr f);

    int size() const { return n_; }
    const FieldPtr& field() const { return f_; }

    const MultiPoly& at(int i, int j) const;
    // stores entry at (i, j) and its negative at (j, i); linear or zero only
    void set(int i, int j, const MultiPoly& entry);

    SkewLinearMatrix deleted(int i) const;
    MultiPoly pfaffian() const;                   // size must be even
    MultiPoly sub_pfaffian(int i) const;          // Pf of deleted(i)
    std::vector<MultiPoly> sub_pfaffians() const; // all of them

    // [[T, L], [-L^T, 0]]: append the forms as a final column (and row)
    static SkewLinearMatrix bordered(const SkewLinearMatrix& T, const std::vector<MultiPoly>& L);

    // entry-wise substitution x = A*y (A is 4x4)
    SkewLinearMatrix substituted(const Mat& A) const;

    std::string str() const;

private:
    int n_;
    FieldPtr f_;
    std::vector<MultiPoly> e_;
    MultiPoly pf_active(std::vector<int> active) const;
};

// the constant c with Pf(M) = c*F and c != 0; throws VerificationFailed if
// there is no such constant
AN pfaffian_constant(const SkewLinearMatrix& M, const MultiPoly& F);

} // namespace pfrep
