// skewmat.cpp — see skewmat.hpp.
#include "pfrep/skewmat.hpp"

#include <sstream>

namespace pfrep {

SkewLinearMatrix::SkewLinearMatrix(int n, FieldPtr f)
    : n_(n), f_(std::move(f)), e_(static_cast<size_t>(n) * n, MultiPoly(f_)) {
    if (n < 1) fail(errc::wrong_size, "skew matrix needs a positive size");
}

const MultiPoly& SkewLinearMatrix::at(int i, int j) const {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) fail(errc::wrong_size, "index out of range");
    return e_[static_cast<size_t>(i) * n_ + j];
}

void SkewLinearMatrix::set(int i, int j, const MultiPoly& entry) {
    if (i < 0 || j < 0 || i >= n_ || j >= n_) fail(errc::wrong_size, "index out of range");
    if (i == j && !entry.is_zero()) fail(errc::not_skew, "diagonal entries must be zero");
    if (!entry.is_zero() && !entry.is_homogeneous(1))
        fail(errc::not_skew, "entries must be linear forms: " + entry.str());
    e_[static_cast<size_t>(i) * n_ + j] = entry;
    if (i != j) e_[static_cast<size_t>(j) * n_ + i] = -entry;
}

SkewLinearMatrix SkewLinearMatrix::deleted(int k) const {
    if (k < 0 || k >= n_) fail(errc::wrong_size, "index out of range");
    SkewLinearMatrix d(n_ - 1, f_);
    for (int i = 0, di = 0; i < n_; ++i) {
        if (i == k) continue;
        for (int j = 0, dj = 0; j < n_; ++j) {
            if (j == k) continue;
            d.e_[static_cast<size_t>(di) * d.n_ + dj] = at(i, j);
            ++dj;
        }
        ++di;
    }
    return d;
}

MultiPoly SkewLinearMatrix::pf_active(std::vector<int> active) const {
    if (active.empty()) return MultiPoly::constant(AN::one(f_));
    int last = active.back();
    active.pop_back();
    MultiPoly acc(f_);
    for (size_t pos = 0; pos < active.size(); ++pos) {
        const MultiPoly& entry = at(active[pos], last);
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        for (size_t t = 0; t < active.size(); ++t)
            if (t != pos) rest.push_back(active[t]);
        MultiPoly term = entry * pf_active(std::move(rest));
        if (pos % 2 == 0)
            acc += term;
        else
            acc -= term;
    }
    return acc;
}

MultiPoly SkewLinearMatrix::pfaffian() const {
    if (n_ % 2 != 0) fail(errc::odd_size, "Pfaffian of an odd-sized matrix");
    std::vector<int> active(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) active[static_cast<size_t>(i)] = i;
    return pf_active(std::move(active));
}

MultiPoly SkewLinearMatrix::sub_pfaffian(int i) const { return deleted(i).pfaffian(); }

std::vector<MultiPoly> SkewLinearMatrix::sub_pfaffians() const {
    std::vector<MultiPoly> v;
    v.reserve(static_cast<size_t>(n_));
    for (int i = 0; i < n_; ++i) v.push_back(sub_pfaffian(i));
    return v;
}

SkewLinearMatrix SkewLinearMatrix::bordered(const SkewLinearMatrix& T,
                                            const std::vector<MultiPoly>& L) {
    if (static_cast<int>(L.size()) != T.n_)
        fail(errc::wrong_size, "border needs one form per existing row");
    FieldPtr f = T.f_;
    for (const MultiPoly& l : L)
        if (!l.field()->is_rational() && f->is_rational()) f = l.field();
    SkewLinearMatrix M(T.n_ + 1, f);
    for (int i = 0; i < T.n_; ++i)
        for (int j = i + 1; j < T.n_; ++j) M.set(i, j, T.at(i, j) + MultiPoly(f));
    for (int i = 0; i < T.n_; ++i) M.set(i, T.n_, L[static_cast<size_t>(i)] + MultiPoly(f));
    return M;
}

SkewLinearMatrix SkewLinearMatrix::substituted(const Mat& A) const {
    if (A.rows() != 4 || A.cols() != 4)
        fail(errc::wrong_size, "entry substitution needs a 4x4 matrix");
    FieldPtr f = f_->is_rational() ? A.field() : f_;
    SkewLinearMatrix r(n_, f);
    for (int i = 0; i < n_; ++i)
        for (int j = i + 1; j < n_; ++j)
            if (!at(i, j).is_zero()) r.set(i, j, at(i, j).substituted(A));
    return r;
}

std::string SkewLinearMatrix::str() const {
    std::ostringstream os;
    for (int i = 0; i < n_; ++i) {
        os << "[ ";
        for (int j = 0; j < n_; ++j) {
            if (j) os << " | ";
            os << at(i, j).str();
        }
        os << " ]\n";
    }
    return os.str();
}

AN pfaffian_constant(const SkewLinearMatrix& M, const MultiPoly& F) {
    if (F.is_zero()) fail(errc::zero_form, "cannot match the zero form");
    MultiPoly P = M.pfaffian();
    if (P.is_zero()) fail(errc::verification_failed, "Pfaffian vanishes identically");
    const Expo& lead = F.terms().begin()->first;
    AN c = P.coeff(lead) / F.coeff(lead);
    if (c.is_zero())
        fail(errc::verification_failed, "Pfaffian misses the leading term of the form");
    if (P != F.scaled(c))
        fail(errc::verification_failed, "Pfaffian is not a constant multiple of the form");
    return c;
}

} // namespace pfrep
