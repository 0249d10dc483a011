#include "pfrep/points.hpp"

#include "pfrep/errors.hpp"
#include "pfrep/extension.hpp"
#include "pfrep/factor.hpp"
#include "pfrep/quadform.hpp"
#include "pfrep/ternary.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <utility>

namespace pfrep {

TupleEnumerator::TupleEnumerator(int n)
    : n_(n), h_(1), cur_(static_cast<size_t>(n), -1), fresh_(true) {
    if (n < 1) fail(errc::wrong_size, "tuple enumeration needs at least one slot");
}

bool TupleEnumerator::advance() {
    int i = n_ - 1;
    while (i >= 0 && cur_[static_cast<size_t>(i)] == h_) {
        cur_[static_cast<size_t>(i)] = -h_;
        --i;
    }
    if (i < 0) return false;
    ++cur_[static_cast<size_t>(i)];
    return true;
}

std::vector<Int> TupleEnumerator::next() {
    for (;;) {
        if (fresh_) {
            fresh_ = false;
        } else if (!advance()) {
            ++h_;
            std::fill(cur_.begin(), cur_.end(), -h_);
        }
        long maxabs = 0, g = 0, first = 0;
        bool seen = false;
        for (long v : cur_) {
            maxabs = std::max(maxabs, std::labs(v));
            g = std::gcd(g, std::labs(v));
            if (!seen && v != 0) {
                first = v;
                seen = true;
            }
        }
        if (maxabs != h_ || g != 1 || first <= 0) continue;
        std::vector<Int> out;
        out.reserve(cur_.size());
        for (long v : cur_) out.emplace_back(v);
        return out;
    }
}

bool is_singular_point(const MultiPoly& F, const ProjPoint& p) {
    for (const AN& d : gradient(F, p.coords()))
        if (!d.is_zero()) return false;
    return true;
}

bool is_t_point(const MultiPoly& F, const ProjPoint& p) {
    std::vector<AN> grad = gradient(F, p.coords());
    bool smooth = false;
    for (const AN& d : grad)
        if (!d.is_zero()) smooth = true;
    if (!smooth) fail(errc::singular_point, "the T-point test needs a smooth surface point");
    content_reduce(field_of(grad), grad); // the plane only matters up to scale
    PlaneSection sec = restrict_to_plane(F, grad);
    if (sec.poly.is_zero()) return true; // tangent plane contained in the surface
    return totally_reducible3(sec.poly);
}

CandidateQueue::CandidateQueue(std::vector<ProjPoint> injected)
    : injected_(std::move(injected)) {}

const ProjPoint* CandidateQueue::peek() const {
    if (!injected_) fail(errc::internal, "peek is only meaningful for injected candidates");
    if (next_ >= injected_->size()) return nullptr;
    return &(*injected_)[next_];
}

void CandidateQueue::consume() {
    if (!injected_ || next_ >= injected_->size())
        fail(errc::internal, "no injected candidate to consume");
    ++next_;
}

const char* verdict_name(Verdict v) {
    switch (v) {
        case Verdict::accepted: return "accepted";
        case Verdict::same_direction: return "same-direction";
        case Verdict::polar_vanishes: return "polar-vanishes";
        case Verdict::back_to_start: return "back-to-start";
        case Verdict::singular_point: return "singular-point";
        case Verdict::t_point: return "t-point";
        case Verdict::dependent_points: return "dependent-points";
        case Verdict::tangent_forbidden: return "tangent-forbidden";
        case Verdict::plane_skipped: return "plane-skipped";
    }
    return "unknown";
}

namespace {

void record(SearchLog* log, int plane_index, const std::vector<AN>& plane,
            std::optional<ProjPoint> candidate, Verdict verdict,
            std::optional<ProjPoint> result) {
    if (!log) return;
    log->events.push_back({plane_index, plane, std::move(candidate), verdict, std::move(result)});
}

AN dot(const std::vector<AN>& a, const std::vector<AN>& b) {
    AN s = a.at(0) * b.at(0);
    for (size_t i = 1; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// column combination B * u with integer weights
std::vector<AN> combo(const Mat& B, const std::vector<Int>& u) {
    std::vector<AN> out(static_cast<size_t>(B.rows()), AN::zero(B.field()));
    for (int r = 0; r < B.rows(); ++r)
        for (int c = 0; c < B.cols(); ++c)
            out[static_cast<size_t>(r)] += B.at(r, c) * AN::of(B.field(), Rat(u[static_cast<size_t>(c)]));
    return out;
}

// columns spanning { x : v.x = 0 } for a single coefficient vector v
Mat kernel_of_row(const FieldPtr& f, const std::vector<AN>& v) {
    Mat row(1, static_cast<int>(v.size()), f);
    for (size_t j = 0; j < v.size(); ++j) row.at(0, static_cast<int>(j)) = v[j];
    Mat ker = row.kernel();
    if (!f->is_rational()) {
        for (int c = 0; c < ker.cols(); ++c) {
            std::vector<AN> col;
            for (int r = 0; r < ker.rows(); ++r) col.push_back(ker.at(r, c));
            content_reduce(f, col);
            for (int r = 0; r < ker.rows(); ++r) ker.at(r, c) = col[static_cast<size_t>(r)];
        }
    }
    return ker;
}

Int dot_int(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

// round a rational to the nearest integer (ties toward +infinity)
Int nearest_int(const Rat& x) {
    Int q;
    Int num = x.get_num() * 2 + x.get_den();
    Int den = x.get_den() * 2;
    mpz_fdiv_q(q.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
    return q;
}

// Lattice basis reduction (LLL with exact rational arithmetic, delta = 3/4).
// Deterministic; terminates by the standard potential argument. The basis
// vectors are replaced by a reduced basis of the same lattice, roughly
// balancing the entry sizes, which is what makes drawing small plane points
// over an extension field possible at all.
void lll_reduce(std::vector<std::vector<Int>>& b) {
    const size_t n = b.size();
    if (n < 2) return;
    std::vector<std::vector<Rat>> mu(n, std::vector<Rat>(n, Rat(0)));
    std::vector<Rat> B(n, Rat(0)); // squared lengths of the Gram-Schmidt vectors

    // Gram-Schmidt data via the recurrence d_ij = <b_i,b_j> - sum_{l<j} mu_jl*d_il,
    // where d_ij = <b_i, b*_j>, mu_ij = d_ij / B_j and B_i = d_ii.
    std::vector<std::vector<Rat>> d(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; ++i) {
        for (size_t j = 0; j <= i; ++j) {
            Rat v(dot_int(b[i], b[j]));
            for (size_t l = 0; l < j; ++l) v -= mu[j][l] * d[i][l];
            d[i][j] = v;
            if (j < i) {
                if (B[j] == 0) fail(errc::internal, "lattice basis is degenerate");
                mu[i][j] = v / B[j];
            } else {
                B[i] = v;
            }
        }
    }

    const Rat half(1, 2);
    auto size_reduce = [&](size_t k, size_t l) {
        if (abs(mu[k][l]) <= half) return;
        Int q = nearest_int(mu[k][l]);
        for (size_t t = 0; t < b[k].size(); ++t) b[k][t] -= q * b[l][t];
        for (size_t j = 0; j < l; ++j) mu[k][j] -= Rat(q) * mu[l][j];
        mu[k][l] -= Rat(q);
    };

    size_t k = 1;
    long guard = 0;
    const long guard_max = 100000;
    while (k < n) {
        if (++guard > guard_max) fail(errc::internal, "lattice reduction failed to converge");
        size_reduce(k, k - 1);
        Rat lhs = B[k];
        Rat rhs = (Rat(3, 4) - mu[k][k - 1] * mu[k][k - 1]) * B[k - 1];
        if (lhs < rhs) {
            // swap b_k and b_{k-1}, updating the Gram-Schmidt data in place
            Rat m = mu[k][k - 1];
            Rat Bnew = B[k] + m * m * B[k - 1];
            mu[k][k - 1] = m * B[k - 1] / Bnew;
            B[k] = B[k - 1] * B[k] / Bnew;
            B[k - 1] = Bnew;
            std::swap(b[k], b[k - 1]);
            for (size_t j = 0; j + 1 < k; ++j) std::swap(mu[k][j], mu[k - 1][j]);
            for (size_t i = k + 1; i < n; ++i) {
                Rat t = mu[i][k];
                mu[i][k] = mu[i][k - 1] - m * t;
                mu[i][k - 1] = t + mu[k][k - 1] * mu[i][k];
            }
            k = (k > 1) ? k - 1 : 1;
        } else {
            for (size_t l = k - 1; l-- > 0;) size_reduce(k, l);
            ++k;
        }
    }
}

// True when v is a field multiple of w (both nonzero vectors over the same
// plane), checked by cross-multiplication against w's first nonzero entry.
bool field_proportional(const std::vector<AN>& v, const std::vector<AN>& w) {
    size_t k = 0;
    while (k < w.size() && w[k].is_zero()) ++k;
    if (k == w.size()) return false;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] * w[k] != w[i] * v[k]) return false;
    return true;
}

// Basis for drawing candidate points of the plane pi.x = 0 through the point
// `base`. Over the rationals this is the 3-dimensional kernel. Over an
// extension of degree d the plane's points form a 3d-dimensional lattice over
// the rationals, whose reduced vectors are far shorter than any basis
// obtained by field arithmetic; drawing from it keeps the coordinate growth
// of chained chord constructions polynomial instead of exponential. Columns
// are ordered longest first because the tuple enumeration touches the last
// columns first; vectors on the line of `base` itself (dead draws for a chord
// from `base`) go before everything else so the enumeration reaches them last.
Mat candidate_basis(const FieldPtr& f, const std::vector<AN>& pi, const std::vector<AN>& base) {
    if (f->is_rational()) return kernel_of_row(f, pi);
    int d = f->degree();
    int n = static_cast<int>(pi.size());

    FieldPtr Q = NumberField::rationals();
    Mat D(d, n * d, Q);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < d; ++j) {
            std::vector<Rat> unit(static_cast<size_t>(d), Rat(0));
            unit[static_cast<size_t>(j)] = Rat(1);
            AN prod = pi[static_cast<size_t>(i)] * AN(f, unit);
            for (int k = 0; k < d; ++k)
                D.at(k, i * d + j) = AN::of(Q, prod.coeffs()[static_cast<size_t>(k)]);
        }
    Mat ker = D.kernel();

    std::vector<std::vector<Int>> lat;
    for (int c = 0; c < ker.cols(); ++c) {
        std::vector<Rat> col;
        for (int r = 0; r < ker.rows(); ++r) col.push_back(ker.at(r, c).rat_value());
        Int den = common_denominator(col);
        std::vector<Int> z;
        for (Rat v : col) {
            v *= Rat(den);
            z.push_back(v.get_num());
        }
        Int content = integer_content(z);
        for (Int& e : z) e /= content;
        lat.push_back(std::move(z));
    }
    lll_reduce(lat);

    std::vector<std::vector<AN>> dead, useful; // both keep the reduced order (shortest first)
    for (const std::vector<Int>& b : lat) {
        std::vector<AN> vec;
        for (int i = 0; i < n; ++i) {
            std::vector<Rat> coeffs;
            for (int j = 0; j < d; ++j) coeffs.push_back(Rat(b[static_cast<size_t>(i * d + j)]));
            vec.emplace_back(f, coeffs);
        }
        (field_proportional(vec, base) ? dead : useful).push_back(std::move(vec));
    }

    Mat basis(n, static_cast<int>(lat.size()), f);
    int c = 0;
    for (const std::vector<AN>& vec : dead) {
        for (int i = 0; i < n; ++i) basis.at(i, c) = vec[static_cast<size_t>(i)];
        ++c;
    }
    for (auto it = useful.rbegin(); it != useful.rend(); ++it) { // shortest last
        for (int i = 0; i < n; ++i) basis.at(i, c) = (*it)[static_cast<size_t>(i)];
        ++c;
    }
    return basis;
}

bool dependent_with(const std::vector<ProjPoint>& group, const ProjPoint& z) {
    int m = static_cast<int>(group.size()) + 1;
    Mat rows(m, 4, field_of(z.coords()));
    for (int i = 0; i < m; ++i) {
        const std::vector<AN>& p = (i + 1 == m) ? z.coords() : group[static_cast<size_t>(i)].coords();
        for (int j = 0; j < 4; ++j) rows.at(i, j) = p[static_cast<size_t>(j)];
    }
    return rows.rank() < m;
}

} // namespace

ProjPoint next_point(const MultiPoly& F, const ProjPoint& a, const StepConstraints& cons,
                     int cap, CandidateQueue& queue, SearchLog* log) {
    if (cap < 1) fail(errc::wrong_size, "the candidate budget must be positive");
    if (!F.eval(a.coords()).is_zero())
        fail(errc::point_not_on_surface, "chord step from a point off the surface");

    FieldPtr fld = field_of(a.coords());
    if (fld->is_rational()) fld = F.field();

    bool smooth = !is_singular_point(F, a);
    std::vector<AN> tangent;
    Mat through; // columns span the planes through a when a is singular
    if (smooth) {
        tangent = gradient(F, a.coords());
        content_reduce(fld, tangent);
    } else {
        through = kernel_of_row(fld, a.coords());
        if (through.cols() != 3) fail(errc::internal, "plane pencil through a point must be 3-dimensional");
    }

    TupleEnumerator plane_tuples(3);
    int plane_budget = smooth ? 1 : cap;
    for (int plane_index = 0; plane_index < plane_budget; ++plane_index) {
        std::vector<AN> pi = smooth ? tangent : combo(through, plane_tuples.next());

        Mat basis;
        std::optional<TupleEnumerator> draws;
        if (!queue.injected()) {
            basis = candidate_basis(fld, pi, a.coords());
            if (basis.cols() < 3) fail(errc::internal, "a plane of P^3 must have a 3-dimensional cone of points");
            draws.emplace(basis.cols());
        }

        bool skip_plane = false;
        for (int attempt = 0; attempt < cap && !skip_plane; ++attempt) {
            ProjPoint y = a; // replaced below
            if (queue.injected()) {
                const ProjPoint* head = queue.peek();
                if (!head) fail(errc::search_exhausted, "injected candidate list exhausted");
                if (!dot(pi, head->coords()).is_zero()) {
                    record(log, plane_index, pi, *head, Verdict::plane_skipped, std::nullopt);
                    skip_plane = true;
                    continue;
                }
                y = *head;
                queue.consume();
            } else {
                y = ProjPoint(fld, combo(basis, draws->next()));
            }

            if (y == a) {
                record(log, plane_index, pi, y, Verdict::same_direction, std::nullopt);
                continue;
            }
            MultiPoly P1 = polar_first(F, a.coords());
            AN p1y = P1.eval(y.coords());
            if (p1y.is_zero()) {
                record(log, plane_index, pi, y, Verdict::polar_vanishes, std::nullopt);
                continue;
            }
            AN fy = F.eval(y.coords());
            std::vector<AN> zc(4, AN::zero(fld));
            for (int i = 0; i < 4; ++i)
                zc[static_cast<size_t>(i)] =
                    fy * a.coords()[static_cast<size_t>(i)] - p1y * y.coords()[static_cast<size_t>(i)];
            ProjPoint z(field_of(zc), zc);
            if (!F.eval(z.coords()).is_zero())
                fail(errc::internal, "third intersection left the surface");

            if (z == a) {
                record(log, plane_index, pi, y, Verdict::back_to_start, std::nullopt);
                continue;
            }
            if (is_singular_point(F, z)) {
                record(log, plane_index, pi, y, Verdict::singular_point, std::nullopt);
                continue;
            }
            if (is_t_point(F, z)) {
                record(log, plane_index, pi, y, Verdict::t_point, std::nullopt);
                continue;
            }
            bool dependent = false;
            for (const auto& group : cons.independence)
                if (dependent_with(group, z)) dependent = true;
            if (dependent) {
                record(log, plane_index, pi, y, Verdict::dependent_points, std::nullopt);
                continue;
            }
            std::vector<AN> gz = gradient(F, z.coords());
            bool tangent_hit = false;
            for (const ProjPoint& p : cons.tangent_avoid)
                if (dot(gz, p.coords()).is_zero()) tangent_hit = true;
            if (tangent_hit) {
                record(log, plane_index, pi, y, Verdict::tangent_forbidden, std::nullopt);
                continue;
            }
            record(log, plane_index, pi, y, Verdict::accepted, z);
            return z;
        }
    }
    fail(errc::search_exhausted, "no acceptable chord point within the candidate budget");
}

std::vector<ProjPoint> extend_to_frame(const MultiPoly& F, const ProjPoint& a1, int cap,
                                       CandidateQueue& queue, SearchLog* log) {
    if (!F.eval(a1.coords()).is_zero())
        fail(errc::point_not_on_surface, "the starting point must lie on the surface");
    if (!is_singular_point(F, a1) && is_t_point(F, a1))
        fail(errc::t_point_start,
             "the starting point is a T-point (its tangent section splits into lines); choose another");

    std::vector<ProjPoint> pts{a1};
    pts.push_back(next_point(F, pts[0], StepConstraints{}, cap, queue, log));
    {
        StepConstraints c;
        c.independence = {{pts[0], pts[1]}};
        pts.push_back(next_point(F, pts[1], c, cap, queue, log));
    }
    {
        StepConstraints c;
        c.independence = {{pts[0], pts[1], pts[2]}};
        c.tangent_avoid = {pts[1]};
        pts.push_back(next_point(F, pts[2], c, cap, queue, log));
    }
    {
        StepConstraints c;
        c.independence = {{pts[0], pts[1], pts[2]},
                          {pts[0], pts[1], pts[3]},
                          {pts[0], pts[2], pts[3]},
                          {pts[1], pts[2], pts[3]}};
        pts.push_back(next_point(F, pts[3], c, cap, queue, log));
    }
    if (!general_position(pts)) fail(errc::internal, "constructed points are not in general position");
    return pts;
}

namespace {

// usable starting point: singular, or smooth and not a T-point
bool usable_start(const MultiPoly& F, const ProjPoint& p) {
    if (is_singular_point(F, p)) return true;
    return !is_t_point(F, p);
}

} // namespace

FoundPoint find_point(const MultiPoly& F) {
    if (!F.is_homogeneous(3) || F.is_zero())
        fail(errc::not_cubic, "point search expects a nonzero homogeneous cubic");
    const FieldPtr& f = F.field();

    TupleEnumerator plane_seq(4);
    std::vector<std::vector<AN>> planes;
    auto plane_at = [&](size_t k) -> const std::vector<AN>& {
        while (planes.size() <= k) {
            std::vector<Int> u = plane_seq.next();
            std::vector<AN> pi;
            pi.reserve(4);
            for (const Int& v : u) pi.push_back(AN::of(f, Rat(v)));
            planes.push_back(std::move(pi));
        }
        return planes[k];
    };

    struct Memo {
        UniPoly poly;
        std::vector<AN> v1, v2;
    };
    std::optional<Memo> cubic_memo, quad_memo;

    const int kPairBudget = 60;
    int tried = 0;
    for (size_t j = 1; tried < kPairBudget; ++j) {
        for (size_t i = 0; i < j && tried < kPairBudget; ++i) {
            ++tried;
            Mat rows(2, 4, f);
            for (int c = 0; c < 4; ++c) {
                rows.at(0, c) = plane_at(i)[static_cast<size_t>(c)];
                rows.at(1, c) = plane_at(j)[static_cast<size_t>(c)];
            }
            Mat ker = rows.kernel();
            if (ker.cols() != 2) continue;
            std::vector<AN> v1(4, AN::zero(f)), v2(4, AN::zero(f));
            for (int r = 0; r < 4; ++r) {
                v1[static_cast<size_t>(r)] = ker.at(r, 0);
                v2[static_cast<size_t>(r)] = ker.at(r, 1);
            }

            std::array<AN, 4> e = line_expansion(F, v1, v2);
            std::vector<ProjPoint> candidates;
            if (e[0].is_zero()) candidates.emplace_back(f, v1);
            if (e[3].is_zero()) candidates.emplace_back(f, v2);
            UniPoly g(f, {e[0], e[1], e[2], e[3]});
            if (g.is_zero()) {
                std::vector<AN> mid(4, AN::zero(f));
                for (size_t r = 0; r < 4; ++r) mid[r] = v1[r] + v2[r];
                candidates.emplace_back(f, mid);
            } else if (g.deg() >= 1) {
                for (const auto& [root, mult] : roots_in_field(g)) {
                    (void)mult;
                    std::vector<AN> pc(4, AN::zero(f));
                    for (size_t r = 0; r < 4; ++r) pc[r] = v1[r] + root * v2[r];
                    candidates.emplace_back(f, pc);
                }
                if (!cubic_memo || !quad_memo) {
                    FactorList fl = factor(g);
                    for (const auto& [p, m] : fl.factors) {
                        (void)m;
                        if (p.deg() == 3 && !cubic_memo) cubic_memo = Memo{p, v1, v2};
                        if (p.deg() == 2 && !quad_memo) quad_memo = Memo{p, v1, v2};
                    }
                }
            }
            for (const ProjPoint& p : candidates) {
                if (!F.eval(p.coords()).is_zero()) fail(errc::internal, "line section produced an off-surface point");
                if (usable_start(F, p)) return {p, F};
            }
        }
    }

    // No rational point surfaced: adjoin a root of a remembered line section,
    // preferring odd degree.
    for (const std::optional<Memo>& memo : {cubic_memo, quad_memo}) {
        if (!memo) continue;
        FieldExtension ext = extend_field(memo->poly.monic());
        MultiPoly FE = embed_multipoly(ext, F);
        std::vector<AN> pc(4, AN::zero(ext.field));
        for (size_t r = 0; r < 4; ++r)
            pc[r] = ext.embed(memo->v1[r]) + ext.root * ext.embed(memo->v2[r]);
        ProjPoint p(ext.field, pc);
        if (!FE.eval(p.coords()).is_zero()) fail(errc::internal, "adjoined root missed the surface");
        if (usable_start(FE, p)) return {p, FE};
    }
    fail(errc::search_exhausted, "no usable surface point found within the line-section budget");
}

namespace {

bool independent_triple(const ProjPoint& a, const ProjPoint& b, const ProjPoint& c) {
    Mat m(3, 3, field_of(a.coords()));
    const ProjPoint* pts[3] = {&a, &b, &c};
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) m.at(i, j) = pts[i]->coords()[static_cast<size_t>(j)];
    return !m.det().is_zero();
}

} // namespace

std::vector<ProjPoint> plane_cubic_points(const MultiPoly& C) {
    if (!C.is_homogeneous(3) || C.is_zero())
        fail(errc::not_cubic, "plane point search expects a nonzero ternary cubic");
    for (const auto& [e, c] : C.terms()) {
        (void)c;
        if (e[3] != 0) fail(errc::wrong_size, "plane point search expects a form in x0..x2");
    }
    const FieldPtr& f = C.field();

    std::vector<ProjPoint> pool;
    auto add_pool = [&](const std::vector<AN>& c) {
        bool allz = true;
        for (const AN& v : c)
            if (!v.is_zero()) allz = false;
        if (allz) return;
        ProjPoint p(field_of(c), c);
        if (!C.eval(p.coords()).is_zero()) fail(errc::internal, "curve construction left the curve");
        for (const ProjPoint& q : pool)
            if (q == p) return;
        pool.push_back(p);
    };

    // Third intersection of the chord through two distinct curve points.
    // Arguments are taken by value: add_pool grows the pool, which would
    // invalidate references into it.
    auto chord = [&](const ProjPoint p, const ProjPoint q) {
        std::vector<AN> cp = gradient(C, p.coords()), cq = gradient(C, q.coords());
        cp.resize(3);
        cq.resize(3);
        AN alpha = dot(p.coords(), cq), beta = dot(q.coords(), cp);
        std::vector<AN> z(3, AN::zero(f));
        for (size_t r = 0; r < 3; ++r) z[r] = alpha * p.coords()[r] - beta * q.coords()[r];
        add_pool(z);
    };
    // third intersection of the tangent line at a smooth curve point
    auto tangent_points = [&](const ProjPoint p) {
        std::vector<AN> l = gradient(C, p.coords());
        l.resize(3);
        bool allz = true;
        for (const AN& v : l)
            if (!v.is_zero()) allz = false;
        if (allz) return; // singular point: no tangent line construction
        Mat basis = kernel_of_row(field_of(l), l);
        if (basis.cols() != 2) return;
        TupleEnumerator u2(2);
        for (int k = 0; k < 8; ++k) {
            std::vector<AN> qc = combo(basis, u2.next());
            ProjPoint q(field_of(qc), qc);
            if (q == p) continue;
            AN delta = C.eval(q.coords());
            std::vector<AN> cq = gradient(C, q.coords());
            cq.resize(3);
            AN gamma = dot(p.coords(), cq);
            std::vector<AN> z(3, AN::zero(f));
            for (size_t r = 0; r < 3; ++r) z[r] = delta * p.coords()[r] - gamma * q.coords()[r];
            add_pool(z);
        }
    };

    auto try_select = [&]() -> std::optional<std::vector<ProjPoint>> {
        std::vector<ProjPoint> sel;
        for (const ProjPoint& p : pool) {
            bool ok = true;
            for (size_t i = 0; i < sel.size() && ok; ++i)
                for (size_t k = i + 1; k < sel.size() && ok; ++k)
                    if (!independent_triple(sel[i], sel[k], p)) ok = false;
            if (!ok) continue;
            sel.push_back(p);
            if (sel.size() == 5) return sel;
        }
        return std::nullopt;
    };

    TupleEnumerator lines(3);
    const int kRounds = 60, kLinesPerRound = 40;
    const size_t kPoolCap = 240;
    for (int round = 0; round < kRounds && pool.size() < kPoolCap; ++round) {
        for (int s = 0; s < kLinesPerRound; ++s) {
            std::vector<Int> u = lines.next();
            std::vector<AN> l;
            l.reserve(3);
            for (const Int& v : u) l.push_back(AN::of(f, Rat(v)));
            Mat ker = kernel_of_row(f, l);
            if (ker.cols() != 2) continue;
            std::vector<AN> v1(4, AN::zero(f)), v2(4, AN::zero(f));
            for (int r = 0; r < 3; ++r) {
                v1[static_cast<size_t>(r)] = ker.at(r, 0);
                v2[static_cast<size_t>(r)] = ker.at(r, 1);
            }
            std::array<AN, 4> e = line_expansion(C, v1, v2);
            v1.resize(3);
            v2.resize(3);
            if (e[0].is_zero()) add_pool(v1);
            if (e[3].is_zero()) add_pool(v2);
            UniPoly g(f, {e[0], e[1], e[2], e[3]});
            if (!g.is_zero() && g.deg() >= 1) {
                for (const auto& [root, mult] : roots_in_field(g)) {
                    (void)mult;
                    std::vector<AN> pc(3, AN::zero(f));
                    for (size_t r = 0; r < 3; ++r) pc[r] = v1[r] + root * v2[r];
                    add_pool(pc);
                }
            }
        }
        size_t n0 = pool.size();
        for (size_t i = 0; i < n0; ++i)
            for (size_t k = i + 1; k < n0 && pool.size() < kPoolCap; ++k) chord(pool[i], pool[k]);
        for (size_t i = 0; i < n0 && pool.size() < kPoolCap; ++i) tangent_points(pool[i]);
        if (auto sel = try_select()) return *sel;
    }
    fail(errc::search_exhausted, "could not collect five independent points on the plane cubic");
}

} // namespace pfrep
