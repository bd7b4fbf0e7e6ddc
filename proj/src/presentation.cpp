#include "syz/presentation.hpp"

#include <algorithm>
#include <map>

namespace syz {

ModVec PolyMatrix::column(int c, int nvars, const FieldSpec& f, const MonomialOrder& o) const {
    ModVec v(rows, nvars, f, o);
    for (int r = 0; r < rows; ++r) v.set(r, at(r, c));
    return v;
}

bool PolyMatrix::column_is_zero(int c) const {
    for (int r = 0; r < rows; ++r)
        if (!at(r, c).is_zero()) return false;
    return true;
}

void PolyMatrix::erase_row(int r) {
    a.erase(a.begin() + std::size_t(r) * cols, a.begin() + std::size_t(r + 1) * cols);
    row_deg.erase(row_deg.begin() + r);
    --rows;
}

void PolyMatrix::erase_col(int c) {
    for (int r = rows - 1; r >= 0; --r)
        a.erase(a.begin() + std::size_t(r) * cols + c);
    col_deg.erase(col_deg.begin() + c);
    --cols;
}

bool PolyMatrix::operator==(const PolyMatrix& o) const {
    return rows == o.rows && cols == o.cols && row_deg == o.row_deg && col_deg == o.col_deg &&
           a == o.a;
}

namespace {

// infer column degrees from entries; throws on inhomogeneous columns
void infer_col_degrees(PolyMatrix& m) {
    m.col_deg.assign(m.cols, 0);
    for (int c = 0; c < m.cols; ++c) {
        bool found = false;
        for (int r = 0; r < m.rows; ++r) {
            const Polynomial& p = m.at(r, c);
            if (p.is_zero()) continue;
            auto h = p.homogeneous_degree();
            if (h.mixed) throw invariant_error("inhomogeneous matrix entry");
            int d = h.degree + m.row_deg[r];
            if (found && d != m.col_deg[c])
                throw invariant_error("column with inconsistent degrees");
            m.col_deg[c] = d;
            found = true;
        }
        // zero column keeps degree 0; it is dropped by minimalization anyway
    }
}

void nf_entries(PolyMatrix& m, const QuotientRing& ring) {
    for (auto& p : m.a) p = ring.nf_mod_ideal(p);
}

void drop_zero_columns(PolyMatrix& m) {
    for (int c = m.cols - 1; c >= 0; --c)
        if (m.column_is_zero(c)) m.erase_col(c);
}

// col[dst] += mult * col[src]
void add_scaled_col(PolyMatrix& m, int dst, int src, const Polynomial& mult,
                    const QuotientRing& ring) {
    for (int r = 0; r < m.rows; ++r)
        m.at(r, dst) = ring.nf_mod_ideal(m.at(r, dst) + mult * m.at(r, src));
}

// row[dst] += mult * row[src]
void add_scaled_row(PolyMatrix& m, int dst, int src, const Polynomial& mult,
                    const QuotientRing& ring) {
    for (int c = 0; c < m.cols; ++c)
        m.at(dst, c) = ring.nf_mod_ideal(m.at(dst, c) + mult * m.at(src, c));
}

// entry with nonzero constant term (a unit of R, since I is generated in
// positive degrees)
bool find_unit(const PolyMatrix& m, int& pr, int& pc) {
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (!m.at(r, c).constant_term().is_zero()) {
                pr = r;
                pc = c;
                return true;
            }
    return false;
}

// Pivot away unit entries of `next`. When `prev` is given, `next` presents
// the kernel of `prev`, and removing row j of `next` removes the redundant
// generator column j of `prev` (with the matching column operations).
void minimalize_against(PolyMatrix* prev, PolyMatrix& next, const QuotientRing& ring) {
    int j, k;
    while (find_unit(next, j, k)) {
        const Polynomial pivot = next.at(j, k);
        if (pivot.size() != 1 || !pivot.lead().mono.is_one())
            throw invariant_error("unit pivot entry is not a constant");
        Polynomial cinv = Polynomial::constant(pivot.lead().coeff.inv(), pivot.nvars(),
                                               pivot.order());
        // clear row j (column operations on next; pure re-choice of kernel
        // generators, no mirror)
        for (int c = 0; c < next.cols; ++c) {
            if (c == k || next.at(j, c).is_zero()) continue;
            Polynomial mult = -(next.at(j, c) * cinv);
            add_scaled_col(next, c, k, mult, ring);
        }
        // clear column k (row operations on next; mirrored as column
        // operations on prev)
        for (int r = 0; r < next.rows; ++r) {
            if (r == j || next.at(r, k).is_zero()) continue;
            Polynomial mult = -(next.at(r, k) * cinv);
            add_scaled_row(next, r, j, mult, ring);
            if (prev) {
                Polynomial back = -mult;
                add_scaled_col(*prev, j, r, back, ring);
            }
        }
        next.erase_row(j);
        next.erase_col(k);
        if (prev) {
            if (!prev->column_is_zero(j))
                throw invariant_error("redundant generator column did not vanish");
            prev->erase_col(j);
        }
    }
    drop_zero_columns(next);
}

// ---- minimal-generator trim -------------------------------------------
// A Groebner-derived generating set of a kernel can be redundant without any
// unit entry. Columns are pruned by graded pieces: processing by degree, a
// column is redundant exactly when its coordinate vector lies in the span of
// the degree-d piece of the module generated by the columns kept so far.

struct PieceCache {
    const QuotientRing& ring;
    std::map<int, std::vector<Monomial>> basis_;
    std::map<int, std::map<std::vector<int>, int>> index_;

    explicit PieceCache(const QuotientRing& r) : ring(r) {}

    bool reducible(const Monomial& m) const {
        for (const auto& g : ring.ideal_gb().gens)
            if (g[0].lead().mono.divides(m)) return true;
        return false;
    }

    void enumerate(std::vector<int>& e, int var, int remaining, std::vector<Monomial>& out) {
        if (var == ring.nvars() - 1) {
            e[var] = remaining;
            Monomial m(e);
            if (!reducible(m)) out.push_back(std::move(m));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            e[var] = k;
            enumerate(e, var + 1, remaining - k, out);
        }
    }

    const std::vector<Monomial>& basis(int e) {
        auto it = basis_.find(e);
        if (it != basis_.end()) return it->second;
        std::vector<Monomial> out;
        if (e >= 0) {
            std::vector<int> exps(ring.nvars(), 0);
            enumerate(exps, 0, e, out);
        }
        auto& slot = basis_[e];
        slot = std::move(out);
        auto& idx = index_[e];
        for (int i = 0; i < int(slot.size()); ++i) idx[slot[i].exponents()] = i;
        return slot;
    }

    int index_of(int e, const Monomial& m) {
        basis(e);
        auto it = index_[e].find(m.exponents());
        if (it == index_[e].end()) throw invariant_error("monomial outside standard basis");
        return it->second;
    }
};

struct GaussRows {
    std::vector<std::vector<Coeff>> rows;
    std::vector<int> pivots;

    static int first_nonzero(const std::vector<Coeff>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return int(i);
        return -1;
    }

    bool add(std::vector<Coeff> v) {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Coeff c = v[pivots[r]];
            if (c.is_zero()) continue;
            for (std::size_t i = 0; i < v.size(); ++i)
                if (!rows[r][i].is_zero()) v[i] = v[i] - c * rows[r][i];
        }
        int p = first_nonzero(v);
        if (p < 0) return false;
        Coeff inv = v[p].inv();
        for (auto& x : v) x = x * inv;
        std::size_t at = rows.size();
        for (std::size_t r = 0; r < rows.size(); ++r)
            if (pivots[r] > p) {
                at = r;
                break;
            }
        rows.insert(rows.begin() + at, std::move(v));
        pivots.insert(pivots.begin() + at, p);
        return true;
    }
};

// coordinates of a column (or a monomial multiple of one) in the graded
// piece of R^rows at internal degree d
std::vector<Coeff> expand_piece(const PolyMatrix& m, int col, const Monomial& u, int d,
                                PieceCache& pieces, const QuotientRing& ring) {
    std::vector<int> offs(m.rows, 0);
    int dim = 0;
    for (int j = 0; j < m.rows; ++j) {
        offs[j] = dim;
        int e = d - m.row_deg[j];
        dim += e >= 0 ? int(pieces.basis(e).size()) : 0;
    }
    std::vector<Coeff> out(dim, Coeff::zero(ring.field()));
    for (int j = 0; j < m.rows; ++j) {
        const Polynomial& entry = m.at(j, col);
        if (entry.is_zero()) continue;
        Polynomial p = ring.nf_mod_ideal(entry.times_term(u, Coeff::one(ring.field())));
        int e = d - m.row_deg[j];
        for (const auto& t : p.terms()) {
            if (t.mono.deg() != e) throw invariant_error("inhomogeneous piece expansion");
            out[offs[j] + pieces.index_of(e, t.mono)] = t.coeff;
        }
    }
    return out;
}

void trim_columns_to_mingens(PolyMatrix& m, const QuotientRing& ring) {
    if (m.cols <= 1) return;
    PieceCache pieces(ring);
    std::vector<int> order(m.cols);
    for (int c = 0; c < m.cols; ++c) order[c] = c;
    std::stable_sort(order.begin(), order.end(),
                     [&](int a, int b) { return m.col_deg[a] < m.col_deg[b]; });
    std::vector<int> kept;
    std::vector<bool> keep(m.cols, false);
    std::size_t at = 0;
    while (at < order.size()) {
        int d = m.col_deg[order[at]];
        GaussRows span;
        for (int g : kept)
            for (const auto& u : pieces.basis(d - m.col_deg[g]))
                span.add(expand_piece(m, g, u, d, pieces, ring));
        for (; at < order.size() && m.col_deg[order[at]] == d; ++at) {
            int c = order[at];
            if (span.add(expand_piece(m, c, Monomial(ring.nvars()), d, pieces, ring))) {
                kept.push_back(c);
                keep[c] = true;
            }
        }
    }
    if (int(kept.size()) == m.cols) return;
    for (int c = m.cols - 1; c >= 0; --c)
        if (!keep[c]) m.erase_col(c);
}

} // namespace

Presentation::Presentation(RingPtr ring, PolyMatrix mat) : ring_(std::move(ring)), mat_(std::move(mat)) {
    if (int(mat_.row_deg.size()) != mat_.rows)
        throw invariant_error("row twist count mismatch");
    if (int(mat_.a.size()) != mat_.rows * mat_.cols)
        throw invariant_error("matrix entry count mismatch");
    nf_entries(mat_, *ring_);
    infer_col_degrees(mat_);
}

Presentation Presentation::from_entries(RingPtr ring, int rows,
                                        std::vector<std::vector<Polynomial>> rows_of_entries,
                                        std::vector<int> row_twists) {
    PolyMatrix m;
    m.rows = rows;
    m.cols = rows == 0 ? 0 : int(rows_of_entries.empty() ? 0 : rows_of_entries[0].size());
    m.row_deg = std::move(row_twists);
    for (const auto& row : rows_of_entries) {
        if (int(row.size()) != m.cols) throw invariant_error("ragged matrix rows");
        for (const auto& p : row) m.a.push_back(p);
    }
    return Presentation(std::move(ring), std::move(m));
}

PolyMatrix minimalize_presentation(const PolyMatrix& m, const QuotientRing& ring) {
    PolyMatrix r = m;
    nf_entries(r, ring);
    minimalize_against(nullptr, r, ring);
    return r;
}

PolyMatrix syzygy_basis(const PolyMatrix& mat, const QuotientRing& ring, const Limits& lim) {
    const int r = mat.rows;
    const int c = mat.cols;
    PolyMatrix syz;
    syz.rows = c;
    syz.cols = 0;
    syz.row_deg = mat.col_deg;
    if (c == 0) return syz;
    if (r == 0) throw invariant_error("syzygies of columns in a rank-0 module");

    const FieldSpec& f = ring.field();
    const MonomialOrder& o = ring.order();
    const int n = ring.nvars();

    std::vector<ModVec> gens;
    std::vector<int> twists = mat.row_deg;
    twists.insert(twists.end(), mat.col_deg.begin(), mat.col_deg.end());

    for (int k = 0; k < c; ++k) {
        ModVec g(r + c, n, f, o);
        for (int j = 0; j < r; ++j) g.set(j, mat.at(j, k));
        g.set(r + k, ring.one());
        gens.push_back(std::move(g));
    }
    for (const auto& ig : ring.ideal_gb().gens) {
        for (int j = 0; j < r; ++j) {
            ModVec g(r + c, n, f, o);
            g.set(j, ig[0]);
            gens.push_back(std::move(g));
        }
    }

    GroebnerBasis gb = buchberger(std::move(gens), lim, twists);

    std::vector<ModVec> columns;
    for (const auto& g : gb.gens) {
        if (!g.slice(0, r).is_zero()) continue;
        ModVec u = g.slice(r, r + c);
        ModVec v(c, n, f, o);
        for (int i = 0; i < c; ++i) v.set(i, ring.nf_mod_ideal(u[i]));
        if (v.is_zero()) continue;
        v = v.normalized_unit();
        if (std::find(columns.begin(), columns.end(), v) == columns.end())
            columns.push_back(std::move(v));
    }

    syz.cols = int(columns.size());
    syz.col_deg.assign(syz.cols, 0);
    syz.a.assign(std::size_t(syz.rows) * syz.cols, ring.zero());
    for (int k = 0; k < syz.cols; ++k) {
        auto h = columns[k].homogeneous_degree(syz.row_deg);
        if (!h.homogeneous || !h.degree)
            throw invariant_error("inhomogeneous syzygy column");
        syz.col_deg[k] = *h.degree;
        for (int i = 0; i < syz.rows; ++i) syz.at(i, k) = columns[k][i];
    }
    return syz;
}

namespace {

// deterministic column order: degree, then leading position, then leading
// monomial (bigger first), then full entry comparison
struct ColKey {
    int deg;
    int lead_comp;
    Monomial lead_mono;
    bool zero;
};

ColKey col_key(const PolyMatrix& m, int c, const MonomialOrder& o) {
    ColKey k{m.col_deg[c], 0, Monomial(0), true};
    for (int r = 0; r < m.rows; ++r)
        if (!m.at(r, c).is_zero()) {
            k.lead_comp = r;
            k.lead_mono = m.at(r, c).lead().mono;
            k.zero = false;
            break;
        }
    return k;
}

void canonicalize(Resolution& res) {
    const QuotientRing& ring = *res.ring;
    for (std::size_t s = 0; s < res.steps.size(); ++s) {
        PolyMatrix& m = res.steps[s];
        std::vector<int> perm(m.cols);
        for (int c = 0; c < m.cols; ++c) perm[c] = c;
        const MonomialOrder& o = ring.order();
        std::stable_sort(perm.begin(), perm.end(), [&](int x, int y) {
            ColKey a = col_key(m, x, o);
            ColKey b = col_key(m, y, o);
            if (a.deg != b.deg) return a.deg < b.deg;
            if (a.zero != b.zero) return b.zero;
            if (a.zero) return false;
            if (a.lead_comp != b.lead_comp) return a.lead_comp < b.lead_comp;
            int cm = o.cmp(a.lead_mono, b.lead_mono);
            if (cm != 0) return cm > 0;
            return false;
        });
        PolyMatrix sorted = m;
        for (int c = 0; c < m.cols; ++c) {
            for (int r = 0; r < m.rows; ++r) sorted.at(r, c) = m.at(r, perm[c]);
            sorted.col_deg[c] = m.col_deg[perm[c]];
        }
        // monic columns: scale column by inverse of its leading coefficient
        std::vector<Coeff> scales(sorted.cols, Coeff::one(ring.field()));
        for (int c = 0; c < sorted.cols; ++c) {
            for (int r = 0; r < sorted.rows; ++r)
                if (!sorted.at(r, c).is_zero()) {
                    scales[c] = sorted.at(r, c).lead().coeff;
                    break;
                }
            if (!scales[c].is_one()) {
                Coeff inv = scales[c].inv();
                for (int r = 0; r < sorted.rows; ++r)
                    sorted.at(r, c) = sorted.at(r, c).scaled(inv);
            }
        }
        m = std::move(sorted);
        // mirror on the next step: rows permuted the same way, row k scaled
        // by the column-k scale
        if (s + 1 < res.steps.size()) {
            PolyMatrix& nxt = res.steps[s + 1];
            if (nxt.rows != m.cols) throw invariant_error("resolution shape mismatch");
            PolyMatrix fixed = nxt;
            for (int r = 0; r < nxt.rows; ++r) {
                for (int c = 0; c < nxt.cols; ++c)
                    fixed.at(r, c) = nxt.at(perm[r], c).scaled(scales[r]);
                fixed.row_deg[r] = nxt.row_deg[perm[r]];
            }
            nxt = std::move(fixed);
        }
    }
}

} // namespace

Resolution resolve(const Presentation& M, int N, const Limits& lim) {
    if (N < 0) throw invariant_error("negative resolution window");
    Resolution res;
    res.ring = M.ring();
    res.window = N;
    const QuotientRing& ring = *M.ring();

    {
        PolyMatrix first = minimalize_presentation(M.matrix(), ring);
        trim_columns_to_mingens(first, ring);
        res.steps.push_back(std::move(first));
    }
    if (res.steps[0].cols == 0) res.terminated = true;

    while (!res.terminated && int(res.steps.size()) < N) {
        PolyMatrix& prev = res.steps.back();
        PolyMatrix next = syzygy_basis(prev, ring, lim);
        minimalize_against(&prev, next, ring);
        // the pivoting may have rewritten prev's columns; keep twists in sync
        if (next.rows != prev.cols) throw invariant_error("syzygy shape desync");
        next.row_deg = prev.col_deg;
        trim_columns_to_mingens(next, ring);
        res.steps.push_back(std::move(next));
        if (res.steps.back().cols == 0) res.terminated = true;
    }

    canonicalize(res);
    verify_resolution(res);
    return res;
}

std::vector<int> Resolution::betti() const {
    std::vector<int> b;
    b.push_back(steps.empty() ? 0 : steps[0].rows);
    for (int i = 1; i <= window; ++i) {
        if (i - 1 < int(steps.size()))
            b.push_back(steps[i - 1].cols);
        else
            b.push_back(0);
    }
    return b;
}

int Resolution::max_omega() const {
    if (terminated) return window; // everything beyond the last step is zero
    return int(steps.size()) - 1;
}

Presentation Resolution::omega(int i) const {
    if (i < 0) throw invariant_error("negative syzygy index");
    if (i < int(steps.size())) return Presentation(ring, steps[i]);
    if (terminated) {
        PolyMatrix zero;
        return Presentation(ring, zero);
    }
    throw invariant_error("syzygy index " + std::to_string(i) + " beyond computed window");
}

std::vector<int> betti_sequence(const Resolution& res) { return res.betti(); }

Presentation syzygy_presentation(const Resolution& res, int i) { return res.omega(i); }

void verify_resolution(const Resolution& res) {
    auto& stats = VerifyStats::global();
    const QuotientRing& ring = *res.ring;
    bool ok = true;
    for (const auto& m : res.steps)
        for (const auto& p : m.a)
            if (!p.constant_term().is_zero()) {
                stats.minimality_failures++;
                ok = false;
            }
    for (std::size_t s = 0; s + 1 < res.steps.size(); ++s) {
        const PolyMatrix& A = res.steps[s];
        const PolyMatrix& B = res.steps[s + 1];
        if (A.cols != B.rows) {
            stats.complex_failures++;
            throw invariant_error("resolution shape mismatch");
        }
        for (int j = 0; j < A.rows; ++j)
            for (int l = 0; l < B.cols; ++l) {
                Polynomial acc = ring.zero();
                for (int m = 0; m < A.cols; ++m) acc = acc + A.at(j, m) * B.at(m, l);
                if (!ring.nf_mod_ideal(acc).is_zero()) {
                    stats.complex_failures++;
                    ok = false;
                }
            }
    }
    stats.complexes_verified++;
    if (!ok) throw invariant_error("resolution failed complex/minimality certificate");
}

} // namespace syz
