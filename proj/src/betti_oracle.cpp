#include "syz/betti_oracle.hpp"

#include <algorithm>
#include <climits>

namespace syz {

int BettiTable::total(int level) const {
    int t = 0;
    for (const auto& [key, v] : beta)
        if (key.first == level) t += v;
    return t;
}

std::vector<int> BettiTable::totals() const {
    std::vector<int> t(hom_bound + 1, 0);
    for (const auto& [key, v] : beta)
        if (key.first <= hom_bound) t[key.first] += v;
    return t;
}

int BettiTable::max_gen_degree(int level) const {
    int d = INT_MIN;
    for (const auto& [key, v] : beta)
        if (key.first == level && v > 0) d = std::max(d, key.second);
    return d;
}

namespace {

struct Echelon {
    int width = 0;
    FieldSpec field;
    std::vector<std::vector<Coeff>> rows; // pivot coefficient 1, sorted by pivot
    std::vector<int> pivots;

    explicit Echelon(int w, const FieldSpec& f) : width(w), field(f) {}

    // fully reduce v against the rows
    void reduce(std::vector<Coeff>& v) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const Coeff& c = v[pivots[r]];
            if (c.is_zero()) continue;
            Coeff f0 = c;
            for (int i = 0; i < width; ++i)
                if (!rows[r][i].is_zero()) v[i] = v[i] - f0 * rows[r][i];
        }
    }

    static int first_nonzero(const std::vector<Coeff>& v) {
        for (std::size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) return int(i);
        return -1;
    }

    bool add(std::vector<Coeff> v) {
        reduce(v);
        int p = first_nonzero(v);
        if (p < 0) return false;
        Coeff inv = v[p].inv();
        for (auto& x : v) x = x * inv;
        // keep rows reduced against the new one
        for (std::size_t r = 0; r < rows.size(); ++r) {
            Coeff c = rows[r][p];
            if (c.is_zero()) continue;
            for (int i = 0; i < width; ++i)
                if (!v[i].is_zero()) rows[r][i] = rows[r][i] - c * v[i];
        }
        auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
        std::size_t idx = it - pivots.begin();
        pivots.insert(it, p);
        rows.insert(rows.begin() + idx, std::move(v));
        return true;
    }

    int rank() const { return int(rows.size()); }
};

// element of a free R-module with one polynomial per component (normal forms)
using FreeElt = std::vector<Polynomial>;

struct Oracle {
    const QuotientRing& ring;
    int nvars;
    FieldSpec field;

    std::map<int, std::vector<Monomial>> std_basis_;           // degree -> monomials
    std::map<int, std::map<std::vector<int>, int>> index_;     // degree -> exponents -> idx

    explicit Oracle(const QuotientRing& r) : ring(r), nvars(r.nvars()), field(r.field()) {}

    const std::vector<Monomial>& std_basis(int e) {
        auto it = std_basis_.find(e);
        if (it != std_basis_.end()) return it->second;
        std::vector<Monomial> out;
        if (e >= 0) enumerate(Monomial(nvars), 0, e, out);
        auto& slot = std_basis_[e];
        slot = std::move(out);
        auto& idx = index_[e];
        for (int i = 0; i < int(slot.size()); ++i) idx[slot[i].exponents()] = i;
        return slot;
    }

    void enumerate(const Monomial& prefix, int var, int remaining, std::vector<Monomial>& out) {
        if (var == nvars - 1) {
            std::vector<int> e = prefix.exponents();
            e[var] = remaining;
            Monomial m(e);
            if (!reducible(m)) out.push_back(std::move(m));
            return;
        }
        for (int k = 0; k <= remaining; ++k) {
            std::vector<int> e = prefix.exponents();
            e[var] = k;
            enumerate(Monomial(e), var + 1, remaining - k, out);
        }
    }

    bool reducible(const Monomial& m) const {
        for (const auto& g : ring.ideal_gb().gens)
            if (g[0].lead().mono.divides(m)) return true;
        return false;
    }

    int mono_index(int e, const Monomial& m) {
        std_basis(e);
        auto& idx = index_[e];
        auto it = idx.find(m.exponents());
        if (it == idx.end()) throw invariant_error("monomial not in standard basis");
        return it->second;
    }

    // free module piece: component twists T, internal degree d
    struct PieceShape {
        std::vector<int> offs; // per component offset
        int dim = 0;
    };
    PieceShape shape(const std::vector<int>& twists, int d) {
        PieceShape s;
        s.offs.resize(twists.size());
        for (std::size_t j = 0; j < twists.size(); ++j) {
            s.offs[j] = s.dim;
            int e = d - twists[j];
            s.dim += e >= 0 ? int(std_basis(e).size()) : 0;
        }
        return s;
    }

    std::vector<Coeff> expand(const FreeElt& v, const std::vector<int>& twists, int d) {
        PieceShape s = shape(twists, d);
        std::vector<Coeff> out(s.dim, Coeff::zero(field));
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (v[j].is_zero()) continue;
            int e = d - twists[j];
            if (e < 0) throw invariant_error("graded piece underflow");
            for (const auto& t : v[j].terms()) {
                if (t.mono.deg() != e) throw invariant_error("inhomogeneous piece element");
                out[s.offs[j] + mono_index(e, t.mono)] = t.coeff;
            }
        }
        return out;
    }

    FreeElt mono_times(const FreeElt& v, const Monomial& u) {
        FreeElt out;
        out.reserve(v.size());
        for (const auto& p : v)
            out.push_back(ring.nf_mod_ideal(p.times_term(u, Coeff::one(field))));
        return out;
    }
};

struct LevelData {
    std::vector<FreeElt> gens;      // over the previous level's free module
    std::vector<int> gen_deg;
};

} // namespace

BettiTable graded_betti_oracle(const Presentation& M, int degree_bound, int hom_bound) {
    const QuotientRing& ring = *M.ring();
    const PolyMatrix& A = M.matrix();
    if (hom_bound < 0 || degree_bound < INT_MIN / 2)
        throw invariant_error("bad oracle bounds");

    for (const auto& g : ring.ideal())
        if (g.deg() > degree_bound)
            throw uncertified_error("degree bound " + std::to_string(degree_bound) +
                                    " below ideal generator degree " + std::to_string(g.deg()));
    for (int t : A.row_deg)
        if (t > degree_bound)
            throw uncertified_error("degree bound below a generator twist");
    for (int d : A.col_deg)
        if (d > degree_bound)
            throw uncertified_error("degree bound below a presentation column degree");

    Oracle O(ring);
    BettiTable table;
    table.degree_bound = degree_bound;
    table.hom_bound = hom_bound;

    const int D = degree_bound;
    int lo = 0;
    for (int t : A.row_deg) lo = std::min(lo, t);

    // level 0: ambient F0 with the input twists; V = column span of A
    std::vector<int> amb_twists = A.row_deg;
    std::vector<FreeElt> amb_gens; // columns of A as elements of F0
    std::vector<int> amb_gen_deg = A.col_deg;
    for (int c = 0; c < A.cols; ++c) {
        FreeElt col(A.rows, ring.zero());
        for (int r = 0; r < A.rows; ++r) col[r] = A.at(r, c);
        amb_gens.push_back(std::move(col));
    }

    // current level state: generators of K_i expressed over the free module
    // on the previous level's generators
    LevelData cur;
    std::vector<int> cur_twists;       // twists of the free module the gens live in
    std::map<int, Echelon> quotient;   // level 0 only: echelon of V per degree

    // ---- level 0: minimal generators of M = F0 / V ----
    {
        for (int d = lo; d <= D; ++d) {
            auto sh = O.shape(amb_twists, d);
            Echelon V(sh.dim, ring.field());
            for (std::size_t g = 0; g < amb_gens.size(); ++g) {
                int e = d - amb_gen_deg[g];
                if (e < 0) continue;
                for (const auto& u : O.std_basis(e))
                    V.add(O.expand(O.mono_times(amb_gens[g], u), amb_twists, d));
            }
            quotient.emplace(d, std::move(V));
        }
        // beta_0 and generator representatives
        for (int d = lo; d <= D; ++d) {
            auto sh = O.shape(amb_twists, d);
            Echelon span(sh.dim, ring.field());
            // V_d
            for (const auto& row : quotient.at(d).rows) span.add(row);
            // (m F0)_d: x_v times the monomial basis of F0_{d-1}
            for (std::size_t j = 0; j < amb_twists.size(); ++j) {
                int e = d - 1 - amb_twists[j];
                if (e < 0) continue;
                for (const auto& u : O.std_basis(e)) {
                    for (int v = 0; v < O.nvars; ++v) {
                        FreeElt elt(amb_twists.size(), ring.zero());
                        std::vector<int> exp(O.nvars, 0);
                        exp[v] = 1;
                        elt[j] = ring.nf_mod_ideal(
                            Polynomial::term(u * Monomial(exp), Coeff::one(ring.field()), ring.order()));
                        span.add(O.expand(elt, amb_twists, d));
                    }
                }
            }
            // basis vectors extending the span are minimal generators
            for (std::size_t j = 0; j < amb_twists.size(); ++j) {
                int e = d - amb_twists[j];
                if (e < 0) continue;
                for (const auto& u : O.std_basis(e)) {
                    std::vector<Coeff> unit(sh.dim, Coeff::zero(ring.field()));
                    unit[sh.offs[j] + O.mono_index(e, u)] = Coeff::one(ring.field());
                    if (span.add(unit)) {
                        FreeElt gen(amb_twists.size(), ring.zero());
                        gen[j] = Polynomial::term(u, Coeff::one(ring.field()), ring.order());
                        cur.gens.push_back(std::move(gen));
                        cur.gen_deg.push_back(d);
                        table.beta[{0, d}]++;
                    }
                }
            }
        }
        cur_twists = amb_twists;
    }

    // ---- levels 1..H: kernels of F'_i -> previous, minimal generators ----
    for (int level = 1; level <= hom_bound; ++level) {
        if (cur.gens.empty()) break; // finite projective dimension reached
        LevelData next;
        std::vector<int> next_twists = cur.gen_deg;
        // per degree: kernel elements of the map on the free module over
        // cur.gens, as elements of that free module
        std::map<int, std::vector<FreeElt>> kernel_elts;
        std::map<int, Echelon> kernel_coords;
        for (int d = lo; d <= D; ++d) {
            auto target_sh = O.shape(cur_twists, d);
            Echelon tracker(target_sh.dim, ring.field());
            std::vector<std::vector<Coeff>> combos;    // domain combos per tracker row
            std::vector<std::pair<int, Monomial>> domain; // (gen idx, monomial)
            for (std::size_t g = 0; g < cur.gens.size(); ++g) {
                int e = d - cur.gen_deg[g];
                if (e < 0) continue;
                for (const auto& u : O.std_basis(e)) domain.push_back({int(g), u});
            }
            std::vector<FreeElt> kern;
            auto domain_sh = O.shape(next_twists, d);
            Echelon kcoords(domain_sh.dim, ring.field());
            for (std::size_t idx = 0; idx < domain.size(); ++idx) {
                auto [g, u] = domain[idx];
                std::vector<Coeff> img = O.expand(O.mono_times(cur.gens[g], u), cur_twists, d);
                if (level == 1) quotient.at(d).reduce(img); // target is F0 / V
                std::vector<Coeff> combo(domain.size(), Coeff::zero(ring.field()));
                combo[idx] = Coeff::one(ring.field());
                // reduce img against tracker rows, mirroring on combo
                for (std::size_t r = 0; r < tracker.rows.size(); ++r) {
                    Coeff c = img[tracker.pivots[r]];
                    if (c.is_zero()) continue;
                    for (int i = 0; i < tracker.width; ++i)
                        if (!tracker.rows[r][i].is_zero())
                            img[i] = img[i] - c * tracker.rows[r][i];
                    for (std::size_t i = 0; i < combo.size(); ++i)
                        if (!combos[r][i].is_zero())
                            combo[i] = combo[i] - c * combos[r][i];
                }
                int p = Echelon::first_nonzero(img);
                if (p < 0) {
                    // kernel element: assemble as FreeElt over cur's free module
                    FreeElt w(cur.gens.size(), ring.zero());
                    for (std::size_t i = 0; i < combo.size(); ++i) {
                        if (combo[i].is_zero()) continue;
                        auto [gi, ui] = domain[i];
                        w[gi] = w[gi] + Polynomial::term(ui, combo[i], ring.order());
                    }
                    if (kcoords.add(O.expand(w, next_twists, d))) kern.push_back(std::move(w));
                } else {
                    Coeff inv = img[p].inv();
                    for (auto& x : img) x = x * inv;
                    for (auto& x : combo) x = x * inv;
                    // do not keep earlier rows reduced; forward reduction is
                    // enough for kernel extraction as long as pivots differ
                    std::size_t at = tracker.rows.size();
                    for (std::size_t r = 0; r < tracker.rows.size(); ++r)
                        if (tracker.pivots[r] > p) { at = r; break; }
                    tracker.rows.insert(tracker.rows.begin() + at, img);
                    tracker.pivots.insert(tracker.pivots.begin() + at, p);
                    combos.insert(combos.begin() + at, combo);
                }
            }
            kernel_elts[d] = std::move(kern);
            kernel_coords.emplace(d, std::move(kcoords));
        }
        // minimal generators: kernel vectors modulo m * kernel
        for (int d = lo; d <= D; ++d) {
            auto domain_sh = O.shape(next_twists, d);
            Echelon span(domain_sh.dim, ring.field());
            auto prev_it = kernel_elts.find(d - 1);
            if (prev_it != kernel_elts.end()) {
                for (const auto& w : prev_it->second) {
                    for (int v = 0; v < O.nvars; ++v) {
                        std::vector<int> exp(O.nvars, 0);
                        exp[v] = 1;
                        span.add(O.expand(O.mono_times(w, Monomial(exp)), next_twists, d));
                    }
                }
            }
            for (const auto& w : kernel_elts[d]) {
                if (span.add(O.expand(w, next_twists, d))) {
                    next.gens.push_back(w);
                    next.gen_deg.push_back(d);
                    table.beta[{level, d}]++;
                }
            }
        }
        cur = std::move(next);
        cur_twists = next_twists;
    }
    return table;
}

} // namespace syz
