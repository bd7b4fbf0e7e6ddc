#include "syz/geometry.hpp"

#include <algorithm>
#include <cstdint>

namespace syz {

namespace {

std::uint64_t binomial_capped(int n, int k, std::uint64_t cap) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    std::uint64_t r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * std::uint64_t(n - k + i) / std::uint64_t(i);
        if (r > cap * 4) return r; // no overflow risk at desk scale
    }
    return r;
}

// determinant by expansion along the sparsest remaining column
Polynomial det_recursive(const PolyMatrix& m, const std::vector<int>& all_rows,
                         std::uint32_t used_rows, const std::vector<int>& cols,
                         std::size_t col_at, const QuotientRing& ring) {
    if (col_at == cols.size()) return ring.one();
    // pick the remaining column with fewest usable nonzero entries
    std::size_t best = col_at;
    int best_count = INT32_MAX;
    for (std::size_t ci = col_at; ci < cols.size(); ++ci) {
        int count = 0;
        for (std::size_t ri = 0; ri < all_rows.size(); ++ri)
            if (!(used_rows >> ri & 1) && !m.at(all_rows[ri], cols[ci]).is_zero()) ++count;
        if (count < best_count) {
            best_count = count;
            best = ci;
        }
        if (count == 0) break;
    }
    if (best_count == 0) return ring.zero();
    std::vector<int> reordered = cols;
    const bool swapped = best != col_at; // column transposition flips the sign
    std::swap(reordered[col_at], reordered[best]);
    int c = reordered[col_at];

    Polynomial acc = ring.zero();
    int live = -1; // position among unused rows, for the sign
    for (std::size_t ri = 0; ri < all_rows.size(); ++ri) {
        if (used_rows >> ri & 1) continue;
        ++live;
        const Polynomial& e = m.at(all_rows[ri], c);
        if (e.is_zero()) continue;
        Polynomial sub = det_recursive(m, all_rows, used_rows | (1u << ri), reordered,
                                       col_at + 1, ring);
        if (sub.is_zero()) continue;
        Polynomial contrib = e * sub;
        acc = (live % 2 == 0) ? acc + contrib : acc - contrib;
    }
    return swapped ? -acc : acc;
}

Polynomial minor_det(const PolyMatrix& m, const std::vector<int>& cols, const QuotientRing& ring) {
    std::vector<int> rows(m.rows);
    for (int r = 0; r < m.rows; ++r) rows[r] = r;
    return det_recursive(m, rows, 0, cols, 0, ring);
}

} // namespace

Ideal fitting_ideal_0(const Presentation& M, const Limits& lim) {
    const PolyMatrix& m = M.matrix();
    const QuotientRing& ring = *M.ring();
    Ideal out;
    if (m.rows == 0) {
        // zero module: Fitt_0 = (1)
        out.gens.push_back(ring.one());
        return out;
    }
    if (m.cols < m.rows) {
        out.gens = ring.ideal();
        return out;
    }
    std::uint64_t count = binomial_capped(m.cols, m.rows, lim.minor_cap);
    if (count > lim.minor_cap)
        throw limit_error("minor_cap", "minor count " + std::to_string(count) +
                          " exceeds minor_cap " + std::to_string(lim.minor_cap));
    if (m.rows > 31) throw limit_error("minor_cap", "presentation too tall for minors");

    // iterate r-subsets of columns
    std::vector<int> idx(m.rows);
    for (int i = 0; i < m.rows; ++i) idx[i] = i;
    while (true) {
        Polynomial d = minor_det(m, idx, ring);
        if (!d.is_zero()) {
            d = d.normalized_unit();
            if (std::find(out.gens.begin(), out.gens.end(), d) == out.gens.end())
                out.gens.push_back(std::move(d));
        }
        int i = m.rows - 1;
        while (i >= 0 && idx[i] == m.cols - m.rows + i) --i;
        if (i < 0) break;
        ++idx[i];
        for (int j = i + 1; j < m.rows; ++j) idx[j] = idx[j - 1] + 1;
    }
    for (const auto& g : ring.ideal()) out.gens.push_back(g);
    return out;
}

int krull_dim_monomial(const std::vector<Monomial>& gens, int nvars) {
    if (nvars > 24) throw invariant_error("too many variables for subset enumeration");
    for (const auto& g : gens)
        if (g.is_one()) return -1; // unit ideal
    int best = -1;
    for (std::uint32_t u = 0; u < (1u << nvars); ++u) {
        bool independent = true;
        for (const auto& g : gens) {
            bool inside = true; // support(g) ⊆ u
            for (int v = 0; v < nvars; ++v)
                if (g[v] > 0 && !(u >> v & 1)) {
                    inside = false;
                    break;
                }
            if (inside) {
                independent = false;
                break;
            }
        }
        if (independent) best = std::max(best, __builtin_popcount(u));
    }
    return best;
}

std::optional<int> krull_dim(const Ideal& J, int nvars, const Limits& lim) {
    GroebnerBasis gb = ideal_gb(J, lim);
    std::vector<Monomial> lt;
    for (const auto& g : gb.gens) lt.push_back(g[0].lead().mono);
    int d = krull_dim_monomial(lt, nvars);
    if (d < 0) return std::nullopt;
    return d;
}

std::optional<int> krull_dim(const Ideal& J, const Limits& lim) {
    if (J.gens.empty()) throw invariant_error("krull_dim needs the ambient arity; pass I gens");
    return krull_dim(J, J.gens[0].nvars(), lim);
}

namespace {

// dim coker over R via the leading-term module of [A | I x id] in S^rows:
// the quotient has the same Hilbert function as by one initial-module
// degeneration per component, hence the same dimension.
ModuleDim module_dim_initial(const Presentation& M, const Limits& lim) {
    const PolyMatrix& m = M.matrix();
    const QuotientRing& ring = *M.ring();
    if (m.rows == 0) return {true, 0};
    std::vector<ModVec> gens;
    for (int c = 0; c < m.cols; ++c) {
        ModVec g = m.column(c, ring.nvars(), ring.field(), ring.order());
        if (!g.is_zero()) gens.push_back(std::move(g));
    }
    for (const auto& ig : ring.ideal_gb().gens)
        for (int j = 0; j < m.rows; ++j) {
            ModVec g(m.rows, ring.nvars(), ring.field(), ring.order());
            g.set(j, ig[0]);
            gens.push_back(std::move(g));
        }
    std::vector<std::vector<Monomial>> lt(m.rows);
    if (!gens.empty()) {
        GroebnerBasis gb = buchberger(std::move(gens), lim, m.row_deg);
        for (const auto& g : gb.gens) {
            auto l = g.lead();
            lt[l.comp].push_back(l.mono);
        }
    }
    ModuleDim out{true, 0};
    for (int j = 0; j < m.rows; ++j) {
        int d = krull_dim_monomial(lt[j], ring.nvars());
        if (d >= 0) {
            out.empty = false;
            out.dim = std::max(out.dim, d);
        }
    }
    return out;
}

} // namespace

ModuleDim module_dim(const Presentation& M, const Limits& lim) {
    const PolyMatrix& m = M.matrix();
    if (m.rows > 0 && m.cols >= m.rows &&
        binomial_capped(m.cols, m.rows, lim.minor_cap) > lim.minor_cap)
        return module_dim_initial(M, lim);
    Ideal f = fitting_ideal_0(M, lim);
    auto d = krull_dim(f, lim);
    if (!d) return {true, 0};
    return {false, *d};
}

Support make_support(const Presentation& M, const Limits& lim) {
    Support s;
    s.ring = M.ring();
    s.fitt0 = fitting_ideal_0(M, lim);
    s.gb = ideal_gb(s.fitt0, lim);
    return s;
}

bool supp_subset(const Support& A, const Support& B, const Limits& lim) {
    // V(A) ⊆ V(B) iff B.fitt0 ⊆ sqrt(A.fitt0)
    for (const auto& g : B.fitt0.gens)
        if (!radical_membership(g, A.gb, lim)) return false;
    return true;
}

bool supp_equal(const Support& A, const Support& B, const Limits& lim) {
    return supp_subset(A, B, lim) && supp_subset(B, A, lim);
}

bool supp_is_full(const Support& A, const Limits& lim) {
    const GroebnerBasis& gbI = A.ring->ideal_gb();
    for (const auto& g : A.fitt0.gens)
        if (!radical_membership(g, gbI, lim)) return false;
    return true;
}

PrimeList minimal_primes_monomial(const Ideal& J, int nvars, const FieldSpec& field,
                                  const MonomialOrder& order) {
    if (!J.is_monomial()) throw invariant_error("minimal_primes_monomial needs monomial input");
    if (nvars > 24) throw invariant_error("too many variables for subset enumeration");
    std::vector<Monomial> gens;
    for (const auto& g : J.gens)
        if (!g.is_zero()) {
            if (g.lead().mono.is_one()) throw invariant_error("unit monomial ideal has no primes");
            gens.push_back(g.lead().mono);
        }
    std::vector<std::uint32_t> covers;
    for (std::uint32_t u = 0; u < (1u << nvars); ++u) {
        bool cover = true;
        for (const auto& g : gens) {
            bool meets = false;
            for (int v = 0; v < nvars; ++v)
                if (g[v] > 0 && (u >> v & 1)) {
                    meets = true;
                    break;
                }
            if (!meets) {
                cover = false;
                break;
            }
        }
        if (cover) covers.push_back(u);
    }
    PrimeList out;
    out.provenance = PrimeProvenance::ComputedMonomial;
    out.primality_certified = true;
    for (std::uint32_t u : covers) {
        bool minimal = true;
        for (std::uint32_t w : covers)
            if (w != u && (w & u) == w) {
                minimal = false;
                break;
            }
        if (!minimal) continue;
        Ideal p;
        for (int v = 0; v < nvars; ++v)
            if (u >> v & 1) {
                std::vector<int> e(nvars, 0);
                e[v] = 1;
                p.gens.push_back(Polynomial::term(Monomial(e), Coeff::one(field), order));
            }
        out.primes.push_back(std::move(p));
    }
    return out;
}

PrimeList verify_declared_min_primes(const QuotientRing& ring, const Limits& lim) {
    const auto& declared = ring.declared_min_primes();
    if (declared.empty()) throw invariant_error("no declared minimal primes");
    std::vector<Ideal> primes;
    std::vector<GroebnerBasis> gbs;
    for (const auto& gens : declared) {
        primes.push_back(Ideal{gens});
        gbs.push_back(ideal_gb(primes.back(), lim));
    }
    // (1) I contained in every declared prime (radical containment)
    for (std::size_t j = 0; j < primes.size(); ++j)
        for (const auto& g : ring.ideal())
            if (!radical_membership(g, gbs[j], lim))
                throw invariant_error("declared prime #" + std::to_string(j + 1) +
                                      " fails check (1): some generator of I is not in it");
    // (2) sqrt of the intersection equals sqrt(I)
    Ideal inter = primes[0];
    for (std::size_t j = 1; j < primes.size(); ++j)
        inter = ideal_intersection(inter, primes[j], lim);
    for (const auto& g : inter.gens)
        if (!radical_membership(g, ring.ideal_gb(), lim))
            throw invariant_error("declared primes fail check (2): intersection exceeds sqrt(I)");
    // (3) pairwise incomparability
    for (std::size_t i = 0; i < primes.size(); ++i)
        for (std::size_t j = 0; j < primes.size(); ++j) {
            if (i == j) continue;
            bool contained = true;
            for (const auto& g : primes[i].gens)
                if (!radical_membership(g, gbs[j], lim)) {
                    contained = false;
                    break;
                }
            if (contained)
                throw invariant_error("declared primes fail check (3): prime #" +
                                      std::to_string(i + 1) + " lies inside prime #" +
                                      std::to_string(j + 1));
        }
    PrimeList out;
    out.primes = std::move(primes);
    out.provenance = PrimeProvenance::DeclaredVerified;
    out.primality_certified = false;
    return out;
}

std::optional<PrimeList> minimal_primes_of_ring(const QuotientRing& ring, const Limits& lim,
                                                std::string* why_not) {
    bool monomial = true;
    for (const auto& g : ring.ideal())
        if (g.size() > 1) monomial = false;
    if (monomial)
        return minimal_primes_monomial(Ideal{ring.ideal()}, ring.nvars(), ring.field(),
                                       ring.order());
    if (!ring.declared_min_primes().empty()) {
        try {
            return verify_declared_min_primes(ring, lim);
        } catch (const invariant_error& e) {
            if (why_not) *why_not = e.what();
            return std::nullopt;
        }
    }
    if (why_not) *why_not = "ideal is not monomial and no minimal primes were declared";
    return std::nullopt;
}

namespace {

int dim_with_ideal(const Ideal& p, const QuotientRing& ring, const Limits& lim) {
    Ideal sum = p;
    for (const auto& g : ring.ideal()) sum.gens.push_back(g);
    if (sum.gens.empty()) return ring.nvars();
    auto d = krull_dim(sum, lim);
    if (!d) throw invariant_error("prime candidate is the unit ideal");
    return *d;
}

} // namespace

int height(const Ideal& p, const PrimeList& minn, const QuotientRing& ring, const Limits& lim) {
    GroebnerBasis gbp = ideal_gb(p, lim);
    int dp = dim_with_ideal(p, ring, lim);
    int best = -1;
    for (const auto& q : minn.primes) {
        bool inside = true;
        for (const auto& g : q.gens)
            if (!radical_membership(g, gbp, lim)) {
                inside = false;
                break;
            }
        if (!inside) continue;
        best = std::max(best, dim_with_ideal(q, ring, lim) - dp);
    }
    if (best < 0) throw invariant_error("no minimal prime contained in the given prime");
    return best;
}

ContainmentCheck min_primes_containment_check(const Support& A, const PrimeList& minn,
                                              const Limits& lim) {
    ContainmentCheck out;
    std::vector<GroebnerBasis> gbs;
    for (const auto& p : minn.primes) gbs.push_back(ideal_gb(p, lim));
    for (std::size_t j = 0; j < minn.primes.size(); ++j) {
        bool touched = true;
        for (const auto& g : A.fitt0.gens)
            if (!radical_membership(g, gbs[j], lim)) {
                touched = false;
                break;
            }
        if (touched) out.touched.push_back(int(j));
    }
    if (out.touched.empty()) {
        // intersection over the empty set is (1): equality holds only for
        // the zero module
        out.ok = A.gb.contains_unit();
        return out;
    }
    Ideal inter = minn.primes[out.touched[0]];
    for (std::size_t t = 1; t < out.touched.size(); ++t)
        inter = ideal_intersection(inter, minn.primes[out.touched[t]], lim);
    out.ok = true;
    for (const auto& g : inter.gens)
        if (!radical_membership(g, A.gb, lim)) {
            out.ok = false;
            break;
        }
    return out;
}

} // namespace syz
