#include "syz/groebner.hpp"

#include <algorithm>
#include <set>

namespace syz {

bool GroebnerBasis::contains_unit() const {
    for (const auto& g : gens) {
        auto l = g.lead();
        if (l.mono.is_one()) return true;
    }
    return false;
}

ModVec normal_form(const ModVec& f, const std::vector<ModVec>& basis) {
    ModVec work = f;
    ModVec rem(f.rank(), f.nvars(), f.field(), f.order());
    while (!work.is_zero()) {
        auto l = work.lead();
        bool reduced = false;
        for (const auto& g : basis) {
            if (g.is_zero()) continue;
            auto gl = g.lead();
            if (gl.comp != l.comp || !gl.mono.divides(l.mono)) continue;
            Coeff c = l.coeff * gl.coeff.inv();
            work = work - g.times_term(l.mono.div(gl.mono), c);
            reduced = true;
            break;
        }
        if (!reduced) {
            ModVec t(f.rank(), f.nvars(), f.field(), f.order());
            t.set(l.comp, Polynomial::term(l.mono, l.coeff, f.order()));
            rem = rem + t;
            work.pop_lead();
        }
    }
    return rem;
}

ModVec normal_form(const ModVec& f, const GroebnerBasis& gb) {
    return normal_form(f, gb.gens);
}

namespace {

struct Pair {
    int deg;
    int i, j;
    Monomial lcm;
    bool operator<(const Pair& o) const {
        if (deg != o.deg) return deg < o.deg;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

ModVec spair(const ModVec& a, const ModVec& b, const Monomial& lcm) {
    auto la = a.lead();
    auto lb = b.lead();
    // cross-multiplied combination, no inversions
    return a.times_term(lcm.div(la.mono), lb.coeff) -
           b.times_term(lcm.div(lb.mono), la.coeff);
}

// minimal basis (drop lead-redundant) then tail-reduce; deterministic order
std::vector<ModVec> auto_reduce(std::vector<ModVec> basis) {
    std::erase_if(basis, [](const ModVec& g) { return g.is_zero(); });
    std::sort(basis.begin(), basis.end(), [](const ModVec& a, const ModVec& b) {
        auto la = a.lead();
        auto lb = b.lead();
        if (la.comp != lb.comp) return la.comp < lb.comp;
        int c = a.order().cmp(la.mono, lb.mono);
        if (c != 0) return c < 0;
        return false;
    });
    std::vector<ModVec> kept;
    for (auto& g : basis) {
        auto l = g.lead();
        bool redundant = false;
        for (const auto& k : kept) {
            auto kl = k.lead();
            if (kl.comp == l.comp && kl.mono.divides(l.mono)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) kept.push_back(std::move(g));
    }
    for (std::size_t i = 0; i < kept.size(); ++i) {
        std::vector<ModVec> others;
        others.reserve(kept.size() - 1);
        for (std::size_t j = 0; j < kept.size(); ++j)
            if (j != i) others.push_back(kept[j]);
        kept[i] = normal_form(kept[i], others).normalized_unit();
        if (kept[i].is_zero()) throw invariant_error("auto-reduce produced zero from minimal basis");
    }
    return kept;
}

} // namespace

GroebnerBasis buchberger(std::vector<ModVec> gens, const Limits& lim, std::vector<int> twists) {
    std::erase_if(gens, [](const ModVec& g) { return g.is_zero(); });
    if (gens.empty()) throw invariant_error("buchberger on empty generating set");

    GroebnerBasis gb;
    gb.order = gens[0].order();
    gb.rank = gens[0].rank();
    gb.nvars = gens[0].nvars();
    gb.field = gens[0].field();
    if (twists.empty()) twists.assign(gb.rank, 0);

    std::vector<ModVec> basis;
    for (auto& g : gens) basis.push_back(g.normalized_unit());

    auto pair_deg = [&](const Monomial& lcm, int comp) { return lcm.deg() + twists[comp]; };

    std::set<Pair> queue;
    std::set<std::pair<int, int>> done;
    auto push_pairs = [&](int n) {
        auto ln = basis[n].lead();
        for (int i = 0; i < n; ++i) {
            auto li = basis[i].lead();
            if (li.comp != ln.comp) continue;
            Monomial l = Monomial::lcm(li.mono, ln.mono);
            queue.insert({pair_deg(l, ln.comp), i, n, l});
        }
    };
    for (int n = 0; n < int(basis.size()); ++n) push_pairs(n);

    std::uint64_t processed = 0;
    while (!queue.empty()) {
        Pair p = *queue.begin();
        queue.erase(queue.begin());
        if (++processed > lim.pair_cap)
            throw limit_error("pair_cap", "S-pair cap exceeded (" +
                              std::to_string(lim.pair_cap) + " pairs)");
        if (p.deg > lim.degree_cap)
            throw limit_error("degree_cap", "S-pair degree cap exceeded (degree " +
                              std::to_string(p.deg) + ")");
        done.insert({p.i, p.j});

        auto li = basis[p.i].lead();
        auto lj = basis[p.j].lead();
        // product criterion: valid for ideals (rank 1) only
        if (gb.rank == 1 && li.mono.coprime(lj.mono)) continue;
        // chain criterion
        bool skip = false;
        for (int k = 0; k < int(basis.size()); ++k) {
            if (k == p.i || k == p.j) continue;
            auto lk = basis[k].lead();
            if (lk.comp != li.comp || !lk.mono.divides(p.lcm)) continue;
            auto key1 = std::minmax(p.i, k);
            auto key2 = std::minmax(p.j, k);
            if (done.count({key1.first, key1.second}) && done.count({key2.first, key2.second})) {
                skip = true;
                break;
            }
        }
        if (skip) continue;

        ModVec h = normal_form(spair(basis[p.i], basis[p.j], p.lcm), basis);
        if (h.is_zero()) continue;
        basis.push_back(h.normalized_unit());
        push_pairs(int(basis.size()) - 1);
    }

    gb.gens = auto_reduce(std::move(basis));
    VerifyStats::global().bases_built++;
    if (lim.verify_bases) verify_basis(gb);
    return gb;
}

void verify_basis(const GroebnerBasis& gb) {
    auto& stats = VerifyStats::global();
    for (std::size_t i = 0; i < gb.gens.size(); ++i) {
        for (std::size_t j = i + 1; j < gb.gens.size(); ++j) {
            auto li = gb.gens[i].lead();
            auto lj = gb.gens[j].lead();
            if (li.comp != lj.comp) continue;
            Monomial l = Monomial::lcm(li.mono, lj.mono);
            ModVec h = normal_form(spair(gb.gens[i], gb.gens[j], l), gb.gens);
            stats.spairs_verified++;
            if (!h.is_zero()) {
                stats.spair_failures++;
                throw invariant_error("S-pair failed to reduce to zero");
            }
        }
    }
    stats.bases_verified++;
}

GroebnerBasis gb_of_ideal(const std::vector<Polynomial>& gens, const Limits& lim) {
    std::vector<ModVec> v;
    for (const auto& g : gens)
        if (!g.is_zero()) v.push_back(ModVec({g}));
    if (v.empty()) {
        // zero ideal: empty basis
        GroebnerBasis gb;
        if (!gens.empty()) {
            gb.order = gens[0].order();
            gb.nvars = gens[0].nvars();
            gb.field = gens[0].field();
        }
        gb.rank = 1;
        return gb;
    }
    return buchberger(std::move(v), lim);
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (gb.rank != 1) throw invariant_error("polynomial normal form needs rank-1 basis");
    if (gb.gens.empty() || f.is_zero()) return f;
    return normal_form(ModVec({f}), gb.gens)[0];
}

} // namespace syz
