#include "syz/ideal_ops.hpp"

namespace syz {

bool Ideal::is_monomial() const {
    for (const auto& g : gens)
        if (g.size() > 1) return false;
    return true;
}

GroebnerBasis ideal_gb(const Ideal& J, const Limits& lim) { return gb_of_ideal(J.gens, lim); }

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gbJ) {
    return normal_form(f, gbJ).is_zero();
}

bool ideal_membership(const Polynomial& f, const Ideal& J, const Limits& lim) {
    return ideal_membership(f, ideal_gb(J, lim));
}

namespace {

bool basis_is_monomial(const GroebnerBasis& gb) {
    for (const auto& g : gb.gens)
        if (g[0].size() > 1) return false;
    return true;
}

// monomial case: f (a monomial) lies in sqrt(J) iff some generator's support
// is contained in f's support
bool monomial_radical_membership(const Monomial& f, const GroebnerBasis& gbJ) {
    for (const auto& g : gbJ.gens) {
        const Monomial& m = g[0].lead().mono;
        bool contained = true;
        for (int i = 0; i < m.nvars(); ++i)
            if (m[i] > 0 && f[i] == 0) {
                contained = false;
                break;
            }
        if (contained) return true;
    }
    return false;
}

Polynomial to_ext(const Polynomial& p, const MonomialOrder& ext_order) {
    return p.insert_var_front().with_order(ext_order);
}

Polynomial from_ext(const Polynomial& p, const MonomialOrder& base_order) {
    return p.drop_var_front().with_order(base_order);
}

Polynomial tag_var(const Polynomial& sample_ext) {
    std::vector<int> e(sample_ext.nvars(), 0);
    e[0] = 1;
    return Polynomial::term(Monomial(std::move(e)), Coeff::one(sample_ext.field()),
                            sample_ext.order());
}

} // namespace

bool radical_membership(const Polynomial& f, const GroebnerBasis& gbJ, const Limits& lim) {
    if (f.is_zero()) return true;
    if (gbJ.gens.empty()) return false; // sqrt(0) in S
    if (ideal_membership(f, gbJ)) return true;
    if (f.size() == 1 && basis_is_monomial(gbJ))
        return monomial_radical_membership(f.lead().mono, gbJ);
    // Rabinowitsch in S[t], t prepended
    MonomialOrder ext{gbJ.order.kind};
    std::vector<Polynomial> gens;
    gens.reserve(gbJ.gens.size() + 1);
    for (const auto& g : gbJ.gens) gens.push_back(to_ext(g[0], ext));
    Polynomial fe = to_ext(f, ext);
    Polynomial one = Polynomial::constant(Coeff::one(f.field()), fe.nvars(), ext);
    gens.push_back(one - tag_var(fe) * fe);
    GroebnerBasis gb = gb_of_ideal(gens, lim);
    return gb.contains_unit();
}

bool radical_membership(const Polynomial& f, const Ideal& J, const Limits& lim) {
    return radical_membership(f, ideal_gb(J, lim), lim);
}

Ideal ideal_intersection(const Ideal& J, const Ideal& K, const Limits& lim) {
    if (J.gens.empty() || K.gens.empty()) return {};
    MonomialOrder ext{OrderKind::ElimFirstGrevlex};
    MonomialOrder base = J.gens[0].order();
    std::vector<Polynomial> gens;
    Polynomial t = tag_var(to_ext(J.gens[0], ext));
    Polynomial one = Polynomial::constant(Coeff::one(J.gens[0].field()), t.nvars(), ext);
    for (const auto& g : J.gens)
        if (!g.is_zero()) gens.push_back(t * to_ext(g, ext));
    for (const auto& g : K.gens)
        if (!g.is_zero()) gens.push_back((one - t) * to_ext(g, ext));
    if (gens.empty()) return {};
    GroebnerBasis gb = gb_of_ideal(gens, lim);
    Ideal result;
    for (const auto& g : gb.gens) {
        const Polynomial& p = g[0];
        if (p.lead().mono[0] == 0) // elimination order: lead free of t => all terms are
            result.gens.push_back(from_ext(p, base).normalized_unit());
    }
    return result;
}

Ideal ideal_quotient(const Ideal& J, const Polynomial& f, const Limits& lim) {
    if (f.is_zero()) throw invariant_error("ideal quotient by zero");
    Ideal inter = ideal_intersection(J, Ideal{{f}}, lim);
    Ideal result;
    for (const auto& g : inter.gens)
        result.gens.push_back(g.divide_exact(f).normalized_unit());
    return result;
}

Ideal annihilator_of_ideal_mod(const std::vector<Polynomial>& glist, const QuotientRing& ring,
                               const Limits& lim) {
    if (glist.empty()) throw invariant_error("annihilator of empty generator list");
    Ideal I{ring.ideal()};
    Ideal acc;
    bool have = false;
    for (const auto& g : glist) {
        if (g.is_zero()) continue; // (I : 0) = (1), neutral for the intersection
        Ideal q = ideal_quotient(I, g, lim);
        acc = have ? ideal_intersection(acc, q, lim) : q;
        have = true;
    }
    if (!have) return Ideal{{ring.one()}};
    return acc;
}

bool ideal_subset(const Ideal& J, const Ideal& K, const Limits& lim) {
    GroebnerBasis gbK = ideal_gb(K, lim);
    for (const auto& g : J.gens)
        if (!ideal_membership(g, gbK)) return false;
    return true;
}

bool ideal_equal(const Ideal& J, const Ideal& K, const Limits& lim) {
    return ideal_subset(J, K, lim) && ideal_subset(K, J, lim);
}

} // namespace syz
