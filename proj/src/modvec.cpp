#include "syz/modvec.hpp"

#include "syz/errors.hpp"

namespace syz {

ModVec::ModVec(int rank, int nvars, const FieldSpec& f, const MonomialOrder& o)
    : c_(rank, Polynomial::zero(nvars, f, o)), field_(f), ord_(o), nvars_(nvars) {}

ModVec::ModVec(std::vector<Polynomial> comps) : c_(std::move(comps)) {
    if (c_.empty()) throw invariant_error("empty module element");
    field_ = c_[0].field();
    ord_ = c_[0].order();
    nvars_ = c_[0].nvars();
}

void ModVec::set(int i, Polynomial p) { c_[i] = std::move(p); }

bool ModVec::is_zero() const {
    for (const auto& p : c_)
        if (!p.is_zero()) return false;
    return true;
}

ModVec::Lead ModVec::lead() const {
    for (int i = 0; i < rank(); ++i)
        if (!c_[i].is_zero())
            return {i, c_[i].lead().mono, c_[i].lead().coeff};
    throw invariant_error("lead of zero module element");
}

ModVec ModVec::operator+(const ModVec& o) const {
    if (rank() != o.rank()) throw invariant_error("module rank mismatch");
    ModVec r = *this;
    for (int i = 0; i < rank(); ++i) r.c_[i] = c_[i] + o.c_[i];
    return r;
}

ModVec ModVec::operator-(const ModVec& o) const {
    if (rank() != o.rank()) throw invariant_error("module rank mismatch");
    ModVec r = *this;
    for (int i = 0; i < rank(); ++i) r.c_[i] = c_[i] - o.c_[i];
    return r;
}

ModVec ModVec::times_term(const Monomial& m, const Coeff& c) const {
    ModVec r = *this;
    for (int i = 0; i < rank(); ++i) r.c_[i] = c_[i].times_term(m, c);
    return r;
}

ModVec ModVec::scaled(const Coeff& c) const { return times_term(Monomial(nvars_), c); }

ModVec ModVec::normalized_unit() const {
    if (is_zero()) return *this;
    if (!field_.is_rational()) {
        Lead l = lead();
        return scaled(l.coeff.inv());
    }
    // rational: integer-primitive across all components, positive lead
    mpz_class denlcm = 1, numgcd = 0;
    for (const auto& p : c_)
        for (const auto& t : p.terms())
            mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(),
                    t.coeff.rational().get_den().get_mpz_t());
    for (const auto& p : c_)
        for (const auto& t : p.terms()) {
            mpz_class n = t.coeff.rational().get_num() *
                          (denlcm / t.coeff.rational().get_den());
            mpz_gcd(numgcd.get_mpz_t(), numgcd.get_mpz_t(), n.get_mpz_t());
        }
    if (numgcd == 0) numgcd = 1;
    mpq_class scale(denlcm, numgcd);
    scale.canonicalize();
    if (lead().coeff.rational() < 0) scale = -scale;
    return scaled(Coeff::from_fraction(scale.get_num(), scale.get_den(), field_));
}

ModVec::Homogeneity ModVec::homogeneous_degree(const std::vector<int>& twists) const {
    Homogeneity r;
    for (int i = 0; i < rank(); ++i) {
        if (c_[i].is_zero()) continue;
        auto h = c_[i].homogeneous_degree();
        if (h.mixed) return {false, std::nullopt};
        int di = h.degree + twists[i];
        if (r.degree && *r.degree != di) return {false, std::nullopt};
        r.degree = di;
    }
    return r;
}

void ModVec::pop_lead() {
    for (int i = 0; i < rank(); ++i) {
        if (c_[i].is_zero()) continue;
        std::vector<Term> ts(c_[i].terms().begin() + 1, c_[i].terms().end());
        c_[i] = Polynomial::from_terms(std::move(ts), nvars_, field_, ord_);
        return;
    }
    throw invariant_error("pop_lead of zero module element");
}

ModVec ModVec::slice(int from, int to) const {
    ModVec r(to - from, nvars_, field_, ord_);
    for (int i = from; i < to; ++i) r.c_[i - from] = c_[i];
    return r;
}

} // namespace syz
