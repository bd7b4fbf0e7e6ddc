#include "syz/polynomial.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "syz/errors.hpp"

namespace syz {

Polynomial Polynomial::zero(int nvars, const FieldSpec& f, const MonomialOrder& o) {
    Polynomial p;
    p.nvars_ = nvars;
    p.field_ = f;
    p.ord_ = o;
    return p;
}

Polynomial Polynomial::constant(const Coeff& c, int nvars, const MonomialOrder& o) {
    Polynomial p = zero(nvars, c.field(), o);
    if (!c.is_zero()) p.t_.push_back({Monomial(nvars), c});
    return p;
}

Polynomial Polynomial::term(const Monomial& m, const Coeff& c, const MonomialOrder& o) {
    Polynomial p = zero(m.nvars(), c.field(), o);
    if (!c.is_zero()) p.t_.push_back({m, c});
    return p;
}

Polynomial Polynomial::from_terms(std::vector<Term> ts, int nvars, const FieldSpec& f,
                                  const MonomialOrder& o) {
    Polynomial p = zero(nvars, f, o);
    std::sort(ts.begin(), ts.end(),
              [&](const Term& a, const Term& b) { return o.cmp(a.mono, b.mono) > 0; });
    for (auto& t : ts) {
        if (t.coeff.is_zero()) continue;
        if (!p.t_.empty() && p.t_.back().mono == t.mono) {
            p.t_.back().coeff = p.t_.back().coeff + t.coeff;
            if (p.t_.back().coeff.is_zero()) p.t_.pop_back();
        } else {
            p.t_.push_back(std::move(t));
        }
    }
    return p;
}

const Term& Polynomial::lead() const {
    if (t_.empty()) throw invariant_error("lead of zero polynomial");
    return t_.front();
}

int Polynomial::deg() const {
    int d = -1;
    for (const auto& t : t_) d = std::max(d, t.mono.deg());
    return d;
}

void Polynomial::check_compatible(const Polynomial& o) const {
    if (nvars_ != o.nvars_) throw invariant_error("polynomial variable-count mismatch");
    if (!(field_ == o.field_)) throw invariant_error("polynomial field mismatch");
    if (!(ord_ == o.ord_)) throw invariant_error("polynomial order mismatch");
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = zero(nvars_, field_, ord_);
    r.t_.reserve(t_.size() + o.t_.size());
    std::size_t i = 0, j = 0;
    while (i < t_.size() && j < o.t_.size()) {
        int c = ord_.cmp(t_[i].mono, o.t_[j].mono);
        if (c > 0) {
            r.t_.push_back(t_[i++]);
        } else if (c < 0) {
            r.t_.push_back(o.t_[j++]);
        } else {
            Coeff s = t_[i].coeff + o.t_[j].coeff;
            if (!s.is_zero()) r.t_.push_back({t_[i].mono, s});
            ++i; ++j;
        }
    }
    for (; i < t_.size(); ++i) r.t_.push_back(t_[i]);
    for (; j < o.t_.size(); ++j) r.t_.push_back(o.t_[j]);
    return r;
}

Polynomial Polynomial::operator-() const {
    Polynomial r = *this;
    for (auto& t : r.t_) t.coeff = -t.coeff;
    return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const { return *this + (-o); }

Polynomial Polynomial::times_term(const Monomial& m, const Coeff& c) const {
    Polynomial r = zero(nvars_, field_, ord_);
    if (c.is_zero()) return r;
    r.t_.reserve(t_.size());
    for (const auto& t : t_) {
        Coeff nc = t.coeff * c;
        if (!nc.is_zero()) r.t_.push_back({t.mono * m, nc});
    }
    return r;
}

Polynomial Polynomial::scaled(const Coeff& c) const { return times_term(Monomial(nvars_), c); }

Polynomial Polynomial::operator*(const Polynomial& o) const {
    check_compatible(o);
    Polynomial r = zero(nvars_, field_, ord_);
    const Polynomial& small = t_.size() <= o.t_.size() ? *this : o;
    const Polynomial& big = t_.size() <= o.t_.size() ? o : *this;
    for (const auto& t : small.t_)
        r = r + big.times_term(t.mono, t.coeff);
    return r;
}

bool Polynomial::operator==(const Polynomial& o) const {
    if (nvars_ != o.nvars_ || !(field_ == o.field_) || t_.size() != o.t_.size()) return false;
    for (std::size_t i = 0; i < t_.size(); ++i)
        if (t_[i].mono != o.t_[i].mono || t_[i].coeff != o.t_[i].coeff) return false;
    return true;
}

HomogeneityInfo Polynomial::homogeneous_degree() const {
    HomogeneityInfo h;
    if (t_.empty()) {
        h.is_zero = true;
        return h;
    }
    h.degree = t_.front().mono.deg();
    for (const auto& t : t_)
        if (t.mono.deg() != h.degree) {
            h.mixed = true;
            return h;
        }
    return h;
}

Coeff Polynomial::coeff_of(const Monomial& m) const {
    for (const auto& t : t_)
        if (t.mono == m) return t.coeff;
    return Coeff::zero(field_);
}

Coeff Polynomial::constant_term() const {
    if (!t_.empty() && t_.back().mono.is_one()) return t_.back().coeff;
    return Coeff::zero(field_);
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    if (divisor.is_zero()) throw invariant_error("division by zero polynomial");
    check_compatible(divisor);
    Polynomial rem = *this;
    Polynomial quot = zero(nvars_, field_, ord_);
    const Term& dl = divisor.lead();
    Coeff dinv = dl.coeff.inv();
    while (!rem.is_zero()) {
        const Term& rl = rem.lead();
        if (!dl.mono.divides(rl.mono))
            throw invariant_error("inexact polynomial division");
        Monomial m = rl.mono.div(dl.mono);
        Coeff c = rl.coeff * dinv;
        quot = quot + term(m, c, ord_);
        rem = rem - divisor.times_term(m, c);
    }
    return quot;
}

Polynomial Polynomial::monic() const {
    if (is_zero()) return *this;
    return scaled(lead().coeff.inv());
}

Polynomial Polynomial::normalized_unit() const {
    if (is_zero()) return *this;
    if (!field_.is_rational()) return monic();
    // rational: clear denominators, divide by content, positive lead
    mpz_class denlcm = 1, numgcd = 0;
    for (const auto& t : t_) {
        mpz_lcm(denlcm.get_mpz_t(), denlcm.get_mpz_t(),
                t.coeff.rational().get_den().get_mpz_t());
    }
    for (const auto& t : t_) {
        mpz_class n = t.coeff.rational().get_num() *
                      (denlcm / t.coeff.rational().get_den());
        mpz_gcd(numgcd.get_mpz_t(), numgcd.get_mpz_t(), n.get_mpz_t());
    }
    if (numgcd == 0) numgcd = 1;
    mpq_class scale(denlcm, numgcd);
    scale.canonicalize();
    if (lead().coeff.rational() < 0) scale = -scale;
    Coeff c = Coeff::from_fraction(scale.get_num(), scale.get_den(), field_);
    return scaled(c);
}

Polynomial Polynomial::with_order(const MonomialOrder& o) const {
    std::vector<Term> ts = t_;
    return from_terms(std::move(ts), nvars_, field_, o);
}

Polynomial Polynomial::insert_var_front() const {
    Polynomial r;
    r.nvars_ = nvars_ + 1;
    r.field_ = field_;
    r.ord_ = ord_;
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (const auto& t : t_) ts.push_back({t.mono.insert_var_front(), t.coeff});
    return from_terms(std::move(ts), r.nvars_, field_, ord_);
}

Polynomial Polynomial::drop_var_front() const {
    Polynomial r;
    r.nvars_ = nvars_ - 1;
    std::vector<Term> ts;
    ts.reserve(t_.size());
    for (const auto& t : t_) {
        if (t.mono[0] != 0) throw invariant_error("polynomial still uses eliminated variable");
        ts.push_back({t.mono.drop_var_front(), t.coeff});
    }
    return from_terms(std::move(ts), nvars_ - 1, field_, ord_);
}

std::string Polynomial::str(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& t : t_) {
        Coeff c = t.coeff;
        std::string cs = c.str();
        bool neg = false;
        if (!cs.empty() && cs[0] == '-') {
            neg = true;
            cs = cs.substr(1);
        }
        if (first) {
            if (neg) out << "-";
            first = false;
        } else {
            out << (neg ? " - " : " + ");
        }
        bool unit_coeff = (cs == "1");
        bool wrote = false;
        if (!unit_coeff || t.mono.is_one()) {
            out << cs;
            wrote = true;
        }
        for (int i = 0; i < t.mono.nvars(); ++i) {
            if (t.mono[i] == 0) continue;
            if (wrote) out << "*";
            out << names[i];
            if (t.mono[i] > 1) out << "^" << t.mono[i];
            wrote = true;
        }
    }
    return out.str();
}

} // namespace syz
