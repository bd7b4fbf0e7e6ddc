#include "syz/monomial.hpp"

#include <numeric>

#include "syz/errors.hpp"

namespace syz {

Monomial::Monomial(std::vector<int> exps) : e_(std::move(exps)) {
    deg_ = 0;
    for (int x : e_) {
        if (x < 0) throw invariant_error("negative exponent");
        deg_ += x;
    }
}

Monomial Monomial::operator*(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) r.e_[i] += o.e_[i];
    r.deg_ += o.deg_;
    return r;
}

bool Monomial::divides(const Monomial& o) const {
    if (deg_ > o.deg_) return false;
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > o.e_[i]) return false;
    return true;
}

Monomial Monomial::div(const Monomial& o) const {
    Monomial r = *this;
    for (int i = 0; i < nvars(); ++i) {
        r.e_[i] -= o.e_[i];
        if (r.e_[i] < 0) throw invariant_error("inexact monomial division");
    }
    r.deg_ -= o.deg_;
    return r;
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    r.deg_ = 0;
    for (int i = 0; i < a.nvars(); ++i) {
        r.e_[i] = a.e_[i] > b.e_[i] ? a.e_[i] : b.e_[i];
        r.deg_ += r.e_[i];
    }
    return r;
}

bool Monomial::coprime(const Monomial& o) const {
    for (int i = 0; i < nvars(); ++i)
        if (e_[i] > 0 && o.e_[i] > 0) return false;
    return true;
}

Monomial Monomial::insert_var_front() const {
    std::vector<int> e;
    e.reserve(e_.size() + 1);
    e.push_back(0);
    e.insert(e.end(), e_.begin(), e_.end());
    Monomial r;
    r.e_ = std::move(e);
    r.deg_ = deg_;
    return r;
}

Monomial Monomial::drop_var_front() const {
    Monomial r;
    r.e_.assign(e_.begin() + 1, e_.end());
    r.deg_ = deg_ - e_[0];
    return r;
}

namespace {

int cmp_grevlex(const std::vector<int>& a, const std::vector<int>& b, int dega, int degb, int lo) {
    if (dega != degb) return dega < degb ? -1 : 1;
    // equal degree: a > b iff last nonzero entry of a-b is negative
    for (int i = int(a.size()) - 1; i >= lo; --i) {
        int d = a[i] - b[i];
        if (d != 0) return d < 0 ? 1 : -1;
    }
    return 0;
}

int cmp_lex(const std::vector<int>& a, const std::vector<int>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        int d = a[i] - b[i];
        if (d != 0) return d > 0 ? 1 : -1;
    }
    return 0;
}

} // namespace

int MonomialOrder::cmp(const Monomial& a, const Monomial& b) const {
    if (a.nvars() != b.nvars()) throw invariant_error("monomial arity mismatch");
    const auto& ea = a.exponents();
    const auto& eb = b.exponents();
    switch (kind) {
        case OrderKind::Grevlex:
            return cmp_grevlex(ea, eb, a.deg(), b.deg(), 0);
        case OrderKind::Lex:
            return cmp_lex(ea, eb);
        case OrderKind::ElimFirstGrevlex: {
            if (ea[0] != eb[0]) return ea[0] < eb[0] ? -1 : 1;
            return cmp_grevlex(ea, eb, a.deg() - ea[0], b.deg() - eb[0], 1);
        }
    }
    return 0;
}

std::string MonomialOrder::str() const {
    switch (kind) {
        case OrderKind::Grevlex: return "grevlex";
        case OrderKind::Lex: return "lex";
        case OrderKind::ElimFirstGrevlex: return "elim1-grevlex";
    }
    return "?";
}

} // namespace syz
