#include "syz/field.hpp"

namespace syz {

VerifyStats& VerifyStats::global() {
    static VerifyStats s;
    return s;
}

void VerifyStats::reset() {
    bases_built = 0;
    bases_verified = 0;
    spairs_verified = 0;
    spair_failures = 0;
    complexes_verified = 0;
    complex_failures = 0;
    minimality_failures = 0;
}

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    std::uint64_t s = std::uint64_t(a) + b;
    return std::uint32_t(s >= p ? s - p : s);
}

std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
    return std::uint32_t((std::uint64_t(a) * b) % p);
}

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    // extended Euclid on (a, p)
    std::int64_t t = 0, newt = 1, r = p, newr = a;
    while (newr != 0) {
        std::int64_t q = r / newr;
        std::int64_t tmp = t - q * newt;
        t = newt; newt = tmp;
        tmp = r - q * newr;
        r = newr; newr = tmp;
    }
    if (r != 1) throw invariant_error("not invertible mod p");
    if (t < 0) t += p;
    return std::uint32_t(t);
}

} // namespace

void FieldSpec::validate() const {
    if (p != 0 && !is_prime_u32(p))
        throw invariant_error("field characteristic " + std::to_string(p) + " is not prime");
}

Coeff Coeff::zero(const FieldSpec& f) {
    Coeff c;
    c.p_ = f.p;
    return c;
}

Coeff Coeff::one(const FieldSpec& f) {
    Coeff c;
    c.p_ = f.p;
    if (f.p == 0) c.q_ = 1;
    else c.r_ = 1 % f.p;
    return c;
}

Coeff Coeff::from_int(long v, const FieldSpec& f) {
    Coeff c;
    c.p_ = f.p;
    if (f.p == 0) {
        c.q_ = v;
    } else {
        long m = v % long(f.p);
        if (m < 0) m += f.p;
        c.r_ = std::uint32_t(m);
    }
    return c;
}

Coeff Coeff::from_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& f) {
    if (den == 0) throw parse_error("zero denominator");
    Coeff c;
    c.p_ = f.p;
    if (f.p == 0) {
        c.q_ = mpq_class(num) / mpq_class(den);
        c.q_.canonicalize();
    } else {
        mpz_class pm(f.p);
        mpz_class nm = num % pm; if (nm < 0) nm += pm;
        mpz_class dm = den % pm; if (dm < 0) dm += pm;
        if (dm == 0)
            throw parse_error("denominator not representable in " + f.str());
        std::uint32_t n = std::uint32_t(nm.get_ui());
        std::uint32_t d = std::uint32_t(dm.get_ui());
        c.r_ = mod_mul(n, mod_inv(d, f.p), f.p);
    }
    return c;
}

void Coeff::check_same(const Coeff& o) const {
    if (p_ != o.p_) throw invariant_error("mixed coefficient fields");
}

bool Coeff::is_zero() const { return p_ == 0 ? q_ == 0 : r_ == 0; }
bool Coeff::is_one() const { return p_ == 0 ? q_ == 1 : r_ == 1; }

Coeff Coeff::operator+(const Coeff& o) const {
    check_same(o);
    Coeff c;
    c.p_ = p_;
    if (p_ == 0) { c.q_ = q_ + o.q_; c.q_.canonicalize(); }
    else c.r_ = mod_add(r_, o.r_, p_);
    return c;
}

Coeff Coeff::operator-(const Coeff& o) const { return *this + (-o); }

Coeff Coeff::operator*(const Coeff& o) const {
    check_same(o);
    Coeff c;
    c.p_ = p_;
    if (p_ == 0) { c.q_ = q_ * o.q_; c.q_.canonicalize(); }
    else c.r_ = mod_mul(r_, o.r_, p_);
    return c;
}

Coeff Coeff::operator-() const {
    Coeff c;
    c.p_ = p_;
    if (p_ == 0) c.q_ = -q_;
    else c.r_ = r_ == 0 ? 0 : p_ - r_;
    return c;
}

Coeff Coeff::inv() const {
    if (is_zero()) throw invariant_error("inverse of zero");
    Coeff c;
    c.p_ = p_;
    if (p_ == 0) c.q_ = 1 / q_;
    else c.r_ = mod_inv(r_, p_);
    return c;
}

bool Coeff::operator==(const Coeff& o) const {
    if (p_ != o.p_) return false;
    return p_ == 0 ? q_ == o.q_ : r_ == o.r_;
}

std::string Coeff::str() const {
    if (p_ == 0) return q_.get_str();
    return std::to_string(r_);
}

} // namespace syz
