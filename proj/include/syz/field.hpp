#ifndef SYZ_FIELD_HPP
#define SYZ_FIELD_HPP

#include <cstdint>
#include <string>

#include <gmpxx.h>

#include "syz/errors.hpp"

namespace syz {

// Coefficient field: exact rationals (p == 0) or the prime field F_p.
struct FieldSpec {
    std::uint32_t p = 0;

    bool is_rational() const { return p == 0; }
    void validate() const; // throws invariant_error unless p == 0 or p prime
    bool operator==(const FieldSpec&) const = default;
    std::string str() const { return p == 0 ? "q" : "p" + std::to_string(p); }
};

// Exact field element. All arithmetic is exact: mpq for characteristic 0,
// residues for F_p. Elements of different fields never mix.
class Coeff {
public:
    Coeff() = default;

    static Coeff zero(const FieldSpec& f);
    static Coeff one(const FieldSpec& f);
    static Coeff from_int(long v, const FieldSpec& f);
    static Coeff from_fraction(const mpz_class& num, const mpz_class& den, const FieldSpec& f);

    FieldSpec field() const { return FieldSpec{p_}; }
    bool is_zero() const;
    bool is_one() const;

    Coeff operator+(const Coeff& o) const;
    Coeff operator-(const Coeff& o) const;
    Coeff operator*(const Coeff& o) const;
    Coeff operator-() const;
    Coeff inv() const; // throws invariant_error on zero

    bool operator==(const Coeff& o) const;
    bool operator!=(const Coeff& o) const { return !(*this == o); }

    // Exact rational value (characteristic 0 only).
    const mpq_class& rational() const { return q_; }
    std::uint32_t residue() const { return r_; }

    std::string str() const;

private:
    std::uint32_t p_ = 0;
    std::uint32_t r_ = 0;
    mpq_class q_;

    void check_same(const Coeff& o) const;
};

} // namespace syz

#endif
