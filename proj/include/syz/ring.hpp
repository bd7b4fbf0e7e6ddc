#ifndef SYZ_RING_HPP
#define SYZ_RING_HPP

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "syz/groebner.hpp"
#include "syz/polynomial.hpp"

namespace syz {

// The quotient ring R = S/I: polynomial ring S = k[variables] with a fixed
// global monomial order, a homogeneous ideal I, and optionally a declared
// list of minimal primes (verified later by the geometry layer).
//
// Immutable after construction; the Groebner basis of I is computed eagerly.
class QuotientRing {
public:
    QuotientRing(std::vector<std::string> variables, FieldSpec field,
                 std::vector<Polynomial> ideal_gens,
                 MonomialOrder order = {OrderKind::Grevlex},
                 std::vector<std::vector<Polynomial>> declared_min_primes = {},
                 const Limits& lim = {});

    int nvars() const { return int(names_.size()); }
    const std::vector<std::string>& names() const { return names_; }
    const FieldSpec& field() const { return field_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Polynomial>& ideal() const { return ideal_; }
    const GroebnerBasis& ideal_gb() const { return gb_; }
    bool ideal_is_monomial() const { return ideal_monomial_; }
    const std::vector<std::vector<Polynomial>>& declared_min_primes() const {
        return declared_primes_;
    }

    Polynomial nf_mod_ideal(const Polynomial& p) const;

    Polynomial zero() const { return Polynomial::zero(nvars(), field_, ord_); }
    Polynomial one() const { return Polynomial::constant(Coeff::one(field_), nvars(), ord_); }
    Polynomial var(int i, int power = 1) const;

    // Polynomial text grammar: rational or integer coefficients, + - * ^,
    // parentheses; juxtaposed variables allowed only when every variable
    // name is a single letter.
    Polynomial parse(const std::string& text) const;
    std::string str(const Polynomial& p) const { return p.str(names_); }

private:
    std::vector<std::string> names_;
    FieldSpec field_;
    MonomialOrder ord_;
    std::vector<Polynomial> ideal_;
    std::vector<std::vector<Polynomial>> declared_primes_;
    GroebnerBasis gb_;
    bool ideal_monomial_ = true;
    bool single_letter_vars_ = true;
};

using RingPtr = std::shared_ptr<const QuotientRing>;

Polynomial parse_poly(const std::string& text, const QuotientRing& ring);

} // namespace syz

#endif
