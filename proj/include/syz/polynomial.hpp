#ifndef SYZ_POLYNOMIAL_HPP
#define SYZ_POLYNOMIAL_HPP

#include <optional>
#include <string>
#include <vector>

#include "syz/field.hpp"
#include "syz/monomial.hpp"

namespace syz {

struct Term {
    Monomial mono;
    Coeff coeff;
};

// Result of homogeneous_degree: a single degree, "zero" (degree of 0 is any),
// or mixed degrees.
struct HomogeneityInfo {
    bool is_zero = false;
    bool mixed = false;
    int degree = 0;

    bool is_homogeneous() const { return !mixed; }
};

// Exact multivariate polynomial in canonical form: terms strictly descending
// under the ambient order, no zero coefficients. The order and field travel
// with the value so canonical form is self-contained.
class Polynomial {
public:
    Polynomial() = default;
    static Polynomial zero(int nvars, const FieldSpec& f, const MonomialOrder& o);
    static Polynomial constant(const Coeff& c, int nvars, const MonomialOrder& o);
    static Polynomial term(const Monomial& m, const Coeff& c, const MonomialOrder& o);
    // from possibly unsorted/duplicated terms
    static Polynomial from_terms(std::vector<Term> ts, int nvars, const FieldSpec& f,
                                 const MonomialOrder& o);

    bool is_zero() const { return t_.empty(); }
    int nvars() const { return nvars_; }
    const FieldSpec& field() const { return field_; }
    const MonomialOrder& order() const { return ord_; }
    const std::vector<Term>& terms() const { return t_; }
    std::size_t size() const { return t_.size(); }

    const Term& lead() const; // throws on zero
    int deg() const;          // max total degree; -1 for zero

    Polynomial operator+(const Polynomial& o) const;
    Polynomial operator-(const Polynomial& o) const;
    Polynomial operator*(const Polynomial& o) const;
    Polynomial operator-() const;
    Polynomial scaled(const Coeff& c) const;
    Polynomial times_term(const Monomial& m, const Coeff& c) const;

    bool operator==(const Polynomial& o) const;
    bool operator!=(const Polynomial& o) const { return !(*this == o); }

    HomogeneityInfo homogeneous_degree() const;

    // coefficient of a monomial (zero coeff if absent); constant term helper
    Coeff coeff_of(const Monomial& m) const;
    Coeff constant_term() const;

    // exact division by a nonzero divisor that divides this exactly;
    // throws invariant_error otherwise
    Polynomial divide_exact(const Polynomial& divisor) const;

    // unit normalization: F_p -> monic; Q -> primitive integer coefficients,
    // positive leading coefficient. Returns the scaled polynomial.
    Polynomial normalized_unit() const;
    Polynomial monic() const;

    // re-sort under a different order (same terms)
    Polynomial with_order(const MonomialOrder& o) const;
    // tag-variable ring hops
    Polynomial insert_var_front() const;
    Polynomial drop_var_front() const; // requires no term uses var 0

    std::string str(const std::vector<std::string>& names) const;

private:
    std::vector<Term> t_;
    FieldSpec field_;
    MonomialOrder ord_;
    int nvars_ = 0;

    void check_compatible(const Polynomial& o) const;
};

} // namespace syz

#endif
