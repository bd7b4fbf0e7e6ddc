#ifndef SYZ_GROEBNER_HPP
#define SYZ_GROEBNER_HPP

#include <vector>

#include "syz/errors.hpp"
#include "syz/modvec.hpp"

namespace syz {

// Auto-reduced Groebner basis of a submodule of S^rank (rank 1 for ideals).
// Invariant: every S-pair of elements with equal leading component reduces
// to zero; no element's leading term divides another's.
struct GroebnerBasis {
    std::vector<ModVec> gens;
    MonomialOrder order;
    int rank = 1;
    int nvars = 0;
    FieldSpec field;

    bool contains_unit() const; // rank-1: some element is a nonzero constant
};

// Full normal form: every term of the result is irreducible by the basis.
ModVec normal_form(const ModVec& f, const std::vector<ModVec>& basis);
ModVec normal_form(const ModVec& f, const GroebnerBasis& gb);

// Buchberger with degree-ordered pair selection, product criterion (rank 1
// only) and chain criterion. `twists` shifts component degrees for the pair
// queue; pass empty for all-zero. Throws limit_error on cap overrun.
GroebnerBasis buchberger(std::vector<ModVec> gens, const Limits& lim = {},
                         std::vector<int> twists = {});

// Exhaustively reduces every same-component S-pair; updates VerifyStats and
// throws invariant_error on any nonzero remainder.
void verify_basis(const GroebnerBasis& gb);

// Polynomial (ideal) conveniences.
GroebnerBasis gb_of_ideal(const std::vector<Polynomial>& gens, const Limits& lim = {});
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

} // namespace syz

#endif
