#ifndef SYZ_IDEAL_OPS_HPP
#define SYZ_IDEAL_OPS_HPP

#include <vector>

#include "syz/groebner.hpp"
#include "syz/ring.hpp"

namespace syz {

// Finitely generated ideal of S, identified by a generator list. Equality is
// always a property of the span (tested through membership), never of the
// generator lists.
struct Ideal {
    std::vector<Polynomial> gens;

    bool is_monomial() const; // every generator a single term
};

GroebnerBasis ideal_gb(const Ideal& J, const Limits& lim = {});

bool ideal_membership(const Polynomial& f, const GroebnerBasis& gbJ);
bool ideal_membership(const Polynomial& f, const Ideal& J, const Limits& lim = {});

// f in sqrt(J), by Rabinowitsch: 1 in J + (1 - t f) in S[t]. Monomial inputs
// short-circuit through a support test.
bool radical_membership(const Polynomial& f, const GroebnerBasis& gbJ, const Limits& lim = {});
bool radical_membership(const Polynomial& f, const Ideal& J, const Limits& lim = {});

// tag-variable elimination: (t J + (1 - t) K) ∩ S
Ideal ideal_intersection(const Ideal& J, const Ideal& K, const Limits& lim = {});

// (J : f) via (J ∩ (f)) divided termwise by f; f must be nonzero
Ideal ideal_quotient(const Ideal& J, const Polynomial& f, const Limits& lim = {});

// preimage in S of (0 :_R (glist · R)) = ⋂_g (I : g); glist must be nonempty
Ideal annihilator_of_ideal_mod(const std::vector<Polynomial>& glist, const QuotientRing& ring,
                               const Limits& lim = {});

bool ideal_equal(const Ideal& J, const Ideal& K, const Limits& lim = {});
bool ideal_subset(const Ideal& J, const Ideal& K, const Limits& lim = {}); // J ⊆ K

} // namespace syz

#endif
