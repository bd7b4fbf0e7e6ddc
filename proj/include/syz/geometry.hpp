#ifndef SYZ_GEOMETRY_HPP
#define SYZ_GEOMETRY_HPP

#include <optional>

#include "syz/ideal_ops.hpp"
#include "syz/presentation.hpp"

namespace syz {

// Closed support of a module, carried as the lift of Fitt_0(M) + I to S.
// All comparisons go through radical membership, never generator identity.
struct Support {
    RingPtr ring;
    Ideal fitt0;       // distinct minors plus the generators of I
    GroebnerBasis gb;  // of fitt0
};

enum class PrimeProvenance { ComputedMonomial, DeclaredVerified, DeclaredUnverified };

struct PrimeList {
    std::vector<Ideal> primes;
    PrimeProvenance provenance = PrimeProvenance::ComputedMonomial;
    // primality is machine-checked only in the monomial case
    bool primality_certified = false;
};

// dim of a module: a distinct sentinel for the zero module, never -1 or 0
struct ModuleDim {
    bool empty = false;
    int dim = 0;

    bool operator==(const ModuleDim&) const = default;
    std::string str() const { return empty ? "empty" : std::to_string(dim); }
};

// r x r minors of the presentation matrix (deduplicated, unit-normalized)
// plus the generators of I; I alone when cols < rows. binomial(cols, rows)
// is guarded by lim.minor_cap.
Ideal fitting_ideal_0(const Presentation& M, const Limits& lim = {});

// Krull dimension of S/J for monomial J: size of the largest variable subset
// meeting no generator's support. Returns -1 for the unit ideal.
int krull_dim_monomial(const std::vector<Monomial>& gens, int nvars);

// dim S/J via the initial ideal of a Groebner basis; nullopt for the unit
// ideal (empty variety). The arity-aware overload handles the zero ideal
// (dim = nvars); the other requires at least one generator.
std::optional<int> krull_dim(const Ideal& J, int nvars, const Limits& lim = {});
std::optional<int> krull_dim(const Ideal& J, const Limits& lim = {});

// dim supp(M). Uses krull_dim(fitting_ideal_0(M)) when the minor count fits
// under the cap, and the leading-term module of the presentation otherwise
// (same dimension, no minor enumeration).
ModuleDim module_dim(const Presentation& M, const Limits& lim = {});

Support make_support(const Presentation& M, const Limits& lim = {});

// supp(A) ⊆ supp(B)
bool supp_subset(const Support& A, const Support& B, const Limits& lim = {});
bool supp_equal(const Support& A, const Support& B, const Limits& lim = {});
// supp(A) = Spec R, i.e. Fitt_0 contained in the nilradical of R
bool supp_is_full(const Support& A, const Limits& lim = {});

// minimal primes of a monomial ideal: minimal vertex covers of the
// generator-support hypergraph, each generated by variables
PrimeList minimal_primes_monomial(const Ideal& J, int nvars, const FieldSpec& field,
                                  const MonomialOrder& order);

// declared-primes protocol: containment, covering, incomparability checks;
// throws invariant_error naming the failing prime and check
PrimeList verify_declared_min_primes(const QuotientRing& ring, const Limits& lim = {});

// minn(R) from whatever route applies: monomial computation, or declared
// primes (verified). nullopt with a reason when neither applies.
std::optional<PrimeList> minimal_primes_of_ring(const QuotientRing& ring, const Limits& lim,
                                                std::string* why_not = nullptr);

// catenary height: max over q in minn contained in p of dim(q) - dim(p)
int height(const Ideal& p, const PrimeList& minn, const QuotientRing& ring,
           const Limits& lim = {});

struct ContainmentCheck {
    bool ok = false;
    std::vector<int> touched; // indices into minn
};

// supp(M) equals the union of the components V(p), p in the touched subset
// of minn
ContainmentCheck min_primes_containment_check(const Support& A, const PrimeList& minn,
                                              const Limits& lim = {});

} // namespace syz

#endif
