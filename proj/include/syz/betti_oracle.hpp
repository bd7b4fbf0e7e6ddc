#ifndef SYZ_BETTI_ORACLE_HPP
#define SYZ_BETTI_ORACLE_HPP

#include <map>
#include <stdexcept>

#include "syz/presentation.hpp"

namespace syz {

// degree/homological bounds cannot certify the request
struct uncertified_error : std::runtime_error {
    explicit uncertified_error(const std::string& what) : std::runtime_error(what) {}
};

// Graded Betti numbers beta_{i,j} for i <= hom_bound, j <= degree_bound.
// Values inside the window are exact; a level may have further generators in
// degrees above degree_bound, which only the caller can rule out.
struct BettiTable {
    int degree_bound = 0;
    int hom_bound = 0;
    std::map<std::pair<int, int>, int> beta; // (level, degree) -> count, nonzero only

    int total(int level) const;
    std::vector<int> totals() const; // levels 0..hom_bound
    // largest degree with a generator at this level; INT_MIN when none
    int max_gen_degree(int level) const;
};

// Independent verification path: minimal resolutions computed degree by
// degree as kernels of k-linear maps between graded pieces assembled from
// monomial bases of R. Shares only the Groebner basis of I (for normal forms
// and standard monomials) with the resolution engine.
//
// Throws uncertified_error when degree_bound is below the generator degrees
// of I or of the input presentation.
BettiTable graded_betti_oracle(const Presentation& M, int degree_bound, int hom_bound);

} // namespace syz

#endif
