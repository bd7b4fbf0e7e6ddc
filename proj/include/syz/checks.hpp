#ifndef SYZ_CHECKS_HPP
#define SYZ_CHECKS_HPP

#include <map>
#include <optional>
#include <string>

#include "syz/betti_oracle.hpp"
#include "syz/geometry.hpp"

namespace syz {

// One (R, M) pair plus a resolution window and resource caps.
struct Instance {
    RingPtr ring;
    Presentation module;
    int window = 8;
    std::string label;
    Limits limits;
    // user-asserted index from which the Betti numbers are non-decreasing;
    // default is detection from the computed window
    std::optional<int> assume_nondecreasing_from;
};

enum class Verdict { Holds, Fails, Vacuous, WindowTooShort, Skipped };

std::string verdict_str(Verdict v);
std::optional<Verdict> verdict_from_str(const std::string& s);

struct CheckEntry {
    std::string claim;
    Verdict verdict = Verdict::Skipped;
    std::string detail; // witness for holds/fails, reason otherwise

    bool operator==(const CheckEntry&) const = default;
};

struct CheckReport {
    std::string label;
    FieldSpec field;
    int window = 0;
    std::vector<int> betti;
    bool terminated = false;
    std::vector<std::string> dims; // one per computed syzygy module; "empty" or an integer
    std::optional<int> nondecreasing_from;
    std::vector<std::vector<int>> supp_classes; // syzygy indices with equal support
    std::vector<CheckEntry> entries;

    bool any_fails() const;
    bool operator==(const CheckReport&) const = default;
};

// Shared computed state for one instance: the resolution, supports, dims,
// touched sets and minimal primes, all memoized.
class InstanceStudy {
public:
    explicit InstanceStudy(Instance inst);

    const Instance& instance() const { return inst_; }
    const Resolution& resolution() const { return res_; }
    const std::vector<int>& betti() const { return betti_; }
    int max_omega() const { return max_omega_; }
    int dim_ring() const { return dim_ring_; }

    // asserted start index (validated against the window) or detected one
    std::optional<int> start_index() const { return start_; }
    bool assertion_contradicted() const { return assertion_contradicted_; }

    ModuleDim dim(int i);
    // nullptr when the support is blocked by a resource cap (reason set)
    const Support* support(int i, std::string* reason = nullptr);
    bool supp_full(int i);
    bool supp_eq(int i, int j);
    bool supp_subset(int inner, int outer); // supp(O_inner) ⊆ supp(O_outer)

    const std::optional<PrimeList>& minn() const { return minn_; }
    const std::string& minn_reason() const { return minn_reason_; }
    // touched subset of minn for Omega_i, with the containment verdict
    const ContainmentCheck& containment(int i);

    int max_supported_omega(); // largest m with supports 0..m all available

private:
    Instance inst_;
    Resolution res_;
    std::vector<int> betti_;
    int max_omega_ = 0;
    int dim_ring_ = 0;
    std::optional<PrimeList> minn_;
    std::string minn_reason_;
    std::optional<int> start_;
    bool assertion_contradicted_ = false;

    std::map<int, ModuleDim> dims_;
    std::map<int, std::optional<Support>> supports_;
    std::map<int, std::string> support_reasons_;
    std::map<int, bool> fulls_;
    std::map<std::pair<int, int>, bool> eqs_;
    std::map<std::pair<int, int>, bool> subsets_;
    std::map<int, ContainmentCheck> containments_;
};

// least n0 with beta_i <= beta_{i+1} for all n0 <= i < N; absent when even
// the final comparison decreases
std::optional<int> detect_nondecreasing_start(const std::vector<int>& betti);

void check_lemma_strict(InstanceStudy& st, CheckReport& rep);
void check_lemma_supp(InstanceStudy& st, int n, CheckReport& rep);
void check_lemma_supp_all(InstanceStudy& st, CheckReport& rep);
void check_theorem_main(InstanceStudy& st, CheckReport& rep);
void check_corollary_dim(InstanceStudy& st, CheckReport& rep);
void check_lemma_shrink(InstanceStudy& st, CheckReport& rep);
void check_prop_quick(InstanceStudy& st, CheckReport& rep);

struct ClaimSet {
    bool strict = true;
    bool supp = true;
    bool main = true;
    bool dim = true;
    bool shrink = true;
    bool quick = true;

    static ClaimSet all() { return {}; }
    static std::optional<ClaimSet> from_flag(const std::string& name);
};

CheckReport run_checks(const Instance& inst, const ClaimSet& claims = ClaimSet::all());

enum class CorpusProfile { Default, Hypersurface, Paper };

// reproducible pseudo-random homogeneous instances: monomial ideals I (so
// minn is auto-computable) and random homogeneous presentations over R
std::vector<Instance> generate_corpus(std::uint64_t seed, int count,
                                      CorpusProfile profile = CorpusProfile::Default);

// built-in fixtures
Instance fixture_rahmati();
Instance fixture_matfac();
Instance fixture_huneke();
Instance fixture_shrink();

} // namespace syz

#endif
