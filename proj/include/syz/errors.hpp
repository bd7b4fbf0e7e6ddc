#ifndef SYZ_ERRORS_HPP
#define SYZ_ERRORS_HPP

#include <atomic>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace syz {

struct parse_error : std::runtime_error {
    explicit parse_error(const std::string& what) : std::runtime_error(what) {}
};

// A configured resource cap was hit. `cap` names the cap so callers can
// report which limit to raise.
struct limit_error : std::runtime_error {
    std::string cap;
    limit_error(std::string cap_name, const std::string& what)
        : std::runtime_error(what), cap(std::move(cap_name)) {}
};

struct invariant_error : std::runtime_error {
    explicit invariant_error(const std::string& what) : std::runtime_error(what) {}
};

// Hard resource caps. Exceeding any of them raises limit_error; there is no
// silent truncation anywhere in the engine.
struct Limits {
    std::uint64_t pair_cap = 200000;   // Buchberger S-pairs processed per basis
    int degree_cap = 64;               // max S-pair lcm degree
    std::uint64_t minor_cap = 5000;    // binomial(c, r) guard for Fitting minors
    bool verify_bases = true;          // exhaustively re-check every finished basis
};

// Counters for the self-verification layer (S-pair reduction, complex and
// minimality certificates). Violations indicate engine defects.
struct VerifyStats {
    std::atomic<std::uint64_t> bases_built{0};
    std::atomic<std::uint64_t> bases_verified{0};
    std::atomic<std::uint64_t> spairs_verified{0};
    std::atomic<std::uint64_t> spair_failures{0};
    std::atomic<std::uint64_t> complexes_verified{0};
    std::atomic<std::uint64_t> complex_failures{0};
    std::atomic<std::uint64_t> minimality_failures{0};

    static VerifyStats& global();
    void reset();
};

} // namespace syz

#endif
