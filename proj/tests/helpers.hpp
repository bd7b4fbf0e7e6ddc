#ifndef SYZ_TEST_HELPERS_HPP
#define SYZ_TEST_HELPERS_HPP

#include <memory>
#include <string>
#include <vector>

#include "syz/checks.hpp"

namespace syztest {

using namespace syz;

inline RingPtr make_ring(std::vector<std::string> vars, FieldSpec field,
                         std::vector<std::string> igens,
                         std::vector<std::vector<std::string>> declared = {}) {
    auto scratch = std::make_shared<QuotientRing>(vars, field, std::vector<Polynomial>{});
    std::vector<Polynomial> I;
    for (const auto& s : igens) I.push_back(scratch->parse(s));
    std::vector<std::vector<Polynomial>> primes;
    for (const auto& plist : declared) {
        primes.emplace_back();
        for (const auto& s : plist) primes.back().push_back(scratch->parse(s));
    }
    return std::make_shared<QuotientRing>(std::move(vars), field, std::move(I),
                                          MonomialOrder{OrderKind::Grevlex}, std::move(primes));
}

inline Presentation make_presentation(const RingPtr& ring,
                                      std::vector<std::vector<std::string>> rows,
                                      std::vector<int> row_twists) {
    std::vector<std::vector<Polynomial>> entries;
    for (const auto& row : rows) {
        entries.emplace_back();
        for (const auto& s : row) entries.back().push_back(ring->parse(s));
    }
    return Presentation::from_entries(ring, int(rows.size()), std::move(entries),
                                      std::move(row_twists));
}

inline PolyMatrix make_matrix(const RingPtr& ring, std::vector<std::vector<std::string>> rows,
                              std::vector<int> row_twists) {
    return make_presentation(ring, std::move(rows), std::move(row_twists)).matrix();
}

// equality up to column permutation and unit column scaling
inline bool matrix_equal_up_to_col_order_scale(const PolyMatrix& a, const PolyMatrix& b) {
    if (a.rows != b.rows || a.cols != b.cols) return false;
    std::vector<bool> used(b.cols, false);
    for (int ca = 0; ca < a.cols; ++ca) {
        bool matched = false;
        for (int cb = 0; cb < b.cols && !matched; ++cb) {
            if (used[cb]) continue;
            // find the scale from the first nonzero pair
            Coeff scale = Coeff::one(FieldSpec{});
            bool have_scale = false, ok = true;
            for (int r = 0; r < a.rows && ok; ++r) {
                const Polynomial& pa = a.at(r, ca);
                const Polynomial& pb = b.at(r, cb);
                if (pa.is_zero() != pb.is_zero()) ok = false;
                else if (!pa.is_zero() && !have_scale) {
                    if (pa.size() != pb.size()) { ok = false; continue; }
                    scale = pb.lead().coeff * pa.lead().coeff.inv();
                    have_scale = true;
                    if (!(pa.scaled(scale) == pb)) ok = false;
                } else if (!pa.is_zero()) {
                    if (!(pa.scaled(scale) == pb)) ok = false;
                }
            }
            if (ok && have_scale) {
                used[cb] = true;
                matched = true;
            } else if (ok && !have_scale) { // both columns zero
                used[cb] = true;
                matched = true;
            }
        }
        if (!matched) return false;
    }
    return true;
}

inline Ideal parse_ideal(const RingPtr& ring, std::vector<std::string> gens) {
    Ideal J;
    for (const auto& s : gens) J.gens.push_back(ring->parse(s));
    return J;
}

} // namespace syztest

#endif
