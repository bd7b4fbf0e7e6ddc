#ifndef SYZ_MODVEC_HPP
#define SYZ_MODVEC_HPP

#include <optional>
#include <vector>

#include "syz/polynomial.hpp"

namespace syz {

// Element of a free module S^r, stored as one polynomial per component.
// The module term order is position-over-term: lower component index wins,
// ties broken by the ambient monomial order. That makes the leading block of
// any split S^a (+) S^b dominate, which is what the syzygy and elimination
// computations rely on.
class ModVec {
public:
    ModVec() = default;
    ModVec(int rank, int nvars, const FieldSpec& f, const MonomialOrder& o);
    explicit ModVec(std::vector<Polynomial> comps);

    int rank() const { return int(c_.size()); }
    int nvars() const { return nvars_; }
    const FieldSpec& field() const { return field_; }
    const MonomialOrder& order() const { return ord_; }
    const Polynomial& operator[](int i) const { return c_[i]; }
    void set(int i, Polynomial p);

    bool is_zero() const;

    struct Lead {
        int comp;
        Monomial mono;
        Coeff coeff;
    };
    Lead lead() const; // throws on zero

    ModVec operator+(const ModVec& o) const;
    ModVec operator-(const ModVec& o) const;
    ModVec times_term(const Monomial& m, const Coeff& c) const;
    ModVec scaled(const Coeff& c) const;
    ModVec normalized_unit() const;

    bool operator==(const ModVec& o) const { return c_ == o.c_; }

    // degree of a homogeneous element given component twists
    // (degree of entry i plus twists[i] constant across nonzero entries);
    // zero elements report homogeneous with no degree
    struct Homogeneity {
        bool homogeneous = true;
        std::optional<int> degree;
    };
    Homogeneity homogeneous_degree(const std::vector<int>& twists) const;

    // removes the global POT-leading term in place
    void pop_lead();

    // block views for elimination computations
    ModVec slice(int from, int to) const; // components [from, to)

private:
    std::vector<Polynomial> c_;
    FieldSpec field_;
    MonomialOrder ord_;
    int nvars_ = 0;
};

} // namespace syz

#endif
