#ifndef SYZ_PRESENTATION_HPP
#define SYZ_PRESENTATION_HPP

#include <memory>
#include <vector>

#include "syz/ring.hpp"

namespace syz {

// Graded matrix over R. Entry (j, k) is homogeneous of degree
// col_deg[k] - row_deg[j] (or zero); entries are kept as normal-form
// representatives in S.
struct PolyMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<Polynomial> a; // row-major, rows*cols entries
    std::vector<int> row_deg;
    std::vector<int> col_deg;

    Polynomial& at(int r, int c) { return a[std::size_t(r) * cols + c]; }
    const Polynomial& at(int r, int c) const { return a[std::size_t(r) * cols + c]; }

    ModVec column(int c, int nvars, const FieldSpec& f, const MonomialOrder& o) const;
    bool column_is_zero(int c) const;
    void erase_row(int r);
    void erase_col(int c);

    bool operator==(const PolyMatrix& o) const;
};

// M = coker(R^c -> R^r) presented by a graded matrix. The sole module
// representation in the engine.
class Presentation {
public:
    Presentation(RingPtr ring, PolyMatrix mat);
    // rows-with-twists convenience: entries from strings are parsed upstream
    static Presentation from_entries(RingPtr ring, int rows,
                                     std::vector<std::vector<Polynomial>> cols_as_rows,
                                     std::vector<int> row_twists);

    const RingPtr& ring() const { return ring_; }
    const PolyMatrix& matrix() const { return mat_; }

private:
    RingPtr ring_;
    PolyMatrix mat_;
};

// Pivots away unit entries (row/column operations over R) until every entry
// lies in the maximal ideal; drops zero columns. coker is preserved up to
// free summand cancellation.
PolyMatrix minimalize_presentation(const PolyMatrix& m, const QuotientRing& ring);

// Columns generate ker(R^cols -> R^rows) of the given matrix. Computed from
// the S-syzygies of [A | I x identity] through a position-over-term
// elimination basis, projected to the A-block and reduced mod I.
PolyMatrix syzygy_basis(const PolyMatrix& mat, const QuotientRing& ring, const Limits& lim = {});

// delta_1, delta_2, ... with twists. terminated means some syzygy module
// vanished (finite projective dimension); otherwise the chain is truncated
// at the requested window.
struct Resolution {
    RingPtr ring;
    std::vector<PolyMatrix> steps;
    bool terminated = false;
    int window = 0;

    std::vector<int> betti() const; // beta_0 .. beta_window
    int max_omega() const;          // largest i with Omega_i presentable
    Presentation omega(int i) const;
};

Resolution resolve(const Presentation& M, int N, const Limits& lim = {});

std::vector<int> betti_sequence(const Resolution& res);
Presentation syzygy_presentation(const Resolution& res, int i);

// complex property and minimality certificate; updates VerifyStats and
// throws invariant_error on violation
void verify_resolution(const Resolution& res);

} // namespace syz

#endif
