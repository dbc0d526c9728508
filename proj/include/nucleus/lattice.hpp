#pragma once

#include "nucleus/group.hpp"
#include "nucleus/matrix.hpp"

namespace nucleus {

// Saturated sublattice of Z^n with canonical (Hermite, positive-pivot) basis.
// Lattice equality is literal basis comparison.
class Lattice {
public:
    Lattice() : ambient_(0) {}
    Lattice(int ambient, ZMat canonical_basis);

    static Lattice full(int ambient);
    static Lattice zero(int ambient);
    static Lattice span_of(const ZMat& rows);  // saturates; accepts dependent rows

    int ambient() const { return ambient_; }
    int rank() const { return basis_.rows(); }
    const ZMat& basis() const { return basis_; }
    ZVec basis_row(int i) const { return basis_.row(i); }

    bool contains(const ZVec& v) const;
    bool contains(const Lattice& other) const;
    Lattice intersect(const Lattice& other) const;

    bool operator==(const Lattice& o) const { return ambient_ == o.ambient_ && basis_ == o.basis_; }
    bool operator!=(const Lattice& o) const { return !(*this == o); }

private:
    int ambient_;
    ZMat basis_;  // rank x ambient
};

// Primitive sign-normalized integer vector: the class of a circle subgroup.
class CircleClass {
public:
    explicit CircleClass(ZVec normalized) : v_(std::move(normalized)) {}
    const ZVec& vec() const { return v_; }
    bool operator==(const CircleClass& o) const { return v_ == o.v_; }

private:
    ZVec v_;
};

// Divide by the gcd and normalize the sign of the first nonzero entry.
// The zero vector is rejected.
CircleClass circle_to_point(const ZVec& r);

// Saturated lattice spanned by the given circle vectors; they must be
// independent over Q.
Lattice torus_to_subspace(const std::vector<ZVec>& circles);

// Integral kernel of the stacked (M_g - I) over g in K, saturated.  For
// p > 0 additionally verifies that the reduction mod p spans the F_p-fixed
// space (hard error otherwise).
Lattice fixed_lattice(const Subgroup& k, long long p);
Lattice fixed_lattice(const Subgroup& k);  // uses the parent's characteristic

// Circle classes of the canonical basis rows of the fixed lattice.
std::vector<CircleClass> witness_torus(const Subgroup& k, long long p);

// F_p-dimension of the fixed space of K (kernel of the stacked blocks mod p).
int fixed_dimension_mod_p(const Subgroup& k, long long p);

ZMat stacked_action_differences(const Subgroup& k);

}  // namespace nucleus
