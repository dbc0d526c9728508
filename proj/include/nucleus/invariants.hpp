#pragma once

#include "nucleus/poly.hpp"
#include "nucleus/strata.hpp"

namespace nucleus {

// Generators-and-relations presentation of k[V]^W.  Generators are
// weight-homogeneous polynomials in the ambient variables with weights
// d_1 <= ... <= d_m; relations live in fresh variables y_1..y_m with
// weight(y_i) = d_i.  Weights are half-codegrees (codegree = 2 * weight).
struct Presentation {
    int ambient_rank = 0;
    long long p = 0;
    std::vector<Poly> generators;       // in ambient variables
    std::vector<int> weights;           // ascending
    std::vector<Poly> relations;        // in generator variables
    int relation_bound = 0;             // relations complete through this weight
    std::vector<long long> molien;      // characteristic-0 coefficients, 0..audit bound
    bool is_polynomial = false;         // relations empty and m == n
};

// Orbit/stabilizer decomposition of the primes over the image of a point:
// orbit of the line, setwise and pointwise stabilizers, and the splitting
// V = V^{W_v} (+) V' with the restricted action on V'.
struct LocalModel {
    ZVec base_point;
    long long orbit_size = 0;
    Subgroup line_stabilizer;    // setwise
    Subgroup point_stabilizer;   // pointwise, contained in the setwise one
    Lattice fixed_part;          // V^{W_v}
    Lattice moving_part;         // V', saturated, W_v-stable
    std::vector<ZMat> moving_action;  // action of point_stabilizer elements on V'
    bool regular = false;        // point stabilizer acts on V' as a reflection group
};

// w . f, the substitution action of a group element on an ambient polynomial.
Poly group_action(const GroupData& g, int elem, const Poly& f);

// |W|^{-1} sum over the group of w . f; idempotent projection onto invariants.
Poly reynolds(const GroupData& g, long long p, const Poly& f);

// Coefficients 0..audit_bound of |W|^{-1} sum_w 1/det(1 - t M_w), computed
// over Q from the integer matrices.
std::vector<long long> molien(const GroupData& g, int audit_bound);

// Basis of the weight-w invariants, canonical (RREF) in the monomial basis.
// The dimension is checked against the characteristic-0 Molien coefficient;
// a mismatch is a hard error.
std::vector<Poly> invariant_basis(const GroupData& g, long long p, int w);

// Minimal generating set, weights ascending; searched through weight |W|.
std::vector<std::pair<Poly, int>> generators(const GroupData& g, long long p);

// Minimal relations among the generators through weight bound.
std::vector<Poly> relations(const GroupData& g, long long p,
                            const std::vector<std::pair<Poly, int>>& gens, int bound);

// Default relation bound: twice the maximal generator weight.
Presentation presentation(const GroupData& g, long long p, int relation_bound = 0);

LocalModel local_model(const GroupData& g, long long p, const ZVec& v);

}  // namespace nucleus
