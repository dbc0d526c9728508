#pragma once

#include "nucleus/lattice.hpp"

namespace nucleus {

// One stratum of the stabilizer stratification: a closed subgroup K, its
// fixed subspace U = V^K, and an integer representative whose pointwise
// stabilizer over k is exactly K.
struct Stratum {
    Subgroup subgroup;
    Lattice subspace;
    ZVec representative;
    bool nuclear = false;
};

enum class NucleusKind { Empty, Trivial, Positive };

struct Nucleus {
    std::vector<Stratum> strata;  // maximal nuclear strata, pairwise incomparable
    bool includes_origin = false;
    NucleusKind classification = NucleusKind::Empty;
};

const char* to_string(NucleusKind k);

// {g : M_g v = v} over the field of v's entries.
Subgroup pointwise_stabilizer(const GroupData& g, const FVec& v);
Subgroup pointwise_stabilizer(const GroupData& g, const ZVec& v, long long p);

// {g : M_g v in k.v}; contains the pointwise stabilizer.
Subgroup setwise_stabilizer(const GroupData& g, const FVec& v);
Subgroup setwise_stabilizer(const GroupData& g, const ZVec& v, long long p);

// {g : g fixes V^K pointwise} — the full stabilizer of the fixed subspace.
// Computed over Z; for p coprime to the group order this agrees with the
// mod-p stabilizer of the reduced subspace.
Subgroup closure(const Subgroup& k);
bool is_closed(const Subgroup& k);

// All K with closure(K) = K, sorted by order then element set.  Always
// contains closure(trivial) and the whole group.
std::vector<Subgroup> closed_subgroups(const GroupData& g);

// Deterministic search for an integer vector in V^K whose stabilizer over k
// is exactly K.  Coefficients over the lattice basis are enumerated by
// growing height h = 1..height_bound, within a shell in descending
// lexicographic order.
ZVec representative_point(const Subgroup& k, long long p, int height_bound = 8);

// Strata for every closed subgroup of positive fixed rank, with nuclear flags.
std::vector<Stratum> closed_strata(const GroupData& g, long long p, int height_bound = 8);

Nucleus compute_nucleus(const GroupData& g, long long p, int height_bound = 8);

struct PointClassification {
    Subgroup stabilizer;       // pointwise
    Subgroup line_stabilizer;  // setwise
    bool singular = false;
    std::vector<CircleClass> witness;
};

PointClassification classify_point(const GroupData& g, long long p, const ZVec& v);
PointClassification classify_point(const GroupData& g, const FVec& v);

}  // namespace nucleus
