#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "nucleus/matrix.hpp"

namespace nucleus {

class Lattice;

// Finite group of n x n integer matrices acting on the rank-n lattice.
// Element 0 is the identity.  The characteristic is context carried along;
// characteristic-dependent queries also accept an explicit p.
class GroupData {
public:
    int rank = 0;
    long long characteristic = 0;
    std::vector<ZMat> elems;
    std::vector<int> gen_indices;

    long long order() const { return long(elems.size()); }
    int mul(int i, int j) const;
    int inverse(int i) const;
    int index_of(const ZMat& m) const;

    // filled by close()
    std::map<ZMat, int> elem_index;
    std::vector<int> inverse_index;
    std::vector<int32_t> mult_table;  // empty when the group is large
    bool has_table() const { return !mult_table.empty(); }
};

// Closure of the given generators under multiplication.  Throws if a
// generator is not invertible over Z or the closure exceeds max_order.
GroupData close(const std::vector<ZMat>& gens, long long max_order = 20000, long long p = 0);

struct SubgroupCache {
    std::mutex m;
    std::shared_ptr<const Lattice> fixed;
    std::map<long long, bool> reflection;  // per characteristic
    std::optional<bool> closed;
};

// A subgroup as a sorted element index set into its parent group.
class Subgroup {
public:
    Subgroup() = default;
    Subgroup(const GroupData* parent, std::vector<int> elems);

    const GroupData& parent() const { return *parent_; }
    const std::vector<int>& elems() const { return elems_; }
    long long order() const { return long(elems_.size()); }
    bool contains(int elem_index) const;
    bool contains(const Subgroup& other) const;
    bool operator==(const Subgroup& o) const { return parent_ == o.parent_ && elems_ == o.elems_; }
    bool operator!=(const Subgroup& o) const { return !(*this == o); }

    SubgroupCache& cache() const { return *cache_; }

private:
    const GroupData* parent_ = nullptr;
    std::vector<int> elems_;
    mutable std::shared_ptr<SubgroupCache> cache_;
};

Subgroup trivial_subgroup(const GroupData& g);
Subgroup full_subgroup(const GroupData& g);

// Smallest subgroup containing the given element indices.
Subgroup generate_subgroup(const GroupData& g, std::vector<int> seed);

// Every subgroup exactly once, sorted by order then by element index set.
// Seeds with the cyclic subgroups and joins pairs to a fixed point.
std::vector<Subgroup> subgroups(const GroupData& g);

// rank over k of (M_g - I) equals 1
bool is_pseudoreflection(const GroupData& g, int elem, long long p);

// K is generated by its pseudoreflections; the trivial subgroup qualifies.
bool is_reflection_group(const Subgroup& k, long long p);

// Indices of the pseudoreflections contained in K.
std::vector<int> pseudoreflections_in(const Subgroup& k, long long p);

void check_characteristic(const GroupData& g, long long p);

}  // namespace nucleus
