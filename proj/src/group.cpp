#include "nucleus/group.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace nucleus {

namespace {
constexpr long long kTableLimit = 2048;
}

int GroupData::mul(int i, int j) const {
    if (has_table()) return mult_table[size_t(i) * elems.size() + j];
    return index_of(elems[i] * elems[j]);
}

int GroupData::inverse(int i) const { return inverse_index[i]; }

int GroupData::index_of(const ZMat& m) const {
    auto it = elem_index.find(m);
    if (it == elem_index.end()) throw std::logic_error("GroupData: element not in group");
    return it->second;
}

GroupData close(const std::vector<ZMat>& gens, long long max_order, long long p) {
    if (gens.empty()) throw std::invalid_argument("close: no generators");
    int n = gens[0].rows();
    for (const auto& g : gens) {
        if (g.rows() != n || g.cols() != n)
            throw std::invalid_argument("close: generators must be square of equal size");
        mpq_class d = det_over_q(g);
        if (d != 1 && d != -1)
            throw std::invalid_argument("close: generator is not invertible over Z");
    }

    GroupData gd;
    gd.rank = n;
    gd.characteristic = p;
    ZMat id = ZMat::identity(n);
    gd.elems.push_back(id);
    gd.elem_index[id] = 0;

    std::deque<int> frontier;
    for (const auto& g : gens) {
        auto [it, fresh] = gd.elem_index.try_emplace(g, int(gd.elems.size()));
        if (fresh) {
            gd.elems.push_back(g);
            gd.gen_indices.push_back(it->second);
            frontier.push_back(it->second);
        } else if (it->second != 0) {
            gd.gen_indices.push_back(it->second);
        }
    }
    if (gd.gen_indices.empty()) gd.gen_indices.push_back(0);

    while (!frontier.empty()) {
        int i = frontier.front();
        frontier.pop_front();
        for (int gi : gd.gen_indices) {
            ZMat prod = gd.elems[i] * gd.elems[gi];
            auto [it, fresh] = gd.elem_index.try_emplace(prod, int(gd.elems.size()));
            if (fresh) {
                if (long(gd.elems.size()) + 1 > max_order)
                    throw std::runtime_error("close: closure exceeds max_order");
                gd.elems.push_back(std::move(prod));
                frontier.push_back(it->second);
            }
        }
    }

    long long ord = gd.order();
    if (ord <= kTableLimit) {
        gd.mult_table.assign(size_t(ord) * ord, 0);
        for (long long i = 0; i < ord; ++i)
            for (long long j = 0; j < ord; ++j)
                gd.mult_table[size_t(i) * ord + j] = gd.index_of(gd.elems[i] * gd.elems[j]);
    }
    gd.inverse_index.assign(ord, -1);
    for (long long i = 0; i < ord; ++i) {
        for (long long j = 0; j < ord; ++j) {
            if (gd.mul(int(i), int(j)) == 0) {
                gd.inverse_index[i] = int(j);
                break;
            }
        }
        if (gd.inverse_index[i] < 0) throw std::logic_error("close: element without inverse");
    }

    if (p != 0) check_characteristic(gd, p);
    return gd;
}

void check_characteristic(const GroupData& g, long long p) {
    if (p == 0) return;
    if (!is_zero_or_prime(p))
        throw std::invalid_argument("characteristic must be 0 or prime");
    if (g.order() % p == 0)
        throw std::invalid_argument("characteristic divides the group order");
}

Subgroup::Subgroup(const GroupData* parent, std::vector<int> elems)
    : parent_(parent), elems_(std::move(elems)), cache_(std::make_shared<SubgroupCache>()) {
    std::sort(elems_.begin(), elems_.end());
    elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
    if (elems_.empty() || elems_[0] != 0)
        throw std::invalid_argument("Subgroup: must contain the identity");
    for (int a : elems_)
        for (int b : elems_)
            if (!std::binary_search(elems_.begin(), elems_.end(), parent_->mul(a, b)))
                throw std::invalid_argument("Subgroup: not closed under multiplication");
}

bool Subgroup::contains(int elem_index) const {
    return std::binary_search(elems_.begin(), elems_.end(), elem_index);
}

bool Subgroup::contains(const Subgroup& other) const {
    for (int e : other.elems_)
        if (!contains(e)) return false;
    return true;
}

Subgroup trivial_subgroup(const GroupData& g) { return Subgroup(&g, {0}); }

Subgroup full_subgroup(const GroupData& g) {
    std::vector<int> all(g.elems.size());
    for (size_t i = 0; i < all.size(); ++i) all[i] = int(i);
    return Subgroup(&g, std::move(all));
}

Subgroup generate_subgroup(const GroupData& g, std::vector<int> seed) {
    std::set<int> have{0};
    std::deque<int> frontier{0};
    for (int s : seed)
        if (have.insert(s).second) frontier.push_back(s);
    while (!frontier.empty()) {
        int a = frontier.front();
        frontier.pop_front();
        for (int s : have) {
            for (int prod : {g.mul(a, s), g.mul(s, a)}) {
                if (have.insert(prod).second) frontier.push_back(prod);
            }
        }
    }
    return Subgroup(&g, std::vector<int>(have.begin(), have.end()));
}

std::vector<Subgroup> subgroups(const GroupData& g) {
    std::set<std::vector<int>> found;
    found.insert({0});
    for (size_t i = 0; i < g.elems.size(); ++i) {
        // cyclic subgroup generated by element i
        std::vector<int> cyc{0};
        int cur = int(i);
        while (cur != 0) {
            cyc.push_back(cur);
            cur = g.mul(cur, int(i));
        }
        std::sort(cyc.begin(), cyc.end());
        found.insert(cyc);
    }

    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::vector<int>> snapshot(found.begin(), found.end());
        for (size_t a = 0; a < snapshot.size(); ++a)
            for (size_t b = a + 1; b < snapshot.size(); ++b) {
                std::vector<int> seed = snapshot[a];
                seed.insert(seed.end(), snapshot[b].begin(), snapshot[b].end());
                Subgroup joined = generate_subgroup(g, std::move(seed));
                if (found.insert(joined.elems()).second) grew = true;
            }
    }

    std::vector<Subgroup> out;
    out.reserve(found.size());
    for (const auto& s : found) out.emplace_back(&g, s);
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elems() < y.elems();
    });
    return out;
}

bool is_pseudoreflection(const GroupData& g, int elem, long long p) {
    check_characteristic(g, p);
    ZMat diff = g.elems[elem] - ZMat::identity(g.rank);
    int r = (p == 0) ? rank_over_q(diff) : rank_mod_p(diff, p);
    return r == 1;
}

std::vector<int> pseudoreflections_in(const Subgroup& k, long long p) {
    std::vector<int> refl;
    for (int e : k.elems())
        if (is_pseudoreflection(k.parent(), e, p)) refl.push_back(e);
    return refl;
}

bool is_reflection_group(const Subgroup& k, long long p) {
    {
        std::lock_guard<std::mutex> lock(k.cache().m);
        auto it = k.cache().reflection.find(p);
        if (it != k.cache().reflection.end()) return it->second;
    }
    std::vector<int> refl = pseudoreflections_in(k, p);
    Subgroup generated = generate_subgroup(k.parent(), std::move(refl));
    bool verdict = generated.elems() == k.elems();
    {
        std::lock_guard<std::mutex> lock(k.cache().m);
        k.cache().reflection.emplace(p, verdict);
    }
    return verdict;
}

}  // namespace nucleus
