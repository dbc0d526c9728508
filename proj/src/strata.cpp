#include "nucleus/strata.hpp"

#include <algorithm>
#include <cstdlib>
#include <set>

namespace nucleus {

const char* to_string(NucleusKind k) {
    switch (k) {
        case NucleusKind::Empty: return "EMPTY";
        case NucleusKind::Trivial: return "TRIVIAL";
        case NucleusKind::Positive: return "POSITIVE";
    }
    return "?";
}

namespace {

FVec apply_mod(const ZMat& m, const FVec& v, long long p) {
    FVec r(m.rows(), FieldElem::zero(p));
    for (int i = 0; i < m.rows(); ++i) {
        FieldElem acc = FieldElem::zero(p);
        for (int j = 0; j < m.cols(); ++j)
            acc = acc + FieldElem::from_integer(m.at(i, j), p) * v[j];
        r[i] = acc;
    }
    return r;
}

}  // namespace

Subgroup pointwise_stabilizer(const GroupData& g, const FVec& v) {
    if (int(v.size()) != g.rank) throw std::invalid_argument("pointwise_stabilizer: size mismatch");
    if (is_zero_vec(v)) throw std::invalid_argument("pointwise_stabilizer: zero vector");
    long long p = v[0].characteristic();
    check_characteristic(g, p);
    std::vector<int> fix;
    for (size_t i = 0; i < g.elems.size(); ++i)
        if (apply_mod(g.elems[i], v, p) == v) fix.push_back(int(i));
    return Subgroup(&g, std::move(fix));
}

Subgroup pointwise_stabilizer(const GroupData& g, const ZVec& v, long long p) {
    return pointwise_stabilizer(g, to_field_vec(v, p));
}

Subgroup setwise_stabilizer(const GroupData& g, const FVec& v) {
    if (int(v.size()) != g.rank) throw std::invalid_argument("setwise_stabilizer: size mismatch");
    if (is_zero_vec(v)) throw std::invalid_argument("setwise_stabilizer: zero vector");
    long long p = v[0].characteristic();
    check_characteristic(g, p);
    int lead = 0;
    while (v[lead].is_zero()) ++lead;
    std::vector<int> stab;
    for (size_t i = 0; i < g.elems.size(); ++i) {
        FVec w = apply_mod(g.elems[i], v, p);
        if (w[lead].is_zero()) continue;
        FieldElem lambda = w[lead] / v[lead];
        bool proportional = true;
        for (int j = 0; j < g.rank; ++j)
            if (w[j] != v[j] * lambda) { proportional = false; break; }
        if (proportional) stab.push_back(int(i));
    }
    return Subgroup(&g, std::move(stab));
}

Subgroup setwise_stabilizer(const GroupData& g, const ZVec& v, long long p) {
    return setwise_stabilizer(g, to_field_vec(v, p));
}

namespace {

// {g : M_g u = u for every basis row u of lat}
Subgroup lattice_stabilizer(const GroupData& g, const Lattice& lat) {
    std::vector<int> stab;
    for (size_t i = 0; i < g.elems.size(); ++i) {
        bool fixes = true;
        for (int r = 0; r < lat.rank() && fixes; ++r) {
            ZVec u = lat.basis_row(r);
            fixes = (g.elems[i] * u == u);
        }
        if (fixes) stab.push_back(int(i));
    }
    return Subgroup(&g, std::move(stab));
}

}  // namespace

Subgroup closure(const Subgroup& k) {
    Lattice fixed = fixed_lattice(k, 0);
    return lattice_stabilizer(k.parent(), fixed);
}

bool is_closed(const Subgroup& k) {
    {
        std::lock_guard<std::mutex> lock(k.cache().m);
        if (k.cache().closed.has_value()) return *k.cache().closed;
    }
    bool verdict = closure(k).elems() == k.elems();
    std::lock_guard<std::mutex> lock(k.cache().m);
    k.cache().closed = verdict;
    return verdict;
}

std::vector<Subgroup> closed_subgroups(const GroupData& g) {
    // Closed subgroups are exactly stabilizers of intersections of the
    // element fixed spaces V^g.
    std::vector<Lattice> element_fixed;
    ZMat id = ZMat::identity(g.rank);
    for (size_t i = 1; i < g.elems.size(); ++i)
        element_fixed.push_back(Lattice(g.rank, int_kernel(g.elems[i] - id)));

    std::set<std::vector<std::string>> seen;  // canonical basis fingerprints
    auto fingerprint = [](const Lattice& l) {
        std::vector<std::string> fp{std::to_string(l.rank())};
        for (int i = 0; i < l.rank(); ++i)
            for (const auto& z : l.basis_row(i)) fp.push_back(z.get_str());
        return fp;
    };

    std::vector<Lattice> subspaces{Lattice::full(g.rank)};
    seen.insert(fingerprint(subspaces[0]));
    for (size_t i = 0; i < subspaces.size(); ++i) {
        for (const Lattice& vg : element_fixed) {
            Lattice meet = subspaces[i].intersect(vg);
            if (seen.insert(fingerprint(meet)).second) subspaces.push_back(meet);
        }
    }

    std::set<std::vector<int>> elem_sets;
    for (const Lattice& u : subspaces) elem_sets.insert(lattice_stabilizer(g, u).elems());

    std::vector<Subgroup> out;
    for (const auto& es : elem_sets) out.emplace_back(&g, es);
    std::sort(out.begin(), out.end(), [](const Subgroup& x, const Subgroup& y) {
        if (x.order() != y.order()) return x.order() < y.order();
        return x.elems() < y.elems();
    });
    return out;
}

namespace {

// Shells of coefficient tuples with max-norm h, each shell in descending
// lexicographic order.
bool next_candidate(std::vector<long>& c, int h) {
    int r = int(c.size());
    int i = r - 1;
    while (i >= 0) {
        if (c[i] > -h) {
            c[i] -= 1;
            for (int j = i + 1; j < r; ++j) c[j] = h;
            return true;
        }
        --i;
    }
    return false;
}

bool in_shell(const std::vector<long>& c, int h) {
    long m = 0;
    for (long x : c) m = std::max(m, std::abs(x));
    return m == h;
}

}  // namespace

ZVec representative_point(const Subgroup& k, long long p, int height_bound) {
    check_characteristic(k.parent(), p);
    Lattice lat = fixed_lattice(k, p);
    if (lat.rank() == 0)
        throw std::invalid_argument("representative_point: fixed lattice has rank 0");
    if (!is_closed(k))
        throw std::invalid_argument("representative_point: subgroup is not closed");
    int r = lat.rank();
    for (int h = 1; h <= height_bound; ++h) {
        std::vector<long> c(r, h);
        do {
            if (!in_shell(c, h)) continue;
            ZVec v(lat.ambient(), 0);
            for (int i = 0; i < r; ++i) {
                if (c[i] == 0) continue;
                ZVec row = lat.basis_row(i);
                for (int j = 0; j < lat.ambient(); ++j) v[j] += c[i] * row[j];
            }
            if (is_zero_vec(v)) continue;
            FVec vk = to_field_vec(v, p);
            if (is_zero_vec(vk)) continue;
            if (pointwise_stabilizer(k.parent(), vk).elems() == k.elems()) return v;
        } while (next_candidate(c, h));
    }
    throw std::runtime_error(
        "representative_point: no representative of height <= " + std::to_string(height_bound) +
        (p > 0 ? " over F_" + std::to_string(p) + "; try a larger prime or characteristic 0"
               : "; try a larger height bound"));
}

std::vector<Stratum> closed_strata(const GroupData& g, long long p, int height_bound) {
    check_characteristic(g, p);
    std::vector<Stratum> out;
    for (Subgroup& k : closed_subgroups(g)) {
        Lattice u = fixed_lattice(k, p);
        if (u.rank() == 0) continue;
        Stratum s;
        s.representative = representative_point(k, p, height_bound);
        s.subgroup = std::move(k);
        s.subspace = std::move(u);
        s.nuclear = !is_reflection_group(s.subgroup, p);
        out.push_back(std::move(s));
    }
    return out;
}

Nucleus compute_nucleus(const GroupData& g, long long p, int height_bound) {
    Nucleus n;
    std::vector<Stratum> nuclear;
    for (Stratum& s : closed_strata(g, p, height_bound))
        if (s.nuclear) nuclear.push_back(std::move(s));

    // keep only maximal subspaces
    for (size_t i = 0; i < nuclear.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < nuclear.size() && !dominated; ++j) {
            if (i == j) continue;
            if (nuclear[j].subspace.contains(nuclear[i].subspace) &&
                nuclear[j].subspace != nuclear[i].subspace)
                dominated = true;
        }
        if (!dominated) n.strata.push_back(nuclear[i]);
    }

    n.includes_origin = !is_reflection_group(full_subgroup(g), p);
    if (!n.strata.empty() && !n.includes_origin)
        throw std::logic_error("nucleus: strata present without the origin");
    if (!n.strata.empty())
        n.classification = NucleusKind::Positive;
    else
        n.classification = n.includes_origin ? NucleusKind::Trivial : NucleusKind::Empty;
    return n;
}

PointClassification classify_point(const GroupData& g, const FVec& v) {
    if (is_zero_vec(v)) throw std::invalid_argument("classify_point: zero vector");
    long long p = v.empty() ? 0 : v[0].characteristic();
    PointClassification pc;
    pc.stabilizer = pointwise_stabilizer(g, v);
    pc.line_stabilizer = setwise_stabilizer(g, v);
    pc.singular = !is_reflection_group(pc.stabilizer, p);
    if (pc.singular) {
        Subgroup closed = closure(pc.stabilizer);
        if (closed.elems() != pc.stabilizer.elems())
            throw std::logic_error("classify_point: point stabilizer is not closed");
        pc.witness = witness_torus(closed, p);
    }
    return pc;
}

PointClassification classify_point(const GroupData& g, long long p, const ZVec& v) {
    return classify_point(g, to_field_vec(v, p));
}

}  // namespace nucleus
