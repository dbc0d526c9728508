#include "nucleus/lattice.hpp"

namespace nucleus {

Lattice::Lattice(int ambient, ZMat canonical_basis)
    : ambient_(ambient), basis_(std::move(canonical_basis)) {
    if (basis_.rows() == 0) basis_ = ZMat(0, ambient_);
    if (basis_.cols() != ambient_)
        throw std::invalid_argument("Lattice: basis/ambient mismatch");
}

Lattice Lattice::full(int ambient) { return Lattice(ambient, ZMat::identity(ambient)); }

Lattice Lattice::zero(int ambient) { return Lattice(ambient, ZMat(0, ambient)); }

Lattice Lattice::span_of(const ZMat& rows) {
    return Lattice(rows.cols(), saturate_span(rows));
}

bool Lattice::contains(const ZVec& v) const {
    if (int(v.size()) != ambient_) throw std::invalid_argument("Lattice: vector size mismatch");
    if (is_zero_vec(v)) return true;
    // saturated, so membership is membership in the rational span
    ZMat stacked = vstack(basis_, rows_to_mat({v}, ambient_));
    return rank_over_q(stacked) == rank();
}

bool Lattice::contains(const Lattice& other) const {
    for (int i = 0; i < other.rank(); ++i)
        if (!contains(other.basis_row(i))) return false;
    return true;
}

Lattice Lattice::intersect(const Lattice& other) const {
    if (ambient_ != other.ambient_) throw std::invalid_argument("Lattice: ambient mismatch");
    ZMat c1 = int_kernel(basis_);
    ZMat c2 = int_kernel(other.basis_);
    return Lattice(ambient_, int_kernel(vstack(c1, c2)));
}

CircleClass circle_to_point(const ZVec& r) {
    if (is_zero_vec(r)) throw std::invalid_argument("circle_to_point: zero vector");
    mpz_class g = 0;
    for (const auto& x : r) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    ZVec v(r.size());
    for (size_t i = 0; i < r.size(); ++i) v[i] = r[i] / g;
    for (const auto& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (auto& y : v) y = -y;
        break;
    }
    return CircleClass(std::move(v));
}

Lattice torus_to_subspace(const std::vector<ZVec>& circles) {
    if (circles.empty()) throw std::invalid_argument("torus_to_subspace: no circles");
    ZMat rows = rows_to_mat(circles, int(circles[0].size()));
    if (rank_over_q(rows) != rows.rows())
        throw std::invalid_argument("torus_to_subspace: circle vectors are dependent");
    return Lattice(rows.cols(), saturate(rows));
}

ZMat stacked_action_differences(const Subgroup& k) {
    const GroupData& g = k.parent();
    ZMat id = ZMat::identity(g.rank);
    ZMat stacked(0, g.rank);
    for (int e : k.elems()) {
        if (e == 0) continue;
        stacked = vstack(stacked, g.elems[e] - id);
    }
    return stacked;
}

Lattice fixed_lattice(const Subgroup& k, long long p) {
    check_characteristic(k.parent(), p);
    std::shared_ptr<const Lattice> cached;
    {
        std::lock_guard<std::mutex> lock(k.cache().m);
        cached = k.cache().fixed;
    }
    Lattice lat;
    if (cached) {
        lat = *cached;
    } else {
        lat = Lattice(k.parent().rank, int_kernel(stacked_action_differences(k)));
        std::lock_guard<std::mutex> lock(k.cache().m);
        k.cache().fixed = std::make_shared<const Lattice>(lat);
    }
    if (p > 0) {
        int dim_p = fixed_dimension_mod_p(k, p);
        if (dim_p != lat.rank())
            throw std::runtime_error(
                "fixed_lattice: mod-p fixed space does not match the integral one "
                "(characteristic must not divide the group order)");
    }
    return lat;
}

Lattice fixed_lattice(const Subgroup& k) {
    return fixed_lattice(k, k.parent().characteristic);
}

int fixed_dimension_mod_p(const Subgroup& k, long long p) {
    ZMat stacked = stacked_action_differences(k);
    if (stacked.rows() == 0) return k.parent().rank;
    return k.parent().rank - rank_mod_p(stacked, p);
}

std::vector<CircleClass> witness_torus(const Subgroup& k, long long p) {
    Lattice lat = fixed_lattice(k, p);
    if (lat.rank() == 0)
        throw std::invalid_argument("witness_torus: fixed lattice has rank 0 (origin only)");
    std::vector<CircleClass> out;
    for (int i = 0; i < lat.rank(); ++i) out.push_back(circle_to_point(lat.basis_row(i)));
    return out;
}

}  // namespace nucleus
