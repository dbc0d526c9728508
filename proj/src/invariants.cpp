#include "nucleus/invariants.hpp"

#include <algorithm>

namespace nucleus {

Poly group_action(const GroupData& g, int elem, const Poly& f) {
    return f.substitute_linear(g.elems[elem]);
}

Poly reynolds(const GroupData& g, long long p, const Poly& f) {
    check_characteristic(g, p);
    if (f.characteristic() != p)
        throw std::invalid_argument("reynolds: characteristic mismatch");
    Poly acc = Poly::zero(f.nvars(), p, f.weights());
    for (size_t i = 0; i < g.elems.size(); ++i) acc = acc + group_action(g, int(i), f);
    return acc.scaled(FieldElem::from_integer(g.order(), p).inverse());
}

std::vector<long long> molien(const GroupData& g, int audit_bound) {
    std::vector<mpq_class> acc(audit_bound + 1, 0);
    for (const ZMat& m : g.elems) {
        std::vector<mpz_class> den = det_one_minus_t(m);
        // power series inverse of den (constant term 1)
        std::vector<mpq_class> inv(audit_bound + 1, 0);
        inv[0] = 1;
        for (int k = 1; k <= audit_bound; ++k) {
            mpq_class s = 0;
            for (int j = 1; j <= std::min<int>(k, int(den.size()) - 1); ++j)
                s += mpq_class(den[j]) * inv[k - j];
            inv[k] = -s;
        }
        for (int k = 0; k <= audit_bound; ++k) acc[k] += inv[k];
    }
    std::vector<long long> out(audit_bound + 1);
    mpq_class ord(static_cast<long>(g.order()));
    for (int k = 0; k <= audit_bound; ++k) {
        mpq_class c = acc[k] / ord;
        if (c.get_den() != 1 || c < 0)
            throw std::logic_error("molien: coefficient is not a nonnegative integer");
        out[k] = long(c.get_num().get_si());
    }
    return out;
}

namespace {

std::vector<int> ambient_weights(int n) { return std::vector<int>(n, 1); }

// Stacked (rho(g) - I) over the stored generators of the group, on the
// canonical monomial basis of one graded piece.
FMat invariance_constraints(const GroupData& g, long long p,
                            const std::vector<Exponents>& basis) {
    int dim = int(basis.size());
    std::vector<FVec> rows;
    rows.reserve(g.gen_indices.size() * basis.size());
    for (int gi : g.gen_indices) {
        // columns of rho(g): image of each basis monomial
        std::vector<FVec> cols;
        cols.reserve(dim);
        for (const Exponents& e : basis) {
            Poly mono = Poly::monomial(e, FieldElem::one(p));
            cols.push_back(coefficient_vector(group_action(g, gi, mono), basis));
        }
        for (int r = 0; r < dim; ++r) {
            FVec row(dim, FieldElem::zero(p));
            for (int c = 0; c < dim; ++c) {
                row[c] = cols[c][r];
                if (r == c) row[c] = row[c] - FieldElem::one(p);
            }
            rows.push_back(std::move(row));
        }
    }
    return FMat::from_rows(rows, dim, p);
}

}  // namespace

std::vector<Poly> invariant_basis(const GroupData& g, long long p, int w) {
    check_characteristic(g, p);
    if (w < 0) throw std::invalid_argument("invariant_basis: negative weight");
    std::vector<int> wts = ambient_weights(g.rank);
    std::vector<Exponents> basis = monomials_of_weight(wts, w);
    std::vector<FVec> kernel;
    if (w == 0) {
        kernel.push_back(FVec{FieldElem::one(p)});
    } else {
        kernel = kernel_basis(invariance_constraints(g, p, basis));
    }
    long long expected = molien(g, w)[w];
    if (long(kernel.size()) != expected)
        throw std::runtime_error("invariant_basis: dimension disagrees with the Molien series");
    std::vector<Poly> out;
    out.reserve(kernel.size());
    for (const FVec& v : kernel) out.push_back(poly_from_coefficients(v, basis, g.rank, p, wts));
    return out;
}

std::vector<std::pair<Poly, int>> generators(const GroupData& g, long long p) {
    check_characteristic(g, p);
    std::vector<std::pair<Poly, int>> gens;
    int bound = int(g.order());  // non-modular Noether bound
    std::vector<long long> mol = molien(g, bound);
    std::vector<int> wts = ambient_weights(g.rank);

    for (int w = 1; w <= bound; ++w) {
        if (mol[w] == 0) continue;
        std::vector<Exponents> basis = monomials_of_weight(wts, w);
        int dim = int(basis.size());

        // span of products of at least two earlier generators
        std::vector<int> gw;
        for (const auto& [f, d] : gens) gw.push_back(d);
        std::vector<FVec> rows;
        for (const Exponents& e : monomials_of_weight(gw, w)) {
            int total = 0;
            for (int x : e) total += x;
            if (total < 2) continue;
            Poly prod = Poly::constant(g.rank, FieldElem::one(p));
            for (size_t i = 0; i < e.size(); ++i)
                for (int k = 0; k < e[i]; ++k) prod = prod * gens[i].first;
            rows.push_back(coefficient_vector(prod, basis));
        }

        int cur_rank = rows.empty() ? 0 : rank_of(FMat::from_rows(rows, dim, p));
        if (cur_rank == mol[w]) continue;

        for (const Poly& inv : invariant_basis(g, p, w)) {
            FVec v = coefficient_vector(inv, basis);
            rows.push_back(std::move(v));
            int r = rank_of(FMat::from_rows(rows, dim, p));
            if (r > cur_rank) {
                cur_rank = r;
                gens.emplace_back(inv, w);
            } else {
                rows.pop_back();
            }
        }
    }
    return gens;
}

std::vector<Poly> relations(const GroupData& g, long long p,
                            const std::vector<std::pair<Poly, int>>& gens, int bound) {
    check_characteristic(g, p);
    int m = int(gens.size());
    std::vector<int> gw;
    for (const auto& [f, d] : gens) gw.push_back(d);
    std::vector<int> ambient = ambient_weights(g.rank);

    std::vector<Poly> found;
    for (int w = 1; w <= bound; ++w) {
        std::vector<Exponents> ymons = monomials_of_weight(gw, w);
        if (ymons.empty()) continue;
        std::vector<Exponents> xmons = monomials_of_weight(ambient, w);

        // evaluation map S_w <- span(ymons): one column per y-monomial
        std::vector<FVec> images;
        for (const Exponents& e : ymons) {
            Poly img = Poly::constant(g.rank, FieldElem::one(p));
            for (int i = 0; i < m; ++i)
                for (int k = 0; k < e[i]; ++k) img = img * gens[i].first;
            images.push_back(coefficient_vector(img, xmons));
        }
        FMat evalm(int(xmons.size()), int(ymons.size()), p);
        for (size_t c = 0; c < images.size(); ++c)
            for (size_t r = 0; r < images[c].size(); ++r) evalm.at(int(r), int(c)) = images[c][r];
        std::vector<FVec> kernel = kernel_basis(evalm);
        if (kernel.empty()) continue;

        // discard the part spanned by multiples of lower-weight relations
        std::vector<FVec> known;
        for (const Poly& rel : found) {
            int rw = rel.weight();
            for (const Exponents& mu : monomials_of_weight(gw, w - rw)) {
                Poly mult = Poly::monomial(mu, FieldElem::one(p), gw) * rel;
                known.push_back(coefficient_vector(mult, ymons));
            }
        }
        int base = known.empty() ? 0 : rank_of(FMat::from_rows(known, int(ymons.size()), p));
        int cur = base;
        for (const FVec& v : kernel) {
            known.push_back(v);
            int r = rank_of(FMat::from_rows(known, int(ymons.size()), p));
            if (r > cur) {
                cur = r;
                found.push_back(poly_from_coefficients(v, ymons, m, p, gw));
            } else {
                known.pop_back();
            }
        }
    }
    return found;
}

Presentation presentation(const GroupData& g, long long p, int relation_bound) {
    check_characteristic(g, p);
    Presentation pres;
    pres.ambient_rank = g.rank;
    pres.p = p;
    auto gens = generators(g, p);
    for (auto& [f, w] : gens) {
        pres.generators.push_back(f);
        pres.weights.push_back(w);
    }
    int dmax = pres.weights.empty() ? 0 : pres.weights.back();
    pres.relation_bound = relation_bound > 0 ? relation_bound : 2 * dmax;
    pres.relations = relations(g, p, gens, pres.relation_bound);
    pres.molien = molien(g, pres.relation_bound + dmax);
    pres.is_polynomial = pres.relations.empty() && int(pres.generators.size()) == g.rank;

    // Hilbert audit: through the relation bound, the image of the evaluation
    // map must have exactly the Molien dimension in every weight.
    std::vector<int> gw = pres.weights;
    for (int w = 1; w <= pres.relation_bound; ++w) {
        std::vector<Exponents> ymons = monomials_of_weight(gw, w);
        long long expected = pres.molien[w];
        long long image_dim = long(ymons.size());
        if (!ymons.empty()) {
            std::vector<Exponents> xmons = monomials_of_weight(ambient_weights(g.rank), w);
            std::vector<FVec> rows;
            for (const Exponents& e : ymons) {
                Poly img = Poly::constant(g.rank, FieldElem::one(p));
                for (size_t i = 0; i < gw.size(); ++i)
                    for (int k = 0; k < e[i]; ++k) img = img * pres.generators[i];
                rows.push_back(coefficient_vector(img, xmons));
            }
            image_dim = rank_of(FMat::from_rows(rows, int(xmons.size()), p));
        }
        if (image_dim != expected)
            throw std::runtime_error("presentation: Hilbert audit failed at weight " +
                                     std::to_string(w));
    }
    return pres;
}

LocalModel local_model(const GroupData& g, long long p, const ZVec& v) {
    check_characteristic(g, p);
    if (is_zero_vec(v)) throw std::invalid_argument("local_model: zero vector");
    LocalModel lm;
    lm.base_point = v;
    lm.line_stabilizer = setwise_stabilizer(g, v, p);
    lm.point_stabilizer = pointwise_stabilizer(g, v, p);
    if (!lm.line_stabilizer.contains(lm.point_stabilizer))
        throw std::logic_error("local_model: stabilizer containment violated");
    lm.orbit_size = g.order() / lm.line_stabilizer.order();
    lm.fixed_part = fixed_lattice(lm.point_stabilizer, p);

    // V' = image of (I - averaging projector), integral and saturated:
    // column span of |K| I - sum_{g in K} M_g.
    const Subgroup& k = lm.point_stabilizer;
    ZMat c(g.rank, g.rank);
    for (int i = 0; i < g.rank; ++i) c.at(i, i) = static_cast<long>(k.order());
    for (int e : k.elems()) c = c - g.elems[e];
    lm.moving_part = Lattice::span_of(c.transposed());

    if (lm.fixed_part.rank() + lm.moving_part.rank() != g.rank)
        throw std::logic_error("local_model: splitting does not fill the space");
    if (rank_over_q(vstack(lm.fixed_part.basis(), lm.moving_part.basis())) != g.rank)
        throw std::logic_error("local_model: splitting is not direct");

    // restricted action matrices: M_g B^T = B^T R_g with integral R_g
    const ZMat bt = lm.moving_part.basis().transposed();  // n x r
    int r = lm.moving_part.rank();
    for (int e : k.elems()) {
        ZMat img = g.elems[e] * bt;  // n x r
        // solve bt * X = img over Q column by column, checking integrality
        FMat aug(g.rank, r + r, 0);
        for (int i = 0; i < g.rank; ++i) {
            for (int j = 0; j < r; ++j) aug.at(i, j) = FieldElem::from_integer(bt.at(i, j), 0);
            for (int j = 0; j < r; ++j)
                aug.at(i, r + j) = FieldElem::from_integer(img.at(i, j), 0);
        }
        RrefResult rr = rref(aug);
        if (rr.rank != r)
            throw std::logic_error("local_model: moving part not stable under the action");
        ZMat rg(r, r);
        for (int i = 0; i < rr.rank && i < r; ++i) {
            int pc = rr.pivot_cols[i];
            if (pc >= r) throw std::logic_error("local_model: moving part not stable");
            for (int j = 0; j < r; ++j) {
                const mpq_class& q = rr.reduced.at(i, r + j).rational_value();
                if (q.get_den() != 1)
                    throw std::logic_error("local_model: restricted action is not integral");
                rg.at(pc, j) = q.get_num();
            }
        }
        lm.moving_action.push_back(std::move(rg));
    }

    // V^{W_v} was split off completely: no fixed vectors remain in V'
    ZMat stacked(0, r);
    ZMat idr = ZMat::identity(r);
    for (const ZMat& rg : lm.moving_action) stacked = vstack(stacked, rg - idr);
    if (int_kernel(stacked).rows() != 0)
        throw std::logic_error("local_model: moving part has fixed vectors");

    // reflection test for the restricted representation, using the subgroup
    // structure of the point stabilizer
    std::vector<int> refl_positions;
    for (size_t idx = 0; idx < lm.moving_action.size(); ++idx) {
        ZMat diff = lm.moving_action[idx] - idr;
        int rk = (p == 0) ? rank_over_q(diff) : rank_mod_p(diff, p);
        if (rk == 1) refl_positions.push_back(k.elems()[idx]);
    }
    Subgroup generated = generate_subgroup(g, std::move(refl_positions));
    lm.regular = generated.elems() == k.elems();
    return lm;
}

}  // namespace nucleus
