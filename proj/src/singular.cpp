#include "nucleus/singular.hpp"

#include <sstream>

namespace nucleus {

const char* to_string(Smoothness s) {
    switch (s) {
        case Smoothness::Smooth: return "SMOOTH";
        case Smoothness::Singular: return "SINGULAR";
        case Smoothness::Inconclusive: return "INCONCLUSIVE";
    }
    return "?";
}

bool relations_complete_through(const Presentation& pres, int upto) {
    long long p = pres.p;
    const std::vector<int>& gw = pres.weights;
    for (int w = pres.relation_bound + 1; w <= upto; ++w) {
        if (w >= int(pres.molien.size()))
            throw std::logic_error("relations_complete_through: audit bound too small");
        std::vector<Exponents> ymons = monomials_of_weight(gw, w);
        long long expected = long(ymons.size()) - pres.molien[w];
        if (expected <= 0) continue;
        std::vector<FVec> rows;
        for (const Poly& rel : pres.relations) {
            int rw = rel.weight();
            for (const Exponents& mu : monomials_of_weight(gw, w - rw)) {
                Poly mult = Poly::monomial(mu, FieldElem::one(p), gw) * rel;
                rows.push_back(coefficient_vector(mult, ymons));
            }
        }
        int have = rows.empty() ? 0 : rank_of(FMat::from_rows(rows, int(ymons.size()), p));
        if (have > expected)
            throw std::logic_error("relations_complete_through: rank exceeds the ideal dimension");
        if (have < expected) return false;
    }
    return true;
}

JacobianVerdict jacobian_at(const Presentation& pres, const ZVec& v) {
    if (int(v.size()) != pres.ambient_rank)
        throw std::invalid_argument("jacobian_at: point/presentation rank mismatch");
    if (is_zero_vec(v)) throw std::invalid_argument("jacobian_at: zero vector");
    long long p = pres.p;
    int m = int(pres.generators.size());
    int n = pres.ambient_rank;
    if (m < n) throw std::invalid_argument("jacobian_at: fewer generators than the dimension");

    FVec vf = to_field_vec(v, p);
    if (is_zero_vec(vf))
        throw std::invalid_argument("jacobian_at: point vanishes in the coefficient field");
    FVec q(m, FieldElem::zero(p));
    for (int i = 0; i < m; ++i) q[i] = pres.generators[i].evaluate(vf);
    if (is_zero_vec(q))
        throw std::logic_error("jacobian_at: all generators vanish at a nonzero point");

    std::vector<FVec> rows;
    for (const Poly& rel : pres.relations) {
        FVec row(m, FieldElem::zero(p));
        for (int i = 0; i < m; ++i) row[i] = rel.derivative(i).evaluate(q);
        rows.push_back(std::move(row));
    }
    int rank = rows.empty() ? 0 : rank_of(FMat::from_rows(rows, m, p));

    if (rank == m - n) return {Smoothness::Smooth, ""};
    if (rank > m - n)
        throw std::logic_error("jacobian_at: rank exceeds codimension at a point of the variety");

    int dmax = pres.weights.empty() ? 0 : pres.weights.back();
    int required = 2 * dmax;
    if (pres.relation_bound < required) {
        std::ostringstream os;
        os << "relation bound " << pres.relation_bound
           << " is below the certification weight " << required
           << "; raise the relation bound";
        return {Smoothness::Inconclusive, os.str()};
    }
    if (!relations_complete_through(pres, pres.relation_bound + dmax)) {
        std::ostringstream os;
        os << "missing relations detected above weight " << pres.relation_bound
           << "; raise the relation bound";
        return {Smoothness::Inconclusive, os.str()};
    }
    return {Smoothness::Singular, ""};
}

SingularLocus singular_locus(const GroupData& g, long long p, int relation_bound,
                             int height_bound) {
    check_characteristic(g, p);
    Presentation pres = presentation(g, p, relation_bound);
    SingularLocus out;
    out.includes_origin = !is_reflection_group(full_subgroup(g), p);

    std::vector<Stratum> nuclear;
    for (Stratum& s : closed_strata(g, p, height_bound)) {
        StratumVerdict sv;
        sv.classifier_singular = s.nuclear;
        sv.oracle = jacobian_at(pres, s.representative);
        if (sv.oracle.kind == Smoothness::Inconclusive) {
            out.warnings.push_back("inconclusive at a representative: " + sv.oracle.reason);
        } else {
            bool oracle_singular = sv.oracle.kind == Smoothness::Singular;
            if (oracle_singular != sv.classifier_singular)
                throw std::runtime_error(
                    "singular_locus: classifier and Jacobian oracle disagree");
        }
        if (s.nuclear) nuclear.push_back(s);
        sv.stratum = std::move(s);
        out.verdicts.push_back(std::move(sv));
    }

    // maximal members only, matching the nucleus convention
    for (size_t i = 0; i < nuclear.size(); ++i) {
        bool dominated = false;
        for (size_t j = 0; j < nuclear.size() && !dominated; ++j) {
            if (i == j) continue;
            if (nuclear[j].subspace.contains(nuclear[i].subspace) &&
                nuclear[j].subspace != nuclear[i].subspace)
                dominated = true;
        }
        if (!dominated) out.strata.push_back(nuclear[i]);
    }
    return out;
}

WitnessModule witness_module(const GroupData& g, long long p, const Stratum& s) {
    if (!s.nuclear)
        throw std::invalid_argument("witness_module: stratum is smooth");
    LocalModel lm = local_model(g, p, s.representative);
    if (lm.regular)
        throw std::logic_error("witness_module: local model is regular at a nuclear stratum");
    WitnessModule w;
    w.at_origin = false;
    w.stabilizer = s.subgroup;
    w.complement_action = lm.moving_action;
    std::ostringstream md;
    md << "R/p for p the homogeneous prime of the rank-" << s.subspace.rank()
       << " stratum, as a formal cyclic module with zero differential";
    w.module_desc = md.str();
    std::ostringstream ev;
    ev << "stabilizer of order " << s.subgroup.order()
       << " acts on the rank-" << lm.moving_part.rank()
       << " complement without pseudoreflection generation; the local ring at p"
       << " is not regular, so the graded residue field is not small";
    w.evidence = ev.str();
    return w;
}

WitnessModule origin_witness_module(const GroupData& g, long long p) {
    Subgroup w = full_subgroup(g);
    if (is_reflection_group(w, p))
        throw std::invalid_argument("origin_witness_module: the invariant ring is regular");
    WitnessModule wm;
    wm.at_origin = true;
    wm.stabilizer = w;
    wm.module_desc =
        "R/I for I the irrelevant maximal ideal: the graded residue field at the origin";
    std::ostringstream ev;
    ev << "the whole group (order " << w.order()
       << ") is not generated by pseudoreflections; the invariant ring is not regular at the"
       << " irrelevant ideal, so the residue field is not small";
    wm.evidence = ev.str();
    return wm;
}

SuppReport supp_dsg(const GroupData& g, long long p, int relation_bound, int height_bound) {
    SingularLocus locus = singular_locus(g, p, relation_bound, height_bound);
    SuppReport rep;
    rep.warnings = locus.warnings;
    if (locus.includes_origin) {
        SuppMember m;
        m.at_origin = true;
        m.witness = origin_witness_module(g, p);
        rep.members.push_back(std::move(m));
    }
    for (const Stratum& s : locus.strata) {
        SuppMember m;
        m.at_origin = false;
        m.stratum = s;
        m.witness = witness_module(g, p, s);
        rep.members.push_back(std::move(m));
    }
    return rep;
}

}  // namespace nucleus
