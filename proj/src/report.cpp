#include "nucleus/report.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace nucleus {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json zvec_to_json(const ZVec& v) {
    ordered_json a = ordered_json::array();
    for (const auto& z : v) a.push_back(z.get_str());
    return a;
}

ordered_json circles_to_json(const std::vector<CircleClass>& cs) {
    ordered_json a = ordered_json::array();
    for (const auto& c : cs) a.push_back(zvec_to_json(c.vec()));
    return a;
}

ordered_json group_to_json(const GroupSpec& spec, const GroupData& g, long long p) {
    ordered_json j;
    j["name"] = spec.name.empty() ? "custom" : spec.name;
    j["rank"] = g.rank;
    j["order"] = g.order();
    j["characteristic"] = p;
    return j;
}

ordered_json stratum_to_json(const Stratum& s, long long p) {
    ordered_json j;
    j["basis"] = lattice_to_json(s.subspace);
    j["subgroup_order"] = s.subgroup.order();
    j["rank"] = s.subspace.rank();
    j["representative"] = zvec_to_json(s.representative);
    j["witness_circles"] = circles_to_json(witness_torus(s.subgroup, p));
    return j;
}

long long effective_char(const GroupSpec& spec, const Options& opt) {
    return opt.characteristic >= 0 ? opt.characteristic : spec.characteristic;
}

std::string stratum_key(const Stratum& s) {
    std::ostringstream os;
    os << s.subspace.basis().str();
    return os.str();
}

std::vector<long long> characteristic_sweep(const GroupData& g, long long requested) {
    std::vector<long long> ps{0, 5, 7, 11};
    if (requested > 0 &&
        std::find(ps.begin(), ps.end(), requested) == ps.end())
        ps.push_back(requested);
    std::vector<long long> out;
    for (long long p : ps)
        if (p == 0 || g.order() % p != 0) out.push_back(p);
    return out;
}

}  // namespace

ordered_json poly_to_json(const Poly& f) {
    ordered_json j;
    j["weights"] = f.weights();
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : f.terms()) {
        ordered_json t;
        t["exps"] = e;
        t["coeff"] = c.str();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    j["text"] = f.str();
    return j;
}

ordered_json lattice_to_json(const Lattice& l) {
    ordered_json rows = ordered_json::array();
    for (int i = 0; i < l.rank(); ++i) rows.push_back(zvec_to_json(l.basis_row(i)));
    return rows;
}

std::string Report::json_text() const { return data.dump(2) + "\n"; }

namespace {

void render_value(std::ostream& os, const ordered_json& v, int indent);

void render_object(std::ostream& os, const ordered_json& v, int indent) {
    std::string pad(size_t(indent) * 2, ' ');
    for (const auto& [key, val] : v.items()) {
        os << pad << key << ":";
        if (val.is_object() || val.is_array()) {
            os << "\n";
            render_value(os, val, indent + 1);
        } else {
            os << " " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
        }
    }
}

void render_value(std::ostream& os, const ordered_json& v, int indent) {
    std::string pad(size_t(indent) * 2, ' ');
    if (v.is_object()) {
        render_object(os, v, indent);
        return;
    }
    if (v.is_array()) {
        bool scalars = true;
        for (const auto& x : v)
            if (x.is_object() || x.is_array()) scalars = false;
        if (scalars) {
            os << pad << "[";
            bool first = true;
            for (const auto& x : v) {
                os << (first ? "" : ", ")
                   << (x.is_string() ? x.get<std::string>() : x.dump());
                first = false;
            }
            os << "]\n";
            return;
        }
        int idx = 0;
        for (const auto& x : v) {
            os << pad << "- [" << idx++ << "]\n";
            render_value(os, x, indent + 1);
        }
        return;
    }
    os << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
}

}  // namespace

std::string Report::text() const {
    std::ostringstream os;
    render_object(os, data, 0);
    return os.str();
}

Report cmd_nucleus(const GroupSpec& spec, const Options& opt) {
    Report rep;
    long long p = effective_char(spec, opt);
    GroupData g = spec.build(opt.max_order);
    check_characteristic(g, p);
    Nucleus n = compute_nucleus(g, p, opt.height_bound);

    rep.data["command"] = "nucleus";
    rep.data["group"] = group_to_json(spec, g, p);
    rep.data["classification"] = to_string(n.classification);
    rep.data["includes_origin"] = n.includes_origin;
    ordered_json strata = ordered_json::array();
    for (const Stratum& s : n.strata) strata.push_back(stratum_to_json(s, p));
    rep.data["strata"] = std::move(strata);

    if (opt.verbose) {
        ordered_json all = ordered_json::array();
        std::vector<Stratum> nuclear;
        for (Stratum& s : closed_strata(g, p, opt.height_bound))
            if (s.nuclear) nuclear.push_back(std::move(s));
        for (const Stratum& s : nuclear) {
            ordered_json j = stratum_to_json(s, p);
            ordered_json chain = ordered_json::array();
            for (const Stratum& t : nuclear)
                if (t.subspace != s.subspace && t.subspace.contains(s.subspace))
                    chain.push_back(lattice_to_json(t.subspace));
            j["contained_in"] = std::move(chain);
            all.push_back(std::move(j));
        }
        rep.data["all_nuclear_strata"] = std::move(all);
    }
    return rep;
}

Report cmd_presentation(const GroupSpec& spec, const Options& opt) {
    Report rep;
    long long p = effective_char(spec, opt);
    GroupData g = spec.build(opt.max_order);
    check_characteristic(g, p);
    Presentation pres = presentation(g, p, opt.relation_bound);

    rep.data["command"] = "presentation";
    rep.data["group"] = group_to_json(spec, g, p);
    ordered_json gens = ordered_json::array();
    for (size_t i = 0; i < pres.generators.size(); ++i) {
        ordered_json j;
        j["weight"] = pres.weights[i];
        j["codegree"] = 2 * pres.weights[i];
        j["poly"] = poly_to_json(pres.generators[i]);
        gens.push_back(std::move(j));
    }
    rep.data["generators"] = std::move(gens);
    ordered_json rels = ordered_json::array();
    for (const Poly& r : pres.relations) {
        ordered_json j;
        ordered_json coeffs = ordered_json::array();
        for (const auto& [e, c] : r.terms()) {
            ordered_json t = ordered_json::array();
            for (int x : e) t.push_back(x);
            t.push_back(c.str());
            coeffs.push_back(std::move(t));
        }
        j["coeffs"] = std::move(coeffs);
        j["weight"] = r.weight();
        j["text"] = r.str("y");
        rels.push_back(std::move(j));
    }
    rep.data["relations"] = std::move(rels);
    rep.data["relation_bound"] = pres.relation_bound;
    rep.data["is_polynomial"] = pres.is_polynomial;
    if (opt.verbose) {
        ordered_json audit = ordered_json::array();
        for (long long c : pres.molien) audit.push_back(c);
        rep.data["molien"] = std::move(audit);
    } else {
        ordered_json audit = ordered_json::array();
        for (size_t w = 0; w < pres.molien.size() && w <= size_t(pres.relation_bound); ++w)
            audit.push_back(pres.molien[w]);
        rep.data["molien"] = std::move(audit);
    }
    return rep;
}

Report cmd_check_point(const GroupSpec& spec, const ZVec& point, const Options& opt) {
    Report rep;
    long long p = effective_char(spec, opt);
    GroupData g = spec.build(opt.max_order);
    check_characteristic(g, p);

    PointClassification pc = classify_point(g, p, point);
    Presentation pres = presentation(g, p, opt.relation_bound);
    JacobianVerdict jv = jacobian_at(pres, point);
    LocalModel lm = local_model(g, p, point);

    rep.data["command"] = "check-point";
    rep.data["group"] = group_to_json(spec, g, p);
    rep.data["point"] = zvec_to_json(point);
    ordered_json verdicts;
    verdicts["classifier"] = pc.singular ? "SINGULAR" : "SMOOTH";
    verdicts["jacobian"] = to_string(jv.kind);
    if (jv.kind == Smoothness::Inconclusive) verdicts["jacobian_reason"] = jv.reason;
    rep.data["verdicts"] = std::move(verdicts);
    rep.data["pointwise_stabilizer_order"] = pc.stabilizer.order();
    rep.data["setwise_stabilizer_order"] = pc.line_stabilizer.order();
    rep.data["witness_circles"] = circles_to_json(pc.witness);

    ordered_json lmj;
    lmj["orbit_size"] = lm.orbit_size;
    lmj["fixed_part"] = lattice_to_json(lm.fixed_part);
    lmj["moving_part"] = lattice_to_json(lm.moving_part);
    lmj["regular"] = lm.regular;
    rep.data["local_model"] = std::move(lmj);

    // image of the point in generator coordinates
    FVec vf = to_field_vec(point, p);
    ordered_json image = ordered_json::array();
    for (const Poly& gen : pres.generators) image.push_back(gen.evaluate(vf).str());
    rep.data["image_in_generator_coordinates"] = std::move(image);

    if (jv.kind != Smoothness::Inconclusive &&
        (jv.kind == Smoothness::Singular) != pc.singular) {
        rep.ok = false;
        rep.data["error"] = "classifier and Jacobian oracle disagree";
    }
    return rep;
}

namespace {

struct CheckCollector {
    ordered_json checks = ordered_json::array();
    bool all_pass = true;

    void add(const std::string& name, long long p, bool pass, const std::string& detail = "") {
        ordered_json j;
        j["name"] = name;
        j["characteristic"] = p;
        j["pass"] = pass;
        if (!detail.empty()) j["detail"] = detail;
        checks.push_back(std::move(j));
        all_pass = all_pass && pass;
    }
};

std::vector<std::string> strata_fingerprint(const std::vector<Stratum>& strata) {
    std::vector<std::string> keys;
    for (const Stratum& s : strata) keys.push_back(stratum_key(s));
    std::sort(keys.begin(), keys.end());
    return keys;
}

}  // namespace

Report cmd_verify(const GroupSpec& spec, const Options& opt) {
    Report rep;
    long long requested = effective_char(spec, opt);
    GroupData g = spec.build(opt.max_order);
    check_characteristic(g, requested);

    rep.data["command"] = "verify";
    rep.data["group"] = group_to_json(spec, g, requested);

    CheckCollector cc;
    std::vector<long long> sweep = characteristic_sweep(g, requested);
    {
        ordered_json sj = ordered_json::array();
        for (long long p : sweep) sj.push_back(p);
        rep.data["characteristics"] = std::move(sj);
    }

    // pseudoreflection verdicts must agree across the sweep
    {
        bool pass = true;
        std::string detail;
        for (size_t i = 0; i < g.elems.size() && pass; ++i) {
            bool v0 = is_pseudoreflection(g, int(i), 0);
            for (long long p : sweep) {
                if (p == 0) continue;
                if (is_pseudoreflection(g, int(i), p) != v0) {
                    pass = false;
                    detail = "element " + std::to_string(i) + " disagrees at p=" + std::to_string(p);
                    break;
                }
            }
        }
        cc.add("pseudoreflection characteristic agreement", 0, pass, detail);
    }

    // upward closure across the closed subgroup poset
    {
        bool pass = true;
        std::string detail;
        std::vector<Subgroup> closed = closed_subgroups(g);
        for (long long p : sweep) {
            for (const Subgroup& k : closed)
                for (const Subgroup& k2 : closed) {
                    if (!k2.contains(k)) continue;
                    if (!is_reflection_group(k, p) && is_reflection_group(k2, p)) {
                        pass = false;
                        detail = "p=" + std::to_string(p);
                    }
                }
        }
        cc.add("nuclear upward closure", 0, pass, detail);
    }

    std::vector<std::vector<std::string>> sweep_fingerprints;
    size_t validated = 0;
    ordered_json skipped = ordered_json::array();
    for (long long p : sweep) {
        Presentation pres;
        try {
            pres = presentation(g, p, opt.relation_bound);
        } catch (const std::exception& e) {
            cc.add("presentation", p, false, e.what());
            continue;
        }

        // Molien audit: invariant dimensions match the characteristic-0
        // series through the range the oracle machinery consumes
        {
            bool pass = true;
            std::string detail;
            int dmax = pres.weights.empty() ? 0 : pres.weights.back();
            int bound = int(std::min<long long>(2 * g.order(), pres.relation_bound + dmax));
            try {
                std::vector<long long> mol = molien(g, bound);
                for (int w = 0; w <= bound; ++w) {
                    if (long(invariant_basis(g, p, w).size()) != mol[w]) {
                        pass = false;
                        detail = "weight " + std::to_string(w);
                        break;
                    }
                }
            } catch (const std::exception& e) {
                pass = false;
                detail = e.what();
            }
            cc.add("Molien audit", p, pass, detail);
        }

        // The remaining checks evaluate at stratum representatives.  A prime
        // subfield can be too small to host any representative of a stratum;
        // that is a documented limitation, not a cross-validation failure,
        // so such a characteristic is reported as skipped.
        if (p > 0) {
            try {
                closed_strata(g, p, opt.height_bound);
            } catch (const std::runtime_error& e) {
                std::string msg = e.what();
                if (msg.find("no representative") != std::string::npos) {
                    ordered_json sk;
                    sk["characteristic"] = p;
                    sk["reason"] = msg;
                    skipped.push_back(std::move(sk));
                    continue;
                }
                throw;
            }
        }
        ++validated;

        // classifier vs oracle at every closed stratum
        bool locus_ok = true;
        try {
            SingularLocus locus = singular_locus(g, p, opt.relation_bound, opt.height_bound);
            if (!locus.warnings.empty()) {
                locus_ok = false;
                cc.add("classifier/oracle agreement", p, false, locus.warnings.front());
            } else {
                cc.add("classifier/oracle agreement", p, true);
            }
        } catch (const std::exception& e) {
            locus_ok = false;
            cc.add("classifier/oracle agreement", p, false, e.what());
        }

        // origin rule and polynomiality
        try {
            Nucleus n = compute_nucleus(g, p, opt.height_bound);
            bool origin_rule = n.strata.empty() || n.includes_origin;
            bool origin_poly = (!n.includes_origin) == pres.is_polynomial;
            cc.add("origin rule", p, origin_rule);
            cc.add("origin excluded iff polynomial", p, origin_poly);
            bool cst = pres.is_polynomial == is_reflection_group(full_subgroup(g), p);
            cc.add("polynomial iff reflection group", p, cst);
            sweep_fingerprints.push_back(strata_fingerprint(n.strata));

            if (locus_ok) {
                SuppReport sr = supp_dsg(g, p, opt.relation_bound, opt.height_bound);
                std::vector<std::string> supp_keys;
                bool origin_member = false;
                for (const SuppMember& m : sr.members) {
                    if (m.at_origin)
                        origin_member = true;
                    else
                        supp_keys.push_back(stratum_key(*m.stratum));
                }
                std::sort(supp_keys.begin(), supp_keys.end());
                bool match = supp_keys == strata_fingerprint(n.strata) &&
                             origin_member == n.includes_origin;
                cc.add("singular support equals nucleus", p, match);
            }

            // local model arithmetic at every closed-stratum representative
            bool lm_ok = true;
            std::string lm_detail;
            for (const Stratum& s : closed_strata(g, p, opt.height_bound)) {
                LocalModel lm = local_model(g, p, s.representative);
                if (lm.orbit_size * lm.line_stabilizer.order() != g.order() ||
                    !lm.line_stabilizer.contains(lm.point_stabilizer) ||
                    lm.fixed_part.rank() + lm.moving_part.rank() != g.rank) {
                    lm_ok = false;
                    lm_detail = "stratum of rank " + std::to_string(s.subspace.rank());
                }
            }
            cc.add("local model arithmetic", p, lm_ok, lm_detail);
        } catch (const std::exception& e) {
            cc.add("stratification checks", p, false, e.what());
        }
    }

    // characteristic independence of the strata, across what was validated
    {
        bool pass = true;
        for (size_t i = 1; i < sweep_fingerprints.size(); ++i)
            if (sweep_fingerprints[i] != sweep_fingerprints[0]) pass = false;
        cc.add("characteristic independence of strata", 0,
               pass && sweep_fingerprints.size() == validated && validated >= 1);
    }
    if (!skipped.empty()) rep.data["skipped_characteristics"] = std::move(skipped);

    rep.data["checks"] = std::move(cc.checks);
    rep.data["pass"] = cc.all_pass;
    rep.ok = cc.all_pass;
    return rep;
}

}  // namespace nucleus
