// Acceptance suite: one line per criterion, nonzero exit on any failure.

#include <chrono>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "nucleus/report.hpp"

using namespace nucleus;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

void criterion(int number, const std::string& what, const std::function<void()>& body) {
    try {
        body();
        std::cout << "PASS criterion " << number << ": " << what << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "FAIL criterion " << number << ": " << what << " -- " << e.what() << "\n";
    }
}

void expect(bool cond, const std::string& msg) {
    if (!cond) throw std::runtime_error(msg);
}

double seconds_since(Clock::time_point t0) {
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<long long> good_primes(const GroupData& g, std::vector<long long> candidates) {
    std::vector<long long> out;
    for (long long p : candidates)
        if (p == 0 || g.order() % p != 0) out.push_back(p);
    return out;
}

// r equals s * (y_a y_b - y_c^2) for some distinct indices and a sign.
bool matches_segre_relation(const Poly& r) {
    int m = r.nvars();
    for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b)
            for (int c = 0; c < m; ++c) {
                if (a == b || a == c || b == c) continue;
                if (r.weights()[a] + r.weights()[b] != 2 * r.weights()[c]) continue;
                Exponents eab(m, 0), ecc(m, 0);
                eab[a] = 1;
                eab[b] = 1;
                ecc[c] = 2;
                for (int sign : {1, -1}) {
                    Poly target(m, r.characteristic(), r.weights());
                    target.add_term(eab, FieldElem::from_integer(sign, r.characteristic()));
                    target.add_term(ecc, FieldElem::from_integer(-sign, r.characteristic()));
                    if (r == target) return true;
                }
            }
    return false;
}

std::set<std::string> strata_keys(const std::vector<Stratum>& strata) {
    std::set<std::string> keys;
    for (const Stratum& s : strata) keys.insert(s.subspace.basis().str());
    return keys;
}

}  // namespace

int main() {
    const std::vector<std::string> all_presets = preset_names();
    const std::vector<std::string> reflection_presets{"a1", "b2", "so3", "a2"};

    criterion(1, "inversion on T^2: Segre presentation, trivial nucleus, smooth away from 0", [] {
        auto t0 = Clock::now();
        GroupData g = preset("segre").build();
        for (long long p : {0LL, 3LL, 5LL, 7LL}) {
            Presentation pres = presentation(g, p);
            expect(pres.generators.size() == 3, "expected 3 generators");
            expect(pres.relations.size() == 1, "expected exactly 1 relation");
            expect(matches_segre_relation(pres.relations[0]),
                   "relation is not y1*y2 - y3^2 up to relabeling and sign");
            Nucleus n = compute_nucleus(g, p);
            expect(n.classification == NucleusKind::Trivial, "nucleus is not TRIVIAL");
            for (const Stratum& s : closed_strata(g, p)) {
                expect(!s.nuclear, "classifier found a nuclear stratum");
                expect(jacobian_at(pres, s.representative).kind == Smoothness::Smooth,
                       "oracle disagrees away from the origin");
            }
        }
        expect(seconds_since(t0) < 1.0, "runtime exceeded 1s");
    });

    criterion(2, "T^3 x| C_2: four generators, node relation, one nuclear stratum", [] {
        auto t0 = Clock::now();
        GroupData g = preset("t3c2").build();
        Presentation pres = presentation(g, 0);
        expect(pres.generators.size() == 4, "expected 4 generators");
        int weight1 = -1;
        for (size_t i = 0; i < pres.weights.size(); ++i)
            if (pres.weights[i] == 1) {
                expect(weight1 < 0, "more than one weight-1 generator");
                weight1 = int(i);
            }
        expect(weight1 >= 0, "no weight-1 generator");
        expect(pres.relations.size() == 1, "expected exactly 1 relation");
        const Poly& rel = pres.relations[0];
        expect(matches_segre_relation(rel), "relation shape mismatch");
        for (const auto& [e, c] : rel.terms())
            expect(e[weight1] == 0, "relation involves the weight-1 generator");

        Nucleus n = compute_nucleus(g, 0);
        expect(n.includes_origin, "origin missing");
        expect(n.strata.size() == 1, "expected exactly one positive-dimensional stratum");
        expect(n.strata[0].subspace.rank() == 1 &&
                   n.strata[0].subspace.basis_row(0) == ZVec{0, 0, 1},
               "stratum is not span{(0,0,1)}");

        // image of the representative in generator coordinates: with the
        // weight-1 generator listed last this is (0,0,0,1)
        FVec v = to_field_vec(n.strata[0].representative, 0);
        std::vector<std::string> reordered;
        std::string w1_value;
        for (size_t i = 0; i < pres.generators.size(); ++i) {
            FieldElem q = pres.generators[i].evaluate(v);
            if (int(i) == weight1)
                w1_value = q.str();
            else
                reordered.push_back(q.str());
        }
        reordered.push_back(w1_value);
        expect(reordered == std::vector<std::string>{"0", "0", "0", "1"},
               "image point is not (0,0,0,1) in generator coordinates");

        // oracle: SINGULAR exactly at that stratum's representative
        for (const Stratum& s : closed_strata(g, 0)) {
            Smoothness kind = jacobian_at(pres, s.representative).kind;
            if (s.subspace == n.strata[0].subspace)
                expect(kind == Smoothness::Singular, "oracle misses the singular stratum");
            else
                expect(kind == Smoothness::Smooth, "oracle flags a smooth stratum");
        }
        expect(seconds_since(t0) < 5.0, "runtime exceeded 5s");
    });

    criterion(3, "classifier and Jacobian oracle agree at every closed stratum", [&] {
        for (const std::string& name : all_presets) {
            GroupData g = preset(name).build();
            for (long long p : good_primes(g, {0, 5, 7, 11})) {
                SingularLocus locus = singular_locus(g, p);
                expect(locus.warnings.empty(), name + ": INCONCLUSIVE at default bound");
                for (const StratumVerdict& sv : locus.verdicts) {
                    expect(sv.oracle.kind != Smoothness::Inconclusive,
                           name + ": inconclusive verdict");
                    expect((sv.oracle.kind == Smoothness::Singular) == sv.classifier_singular,
                           name + ": verdict mismatch");
                }
            }
        }
    });

    criterion(4, "polynomial invariants exactly for reflection groups", [&] {
        for (const std::string& name : all_presets) {
            GroupData g = preset(name).build();
            Presentation pres = presentation(g, 0);
            expect(pres.is_polynomial == is_reflection_group(full_subgroup(g), 0),
                   name + ": polynomiality mismatch");
        }
        for (const std::string& name : reflection_presets) {
            GroupData g = preset(name).build();
            Presentation pres = presentation(g, 0);
            expect(pres.relations.empty(), name + ": unexpected relations");
            expect(compute_nucleus(g, 0).classification == NucleusKind::Empty,
                   name + ": nucleus not empty");
        }
    });

    criterion(5, "invariant dimensions match the Molien series through weight 2|W|", [&] {
        for (const std::string& name : all_presets) {
            GroupData g = preset(name).build();
            int bound = int(2 * g.order());
            std::vector<long long> mol = molien(g, bound);
            for (long long p : good_primes(g, {0, 3, 5, 7, 11})) {
                for (int w = 0; w <= bound; ++w)
                    expect(long(invariant_basis(g, p, w).size()) == mol[w],
                           name + ": dimension mismatch at weight " + std::to_string(w));
            }
        }
    });

    criterion(6, "non-reflection property is upward closed over closed subgroups", [&] {
        for (const std::string& name : all_presets) {
            GroupData g = preset(name).build();
            std::vector<Subgroup> closed = closed_subgroups(g);
            for (const Subgroup& k : closed)
                for (const Subgroup& k2 : closed) {
                    if (!k2.contains(k)) continue;
                    if (!is_reflection_group(k, 0))
                        expect(!is_reflection_group(k2, 0), name + ": upward closure violated");
                }
        }
    });

    criterion(7, "origin rule", [&] {
        for (const std::string& name : all_presets) {
            GroupData g = preset(name).build();
            Nucleus n = compute_nucleus(g, 0);
            if (!n.strata.empty())
                expect(n.includes_origin, name + ": strata without the origin");
            Presentation pres = presentation(g, 0);
            expect((!n.includes_origin) == pres.is_polynomial,
                   name + ": origin excluded iff polynomial fails");
        }
    });

    criterion(8, "local model arithmetic at every tested point", [&] {
        for (const std::string& name : all_presets) {
            GroupData g = preset(name).build();
            for (long long p : good_primes(g, {0, 5, 7, 11})) {
                for (const Stratum& s : closed_strata(g, p)) {
                    LocalModel lm = local_model(g, p, s.representative);
                    expect(lm.orbit_size * lm.line_stabilizer.order() == g.order(),
                           name + ": orbit-stabilizer identity fails");
                    expect(lm.line_stabilizer.contains(lm.point_stabilizer),
                           name + ": pointwise not inside setwise");
                    ZMat stacked(0, lm.moving_part.rank());
                    ZMat idr = ZMat::identity(lm.moving_part.rank());
                    for (const ZMat& m : lm.moving_action) stacked = vstack(stacked, m - idr);
                    expect(int_kernel(stacked).rows() == 0,
                           name + ": complement has fixed vectors");
                }
            }
        }
    });

    criterion(9, "singularity category support equals the nucleus", [&] {
        for (const std::string& name : all_presets) {
            GroupData g = preset(name).build();
            for (long long p : good_primes(g, {0, 5, 7, 11})) {
                SuppReport sr = supp_dsg(g, p);
                Nucleus n = compute_nucleus(g, p);
                std::set<std::string> supp_keys;
                bool origin_member = false;
                for (const SuppMember& m : sr.members) {
                    if (m.at_origin)
                        origin_member = true;
                    else
                        supp_keys.insert(m.stratum->subspace.basis().str());
                }
                expect(supp_keys == strata_keys(n.strata), name + ": member sets differ");
                expect(origin_member == n.includes_origin, name + ": origin membership differs");
            }
        }
    });

    criterion(10, "nucleus strata are identical across characteristics", [&] {
        for (const std::string& name : all_presets) {
            GroupData g = preset(name).build();
            std::vector<std::set<std::string>> fps;
            for (long long p : good_primes(g, {0, 5, 7, 11}))
                fps.push_back(strata_keys(compute_nucleus(g, p).strata));
            for (size_t i = 1; i < fps.size(); ++i)
                expect(fps[i] == fps[0], name + ": strata differ between characteristics");
        }
    });

    criterion(11, "full verification suite over all presets in under 60 seconds", [&] {
        auto t0 = Clock::now();
        Options opt;
        for (const std::string& name : all_presets) {
            Report r = cmd_verify(preset(name), opt);
            expect(r.ok, name + ": verification failed");
        }
        double elapsed = seconds_since(t0);
        expect(elapsed < 60.0, "took " + std::to_string(elapsed) + "s");
    });

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
