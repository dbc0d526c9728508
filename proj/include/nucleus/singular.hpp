#pragma once

#include <optional>
#include <string>

#include "nucleus/invariants.hpp"

namespace nucleus {

enum class Smoothness { Smooth, Singular, Inconclusive };

const char* to_string(Smoothness s);

struct JacobianVerdict {
    Smoothness kind = Smoothness::Inconclusive;
    std::string reason;  // set for Inconclusive
};

// Jacobian criterion for the image point q = (g_1(v), ..., g_m(v)) on the
// n-dimensional variety cut out by the relations.  SMOOTH iff
// rank J(q) = m - n; this is sound for any truncation since missing rows
// can only raise the rank toward m - n.  SINGULAR is certified only when
// the relation set is complete through twice the maximal generator weight
// and a Hilbert-series window above the bound confirms no missing
// relations; otherwise INCONCLUSIVE.
JacobianVerdict jacobian_at(const Presentation& pres, const ZVec& v);

// Dimension check that the found relations generate everything in weights
// (pres.relation_bound, upto].
bool relations_complete_through(const Presentation& pres, int upto);

struct StratumVerdict {
    Stratum stratum;
    bool classifier_singular = false;
    JacobianVerdict oracle;
};

struct SingularLocus {
    std::vector<StratumVerdict> verdicts;  // every closed stratum
    std::vector<Stratum> strata;           // the singular ones, maximal
    bool includes_origin = false;
    std::vector<std::string> warnings;
};

// The homogeneous singular locus, computed two ways and compared: the
// stabilizer classifier and the Jacobian oracle at each representative.  Any
// SMOOTH/SINGULAR disagreement is a hard error; INCONCLUSIVE produces a
// warning with the truncation bound.
SingularLocus singular_locus(const GroupData& g, long long p, int relation_bound = 0,
                             int height_bound = 8);

// Evidence that the cyclic module R/p witnesses non-smallness at a singular
// stratum: the stabilizer acts on the complement without being generated by
// pseudoreflections, so the local ring is not regular.
struct WitnessModule {
    bool at_origin = false;
    std::string module_desc;   // R/p as a formal cyclic module
    Subgroup stabilizer;
    std::vector<ZMat> complement_action;
    std::string evidence;
};

WitnessModule witness_module(const GroupData& g, long long p, const Stratum& s);
WitnessModule origin_witness_module(const GroupData& g, long long p);

struct SuppMember {
    bool at_origin = false;
    std::optional<Stratum> stratum;
    WitnessModule witness;
};

struct SuppReport {
    std::vector<SuppMember> members;
    std::vector<std::string> warnings;
};

// Support of the singularity category of the cochain algebra: the singular
// strata together with the origin when the whole group is not a reflection
// group, each member carrying its witness module.
SuppReport supp_dsg(const GroupData& g, long long p, int relation_bound = 0,
                    int height_bound = 8);

}  // namespace nucleus
