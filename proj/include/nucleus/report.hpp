#pragma once

#include <json.hpp>

#include "nucleus/groupspec.hpp"
#include "nucleus/singular.hpp"

namespace nucleus {

// Structured command result.  The canonical payload is an ordered JSON
// document; the text rendering is derived from it.  Reports never contain
// wall-clock data, so identical inputs produce byte-identical output.
struct Report {
    nlohmann::ordered_json data;
    bool ok = true;

    std::string json_text() const;
    std::string text() const;
};

Report cmd_nucleus(const GroupSpec& spec, const Options& opt);
Report cmd_presentation(const GroupSpec& spec, const Options& opt);
Report cmd_check_point(const GroupSpec& spec, const ZVec& point, const Options& opt);
Report cmd_verify(const GroupSpec& spec, const Options& opt);

nlohmann::ordered_json poly_to_json(const Poly& f);
nlohmann::ordered_json lattice_to_json(const Lattice& l);

}  // namespace nucleus
