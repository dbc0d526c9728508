#pragma once

#include <string>

#include "nucleus/group.hpp"

namespace nucleus {

// User-facing description of a group: rank, generator matrices and the
// coefficient characteristic.  Users encode normalizer-of-maximal-torus data
// (n, W) directly.
struct GroupSpec {
    std::string name;
    int rank = 0;
    long long characteristic = 0;
    std::vector<ZMat> generator_matrices;

    GroupData build(long long max_order = 20000) const;
};

struct Options {
    long long characteristic = -1;  // -1: keep the spec's value
    long long max_order = 20000;
    int relation_bound = 0;  // 0: default (twice the max generator weight)
    int height_bound = 8;
    bool json = false;
    bool verbose = false;
    std::string out_path;
};

// Shipped presets: segre, t3c2, a1, b2, so3, a2.
std::vector<std::string> preset_names();
bool is_preset(const std::string& name);
GroupSpec preset(const std::string& name);

// Plain format: first line "rank p", then generator matrices row by row,
// whitespace separated.  A document starting with '{' is parsed as JSON with
// fields "rank", "char", "generators" (row-major integer lists) and an
// optional "name".
GroupSpec parse_group_spec(const std::string& text, const std::string& name_hint = "");
GroupSpec load_group_spec(const std::string& preset_or_path);

}  // namespace nucleus
