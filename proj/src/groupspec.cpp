#include "nucleus/groupspec.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace nucleus {

namespace {
GroupData close_checked(const std::vector<ZMat>& gens, long long max_order, long long p) {
    GroupData g = close(gens, max_order, p);
    check_characteristic(g, p);
    return g;
}
}  // namespace

GroupData GroupSpec::build(long long max_order) const {
    if (!is_zero_or_prime(characteristic))
        throw std::invalid_argument("group spec: characteristic must be 0 or prime");
    return close_checked(generator_matrices, max_order, characteristic);
}

namespace {

ZMat diag(std::vector<long> d) {
    ZMat m(int(d.size()), int(d.size()));
    for (size_t i = 0; i < d.size(); ++i) m.at(int(i), int(i)) = d[i];
    return m;
}

ZMat perm(int n, std::vector<int> images) {
    // matrix sending e_i to e_{images[i]}
    ZMat m(n, n);
    for (int i = 0; i < n; ++i) m.at(images[i], i) = 1;
    return m;
}

}  // namespace

std::vector<std::string> preset_names() {
    return {"segre", "t3c2", "a1", "b2", "so3", "a2"};
}

bool is_preset(const std::string& name) {
    for (const auto& p : preset_names())
        if (p == name) return true;
    return false;
}

GroupSpec preset(const std::string& name) {
    GroupSpec s;
    s.name = name;
    s.characteristic = 0;
    if (name == "segre") {
        s.rank = 2;
        s.generator_matrices = {diag({-1, -1})};
    } else if (name == "t3c2") {
        s.rank = 3;
        s.generator_matrices = {diag({-1, -1, 1})};
    } else if (name == "a1") {
        s.rank = 2;
        s.generator_matrices = {perm(2, {1, 0})};
    } else if (name == "b2") {
        s.rank = 2;
        s.generator_matrices = {perm(2, {1, 0}), diag({-1, 1})};
    } else if (name == "so3") {
        s.rank = 1;
        s.generator_matrices = {diag({-1})};
    } else if (name == "a2") {
        s.rank = 3;
        s.generator_matrices = {perm(3, {1, 0, 2}), perm(3, {0, 2, 1})};
    } else {
        throw std::invalid_argument("unknown preset: " + name);
    }
    return s;
}

namespace {

GroupSpec parse_json_spec(const std::string& text, const std::string& name_hint) {
    nlohmann::json j = nlohmann::json::parse(text);
    GroupSpec s;
    s.name = j.value("name", name_hint);
    s.rank = j.at("rank").get<int>();
    s.characteristic = j.value("char", 0LL);
    if (s.rank <= 0) throw std::invalid_argument("group spec: rank must be positive");
    for (const auto& gen : j.at("generators")) {
        std::vector<long long> flat = gen.get<std::vector<long long>>();
        if (int(flat.size()) != s.rank * s.rank)
            throw std::invalid_argument("group spec: generator entry count mismatch");
        ZMat m(s.rank, s.rank);
        for (int i = 0; i < s.rank; ++i)
            for (int k = 0; k < s.rank; ++k) m.at(i, k) = mpz_class(static_cast<long>(flat[size_t(i) * s.rank + k]));
        s.generator_matrices.push_back(std::move(m));
    }
    if (s.generator_matrices.empty())
        throw std::invalid_argument("group spec: no generators");
    return s;
}

GroupSpec parse_plain_spec(const std::string& text, const std::string& name_hint) {
    std::istringstream in(text);
    GroupSpec s;
    s.name = name_hint;
    if (!(in >> s.rank >> s.characteristic))
        throw std::invalid_argument("group spec: expected 'rank p' on the first line");
    if (s.rank <= 0) throw std::invalid_argument("group spec: rank must be positive");
    std::vector<mpz_class> entries;
    std::string tok;
    while (in >> tok) entries.emplace_back(tok);
    size_t per = size_t(s.rank) * s.rank;
    if (entries.empty() || entries.size() % per != 0)
        throw std::invalid_argument("group spec: generator entries are not a multiple of rank^2");
    for (size_t off = 0; off < entries.size(); off += per) {
        ZMat m(s.rank, s.rank);
        for (int i = 0; i < s.rank; ++i)
            for (int k = 0; k < s.rank; ++k) m.at(i, k) = entries[off + size_t(i) * s.rank + k];
        s.generator_matrices.push_back(std::move(m));
    }
    return s;
}

}  // namespace

GroupSpec parse_group_spec(const std::string& text, const std::string& name_hint) {
    for (char c : text) {
        if (c == ' ' || c == '\n' || c == '\t' || c == '\r') continue;
        if (c == '{') return parse_json_spec(text, name_hint);
        break;
    }
    return parse_plain_spec(text, name_hint);
}

GroupSpec load_group_spec(const std::string& preset_or_path) {
    if (is_preset(preset_or_path)) return preset(preset_or_path);
    std::ifstream f(preset_or_path);
    if (!f) throw std::invalid_argument("not a preset and not a readable file: " + preset_or_path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse_group_spec(ss.str(), preset_or_path);
}

}  // namespace nucleus
