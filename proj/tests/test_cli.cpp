#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "nucleus/report.hpp"

using namespace nucleus;
using nlohmann::ordered_json;

TEST_CASE("preset table") {
    auto names = preset_names();
    REQUIRE(names.size() == 6);
    std::vector<long long> orders{2, 2, 2, 8, 2, 6};
    for (size_t i = 0; i < names.size(); ++i) {
        GroupSpec s = preset(names[i]);
        CHECK(s.build().order() == orders[i]);
    }
    CHECK_THROWS_AS(preset("nope"), std::invalid_argument);
}

TEST_CASE("plain text group spec parsing") {
    GroupSpec s = parse_group_spec("2 0\n-1 0\n0 -1\n", "inversion");
    CHECK(s.rank == 2);
    CHECK(s.characteristic == 0);
    REQUIRE(s.generator_matrices.size() == 1);
    CHECK(s.generator_matrices[0] == ZMat{{-1, 0}, {0, -1}});
    CHECK(s.build().order() == 2);

    // two generators in one stream
    GroupSpec b = parse_group_spec("2 0  0 1 1 0  -1 0 0 1");
    CHECK(b.generator_matrices.size() == 2);
    CHECK(b.build().order() == 8);

    CHECK_THROWS_AS(parse_group_spec("2 0\n1 0 0\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_group_spec(""), std::invalid_argument);
}

TEST_CASE("json group spec parsing") {
    GroupSpec s = parse_group_spec(
        R"({"rank": 2, "char": 5, "generators": [[0,1,1,0]], "name": "swap"})");
    CHECK(s.name == "swap");
    CHECK(s.rank == 2);
    CHECK(s.characteristic == 5);
    CHECK(s.build().order() == 2);
    CHECK_THROWS_AS(parse_group_spec(R"({"rank": 2, "generators": []})"), std::invalid_argument);
}

TEST_CASE("characteristic dividing the group order is rejected after closure") {
    GroupSpec s = preset("segre");
    s.characteristic = 2;
    CHECK_THROWS_AS(s.build(), std::invalid_argument);

    Options opt;
    opt.characteristic = 3;
    GroupSpec a2 = preset("a2");  // |W| = 6
    CHECK_THROWS_AS(cmd_nucleus(a2, opt), std::invalid_argument);
}

TEST_CASE("cmd_nucleus carries the spec'd keys") {
    Options opt;
    Report r = cmd_nucleus(preset("t3c2"), opt);
    CHECK(r.ok);
    CHECK(r.data["classification"] == "POSITIVE");
    CHECK(r.data["includes_origin"] == true);
    REQUIRE(r.data["strata"].size() == 1);
    const auto& s = r.data["strata"][0];
    CHECK(s["basis"][0] == ordered_json::array({"0", "0", "1"}));
    CHECK(s["subgroup_order"] == 2);
    CHECK(s["witness_circles"][0] == ordered_json::array({"0", "0", "1"}));

    CHECK(cmd_nucleus(preset("segre"), opt).data["classification"] == "TRIVIAL");
    CHECK(cmd_nucleus(preset("a1"), opt).data["classification"] == "EMPTY");
    CHECK(cmd_nucleus(preset("b2"), opt).data["classification"] == "EMPTY");
}

TEST_CASE("cmd_presentation reports generators, relations and the audit") {
    Options opt;
    Report r = cmd_presentation(preset("segre"), opt);
    CHECK(r.data["generators"].size() == 3);
    for (const auto& g : r.data["generators"]) {
        CHECK(g["weight"] == 2);
        CHECK(g["codegree"] == 4);
    }
    REQUIRE(r.data["relations"].size() == 1);
    CHECK(r.data["relations"][0].contains("coeffs"));
    CHECK(r.data["is_polynomial"] == false);

    Report ra = cmd_presentation(preset("a2"), opt);
    CHECK(ra.data["relations"].empty());
    CHECK(ra.data["is_polynomial"] == true);

    Report rt = cmd_presentation(preset("t3c2"), opt);
    std::vector<int> ws;
    for (const auto& g : rt.data["generators"]) ws.push_back(g["weight"].get<int>());
    CHECK(ws == std::vector<int>{1, 2, 2, 2});
}

TEST_CASE("cmd_check_point reports both verdicts") {
    Options opt;
    Report r = cmd_check_point(preset("t3c2"), ZVec{0, 0, 1}, opt);
    CHECK(r.ok);
    CHECK(r.data["verdicts"]["classifier"] == "SINGULAR");
    CHECK(r.data["verdicts"]["jacobian"] == "SINGULAR");
    CHECK(r.data["pointwise_stabilizer_order"] == 2);
    CHECK(r.data["setwise_stabilizer_order"] == 2);
    CHECK(r.data["local_model"]["regular"] == false);
    // weight-2 generators all vanish, the weight-1 generator evaluates to 1
    const auto& img = r.data["image_in_generator_coordinates"];
    REQUIRE(img.size() == 4);
    CHECK(img[0] == "1");
    CHECK(img[1] == "0");
    CHECK(img[2] == "0");
    CHECK(img[3] == "0");

    Report rs = cmd_check_point(preset("segre"), ZVec{1, 0}, opt);
    CHECK(rs.data["verdicts"]["classifier"] == "SMOOTH");
    CHECK(rs.data["verdicts"]["jacobian"] == "SMOOTH");
    Report rs2 = cmd_check_point(preset("segre"), ZVec{0, 1}, opt);
    CHECK(rs2.data["verdicts"]["classifier"] == "SMOOTH");
    CHECK(rs2.data["verdicts"]["jacobian"] == "SMOOTH");
}

TEST_CASE("cmd_verify passes on every preset") {
    Options opt;
    for (const std::string& name : preset_names()) {
        Report r = cmd_verify(preset(name), opt);
        CHECK(r.ok);
        CHECK(r.data["pass"] == true);
        for (const auto& c : r.data["checks"]) CHECK(c["pass"] == true);
    }
}

TEST_CASE("reports are byte-identical across runs and round-trip through JSON") {
    Options opt;
    for (const std::string& name : preset_names()) {
        Report a = cmd_nucleus(preset(name), opt);
        Report b = cmd_nucleus(preset(name), opt);
        CHECK(a.json_text() == b.json_text());
        CHECK(a.text() == b.text());
        ordered_json parsed = ordered_json::parse(a.json_text());
        CHECK(parsed == a.data);
        CHECK(parsed.dump(2) + "\n" == a.json_text());
    }
    Report p1 = cmd_presentation(preset("b2"), opt);
    Report p2 = cmd_presentation(preset("b2"), opt);
    CHECK(p1.json_text() == p2.json_text());
}

TEST_CASE("verbose nucleus lists containment chains") {
    Options opt;
    opt.verbose = true;
    Report r = cmd_nucleus(preset("t3c2"), opt);
    REQUIRE(r.data.contains("all_nuclear_strata"));
    CHECK(r.data["all_nuclear_strata"].size() == 1);
}

TEST_CASE("group specs load from files") {
    std::string path = "loaded_spec_test.txt";
    {
        std::ofstream f(path);
        f << "2 5\n0 1\n1 0\n";
    }
    GroupSpec s = load_group_spec(path);
    CHECK(s.rank == 2);
    CHECK(s.characteristic == 5);
    CHECK(s.build().order() == 2);
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_group_spec("no_such_preset_or_file"), std::invalid_argument);
}

TEST_CASE("the --char option overrides the spec characteristic") {
    Options opt;
    opt.characteristic = 7;
    Report r = cmd_nucleus(preset("t3c2"), opt);
    CHECK(r.data["group"]["characteristic"] == 7);
    CHECK(r.data["classification"] == "POSITIVE");
}

TEST_CASE("verify skips characteristics whose prime subfield has no representatives") {
    // order-12 hexagonal reflection group: every line over F_5 is a mirror
    GroupSpec s = parse_group_spec("2 0  0 1 1 0  1 -1 1 0", "hex12");
    CHECK(s.build().order() == 12);
    Options opt;
    Report r = cmd_verify(s, opt);
    CHECK(r.ok);
    REQUIRE(r.data.contains("skipped_characteristics"));
    CHECK(r.data["skipped_characteristics"][0]["characteristic"] == 5);
}
