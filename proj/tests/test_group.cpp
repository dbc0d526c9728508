#include <doctest.h>

#include <array>
#include <thread>

#include "nucleus/group.hpp"
#include "nucleus/groupspec.hpp"
#include "oracles.hpp"

using namespace nucleus;

TEST_CASE("closure of single involutions") {
    CHECK(close({ZMat{{-1, 0}, {0, -1}}}).order() == 2);
    CHECK(close({ZMat{{0, 1}, {1, 0}}}).order() == 2);
}

TEST_CASE("closure of the dihedral group of order 8 matches the naive oracle") {
    std::vector<ZMat> gens{ZMat{{0, 1}, {1, 0}}, ZMat{{-1, 0}, {0, 1}}};
    GroupData g = close(gens);
    CHECK(g.order() == 8);
    CHECK(oracles::naive_closure(gens).size() == 8);
    // multiplication table is consistent with matrix products
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j)
            CHECK(g.elems[g.mul(i, j)] == g.elems[i] * g.elems[j]);
    for (int i = 0; i < 8; ++i) CHECK(g.mul(i, g.inverse(i)) == 0);
}

TEST_CASE("closure rejects non-invertible generators") {
    CHECK_THROWS_AS(close({ZMat{{2, 0}, {0, 1}}}), std::invalid_argument);
}

TEST_CASE("closure respects max_order") {
    // infinite order shear
    CHECK_THROWS_AS(close({ZMat{{1, 1}, {0, 1}}}, 50), std::runtime_error);
}

TEST_CASE("subgroup enumeration") {
    CHECK(subgroups(close({ZMat{{-1, 0}, {0, -1}}})).size() == 2);
    CHECK(subgroups(close({ZMat{{1}}})).size() == 1);

    GroupData b2 = preset("b2").build();
    std::vector<Subgroup> subs = subgroups(b2);
    CHECK(subs.size() == 10);
    CHECK(subs.size() == size_t(oracles::count_subgroups_bruteforce(b2)));
    // sorted by order then element set, with the trivial and full subgroups present
    CHECK(subs.front().order() == 1);
    CHECK(subs.back().order() == 8);
    for (size_t i = 1; i < subs.size(); ++i) CHECK(subs[i - 1].order() <= subs[i].order());

    GroupData a2 = preset("a2").build();
    CHECK(subgroups(a2).size() == 6);
    CHECK(oracles::count_subgroups_bruteforce(a2) == 6);
}

TEST_CASE("pseudoreflection detection") {
    GroupData b2 = preset("b2").build();
    ZMat swap{{0, 1}, {1, 0}};
    ZMat neg{{-1, 0}, {0, -1}};
    CHECK(is_pseudoreflection(b2, b2.index_of(swap), 0));
    CHECK_FALSE(is_pseudoreflection(b2, b2.index_of(neg), 0));
    CHECK_FALSE(is_pseudoreflection(b2, 0, 0));  // identity

    GroupData t3 = preset("t3c2").build();
    CHECK_FALSE(is_pseudoreflection(t3, 1, 0));  // diag(-1,-1,1) has rank 2

    GroupData so3 = preset("so3").build();
    CHECK(is_pseudoreflection(so3, 1, 0));  // -1 on a rank-1 lattice
}

TEST_CASE("reflection group test") {
    GroupData b2 = preset("b2").build();
    CHECK(is_reflection_group(trivial_subgroup(b2), 0));
    CHECK(is_reflection_group(full_subgroup(b2), 0));
    CHECK(pseudoreflections_in(full_subgroup(b2), 0).size() == 4);

    // {+-I} contains no pseudoreflections
    ZMat neg{{-1, 0}, {0, -1}};
    Subgroup pm(&b2, {0, b2.index_of(neg)});
    CHECK_FALSE(is_reflection_group(pm, 0));

    GroupData segre = preset("segre").build();
    CHECK_FALSE(is_reflection_group(full_subgroup(segre), 0));
}

TEST_CASE("reflection closure is contained in the subgroup, equality iff verdict") {
    for (const std::string& name : preset_names()) {
        GroupData g = preset(name).build();
        for (const Subgroup& k : subgroups(g)) {
            Subgroup gen = generate_subgroup(g, pseudoreflections_in(k, 0));
            CHECK(k.contains(gen));
            CHECK((gen.elems() == k.elems()) == is_reflection_group(k, 0));
        }
    }
}

TEST_CASE("pseudoreflection status is conjugation invariant") {
    for (const std::string& name : preset_names()) {
        GroupData g = preset(name).build();
        for (size_t a = 0; a < g.elems.size(); ++a) {
            bool base = is_pseudoreflection(g, int(a), 0);
            for (size_t w = 0; w < g.elems.size(); ++w) {
                int conj = g.mul(g.mul(int(w), int(a)), g.inverse(int(w)));
                CHECK(is_pseudoreflection(g, conj, 0) == base);
            }
        }
    }
}

TEST_CASE("pseudoreflection verdicts agree in characteristic 0 and p") {
    for (const std::string& name : preset_names()) {
        GroupData g = preset(name).build();
        for (long long p : {3LL, 5LL, 7LL, 11LL}) {
            if (g.order() % p == 0) continue;
            for (size_t a = 0; a < g.elems.size(); ++a)
                REQUIRE(is_pseudoreflection(g, int(a), p) == is_pseudoreflection(g, int(a), 0));
        }
    }
}

TEST_CASE("characteristic validation") {
    GroupData segre = preset("segre").build();
    CHECK_THROWS_AS(check_characteristic(segre, 2), std::invalid_argument);
    CHECK_THROWS_AS(check_characteristic(segre, 6), std::invalid_argument);
    CHECK_NOTHROW(check_characteristic(segre, 3));
    CHECK_NOTHROW(check_characteristic(segre, 0));

    GroupData a2 = preset("a2").build();
    CHECK_THROWS_AS(check_characteristic(a2, 3), std::invalid_argument);
}

TEST_CASE("subgroup construction validates closure and identity") {
    GroupData b2 = preset("b2").build();
    CHECK_THROWS_AS(Subgroup(&b2, {1, 2}), std::invalid_argument);  // no identity
    ZMat rot{{0, -1}, {1, 0}};
    // {I, rot} is not closed (rot^2 = -I missing)
    CHECK_THROWS_AS(Subgroup(&b2, {0, b2.index_of(rot)}), std::invalid_argument);
}

TEST_CASE("lazy subgroup flags tolerate concurrent queries") {
    GroupData b2 = preset("b2").build();
    Subgroup w = full_subgroup(b2);
    std::vector<std::thread> threads;
    std::array<bool, 8> verdicts{};
    for (int t = 0; t < 8; ++t)
        threads.emplace_back([&, t] { verdicts[size_t(t)] = is_reflection_group(w, 0); });
    for (auto& th : threads) th.join();
    for (bool v : verdicts) CHECK(v);
}
