#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nerf/fixtures.hpp"
#include "nerf/nerf_validator.hpp"
#include "nerf/strict_ncat.hpp"
#include "nerf/truncation.hpp"

using namespace nerf;
using namespace nerf::fixtures;

TEST_CASE("strict validation accepts the shipped fixtures") {
    CHECK(validate_strict(strict1_from_category(z2_delooping())).ok);
    CHECK(validate_strict(strict2_z2()).ok);
    CHECK(validate_strict(strict2_group_with_autos(2, 2)).ok);
    CHECK(validate_strict(strict2_group_with_autos(3, 2)).ok);
    CHECK(validate_strict(strict2_from_category(arrow_category())).ok);
    CHECK(validate_strict(strict3_z2()).ok);
}

TEST_CASE("broken interchange is named") {
    StrictReport r = validate_strict(broken_interchange());
    CHECK_FALSE(r.ok);
    CHECK(r.detail.find("Godement") != std::string::npos);
}

TEST_CASE("multi-nerve of a 1-category equals the nerve") {
    FinCategory c = arrow_category();
    PresheafPtr a = multi_nerve(strict1_from_category(c), {3});
    PresheafPtr b = nerve(c, 3);
    for (int m = 0; m <= 3; ++m) {
        CHECK(a->cell_count({m}) == b->cell_count({m}));
        if (m >= 1)
            for (int i = 0; i <= m; ++i) CHECK(a->face_action({m}, 1, i) == b->face_action({m}, 1, i));
    }
}

TEST_CASE("multi-nerve grid counts for the one-object Z/2 fixture") {
    PresheafPtr mn = multi_nerve(strict2_z2(), {3, 3});
    CHECK(mn->cell_count({2, 0}) == 4);   // pairs of 1-cells
    CHECK(mn->cell_count({0, 2}) == 1);   // objects only
    CHECK(mn->cell_count({2, 2}) == 4);   // identity 2-cell grids over the chains
    CHECK(mn->validate().ok);
}

TEST_CASE("multi-nerve of the terminal strict 2-category is terminal") {
    PresheafPtr mn = multi_nerve(strict2_from_category(terminal_category()), {3, 3});
    for (const auto& m : mn->all_indices()) CHECK(mn->cell_count(m) == 1);
}

TEST_CASE("multi-nerves are strict nerves end-to-end at n=2 and n=3") {
    for (auto s : {strict2_z2(), strict2_group_with_autos(2, 2), strict2_discrete(2)}) {
        PresheafPtr mn = multi_nerve(s, {3, 3});
        CHECK(is_strict_nerf(mn).ok);
        CHECK(is_n_nerf(mn).ok);
    }
    PresheafPtr mn3 = multi_nerve(strict3_z2(), {3, 3, 3});
    CHECK(is_strict_nerf(mn3).ok);
    PresheafPtr mn3small = multi_nerve(strict3_z2(), {2, 2, 2});
    CHECK(is_n_nerf(mn3small).ok);
}

TEST_CASE("strict truncation collapses the top level by isomorphism classes") {
    StrictNCategory s = strict2_group_with_autos(2, 2);
    StrictNCategory t = strict_truncate(s);
    CHECK(t.n == 1);
    // all four 1-cells... the 1-cells of s are Z/2; every 2-cell is an
    // automorphism, so classes = arrows themselves
    CHECK(t.cells(1) == 2);
    StrictNCategory d = strict_truncate(strict2_from_category(discrete_category(3)));
    CHECK(d.cells(1) == 3);
}

TEST_CASE("truncation compatibility: T(multi_nerve(C)) vs multi_nerve(TC)") {
    StrictNCategory s = strict2_z2();
    Truncation t = truncate(multi_nerve(s, {3, 3}));
    StrictNCategory tc = strict_truncate(s);
    PresheafPtr mn_tc = multi_nerve(tc, {3});
    for (int m = 0; m <= 3; ++m) CHECK(t.total->cell_count({m}) == mn_tc->cell_count({m}));
}

TEST_CASE("multi-nerve rejects n > 3") {
    StrictNCategory s4;
    s4.n = 4;
    CHECK_THROWS(multi_nerve(s4, {2, 2, 2, 2}));
}
