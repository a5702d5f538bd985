#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nerf/cat.hpp"
#include "nerf/fixtures.hpp"

using namespace nerf;
using namespace nerf::fixtures;

TEST_CASE("category validation catches broken tables") {
    FinCategory c = z2_delooping();
    CHECK(c.validate().ok);
    FinCategory bad = c;
    bad.comp[0][1] = 0;  // g.e = e breaks the identity law
    CHECK_FALSE(bad.validate().ok);
}

TEST_CASE("nerve cell counts: one-object one-arrow category gives the terminal presheaf") {
    PresheafPtr phi = nerve(terminal_category(), 4);
    for (const auto& m : phi->all_indices()) CHECK(phi->cell_count(m) == 1);
}

TEST_CASE("nerve cell counts: |N(Z/2)(m)| = 2^m") {
    PresheafPtr phi = nerve(z2_delooping(), 4);
    int expect = 1;
    for (int m = 0; m <= 4; ++m) {
        CHECK(phi->cell_count({m}) == (m == 0 ? 1 : expect * 2));
        if (m >= 1) expect *= 2;
    }
}

TEST_CASE("nerve cell counts: discrete category has only identity chains") {
    PresheafPtr phi = nerve(discrete_category(2), 4);
    for (int m = 0; m <= 4; ++m) CHECK(phi->cell_count({m}) == 2);
}

TEST_CASE("is_one_nerve accepts generated nerves") {
    for (auto c : {z2_delooping(), arrow_category(), s3_delooping(), contractible_groupoid(3)}) {
        PresheafPtr phi = nerve(c, 3);
        CHECK(is_one_nerve(phi).ok);
    }
}

TEST_CASE("is_one_nerve rejects a shared spine with an injectivity witness") {
    OneNerveReport r = is_one_nerve(broken_segal_injectivity());
    CHECK_FALSE(r.ok);
    CHECK(r.m == 2);
    CHECK(r.reason.find("not injective") != std::string::npos);
}

TEST_CASE("is_one_nerve rejects a missing filler with a surjectivity witness") {
    OneNerveReport r = is_one_nerve(broken_segal_surjectivity());
    CHECK_FALSE(r.ok);
    CHECK(r.m == 2);
    CHECK(r.reason.find("not surjective") != std::string::npos);
}

TEST_CASE("extract_category round-trips the Z/2 delooping") {
    FinCategory c = z2_delooping();
    FinCategory back = extract_category(nerve(c, 3));
    CHECK(categories_isomorphic_strictly(c, back));
}

TEST_CASE("extract_category of the terminal presheaf is the one-arrow category") {
    FinCategory c = extract_category(terminal_presheaf(1, {3}));
    CHECK(c.objects() == 1);
    CHECK(c.arrows() == 1);
}

TEST_CASE("extract_category of the arrow category nerve has 2 objects and 3 arrows") {
    FinCategory c = extract_category(nerve(arrow_category(), 3));
    CHECK(c.objects() == 2);
    CHECK(c.arrows() == 3);
}

TEST_CASE("nerve boundaries satisfy s(gf)=s(f) and b(gf)=b(g)") {
    FinCategory c = random_category(17);
    PresheafPtr phi = nerve(c, 3);
    FinCategory e = extract_category(phi);
    for (int f = 0; f < e.arrows(); ++f)
        for (int g = 0; g < e.arrows(); ++g) {
            if (!e.composable(f, g)) continue;
            int gf = e.compose(f, g);
            CHECK(e.src[static_cast<size_t>(gf)] == e.src[static_cast<size_t>(f)]);
            CHECK(e.tgt[static_cast<size_t>(gf)] == e.tgt[static_cast<size_t>(g)]);
        }
}

TEST_CASE("round trip on seeded random categories") {
    for (uint64_t seed = 1; seed <= 25; ++seed) {
        FinCategory c = random_category(seed);
        FinCategory back = extract_category(nerve(c, 3));
        CHECK(categories_isomorphic_strictly(c, back));
    }
}

TEST_CASE("iso classes: discrete, joined, and one-object cases") {
    CHECK(iso_classes(discrete_category(2)).count() == 2);
    CHECK(iso_classes(contractible_groupoid(2)).count() == 1);
    CHECK(iso_classes(z2_delooping()).count() == 1);
    CHECK(iso_classes(arrow_category()).count() == 2);
}

TEST_CASE("iso classes are invariant under relabeling") {
    FinCategory c = contractible_groupoid(3);
    IsoClasses a = iso_classes(c);
    // relabel objects by a cyclic shift: arrows h_{ij} -> h_{i+1,j+1}
    FinCategory d = c;
    auto shift_obj = [&](int x) { return (x + 1) % 3; };
    auto shift_arrow = [&](int f) { return shift_obj(f / 3) * 3 + shift_obj(f % 3); };
    for (int f = 0; f < c.arrows(); ++f) {
        d.src[static_cast<size_t>(shift_arrow(f))] = shift_obj(c.src[static_cast<size_t>(f)]);
        d.tgt[static_cast<size_t>(shift_arrow(f))] = shift_obj(c.tgt[static_cast<size_t>(f)]);
    }
    for (int x = 0; x < 3; ++x) d.id[static_cast<size_t>(shift_obj(x))] = shift_arrow(c.id[static_cast<size_t>(x)]);
    for (int f = 0; f < c.arrows(); ++f)
        for (int g = 0; g < c.arrows(); ++g) {
            int r = c.comp[static_cast<size_t>(f)][static_cast<size_t>(g)];
            d.comp[static_cast<size_t>(shift_arrow(f))][static_cast<size_t>(shift_arrow(g))] =
                r < 0 ? -1 : shift_arrow(r);
        }
    // partition sizes agree
    IsoClasses b = iso_classes(d);
    CHECK(a.count() == b.count());
}

TEST_CASE("find_inverse distinguishes invertible and non-invertible arrows") {
    FinCategory c = arrow_category();
    CHECK(find_inverse(c, 0).has_value());   // identity
    CHECK_FALSE(find_inverse(c, 2).has_value());  // the non-identity arrow
}
