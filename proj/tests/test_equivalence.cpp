#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nerf/equivalence.hpp"
#include "nerf/fixtures.hpp"
#include "nerf/homotopy.hpp"
#include "nerf/weak2.hpp"

using namespace nerf;
using namespace nerf::fixtures;

TEST_CASE("inner equivalence: reflexive, and arrows differ at k=0 iff unequal") {
    PresheafPtr phi = nerve(z2_delooping(), 3);
    TruncationTower tw = truncation_tower(phi, 1);
    TruncationTower tw0 = truncation_tower(phi, 0);
    CHECK(inner_equivalent(tw0, 0, 0, 0));
    CHECK_FALSE(inner_equivalent(tw0, 0, 0, 1));
    CHECK(inner_equivalent(tw, 1, 0, 0));
}

TEST_CASE("inner equivalence requires parallel arrows") {
    PresheafPtr phi = nerve(arrow_category(), 3);
    TruncationTower tw = truncation_tower(phi, 0);
    CHECK_THROWS(inner_equivalent(tw, 0, 0, 2));
}

TEST_CASE("inner equivalence at k=1 distinguishes 1-cells not joined by a 2-cell") {
    PresheafPtr phi = double_nerve(weak_cocycle(), {2, 2});
    TruncationTower tw = truncation_tower(phi, 1);
    CHECK(inner_equivalent(tw, 1, 0, 0));
    CHECK_FALSE(inner_equivalent(tw, 1, 0, 1));
}

TEST_CASE("outer equivalence on the six morphism fixtures") {
    for (const auto& fx : morphism_fixtures(3)) {
        EquivalenceReport r = is_outer_k_equivalence(fx.morphism, 1);
        CHECK_MESSAGE(r.verdict == fx.expected_equivalence, fx.name, ": ", r.summary());
        if (!fx.expected_equivalence) CHECK(!r.witnesses.empty());
    }
}

TEST_CASE("witnesses carry the failing level and a reason") {
    auto fixture = morphism_fixtures(3);
    EquivalenceReport r = is_outer_k_equivalence(fixture[4].morphism, 1);
    REQUIRE_FALSE(r.verdict);
    bool found_h0 = false;
    for (const auto& w : r.witnesses)
        if (w.h == 0 && w.reason.find("no lift") != std::string::npos) found_h0 = true;
    CHECK(found_h0);
}

TEST_CASE("identity morphisms pass at every k") {
    PresheafPtr phi = nerve(s3_delooping(), 3);
    for (int k = 0; k <= 1; ++k) CHECK(is_outer_k_equivalence(identity_morphism(phi), k).verdict);
    PresheafPtr psi = double_nerve(weak2_from_strict(strict2_z2()), {3, 3});
    for (int k = 0; k <= 2; ++k) CHECK(is_outer_k_equivalence(identity_morphism(psi), k).verdict);
}

TEST_CASE("hom-class maps: identity bijective, collapse two-to-one") {
    auto fixture = morphism_fixtures(3);
    HomMapAudit id_audit = hom_class_maps(fixture[0].morphism);
    CHECK(id_audit.all_bijective());
    HomMapAudit collapse = hom_class_maps(fixture[3].morphism);
    CHECK_FALSE(collapse.all_bijective());
    bool saw_two_to_one = false;
    for (const auto& e : collapse.entries)
        if (e.dom_size == 2 && e.cod_size == 1) saw_two_to_one = true;
    CHECK(saw_two_to_one);
}

TEST_CASE("the enumerative check and the hom-map characterization agree") {
    for (const auto& fx : morphism_fixtures(3)) {
        bool enumerative = is_outer_k_equivalence(fx.morphism, 1).verdict;
        bool characterized = outer_equivalence_via_hom_maps(fx.morphism);
        CHECK_MESSAGE(enumerative == characterized, fx.name);
    }
}

TEST_CASE("inner equivalence is an equivalence relation on parallel arrow sets") {
    PresheafPtr phi = double_nerve(weak_cocycle(), {2, 2});
    TruncationTower tw = truncation_tower(phi, 1);
    MultiIndex at{1, 0};
    int cells = phi->cell_count(at);
    for (int u = 0; u < cells; ++u)
        for (int v = 0; v < cells; ++v) {
            if (phi->source_along(at, 1, u) != phi->source_along(at, 1, v) ||
                phi->target_along(at, 1, u) != phi->target_along(at, 1, v))
                continue;
            CHECK(inner_equivalent(tw, 1, u, u));
            if (inner_equivalent(tw, 1, u, v)) CHECK(inner_equivalent(tw, 1, v, u));
            for (int w = 0; w < cells; ++w) {
                if (phi->source_along(at, 1, v) != phi->source_along(at, 1, w) ||
                    phi->target_along(at, 1, v) != phi->target_along(at, 1, w))
                    continue;
                if (inner_equivalent(tw, 1, u, v) && inner_equivalent(tw, 1, v, w))
                    CHECK(inner_equivalent(tw, 1, u, w));
            }
        }
}

TEST_CASE("composites of n-equivalences are n-equivalences") {
    auto fixture = morphism_fixtures(3);
    PresheafMorphism swap = fixture[2].morphism;
    PresheafMorphism collapse = fixture[1].morphism;
    PresheafMorphism both = compose(collapse, swap);
    CHECK(is_outer_k_equivalence(swap, 1).verdict);
    CHECK(is_outer_k_equivalence(collapse, 1).verdict);
    CHECK(is_outer_k_equivalence(both, 1).verdict);
}

TEST_CASE("truncation of an equivalence is an equivalence one level down") {
    for (const auto& fx : morphism_fixtures(3)) {
        if (!fx.expected_equivalence) continue;
        Truncation ts = truncate(fx.morphism.source);
        Truncation tt = truncate(fx.morphism.target);
        PresheafMorphism tf = truncate_morphism(fx.morphism, ts, tt);
        CHECK(is_outer_k_equivalence(tf, 0).verdict);
    }
}
