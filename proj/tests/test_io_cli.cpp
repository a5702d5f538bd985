#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "nerf/fixtures.hpp"
#include "nerf/io.hpp"
#include "nerf/weak2.hpp"

using namespace nerf;
using namespace nerf::fixtures;

namespace {
struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/nerf_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("presheaf files round-trip with identical actions") {
    PresheafPtr phi = nerve(arrow_category(), 3);
    TempFile f("presheaf.json");
    io::save_presheaf(phi, f.path);
    PresheafPtr back = io::load_presheaf(f.path);
    CHECK(back->arity() == phi->arity());
    CHECK(back->bounds() == phi->bounds());
    for (const auto& m : phi->all_indices()) {
        CHECK(back->cell_count(m) == phi->cell_count(m));
        int mk = m[0];
        if (mk >= 1)
            for (int i = 0; i <= mk; ++i)
                CHECK(back->face_action(m, 1, i) == phi->face_action(m, 1, i));
    }
    CHECK(back->validate().ok);
}

TEST_CASE("category files round-trip") {
    FinCategory c = s3_delooping();
    TempFile f("category.json");
    io::save_category(c, f.path);
    FinCategory back = io::load_category(f.path);
    CHECK(categories_isomorphic_strictly(c, back));
}

TEST_CASE("strict and weak2 files round-trip") {
    TempFile f("strict.json");
    io::save_strict(strict2_group_with_autos(2, 2), f.path);
    StrictNCategory s = io::load_strict(f.path);
    CHECK(s.n == 2);
    CHECK(validate_strict(s).ok);

    TempFile g("weak2.json");
    io::save_weak2(weak_cocycle(), g.path);
    Weak2Category w = io::load_weak2(g.path);
    CHECK(validate_weak2(w).ok);
    CHECK(w.assoc[1][1][1] == 3);  // the cell (s,1): the nontrivial cocycle value survives
}

TEST_CASE("morphism files round-trip") {
    auto fx = morphism_fixtures(3);
    TempFile f("morphism.json");
    io::save_morphism(fx[1].morphism, f.path);
    PresheafMorphism back = io::load_morphism(f.path, fx[1].morphism.source, fx[1].morphism.target);
    CHECK(back.components == fx[1].morphism.components);
    CHECK(back.validate_natural().ok);
}

TEST_CASE("invalid files raise ParseError") {
    TempFile f("garbage.json");
    {
        std::ofstream out(f.path);
        out << "{ not json";
    }
    CHECK_THROWS_AS(io::load_presheaf(f.path), io::ParseError);
    CHECK_THROWS_AS(io::load_category("/nonexistent/path.json"), io::ParseError);
}

TEST_CASE("report determinism: identical inputs produce identical documents") {
    PresheafPtr phi = nerve(z2_delooping(), 3);
    CHECK(io::presheaf_to_string(phi) == io::presheaf_to_string(phi));
    PresheafPtr phi2 = nerve(z2_delooping(), 3);
    CHECK(io::presheaf_to_string(phi) == io::presheaf_to_string(phi2));
}
