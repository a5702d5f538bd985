#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nerf/fixtures.hpp"
#include "nerf/nerf_validator.hpp"
#include "nerf/truncation.hpp"
#include "nerf/weak2.hpp"

using namespace nerf;
using namespace nerf::fixtures;

namespace {
PresheafPtr weak32() {
    static PresheafPtr p = double_nerve(weak_cocycle(), {3, 2});
    return p;
}
}  // namespace

TEST_CASE("nerves of categories are 1-nerfs") {
    CHECK(is_n_nerf(nerve(z2_delooping(), 3)).ok);
    CHECK(is_n_nerf(nerve(arrow_category(), 3)).ok);
    CHECK(is_n_nerf(nerve(random_category(5), 3)).ok);
}

TEST_CASE("a non-Segal 1-presheaf is not a 1-nerf") {
    NerfReport r = is_n_nerf(broken_segal_surjectivity());
    CHECK_FALSE(r.ok);
    CHECK(r.failed_axiom == "truncatable");
}

TEST_CASE("double nerves are 2-nerfs (weak and strict)") {
    CHECK(is_n_nerf(weak32()).ok);
    CHECK(is_n_nerf(double_nerve(weak2_from_strict(strict2_z2()), {4, 4})).ok);
    CHECK(is_n_nerf(double_nerve(weak_trivial_cocycle(), {2, 2})).ok);
}

TEST_CASE("multi-nerves of strict 2-categories are strict 2-nerfs and 2-nerfs") {
    PresheafPtr mn = multi_nerve(strict2_group_with_autos(2, 2), {3, 3});
    CHECK(is_strict_nerf(mn).ok);
    CHECK(is_n_nerf(mn).ok);
}

TEST_CASE("a weak double nerve is a 2-nerf but not strict") {
    StrictNerfReport r = is_strict_nerf(weak32());
    CHECK_FALSE(r.ok);
    CHECK(r.detail.find("Segal") != std::string::npos);
}

TEST_CASE("a non-constant objectwise slice is reported") {
    // pad the Z/2 nerve on the SECOND axis: Phi(m,n) = N(Z/2)(n) with the
    // first axis acting as the identity.  Troncability holds, but the slice
    // Phi_{0} is N(Z/2) itself, which is not a constant functor.
    PresheafPtr n1 = nerve(z2_delooping(), 2);
    auto phi = std::make_shared<FinPresheaf>(2, std::vector<int>{2, 2});
    for (const auto& m : phi->all_indices()) {
        int nk = m[1];
        MultiIndex one{nk};
        phi->set_cells(m, n1->cell_count(one), n1->labels(one));
        if (nk >= 1)
            for (int i = 0; i <= nk; ++i) phi->set_face_action(m, 2, i, n1->face_action(one, 1, i));
        if (nk + 1 <= 2)
            for (int i = 0; i <= nk; ++i)
                phi->set_degeneracy_action(m, 2, i, n1->degeneracy_action(one, 1, i));
        std::vector<int> ident(static_cast<size_t>(n1->cell_count(one)));
        for (size_t c = 0; c < ident.size(); ++c) ident[c] = static_cast<int>(c);
        int mk = m[0];
        if (mk >= 1)
            for (int i = 0; i <= mk; ++i) phi->set_face_action(m, 1, i, ident);
        if (mk + 1 <= 2)
            for (int i = 0; i <= mk; ++i) phi->set_degeneracy_action(m, 1, i, ident);
    }
    REQUIRE(phi->validate().ok);
    NerfReport r = is_n_nerf(phi);
    CHECK_FALSE(r.ok);
    CHECK(r.failed_axiom == "constant-slices");
}

TEST_CASE("strict implies 2-nerf on all shipped strict fixtures") {
    for (auto s : {strict2_z2(), strict2_group_with_autos(2, 2), strict2_from_category(arrow_category()),
                   strict2_discrete(2)}) {
        PresheafPtr mn = multi_nerve(s, {3, 3});
        if (is_strict_nerf(mn).ok) CHECK(is_n_nerf(mn).ok);
    }
}

TEST_CASE("truncating a 2-nerve gives a 1-nerve") {
    Truncation t = truncate(weak32());
    CHECK(is_n_nerf(t.total).ok);
    Truncation ts = truncate(multi_nerve(strict2_z2(), {3, 3}));
    CHECK(is_n_nerf(ts.total).ok);
}

TEST_CASE("slices of a 2-nerve are nerves at their own arity") {
    PresheafPtr phi = weak32();
    for (int m = 0; m <= 3; ++m) CHECK(is_n_nerf(slice(phi, {m})).ok);
}

TEST_CASE("groupoid detection") {
    CHECK(is_n_groupoid(nerve(z2_delooping(), 3)).ok);
    GroupoidReport r = is_n_groupoid(nerve(arrow_category(), 3));
    CHECK_FALSE(r.ok);
    CHECK(r.failing_level == 1);
    CHECK(!r.detail.empty());
    CHECK(is_n_groupoid(weak32()).ok);
    CHECK(is_n_groupoid(double_nerve(weak2_from_strict(strict2_z2()), {3, 3})).ok);
}

TEST_CASE("terminal presheaves are strict nerfs and groupoids") {
    PresheafPtr t = terminal_presheaf(2, {3, 3});
    CHECK(is_strict_nerf(t).ok);
    CHECK(is_n_nerf(t).ok);
    CHECK(is_n_groupoid(t).ok);
}
