#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "nerf/cat.hpp"
#include "nerf/fixtures.hpp"
#include "nerf/presheaf.hpp"
#include "nerf/strict_ncat.hpp"
#include "nerf/weak2.hpp"

using namespace nerf;

namespace {

// all product maps between in-bound indices with small components
std::vector<ProductMap> all_product_maps(const MultiIndex& src, const MultiIndex& dst) {
    std::vector<std::vector<MonotoneMap>> per_axis;
    for (size_t k = 0; k < src.size(); ++k) {
        std::vector<MonotoneMap> maps;
        std::vector<int> values(static_cast<size_t>(src[k]) + 1, 0);
        std::function<void(int, int)> rec = [&](int pos, int low) {
            if (pos == src[k] + 1) {
                maps.emplace_back(src[k], dst[k], values);
                return;
            }
            for (int v = low; v <= dst[k]; ++v) {
                values[static_cast<size_t>(pos)] = v;
                rec(pos + 1, v);
            }
        };
        rec(0, 0);
        per_axis.push_back(std::move(maps));
    }
    std::vector<ProductMap> out;
    std::function<void(size_t, ProductMap)> build = [&](size_t k, ProductMap acc) {
        if (k == per_axis.size()) {
            out.push_back(std::move(acc));
            return;
        }
        for (const auto& m : per_axis[k]) {
            ProductMap next = acc;
            next.components.push_back(m);
            build(k + 1, next);
        }
    };
    build(0, ProductMap{});
    return out;
}

} // namespace

TEST_CASE("terminal presheaf validates; empty presheaf validates") {
    PresheafPtr t = terminal_presheaf(2, {2, 2});
    CHECK(t->validate().ok);
    PresheafPtr e = empty_presheaf(1, {2});
    CHECK(e->validate().ok);
}

TEST_CASE("constructed violation is reported with its location") {
    PresheafPtr bad = fixtures::broken_presheaf_action();
    ValidationReport r = bad->validate();
    CHECK_FALSE(r.ok);
    CHECK(!r.message.empty());
}

TEST_CASE("nerve of Z/2 validates and evaluate composes edges by multiplication") {
    PresheafPtr phi = nerve(fixtures::z2_delooping(), 3);
    CHECK(phi->validate().ok);
    // delta_02 on the chain (g,g) lands on e
    int chain_gg = -1;
    for (int c = 0; c < phi->cell_count({2}); ++c) {
        int e01 = phi->evaluate(axis_map({2}, 1, edge_map(2, 0, 1)), c);
        int e12 = phi->evaluate(axis_map({2}, 1, edge_map(2, 1, 2)), c);
        if (phi->cell_name({1}, e01) == "(g1)" && phi->cell_name({1}, e12) == "(g1)") chain_gg = c;
    }
    REQUIRE(chain_gg >= 0);
    int prod = phi->evaluate(axis_map({2}, 1, edge_map(2, 0, 2)), chain_gg);
    CHECK(phi->cell_name({1}, prod) == "(e)");
}

TEST_CASE("degeneracy at an object inserts the identity arrow") {
    PresheafPtr phi = nerve(fixtures::z2_delooping(), 3);
    int id_arrow = phi->apply_degeneracy({0}, 1, 0, 0);
    CHECK(phi->cell_name({1}, id_arrow) == "(e)");
}

TEST_CASE("evaluate respects composition exhaustively at bound 3 (arity 1)") {
    PresheafPtr phi = nerve(fixtures::z2_delooping(), 3);
    for (int a = 0; a <= 3; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 3; ++c)
                for (const auto& f : all_product_maps({b}, {c}))
                    for (const auto& g : all_product_maps({a}, {b})) {
                        ProductMap fg = compose(f, g);
                        for (int cell = 0; cell < phi->cell_count({c}); ++cell)
                            CHECK(phi->evaluate(fg, cell) ==
                                  phi->evaluate(g, phi->evaluate(f, cell)));
                    }
}

TEST_CASE("evaluate respects composition on an arity-2 fixture") {
    PresheafPtr phi = double_nerve(weak2_from_strict(fixtures::strict2_z2()), {2, 2});
    CHECK(phi->validate().ok);
    for (const auto& mid : phi->all_indices())
        for (const auto& top : phi->all_indices())
            for (const auto& bot : phi->all_indices())
                for (const auto& f : all_product_maps(mid, top))
                    for (const auto& g : all_product_maps(bot, mid)) {
                        ProductMap fg = compose(f, g);
                        for (int cell = 0; cell < phi->cell_count(top); ++cell)
                            CHECK(phi->evaluate(fg, cell) ==
                                  phi->evaluate(g, phi->evaluate(f, cell)));
                    }
}

TEST_CASE("slice by the empty prefix is the presheaf itself") {
    PresheafPtr phi = nerve(fixtures::arrow_category(), 3);
    PresheafPtr sl = slice(phi, {});
    for (const auto& m : phi->all_indices()) CHECK(sl->cell_count(m) == phi->cell_count(m));
}

TEST_CASE("slice of the terminal presheaf is terminal") {
    PresheafPtr t = terminal_presheaf(2, {2, 3});
    PresheafPtr sl = slice(t, {1});
    CHECK(sl->arity() == 1);
    for (const auto& m : sl->all_indices()) CHECK(sl->cell_count(m) == 1);
}

TEST_CASE("slice of a double nerve at (1) is the arrow 1-presheaf") {
    PresheafPtr phi = double_nerve(fixtures::weak_cocycle(), {2, 2});
    PresheafPtr arrows = slice(phi, {1});
    CHECK(arrows->arity() == 1);
    CHECK(arrows->cell_count({0}) == phi->cell_count({1, 0}));
    CHECK(arrows->cell_count({1}) == phi->cell_count({1, 1}));
    CHECK(arrows->validate().ok);
}

TEST_CASE("fiber powers of the Z/2 nerve count composable tuples") {
    PresheafPtr phi = nerve(fixtures::z2_delooping(), 3);
    FiberPower p1 = fiber_power(phi, 1);
    CHECK(p1.power->cell_count({}) == 2);
    FiberPower p2 = fiber_power(phi, 2);
    CHECK(p2.power->cell_count({}) == 4);
    FiberPower p3 = fiber_power(phi, 3);
    CHECK(p3.power->cell_count({}) == 8);
}

TEST_CASE("fiber power of the terminal presheaf stays terminal") {
    PresheafPtr t = terminal_presheaf(1, {3});
    FiberPower p = fiber_power(t, 3);
    CHECK(p.power->cell_count({}) == 1);
}

TEST_CASE("fiber power associativity via tuple relabeling") {
    // 3-fold power equals gluing a 2-fold power with one more factor, as
    // tuple sets and componentwise actions
    PresheafPtr phi = nerve(fixtures::arrow_category(), 3);
    FiberPower p3 = fiber_power(phi, 3);
    FiberPower p2 = fiber_power(phi, 2);
    // tuples of p3 = (a,b,c); (a,b) glue in p2 and (b,c) glue in p2
    for (const auto& t : p3.tuples[static_cast<size_t>(p3.power->ordinal({}))]) {
        CHECK(p2.tuple_index({}, {t[0], t[1]}) >= 0);
        CHECK(p2.tuple_index({}, {t[1], t[2]}) >= 0);
    }
}

TEST_CASE("segal map on nerve(Z/2) is bijective at m=2") {
    PresheafPtr phi = nerve(fixtures::z2_delooping(), 3);
    SegalMap sm = segal_map(phi, {}, 2);
    CHECK(sm.source->cell_count({}) == 4);
    CHECK(sm.target.power->cell_count({}) == 4);
    std::vector<int> hit(4, 0);
    for (int c = 0; c < 4; ++c) ++hit[static_cast<size_t>(sm.spine.apply({}, c))];
    for (int h : hit) CHECK(h == 1);
}

TEST_CASE("segal map on the terminal presheaf is singleton to singleton") {
    PresheafPtr t = terminal_presheaf(1, {3});
    SegalMap sm = segal_map(t, {}, 2);
    CHECK(sm.source->cell_count({}) == 1);
    CHECK(sm.target.power->cell_count({}) == 1);
}

TEST_CASE("segal map counts 3-chains of the arrow category") {
    PresheafPtr phi = nerve(fixtures::arrow_category(), 3);
    SegalMap sm = segal_map(phi, {}, 3);
    // oracle: weakly monotone 3-chains on the poset 0 < 1 are the sequences
    // 0000, 0001, 0011, 0111, 1111
    CHECK(sm.source->cell_count({}) == 5);
    CHECK(sm.target.power->cell_count({}) == 5);
    std::vector<int> hit(5, 0);
    for (int c = 0; c < 5; ++c) ++hit[static_cast<size_t>(sm.spine.apply({}, c))];
    for (int h : hit) CHECK(h == 1);
}

TEST_CASE("segal map is natural on a 2-nerf") {
    PresheafPtr phi = double_nerve(fixtures::weak_cocycle(), {2, 2});
    SegalMap sm = segal_map(phi, {}, 2);
    CHECK(sm.spine.validate_natural().ok);
}

TEST_CASE("interchange gamma transposes and checks compatibility") {
    InterchangeSquare sq;
    sq.s1 = [](int x) { return x / 10; };
    sq.b1 = [](int x) { return x / 10 + 1; };
    sq.s2 = [](int x) { return x % 10; };
    sq.b2 = [](int x) { return x % 10 + 1; };
    // 2x2 grid: rows glue over s2/b2, columns over s1/b1
    std::vector<std::vector<int>> grid{{0, 1}, {10, 11}};
    auto t = interchange_gamma(grid, sq);
    CHECK(t == std::vector<std::vector<int>>{{0, 10}, {1, 11}});
    CHECK(interchange_gamma(t, {sq.s2, sq.b2, sq.s1, sq.b1}) == grid);
    std::vector<std::vector<int>> bad{{0, 5}, {10, 11}};
    CHECK_THROWS(interchange_gamma(bad, sq));
}

TEST_CASE("interchange gamma matches re-slicing a strict multi-nerve grid") {
    StrictNCategory s = fixtures::strict2_group_with_autos(2, 2);
    PresheafPtr phi = multi_nerve(s, {2, 2});
    // cells at (2,2) are 2x2 grids of 2-cells; transposing along gamma must
    // match the multi-nerve of the transposed-axis reading, obtained by
    // swapping the roles of the two gluing directions
    InterchangeSquare sq;
    sq.s1 = [&s](int x) { return s.src_to(2, 0, x); };
    sq.b1 = [&s](int x) { return s.tgt_to(2, 0, x); };
    sq.s2 = [&s](int x) { return s.src_to(2, 1, x); };
    sq.b2 = [&s](int x) { return s.tgt_to(2, 1, x); };
    // draw a grid from the multi-nerve content through evaluations
    MultiIndex m22{2, 2};
    for (int cell = 0; cell < phi->cell_count(m22); ++cell) {
        std::vector<std::vector<int>> grid(2, std::vector<int>(2));
        for (int i = 0; i < 2; ++i)
            for (int a = 0; a < 2; ++a)
                grid[static_cast<size_t>(i)][static_cast<size_t>(a)] = phi->evaluate(
                    ProductMap{{edge_map(2, i, i + 1), edge_map(2, a, a + 1)}}, cell);
        auto t = interchange_gamma(grid, sq);
        for (int i = 0; i < 2; ++i)
            for (int a = 0; a < 2; ++a)
                CHECK(t[static_cast<size_t>(a)][static_cast<size_t>(i)] ==
                      grid[static_cast<size_t>(i)][static_cast<size_t>(a)]);
    }
}

TEST_CASE("presheaf morphism naturality validation catches mismatches") {
    PresheafPtr phi = nerve(fixtures::z2_delooping(), 2);
    PresheafMorphism id = identity_morphism(phi);
    CHECK(id.validate_natural().ok);
    PresheafMorphism broken = id;
    std::swap(broken.components[static_cast<size_t>(phi->ordinal({1}))][0],
              broken.components[static_cast<size_t>(phi->ordinal({1}))][1]);
    CHECK_FALSE(broken.validate_natural().ok);
}

TEST_CASE("out-of-bound evaluation raises") {
    PresheafPtr phi = nerve(fixtures::z2_delooping(), 2);
    CHECK_THROWS(phi->evaluate(axis_map({3}, 1, edge_map(3, 0, 1)), 0));
    CHECK_THROWS(phi->evaluate(axis_map({1}, 1, edge_map(1, 0, 1)), 99));
}
