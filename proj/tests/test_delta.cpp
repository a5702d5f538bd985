#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <vector>

#include "nerf/delta.hpp"

using namespace nerf;

namespace {

// every weakly monotone map [src] -> [dst]
std::vector<MonotoneMap> all_maps(int src, int dst) {
    std::vector<MonotoneMap> out;
    std::vector<int> values(static_cast<size_t>(src) + 1, 0);
    std::function<void(int, int)> rec = [&](int pos, int low) {
        if (pos == src + 1) {
            out.emplace_back(src, dst, values);
            return;
        }
        for (int v = low; v <= dst; ++v) {
            values[static_cast<size_t>(pos)] = v;
            rec(pos + 1, v);
        }
    };
    rec(0, 0);
    return out;
}

} // namespace

TEST_CASE("elementary maps have the defining value tables") {
    CHECK(face_map(3, 2).values == std::vector<int>{0, 1, 3});
    CHECK(degeneracy_map(1, 0).values == std::vector<int>{0, 0, 1});
    CHECK(vertex_map(3, 0).values == std::vector<int>{0});
    CHECK(edge_map(2, 0, 2).values == std::vector<int>{0, 2});
    CHECK_THROWS(face_map(2, 3));
    CHECK_THROWS(edge_map(2, 2, 1));
}

TEST_CASE("factorization of the identity and of elementary maps") {
    Factorization f = factorize(identity_map(2));
    CHECK(f.faces.empty());
    CHECK(f.degeneracies.empty());

    f = factorize(face_map(2, 1));  // d_1 : [1] -> [2]
    REQUIRE(f.faces.size() == 1);
    CHECK(f.faces[0].level == 2);
    CHECK(f.faces[0].index == 1);
    CHECK(f.degeneracies.empty());
}

TEST_CASE("constant map [2] -> [1] factors through one face and two degeneracies") {
    MonotoneMap sigma(2, 1, {0, 0, 0});
    Factorization f = factorize(sigma);
    REQUIRE(f.faces.size() == 1);
    CHECK(f.faces[0].index == 1);
    REQUIRE(f.degeneracies.size() == 2);
    CHECK(recompose(f, 2, 1).values == sigma.values);
    // oracle: factorization of every map [2] -> [1] recomposes to the map,
    // with the canonical monotonicity of the index sequences
    for (const auto& m : all_maps(2, 1)) {
        Factorization g = factorize(m);
        CHECK(recompose(g, m.src, m.dst).values == m.values);
        for (size_t i = 1; i < g.faces.size(); ++i) CHECK(g.faces[i - 1].index > g.faces[i].index);
        for (size_t i = 1; i < g.degeneracies.size(); ++i)
            CHECK(g.degeneracies[i - 1].index < g.degeneracies[i].index);
    }
}

TEST_CASE("factorization round-trips for all maps with src,dst <= 6") {
    for (int src = 0; src <= 6; ++src)
        for (int dst = 0; dst <= 6; ++dst)
            for (const auto& m : all_maps(src, dst)) {
                Factorization f = factorize(m);
                CHECK(recompose(f, src, dst).values == m.values);
                CHECK(static_cast<int>(src - f.degeneracies.size() + f.faces.size()) == dst);
            }
}

TEST_CASE("simplicial identities for indices <= 5") {
    for (int m = 1; m <= 5; ++m) {
        // d_j d_i = d_i d_{j-1} for i < j (maps [m-1] -> [m+1])
        for (int j = 0; j <= m + 1; ++j)
            for (int i = 0; i < j; ++i)
                CHECK(compose(face_map(m + 1, j), face_map(m, i)).values ==
                      compose(face_map(m + 1, i), face_map(m, j - 1)).values);
        // e_j e_i = e_i e_{j+1} for i <= j (maps [m+2] -> [m])
        for (int i = 0; i <= m; ++i)
            for (int j = i; j <= m; ++j)
                CHECK(compose(degeneracy_map(m, j), degeneracy_map(m + 1, i)).values ==
                      compose(degeneracy_map(m, i), degeneracy_map(m + 1, j + 1)).values);
        // mixed e_j d_i relations
        for (int j = 0; j <= m; ++j)
            for (int i = 0; i <= m + 1; ++i) {
                MonotoneMap lhs = compose(degeneracy_map(m, j), face_map(m + 1, i));
                if (i < j)
                    CHECK(lhs.values == compose(face_map(m, i), degeneracy_map(m - 1, j - 1)).values);
                else if (i == j || i == j + 1)
                    CHECK(lhs.is_identity());
                else
                    CHECK(lhs.values == compose(face_map(m, i - 1), degeneracy_map(m - 1, j)).values);
            }
    }
}

TEST_CASE("edge delta_{k,k+1} equals the outer-face composite d_m...d_{k+1}d_{k-1}...d_0") {
    for (int m = 1; m <= 5; ++m)
        for (int k = 0; k + 1 <= m; ++k) {
            std::vector<int> indices;
            for (int i = 0; i <= m; ++i)
                if (i != k && i != k + 1) indices.push_back(i);
            int level = 2;
            MonotoneMap comp_map = identity_map(1);
            for (int idx : indices) {
                comp_map = compose(face_map(level, idx), comp_map);
                ++level;
            }
            CHECK(comp_map.values == edge_map(m, k, k + 1).values);
        }
}

TEST_CASE("product elementary maps place the component on the right axis") {
    ProductMap p = product_elementary({1, 1}, 2, ElementaryKind::Face, 0);
    CHECK(p.components[0].is_identity());
    CHECK(p.components[1].values == face_map(1, 0).values);

    ProductMap q = product_elementary({0}, 1, ElementaryKind::Degeneracy, 0);
    CHECK(q.components[0].values == degeneracy_map(0, 0).values);

    ProductMap r = product_elementary({2, 3}, 1, ElementaryKind::Face, 2);
    CHECK(r.components[0].values == face_map(2, 2).values);
    CHECK(r.components[1].is_identity());

    CHECK_THROWS(product_elementary({1}, 2, ElementaryKind::Face, 0));
}

TEST_CASE("product map composition is componentwise") {
    ProductMap f = product_elementary({2, 1}, 1, ElementaryKind::Face, 1);
    ProductMap g = product_elementary(f.source(), 2, ElementaryKind::Face, 0);
    ProductMap h = compose(f, g);
    CHECK(h.source() == MultiIndex{1, 0});
    CHECK(h.target() == MultiIndex{2, 1});
}
