#include "nerf/fixtures.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>

namespace nerf::fixtures {

namespace {

FinCategory make_category(std::vector<std::string> objects, std::vector<std::string> arrows,
                          std::vector<int> src, std::vector<int> tgt, std::vector<int> id,
                          const std::function<int(int, int)>& comp) {
    FinCategory c;
    c.object_names = std::move(objects);
    c.arrow_names = std::move(arrows);
    c.src = std::move(src);
    c.tgt = std::move(tgt);
    c.id = std::move(id);
    int na = c.arrows();
    c.comp.assign(static_cast<size_t>(na), std::vector<int>(static_cast<size_t>(na), -1));
    for (int f = 0; f < na; ++f)
        for (int g = 0; g < na; ++g)
            if (c.tgt[static_cast<size_t>(f)] == c.src[static_cast<size_t>(g)])
                c.comp[static_cast<size_t>(f)][static_cast<size_t>(g)] = comp(f, g);
    ValidationReport r = c.validate();
    if (!r.ok) throw std::logic_error("fixture category invalid: " + r.message);
    return c;
}

} // namespace

FinCategory terminal_category() {
    return make_category({"*"}, {"1"}, {0}, {0}, {0}, [](int, int) { return 0; });
}

FinCategory z_delooping(int order) {
    std::vector<std::string> arrows;
    for (int i = 0; i < order; ++i) arrows.push_back(i == 0 ? "e" : "g" + std::to_string(i));
    return make_category({"*"}, std::move(arrows), std::vector<int>(static_cast<size_t>(order), 0),
                         std::vector<int>(static_cast<size_t>(order), 0), {0},
                         [order](int f, int g) { return (f + g) % order; });
}

FinCategory z2_delooping() { return z_delooping(2); }

FinCategory s3_delooping() {
    // permutations of {0,1,2} in lexicographic order of their value tables
    std::vector<std::array<int, 3>> perms;
    std::array<int, 3> p{0, 1, 2};
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto index_of = [&](const std::array<int, 3>& q) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == q) return static_cast<int>(i);
        throw std::logic_error("s3: permutation not found");
    };
    std::vector<std::string> names;
    for (const auto& q : perms) {
        std::string s = "(";
        for (int v : q) s += std::to_string(v);
        names.push_back(s + ")");
    }
    return make_category({"*"}, std::move(names), std::vector<int>(6, 0), std::vector<int>(6, 0), {0},
                         [&](int f, int g) {
                             std::array<int, 3> r;
                             for (int i = 0; i < 3; ++i)
                                 r[static_cast<size_t>(i)] =
                                     perms[static_cast<size_t>(g)][static_cast<size_t>(
                                         perms[static_cast<size_t>(f)][static_cast<size_t>(i)])];
                             return index_of(r);  // g after f
                         });
}

FinCategory arrow_category() {
    return make_category({"a", "b"}, {"Ia", "Ib", "f"}, {0, 1, 0}, {0, 1, 1}, {0, 1},
                         [](int f, int g) { return f == 2 ? 2 : (g == 2 ? 2 : f); });
}

FinCategory discrete_category(int objects) {
    std::vector<std::string> obj, arr;
    std::vector<int> st(static_cast<size_t>(objects)), id(static_cast<size_t>(objects));
    for (int i = 0; i < objects; ++i) {
        obj.push_back("x" + std::to_string(i));
        arr.push_back("I" + std::to_string(i));
        st[static_cast<size_t>(i)] = i;
        id[static_cast<size_t>(i)] = i;
    }
    return make_category(std::move(obj), std::move(arr), st, st, std::move(id),
                         [](int f, int) { return f; });
}

FinCategory contractible_groupoid(int objects) {
    std::vector<std::string> obj, arr;
    std::vector<int> src, tgt, id(static_cast<size_t>(objects));
    for (int i = 0; i < objects; ++i) obj.push_back("x" + std::to_string(i));
    for (int i = 0; i < objects; ++i)
        for (int j = 0; j < objects; ++j) {
            arr.push_back("h" + std::to_string(i) + std::to_string(j));
            src.push_back(i);
            tgt.push_back(j);
            if (i == j) id[static_cast<size_t>(i)] = static_cast<int>(arr.size()) - 1;
        }
    int n = objects;
    return make_category(std::move(obj), std::move(arr), std::move(src), std::move(tgt), std::move(id),
                         [n](int f, int g) {
                             int i = f / n, j = g % n;
                             return i * n + j;
                         });
}

FinCategory preorder_category(const std::vector<std::pair<int, int>>& relations, int objects) {
    std::vector<std::vector<bool>> le(static_cast<size_t>(objects),
                                      std::vector<bool>(static_cast<size_t>(objects), false));
    for (int i = 0; i < objects; ++i) le[static_cast<size_t>(i)][static_cast<size_t>(i)] = true;
    for (auto [a, b] : relations) le[static_cast<size_t>(a)][static_cast<size_t>(b)] = true;
    for (int k = 0; k < objects; ++k)
        for (int i = 0; i < objects; ++i)
            for (int j = 0; j < objects; ++j)
                if (le[static_cast<size_t>(i)][static_cast<size_t>(k)] &&
                    le[static_cast<size_t>(k)][static_cast<size_t>(j)])
                    le[static_cast<size_t>(i)][static_cast<size_t>(j)] = true;
    std::vector<std::string> obj, arr;
    std::vector<int> src, tgt, id(static_cast<size_t>(objects));
    std::map<std::pair<int, int>, int> arrow_of;
    for (int i = 0; i < objects; ++i) obj.push_back("x" + std::to_string(i));
    for (int i = 0; i < objects; ++i)
        for (int j = 0; j < objects; ++j)
            if (le[static_cast<size_t>(i)][static_cast<size_t>(j)]) {
                arrow_of[{i, j}] = static_cast<int>(arr.size());
                arr.push_back("r" + std::to_string(i) + std::to_string(j));
                src.push_back(i);
                tgt.push_back(j);
                if (i == j) id[static_cast<size_t>(i)] = arrow_of[{i, j}];
            }
    std::vector<int> srcc = src, tgtc = tgt;
    return make_category(std::move(obj), std::move(arr), std::move(src), std::move(tgt), std::move(id),
                         [srcc, tgtc, arrow_of](int f, int g) {
                             return arrow_of.at({srcc[static_cast<size_t>(f)], tgtc[static_cast<size_t>(g)]});
                         });
}

FinCategory product_category(const FinCategory& a, const FinCategory& b) {
    std::vector<std::string> obj, arr;
    std::vector<int> src, tgt, id(static_cast<size_t>(a.objects() * b.objects()));
    for (int i = 0; i < a.objects(); ++i)
        for (int j = 0; j < b.objects(); ++j) obj.push_back(a.object_name(i) + "." + b.object_name(j));
    int nb = b.arrows();
    for (int f = 0; f < a.arrows(); ++f)
        for (int g = 0; g < nb; ++g) {
            arr.push_back(a.arrow_name(f) + "." + b.arrow_name(g));
            src.push_back(a.src[static_cast<size_t>(f)] * b.objects() + b.src[static_cast<size_t>(g)]);
            tgt.push_back(a.tgt[static_cast<size_t>(f)] * b.objects() + b.tgt[static_cast<size_t>(g)]);
        }
    for (int i = 0; i < a.objects(); ++i)
        for (int j = 0; j < b.objects(); ++j)
            id[static_cast<size_t>(i * b.objects() + j)] =
                a.id[static_cast<size_t>(i)] * nb + b.id[static_cast<size_t>(j)];
    FinCategory ac = a, bc = b;
    return make_category(std::move(obj), std::move(arr), std::move(src), std::move(tgt), std::move(id),
                         [ac, bc, nb](int f, int g) {
                             int fa = f / nb, fb = f % nb, ga = g / nb, gb = g % nb;
                             return ac.compose(fa, ga) * nb + bc.compose(fb, gb);
                         });
}

FinCategory random_category(uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); };
    for (;;) {
        int kind = pick(4);
        FinCategory c;
        if (kind == 0) {
            int objects = 2 + pick(4);
            int extra = pick(6);
            std::vector<std::pair<int, int>> rel;
            for (int t = 0; t < extra; ++t) rel.push_back({pick(objects), pick(objects)});
            c = preorder_category(rel, objects);
        } else if (kind == 1) {
            c = z_delooping(2 + pick(5));
        } else if (kind == 2) {
            c = pick(2) ? s3_delooping() : contractible_groupoid(2 + pick(3));
        } else {
            c = product_category(z_delooping(2 + pick(2)), preorder_category({{0, 1}}, 2));
        }
        if (c.objects() <= 5 && c.arrows() <= 20) return c;
    }
}

StrictNCategory strict1_from_category(const FinCategory& c) {
    StrictNCategory s;
    s.n = 1;
    s.cell_names = {c.object_names, c.arrow_names};
    s.src = {c.src};
    s.tgt = {c.tgt};
    s.id = {c.id};
    s.comp[{0, 1}] = c.comp;
    return s;
}

StrictNCategory strict2_from_category(const FinCategory& c) {
    StrictNCategory s;
    s.n = 2;
    int na = c.arrows();
    std::vector<int> ident(static_cast<size_t>(na));
    for (int f = 0; f < na; ++f) ident[static_cast<size_t>(f)] = f;
    std::vector<std::string> names2;
    for (int f = 0; f < na; ++f) names2.push_back("I(" + c.arrow_name(f) + ")");
    s.cell_names = {c.object_names, c.arrow_names, names2};
    s.src = {c.src, ident};
    s.tgt = {c.tgt, ident};
    s.id = {c.id, ident};
    s.comp[{0, 1}] = c.comp;
    s.comp[{1, 2}].assign(static_cast<size_t>(na), std::vector<int>(static_cast<size_t>(na), -1));
    for (int f = 0; f < na; ++f) s.comp[{1, 2}][static_cast<size_t>(f)][static_cast<size_t>(f)] = f;
    s.comp[{0, 2}] = c.comp;
    StrictReport r = validate_strict(s);
    if (!r.ok) throw std::logic_error("strict2_from_category invalid: " + r.detail);
    return s;
}

StrictNCategory strict2_delooping(int order) { return strict2_from_category(z_delooping(order)); }

StrictNCategory strict2_group_with_autos(int k, int l) {
    StrictNCategory s;
    s.n = 2;
    int c2 = k * l;
    std::vector<std::string> n0{"*"}, n1, n2;
    for (int f = 0; f < k; ++f) n1.push_back("g" + std::to_string(f));
    for (int f = 0; f < k; ++f)
        for (int a = 0; a < l; ++a) n2.push_back("(g" + std::to_string(f) + ",a" + std::to_string(a) + ")");
    std::vector<int> s1(static_cast<size_t>(k), 0), e1{0};
    std::vector<int> s2(static_cast<size_t>(c2)), e2(static_cast<size_t>(k));
    for (int f = 0; f < k; ++f)
        for (int a = 0; a < l; ++a) s2[static_cast<size_t>(f * l + a)] = f;
    for (int f = 0; f < k; ++f) e2[static_cast<size_t>(f)] = f * l;
    s.cell_names = {n0, n1, n2};
    s.src = {s1, s2};
    s.tgt = {s1, s2};
    s.id = {e1, e2};
    auto& c01 = s.comp[{0, 1}];
    c01.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), -1));
    for (int f = 0; f < k; ++f)
        for (int g = 0; g < k; ++g) c01[static_cast<size_t>(f)][static_cast<size_t>(g)] = (f + g) % k;
    auto& c12 = s.comp[{1, 2}];
    c12.assign(static_cast<size_t>(c2), std::vector<int>(static_cast<size_t>(c2), -1));
    auto& c02 = s.comp[{0, 2}];
    c02.assign(static_cast<size_t>(c2), std::vector<int>(static_cast<size_t>(c2), -1));
    for (int f = 0; f < k; ++f)
        for (int a = 0; a < l; ++a)
            for (int g = 0; g < k; ++g)
                for (int b = 0; b < l; ++b) {
                    int x = f * l + a, y = g * l + b;
                    if (f == g) c12[static_cast<size_t>(x)][static_cast<size_t>(y)] = f * l + (a + b) % l;
                    c02[static_cast<size_t>(x)][static_cast<size_t>(y)] =
                        ((f + g) % k) * l + (a + b) % l;
                }
    StrictReport r = validate_strict(s);
    if (!r.ok) throw std::logic_error("strict2_group_with_autos invalid: " + r.detail);
    return s;
}

StrictNCategory strict2_discrete(int objects) { return strict2_from_category(discrete_category(objects)); }

StrictNCategory strict2_z2() { return strict2_delooping(2); }

StrictNCategory strict3_z2() {
    StrictNCategory two = strict2_z2();
    StrictNCategory s;
    s.n = 3;
    int na = 2;
    std::vector<int> ident{0, 1};
    s.cell_names = two.cell_names;
    s.cell_names.push_back({"II(e)", "II(g1)"});
    s.src = {two.src[0], two.src[1], ident};
    s.tgt = {two.tgt[0], two.tgt[1], ident};
    s.id = {two.id[0], two.id[1], ident};
    s.comp[{0, 1}] = two.comp[{0, 1}];
    s.comp[{1, 2}] = two.comp[{1, 2}];
    s.comp[{0, 2}] = two.comp[{0, 2}];
    s.comp[{0, 3}] = two.comp[{0, 2}];
    s.comp[{1, 3}] = two.comp[{1, 2}];
    auto& c23 = s.comp[{2, 3}];
    c23.assign(static_cast<size_t>(na), std::vector<int>(static_cast<size_t>(na), -1));
    for (int f = 0; f < na; ++f) c23[static_cast<size_t>(f)][static_cast<size_t>(f)] = f;
    StrictReport r = validate_strict(s);
    if (!r.ok) throw std::logic_error("strict3_z2 invalid: " + r.detail);
    return s;
}

namespace {

Weak2Category cocycle_like(const std::function<int(int, int, int)>& cocycle) {
    // one object, arrows Z/2, Aut(f) = Z/2; 2-cell (f,a) has index 2f+a
    Weak2Category c;
    c.c0 = 1;
    c.c1 = 2;
    c.c2 = 4;
    c.obj_names = {"*"};
    c.arr_names = {"e", "s"};
    c.cell2_names = {"(e,0)", "(e,1)", "(s,0)", "(s,1)"};
    c.s1 = {0, 0};
    c.b1 = {0, 0};
    c.e1 = {0};
    c.s2 = {0, 0, 1, 1};
    c.b2 = {0, 0, 1, 1};
    c.e2 = {0, 2};
    c.comp1.assign(2, std::vector<int>(2, -1));
    for (int f = 0; f < 2; ++f)
        for (int g = 0; g < 2; ++g) c.comp1[static_cast<size_t>(f)][static_cast<size_t>(g)] = f ^ g;
    c.vcomp.assign(4, std::vector<int>(4, -1));
    c.hcomp.assign(4, std::vector<int>(4, -1));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) {
            int f = x >> 1, a = x & 1, g = y >> 1, b = y & 1;
            if (f == g) c.vcomp[static_cast<size_t>(x)][static_cast<size_t>(y)] = (f << 1) | (a ^ b);
            c.hcomp[static_cast<size_t>(x)][static_cast<size_t>(y)] = ((f ^ g) << 1) | (a ^ b);
        }
    c.assoc.assign(2, std::vector<std::vector<int>>(2, std::vector<int>(2, -1)));
    for (int f = 0; f < 2; ++f)
        for (int g = 0; g < 2; ++g)
            for (int h = 0; h < 2; ++h)
                c.assoc[static_cast<size_t>(f)][static_cast<size_t>(g)][static_cast<size_t>(h)] =
                    ((f ^ g ^ h) << 1) | cocycle(f, g, h);
    c.runit = {0, 2};
    c.lunit = {0, 2};
    return c;
}

} // namespace

Weak2Category weak_cocycle() {
    Weak2Category c = cocycle_like([](int f, int g, int h) { return f & g & h; });
    Weak2Report r = validate_weak2(c);
    if (!r.ok) throw std::logic_error("weak_cocycle invalid: " + r.axiom + " " + r.detail);
    return c;
}

Weak2Category weak_cocycle_broken() {
    // flip the associator value at (s,s,e); the pentagon at (s,s,s,e) breaks
    return cocycle_like([](int f, int g, int h) { return (f & g & h) ^ (f & g & (h ^ 1)); });
}

Weak2Category weak_trivial_cocycle() {
    Weak2Category c = cocycle_like([](int, int, int) { return 0; });
    Weak2Report r = validate_weak2(c);
    if (!r.ok) throw std::logic_error("weak_trivial_cocycle invalid");
    return c;
}

namespace {

std::shared_ptr<FinPresheaf> clone_presheaf(const PresheafPtr& phi) {
    auto out = std::make_shared<FinPresheaf>(phi->arity(), phi->bounds());
    for (const auto& m : phi->all_indices()) out->set_cells(m, phi->cell_count(m), phi->labels(m));
    for (const auto& m : phi->all_indices()) {
        for (int k = 1; k <= phi->arity(); ++k) {
            int mk = m[static_cast<size_t>(k) - 1];
            if (mk >= 1)
                for (int i = 0; i <= mk; ++i) out->set_face_action(m, k, i, phi->face_action(m, k, i));
            if (mk + 1 <= phi->bounds()[static_cast<size_t>(k) - 1])
                for (int i = 0; i <= mk; ++i)
                    out->set_degeneracy_action(m, k, i, phi->degeneracy_action(m, k, i));
        }
    }
    return out;
}

} // namespace

PresheafPtr broken_presheaf_action() {
    PresheafPtr base = double_nerve(weak2_from_strict(strict2_z2()), {2, 2});
    auto out = clone_presheaf(base);
    // swap the two values of one second-axis face at (1,1)
    MultiIndex m11{1, 1};
    std::vector<int> t = out->face_action(m11, 2, 0);
    std::swap(t[0], t[1]);
    out->set_face_action(m11, 2, 0, std::move(t));
    return out;
}

PresheafPtr broken_segal_injectivity() {
    auto phi = std::make_shared<FinPresheaf>(1, std::vector<int>{2});
    phi->set_cells({0}, 1, {"x"});
    phi->set_cells({1}, 1, {"f"});
    phi->set_cells({2}, 2, {"s1", "s2"});
    phi->set_degeneracy_action({0}, 1, 0, {0});
    phi->set_face_action({1}, 1, 0, {0});
    phi->set_face_action({1}, 1, 1, {0});
    phi->set_degeneracy_action({1}, 1, 0, {0});
    phi->set_degeneracy_action({1}, 1, 1, {0});
    phi->set_face_action({2}, 1, 0, {0, 0});
    phi->set_face_action({2}, 1, 1, {0, 0});
    phi->set_face_action({2}, 1, 2, {0, 0});
    return phi;
}

PresheafPtr broken_segal_surjectivity() {
    auto phi = std::make_shared<FinPresheaf>(1, std::vector<int>{2});
    phi->set_cells({0}, 1, {"x"});
    phi->set_cells({1}, 2, {"i", "f"});
    // fillers for (i,i), (i,f), (f,i) but not (f,f)
    phi->set_cells({2}, 3, {"(i|i)", "(i|f)", "(f|i)"});
    phi->set_degeneracy_action({0}, 1, 0, {0});
    phi->set_face_action({1}, 1, 0, {0, 0});
    phi->set_face_action({1}, 1, 1, {0, 0});
    phi->set_degeneracy_action({1}, 1, 0, {0, 1});   // e_0(a) = (i|a)
    phi->set_degeneracy_action({1}, 1, 1, {0, 2});   // e_1(a) = (a|i)
    phi->set_face_action({2}, 1, 0, {0, 1, 0});      // drop first edge
    phi->set_face_action({2}, 1, 2, {0, 0, 1});      // drop last edge
    phi->set_face_action({2}, 1, 1, {0, 1, 1});      // composite edge
    return phi;
}

StrictNCategory broken_interchange() {
    StrictNCategory s;
    s.n = 2;
    s.cell_names = {{"*"}, {"I"}, {"a0", "a1", "a2", "a3"}};
    s.src = {{0}, {0, 0, 0, 0}};
    s.tgt = {{0}, {0, 0, 0, 0}};
    s.id = {{0}, {0}};
    s.comp[{0, 1}] = {{0}};
    auto& v = s.comp[{1, 2}];
    auto& h = s.comp[{0, 2}];
    v.assign(4, std::vector<int>(4, -1));
    h.assign(4, std::vector<int>(4, -1));
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) {
            v[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % 4;
            h[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b + 2 * a * b) % 4;
        }
    return s;
}

namespace {

PresheafMorphism morphism_from_functor(const PresheafPtr& src, const PresheafPtr& dst,
                                       const std::vector<int>& obj_map,
                                       const std::vector<int>& arrow_map) {
    PresheafMorphism f;
    f.source = src;
    f.target = dst;
    f.components.resize(src->all_indices().size());
    int bound = src->bounds()[0];
    // index destination cells by their spines
    std::vector<std::map<std::vector<int>, int>> dst_by_spine(static_cast<size_t>(bound) + 1);
    for (int m = 0; m <= bound; ++m)
        for (int cell = 0; cell < dst->cell_count({m}); ++cell) {
            std::vector<int> spine;
            if (m == 0)
                spine = {cell};
            else
                for (int i = 0; i + 1 <= m; ++i)
                    spine.push_back(dst->evaluate(axis_map({m}, 1, edge_map(m, i, i + 1)), cell));
            dst_by_spine[static_cast<size_t>(m)][spine] = cell;
        }
    for (int m = 0; m <= bound; ++m) {
        auto& comp = f.components[static_cast<size_t>(src->ordinal({m}))];
        comp.resize(static_cast<size_t>(src->cell_count({m})));
        for (int cell = 0; cell < src->cell_count({m}); ++cell) {
            std::vector<int> spine;
            if (m == 0)
                spine = {obj_map[static_cast<size_t>(cell)]};
            else
                for (int i = 0; i + 1 <= m; ++i)
                    spine.push_back(arrow_map[static_cast<size_t>(
                        src->evaluate(axis_map({m}, 1, edge_map(m, i, i + 1)), cell))]);
            auto it = dst_by_spine[static_cast<size_t>(m)].find(spine);
            if (it == dst_by_spine[static_cast<size_t>(m)].end())
                throw std::logic_error("morphism_from_functor: image spine has no filler");
            comp[static_cast<size_t>(cell)] = it->second;
        }
    }
    ValidationReport nat = f.validate_natural();
    if (!nat.ok) throw std::logic_error("morphism_from_functor: not natural: " + nat.message);
    return f;
}

} // namespace

std::vector<MorphismFixture> morphism_fixtures(int bound) {
    std::vector<MorphismFixture> out;
    PresheafPtr nz2 = nerve(z2_delooping(), bound);
    PresheafPtr nterm = nerve(terminal_category(), bound);
    PresheafPtr ncontr = nerve(contractible_groupoid(2), bound);
    PresheafPtr ndisc = nerve(discrete_category(2), bound);

    out.push_back({"identity_on_nerve_z2", true, identity_morphism(nz2)});
    out.push_back({"contractible_to_terminal", true,
                   morphism_from_functor(ncontr, nterm, {0, 0}, {0, 0, 0, 0})});
    out.push_back({"contractible_swap", true,
                   morphism_from_functor(ncontr, ncontr, {1, 0}, {3, 2, 1, 0})});
    out.push_back({"collapse_z2_to_terminal", false,
                   morphism_from_functor(nz2, nterm, {0}, {0, 0})});
    out.push_back({"discrete_into_contractible", false,
                   morphism_from_functor(ndisc, ncontr, {0, 1}, {0, 3})});
    out.push_back({"terminal_into_z2", false, morphism_from_functor(nterm, nz2, {0}, {0})});
    return out;
}

std::vector<std::string> fixture_names() {
    return {"terminal",     "z2_delooping",  "arrow_cat",       "contractible_groupoid",
            "s3_delooping", "discrete2",     "strict2_z2",      "strict2_z2xz2",
            "strict3_z2",   "weak_cocycle",  "weak_trivial",    "broken_pentagon",
            "broken_action", "broken_segal_inj", "broken_segal_surj", "broken_interchange"};
}

} // namespace nerf::fixtures
