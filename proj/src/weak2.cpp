#include "nerf/weak2.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

#include "nerf/cat.hpp"
#include "nerf/homotopy.hpp"

namespace nerf {

int Weak2Category::compose1(int f, int g) const {
    int r = comp1[static_cast<size_t>(f)][static_cast<size_t>(g)];
    if (r < 0) throw std::invalid_argument("compose1: not composable");
    return r;
}

int Weak2Category::vcompose(int a, int b) const {
    int r = vcomp[static_cast<size_t>(a)][static_cast<size_t>(b)];
    if (r < 0) throw std::invalid_argument("vcompose: not composable");
    return r;
}

int Weak2Category::hcompose(int a, int b) const {
    int r = hcomp[static_cast<size_t>(a)][static_cast<size_t>(b)];
    if (r < 0) throw std::invalid_argument("hcompose: not composable");
    return r;
}

std::optional<int> Weak2Category::vinverse(int a) const {
    int f = s2[static_cast<size_t>(a)], g = b2[static_cast<size_t>(a)];
    for (int b = 0; b < c2; ++b)
        if (s2[static_cast<size_t>(b)] == g && b2[static_cast<size_t>(b)] == f &&
            vcompose(a, b) == e2[static_cast<size_t>(f)] && vcompose(b, a) == e2[static_cast<size_t>(g)])
            return b;
    return std::nullopt;
}

std::string Weak2Category::obj_name(int x) const {
    return static_cast<size_t>(x) < obj_names.size() ? obj_names[static_cast<size_t>(x)] : "x" + std::to_string(x);
}
std::string Weak2Category::arr_name(int f) const {
    return static_cast<size_t>(f) < arr_names.size() ? arr_names[static_cast<size_t>(f)] : "f" + std::to_string(f);
}
std::string Weak2Category::cell_name(int a) const {
    return static_cast<size_t>(a) < cell2_names.size() ? cell2_names[static_cast<size_t>(a)] : "a" + std::to_string(a);
}

namespace {

bool comp1able(const Weak2Category& c, int f, int g) {
    return c.b1[static_cast<size_t>(f)] == c.s1[static_cast<size_t>(g)];
}
bool vable(const Weak2Category& c, int a, int b) {
    return c.b2[static_cast<size_t>(a)] == c.s2[static_cast<size_t>(b)];
}
bool hable(const Weak2Category& c, int a, int b) {
    return c.b1[static_cast<size_t>(c.s2[static_cast<size_t>(a)])] ==
           c.s1[static_cast<size_t>(c.s2[static_cast<size_t>(b)])];
}

} // namespace

Weak2Report validate_weak2(const Weak2Category& c) {
    auto fail = [](const std::string& ax, const std::string& d) { return Weak2Report{false, ax, d}; };
    // shapes
    if (static_cast<int>(c.s1.size()) != c.c1 || static_cast<int>(c.b1.size()) != c.c1 ||
        static_cast<int>(c.e1.size()) != c.c0 || static_cast<int>(c.s2.size()) != c.c2 ||
        static_cast<int>(c.b2.size()) != c.c2 || static_cast<int>(c.e2.size()) != c.c1)
        return fail("shape", "globular table sizes wrong");
    auto in_range = [](const std::vector<int>& v, int lo, int hi) {
        for (int x : v)
            if (x < lo || x >= hi) return false;
        return true;
    };
    if (!in_range(c.s1, 0, c.c0) || !in_range(c.b1, 0, c.c0) || !in_range(c.e1, 0, c.c1) ||
        !in_range(c.s2, 0, c.c1) || !in_range(c.b2, 0, c.c1) || !in_range(c.e2, 0, c.c2) ||
        !in_range(c.runit, 0, c.c2) || !in_range(c.lunit, 0, c.c2))
        return fail("shape", "globular or unitor table entry out of range");
    if (c.comp1.size() != static_cast<size_t>(c.c1) || c.vcomp.size() != static_cast<size_t>(c.c2) ||
        c.hcomp.size() != static_cast<size_t>(c.c2) || c.assoc.size() != static_cast<size_t>(c.c1))
        return fail("shape", "composition table sizes wrong");
    for (const auto& row : c.comp1)
        if (row.size() != static_cast<size_t>(c.c1) || !in_range(row, -1, c.c1))
            return fail("shape", "comp1 entry out of range");
    for (const auto& row : c.vcomp)
        if (row.size() != static_cast<size_t>(c.c2) || !in_range(row, -1, c.c2))
            return fail("shape", "vcomp entry out of range");
    for (const auto& row : c.hcomp)
        if (row.size() != static_cast<size_t>(c.c2) || !in_range(row, -1, c.c2))
            return fail("shape", "hcomp entry out of range");
    for (const auto& plane : c.assoc) {
        if (plane.size() != static_cast<size_t>(c.c1)) return fail("shape", "assoc plane size wrong");
        for (const auto& row : plane)
            if (row.size() != static_cast<size_t>(c.c1) || !in_range(row, -1, c.c2))
                return fail("shape", "assoc entry out of range");
    }
    // globularity
    for (int a = 0; a < c.c2; ++a) {
        int f = c.s2[static_cast<size_t>(a)], g = c.b2[static_cast<size_t>(a)];
        if (c.s1[static_cast<size_t>(f)] != c.s1[static_cast<size_t>(g)] ||
            c.b1[static_cast<size_t>(f)] != c.b1[static_cast<size_t>(g)])
            return fail("globularity", "2-cell " + c.cell_name(a) + " not between parallel arrows");
    }
    for (int x = 0; x < c.c0; ++x)
        if (c.s1[static_cast<size_t>(c.e1[static_cast<size_t>(x)])] != x ||
            c.b1[static_cast<size_t>(c.e1[static_cast<size_t>(x)])] != x)
            return fail("globularity", "e1 not a section at " + c.obj_name(x));
    for (int f = 0; f < c.c1; ++f)
        if (c.s2[static_cast<size_t>(c.e2[static_cast<size_t>(f)])] != f ||
            c.b2[static_cast<size_t>(c.e2[static_cast<size_t>(f)])] != f)
            return fail("globularity", "e2 not a section at " + c.arr_name(f));
    // composition typing
    for (int f = 0; f < c.c1; ++f)
        for (int g = 0; g < c.c1; ++g) {
            int r = c.comp1[static_cast<size_t>(f)][static_cast<size_t>(g)];
            if (comp1able(c, f, g)) {
                if (r < 0) return fail("comp1", "missing composite " + c.arr_name(f) + ";" + c.arr_name(g));
                if (c.s1[static_cast<size_t>(r)] != c.s1[static_cast<size_t>(f)] ||
                    c.b1[static_cast<size_t>(r)] != c.b1[static_cast<size_t>(g)])
                    return fail("comp1", "composite endpoints wrong");
            } else if (r != -1)
                return fail("comp1", "composite on non-composable pair");
        }
    for (int a = 0; a < c.c2; ++a)
        for (int b = 0; b < c.c2; ++b) {
            int rv = c.vcomp[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (vable(c, a, b)) {
                if (rv < 0) return fail("vcomp", "missing vertical composite");
                if (c.s2[static_cast<size_t>(rv)] != c.s2[static_cast<size_t>(a)] ||
                    c.b2[static_cast<size_t>(rv)] != c.b2[static_cast<size_t>(b)])
                    return fail("vcomp", "vertical composite endpoints wrong");
            } else if (rv != -1)
                return fail("vcomp", "vertical composite on non-composable pair");
            int rh = c.hcomp[static_cast<size_t>(a)][static_cast<size_t>(b)];
            if (hable(c, a, b)) {
                if (rh < 0) return fail("hcomp", "missing horizontal composite");
                if (c.s2[static_cast<size_t>(rh)] !=
                        c.compose1(c.s2[static_cast<size_t>(a)], c.s2[static_cast<size_t>(b)]) ||
                    c.b2[static_cast<size_t>(rh)] !=
                        c.compose1(c.b2[static_cast<size_t>(a)], c.b2[static_cast<size_t>(b)]))
                    return fail("hcomp", "horizontal composite endpoints wrong");
            } else if (rh != -1)
                return fail("hcomp", "horizontal composite on non-composable pair");
        }
    // vertical identity laws
    for (int a = 0; a < c.c2; ++a) {
        if (c.vcompose(c.e2[static_cast<size_t>(c.s2[static_cast<size_t>(a)])], a) != a ||
            c.vcompose(a, c.e2[static_cast<size_t>(c.b2[static_cast<size_t>(a)])]) != a)
            return fail("vcomp", "vertical identity law fails at " + c.cell_name(a));
    }
    // coherence cells present, typed and invertible
    for (int f = 0; f < c.c1; ++f)
        for (int g = 0; g < c.c1; ++g)
            for (int h = 0; h < c.c1; ++h) {
                int a = c.assoc[static_cast<size_t>(f)][static_cast<size_t>(g)][static_cast<size_t>(h)];
                bool want = comp1able(c, f, g) && comp1able(c, g, h);
                if (!want) {
                    if (a != -1) return fail("assoc", "associator on non-composable triple");
                    continue;
                }
                if (a < 0) return fail("assoc", "associator missing");
                int lhs = c.compose1(f, c.compose1(g, h));
                int rhs = c.compose1(c.compose1(f, g), h);
                if (c.s2[static_cast<size_t>(a)] != lhs || c.b2[static_cast<size_t>(a)] != rhs)
                    return fail("assoc", "associator endpoints wrong at (" + c.arr_name(f) + "," +
                                             c.arr_name(g) + "," + c.arr_name(h) + ")");
                if (!c.vinverse(a)) return fail("assoc", "associator not invertible");
            }
    for (int f = 0; f < c.c1; ++f) {
        int u = c.runit[static_cast<size_t>(f)], v = c.lunit[static_cast<size_t>(f)];
        int fix = c.compose1(c.e1[static_cast<size_t>(c.s1[static_cast<size_t>(f)])], f);
        int ixf = c.compose1(f, c.e1[static_cast<size_t>(c.b1[static_cast<size_t>(f)])]);
        if (c.s2[static_cast<size_t>(u)] != fix || c.b2[static_cast<size_t>(u)] != f)
            return fail("unitor", "U endpoints wrong at " + c.arr_name(f));
        if (c.s2[static_cast<size_t>(v)] != ixf || c.b2[static_cast<size_t>(v)] != f)
            return fail("unitor", "V endpoints wrong at " + c.arr_name(f));
        if (!c.vinverse(u) || !c.vinverse(v)) return fail("unitor", "unitor not invertible");
    }

    // (1) pentagon
    for (int f = 0; f < c.c1; ++f)
        for (int g = 0; g < c.c1; ++g) {
            if (!comp1able(c, f, g)) continue;
            for (int h = 0; h < c.c1; ++h) {
                if (!comp1able(c, g, h)) continue;
                for (int k = 0; k < c.c1; ++k) {
                    if (!comp1able(c, h, k)) continue;
                    int gf = c.compose1(f, g), hg = c.compose1(g, h), kh = c.compose1(h, k);
                    int lhs = c.vcompose(
                        c.vcompose(c.hcompose(c.e2[static_cast<size_t>(f)],
                                              c.assoc[static_cast<size_t>(g)][static_cast<size_t>(h)]
                                                     [static_cast<size_t>(k)]),
                                   c.assoc[static_cast<size_t>(f)][static_cast<size_t>(hg)]
                                          [static_cast<size_t>(k)]),
                        c.hcompose(c.assoc[static_cast<size_t>(f)][static_cast<size_t>(g)]
                                          [static_cast<size_t>(h)],
                                   c.e2[static_cast<size_t>(k)]));
                    int rhs = c.vcompose(c.assoc[static_cast<size_t>(f)][static_cast<size_t>(g)]
                                                [static_cast<size_t>(kh)],
                                         c.assoc[static_cast<size_t>(gf)][static_cast<size_t>(h)]
                                                [static_cast<size_t>(k)]);
                    if (lhs != rhs)
                        return fail("(1)", "pentagon fails at (" + c.arr_name(f) + "," + c.arr_name(g) +
                                               "," + c.arr_name(h) + "," + c.arr_name(k) + ")");
                }
            }
        }
    // (2) vertical associativity
    for (int a = 0; a < c.c2; ++a)
        for (int b = 0; b < c.c2; ++b) {
            if (!vable(c, a, b)) continue;
            for (int d = 0; d < c.c2; ++d) {
                if (!vable(c, b, d)) continue;
                if (c.vcompose(c.vcompose(a, b), d) != c.vcompose(a, c.vcompose(b, d)))
                    return fail("(2)", "vertical associativity fails at (" + c.cell_name(a) + "," +
                                           c.cell_name(b) + "," + c.cell_name(d) + ")");
            }
        }
    // (3) Godement interchange
    for (int a = 0; a < c.c2; ++a)
        for (int b = 0; b < c.c2; ++b) {
            if (!vable(c, a, b)) continue;
            for (int ap = 0; ap < c.c2; ++ap) {
                if (!hable(c, a, ap)) continue;
                for (int bp = 0; bp < c.c2; ++bp) {
                    if (!vable(c, ap, bp) || !hable(c, b, bp)) continue;
                    int lhs = c.hcompose(c.vcompose(a, b), c.vcompose(ap, bp));
                    int rhs = c.vcompose(c.hcompose(a, ap), c.hcompose(b, bp));
                    if (lhs != rhs)
                        return fail("(3)", "interchange fails at (" + c.cell_name(a) + "," + c.cell_name(b) +
                                               "," + c.cell_name(ap) + "," + c.cell_name(bp) + ")");
                }
            }
        }
    // (4)/(5) unitor naturality
    for (int a = 0; a < c.c2; ++a) {
        int f = c.s2[static_cast<size_t>(a)], g = c.b2[static_cast<size_t>(a)];
        int y = c.b1[static_cast<size_t>(f)];
        int x = c.s1[static_cast<size_t>(f)];
        int iy2 = c.e2[static_cast<size_t>(c.e1[static_cast<size_t>(y)])];
        int ix2 = c.e2[static_cast<size_t>(c.e1[static_cast<size_t>(x)])];
        if (c.vcompose(c.hcompose(a, iy2), c.lunit[static_cast<size_t>(g)]) !=
            c.vcompose(c.lunit[static_cast<size_t>(f)], a))
            return fail("(4)", "left unitor not natural at " + c.cell_name(a));
        if (c.vcompose(c.hcompose(ix2, a), c.runit[static_cast<size_t>(g)]) !=
            c.vcompose(c.runit[static_cast<size_t>(f)], a))
            return fail("(5)", "right unitor not natural at " + c.cell_name(a));
    }
    // (6)
    for (int x = 0; x < c.c0; ++x)
        if (c.lunit[static_cast<size_t>(c.e1[static_cast<size_t>(x)])] !=
            c.runit[static_cast<size_t>(c.e1[static_cast<size_t>(x)])])
            return fail("(6)", "V(I_x) != U(I_x) at " + c.obj_name(x));
    for (int f = 0; f < c.c1; ++f)
        for (int g = 0; g < c.c1; ++g) {
            if (!comp1able(c, f, g)) continue;
            if (c.hcompose(c.e2[static_cast<size_t>(f)], c.e2[static_cast<size_t>(g)]) !=
                c.e2[static_cast<size_t>(c.compose1(f, g))])
                return fail("(6)", "I_g * I_f != I_{gf} at (" + c.arr_name(f) + "," + c.arr_name(g) + ")");
        }
    // (7) associator naturality
    for (int a = 0; a < c.c2; ++a)
        for (int b = 0; b < c.c2; ++b) {
            if (!hable(c, a, b)) continue;
            for (int d = 0; d < c.c2; ++d) {
                if (!hable(c, b, d)) continue;
                int f = c.s2[static_cast<size_t>(a)], g = c.s2[static_cast<size_t>(b)], h = c.s2[static_cast<size_t>(d)];
                int fp = c.b2[static_cast<size_t>(a)], gp = c.b2[static_cast<size_t>(b)], hp = c.b2[static_cast<size_t>(d)];
                int lhs = c.vcompose(c.hcompose(a, c.hcompose(b, d)),
                                     c.assoc[static_cast<size_t>(fp)][static_cast<size_t>(gp)][static_cast<size_t>(hp)]);
                int rhs = c.vcompose(c.assoc[static_cast<size_t>(f)][static_cast<size_t>(g)][static_cast<size_t>(h)],
                                     c.hcompose(c.hcompose(a, b), d));
                if (lhs != rhs)
                    return fail("(7)", "associator not natural at (" + c.cell_name(a) + "," +
                                           c.cell_name(b) + "," + c.cell_name(d) + ")");
            }
        }
    // (8), (9), (10) triangle-type axioms
    for (int f = 0; f < c.c1; ++f)
        for (int g = 0; g < c.c1; ++g) {
            if (!comp1able(c, f, g)) continue;
            int x = c.s1[static_cast<size_t>(f)];
            int y = c.b1[static_cast<size_t>(f)];
            int z = c.b1[static_cast<size_t>(g)];
            int iy = c.e1[static_cast<size_t>(y)], ix = c.e1[static_cast<size_t>(x)], iz = c.e1[static_cast<size_t>(z)];
            int gf = c.compose1(f, g);
            {
                int lhs = c.vcompose(c.assoc[static_cast<size_t>(f)][static_cast<size_t>(iy)][static_cast<size_t>(g)],
                                     c.hcompose(c.lunit[static_cast<size_t>(f)], c.e2[static_cast<size_t>(g)]));
                int rhs = c.hcompose(c.e2[static_cast<size_t>(f)], c.runit[static_cast<size_t>(g)]);
                if (lhs != rhs)
                    return fail("(8)", "triangle fails at (" + c.arr_name(f) + "," + c.arr_name(g) + ")");
            }
            {
                int lhs = c.vcompose(c.assoc[static_cast<size_t>(ix)][static_cast<size_t>(f)][static_cast<size_t>(g)],
                                     c.hcompose(c.runit[static_cast<size_t>(f)], c.e2[static_cast<size_t>(g)]));
                int rhs = c.runit[static_cast<size_t>(gf)];
                if (lhs != rhs)
                    return fail("(9)", "right unit triangle fails at (" + c.arr_name(f) + "," + c.arr_name(g) + ")");
            }
            {
                int lhs = c.vcompose(c.assoc[static_cast<size_t>(f)][static_cast<size_t>(g)][static_cast<size_t>(iz)],
                                     c.lunit[static_cast<size_t>(gf)]);
                int rhs = c.hcompose(c.e2[static_cast<size_t>(f)], c.lunit[static_cast<size_t>(g)]);
                if (lhs != rhs)
                    return fail("(10)", "left unit triangle fails at (" + c.arr_name(f) + "," + c.arr_name(g) + ")");
            }
        }
    return {};
}

Weak2Category weak2_from_strict(const StrictNCategory& s) {
    if (s.n != 2) throw std::invalid_argument("weak2_from_strict: need a strict 2-category");
    StrictReport sr = validate_strict(s);
    if (!sr.ok) throw std::invalid_argument("weak2_from_strict: invalid: " + sr.detail);
    Weak2Category c;
    c.c0 = s.cells(0);
    c.c1 = s.cells(1);
    c.c2 = s.cells(2);
    c.obj_names = s.cell_names.size() > 0 ? s.cell_names[0] : std::vector<std::string>{};
    c.arr_names = s.cell_names.size() > 1 ? s.cell_names[1] : std::vector<std::string>{};
    c.cell2_names = s.cell_names.size() > 2 ? s.cell_names[2] : std::vector<std::string>{};
    c.s1 = s.src[0];
    c.b1 = s.tgt[0];
    c.e1 = s.id[0];
    c.s2 = s.src[1];
    c.b2 = s.tgt[1];
    c.e2 = s.id[1];
    c.comp1 = s.comp.at({0, 1});
    c.vcomp = s.comp.at({1, 2});
    c.hcomp = s.comp.at({0, 2});
    c.assoc.assign(static_cast<size_t>(c.c1),
                   std::vector<std::vector<int>>(static_cast<size_t>(c.c1),
                                                 std::vector<int>(static_cast<size_t>(c.c1), -1)));
    for (int f = 0; f < c.c1; ++f)
        for (int g = 0; g < c.c1; ++g)
            for (int h = 0; h < c.c1; ++h)
                if (comp1able(c, f, g) && comp1able(c, g, h))
                    c.assoc[static_cast<size_t>(f)][static_cast<size_t>(g)][static_cast<size_t>(h)] =
                        c.e2[static_cast<size_t>(c.compose1(f, c.compose1(g, h)))];
    c.runit.resize(static_cast<size_t>(c.c1));
    c.lunit.resize(static_cast<size_t>(c.c1));
    for (int f = 0; f < c.c1; ++f) {
        c.runit[static_cast<size_t>(f)] = c.e2[static_cast<size_t>(f)];
        c.lunit[static_cast<size_t>(f)] = c.e2[static_cast<size_t>(f)];
    }
    Weak2Report r = validate_weak2(c);
    if (!r.ok) throw std::runtime_error("weak2_from_strict: axioms fail: " + r.axiom + " " + r.detail);
    return c;
}

// ---------------------------------------------------------------------------
// Double nerve

namespace {

// Layout of a coherence family at (m,n) as a flat int vector.
struct FamilyLayout {
    int m, n;
    std::vector<std::pair<int, int>> pairs;          // (i,j), i<j
    std::vector<std::array<int, 3>> triples;         // (i,j,k)
    std::map<std::pair<int, int>, int> pair_pos;
    std::map<std::array<int, 3>, int> triple_pos;
    int x_off = 0, f_off, lam_off, eps_off, size;
    int levels, level_pairs;

    FamilyLayout(int m_, int n_) : m(m_), n(n_) {
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j) {
                pair_pos[{i, j}] = static_cast<int>(pairs.size());
                pairs.push_back({i, j});
            }
        for (int i = 0; i <= m; ++i)
            for (int j = i + 1; j <= m; ++j)
                for (int k = j + 1; k <= m; ++k) {
                    triple_pos[{i, j, k}] = static_cast<int>(triples.size());
                    triples.push_back({i, j, k});
                }
        levels = n + 1;
        level_pairs = levels * (levels - 1) / 2;
        f_off = m + 1;
        lam_off = f_off + levels * static_cast<int>(pairs.size());
        eps_off = lam_off + level_pairs * static_cast<int>(pairs.size());
        size = eps_off + levels * static_cast<int>(triples.size());
    }
    int lp_pos(int a, int b) const {  // a < b level pair, lexicographic
        return a * (2 * levels - a - 1) / 2 + (b - a - 1);
    }
    int x(const std::vector<int>& v, int i) const { return v[static_cast<size_t>(i)]; }
    int f(const std::vector<int>& v, int a, int i, int j) const {
        return v[static_cast<size_t>(f_off + a * static_cast<int>(pairs.size()) + pair_pos.at({i, j}))];
    }
    int lam(const std::vector<int>& v, int a, int b, int i, int j) const {
        return v[static_cast<size_t>(lam_off + lp_pos(a, b) * static_cast<int>(pairs.size()) + pair_pos.at({i, j}))];
    }
    int eps(const std::vector<int>& v, int a, int i, int j, int k) const {
        return v[static_cast<size_t>(eps_off + a * static_cast<int>(triples.size()) + triple_pos.at({i, j, k}))];
    }
    int& fref(std::vector<int>& v, int a, int i, int j) const {
        return v[static_cast<size_t>(f_off + a * static_cast<int>(pairs.size()) + pair_pos.at({i, j}))];
    }
    int& lamref(std::vector<int>& v, int a, int b, int i, int j) const {
        return v[static_cast<size_t>(lam_off + lp_pos(a, b) * static_cast<int>(pairs.size()) + pair_pos.at({i, j}))];
    }
    int& epsref(std::vector<int>& v, int a, int i, int j, int k) const {
        return v[static_cast<size_t>(eps_off + a * static_cast<int>(triples.size()) + triple_pos.at({i, j, k}))];
    }
};

struct Hom2Tables {
    // hom2[f][g]: 2-cells f => g; inv2[f][g]: the invertible ones
    std::vector<std::vector<std::vector<int>>> hom2, inv2;
    std::vector<int> vinv;  // 2-cell -> vertical inverse or -1
    explicit Hom2Tables(const Weak2Category& c) {
        hom2.assign(static_cast<size_t>(c.c1), std::vector<std::vector<int>>(static_cast<size_t>(c.c1)));
        inv2 = hom2;
        vinv.assign(static_cast<size_t>(c.c2), -1);
        for (int a = 0; a < c.c2; ++a) {
            auto inv = c.vinverse(a);
            if (inv) vinv[static_cast<size_t>(a)] = *inv;
            hom2[static_cast<size_t>(c.s2[static_cast<size_t>(a)])][static_cast<size_t>(c.b2[static_cast<size_t>(a)])]
                .push_back(a);
            if (inv)
                inv2[static_cast<size_t>(c.s2[static_cast<size_t>(a)])][static_cast<size_t>(c.b2[static_cast<size_t>(a)])]
                    .push_back(a);
        }
    }
};

// The quadruple coherence of the epsilon witnesses.  The two lambda
// coherences alone are not enough: the injectivity half of the
// double-nerve Segal bijection forces the comparison cells to be
// compatible with the associator across every a < b < c < d:
//
//   eps_acd . (I_{f_cd} * eps_abc) . A(f_ab, f_bc, f_cd)
//      = eps_abd . (eps_bcd * I_{f_ab})
//
// Families with incoherent witnesses are not isomorphic to any coherent
// one over the same spine, which would break T Phi being a category.
struct EpsCoherence {
    const Weak2Category& c;
    const Hom2Tables& t;

    // left side up to eps_acd: the invertible comparison
    // (f_cd f_bc) f_ab => f_cd f_ac, and the full right side.
    int lhs_prefix(int /*f_ab*/, int /*f_bc*/, int f_cd, int eps_abc, int assoc_cell) const {
        return c.vcompose(assoc_cell, c.hcompose(eps_abc, c.e2[static_cast<size_t>(f_cd)]));
    }
    int rhs_total(int f_ab, int eps_bcd, int eps_abd) const {
        return c.vcompose(c.hcompose(c.e2[static_cast<size_t>(f_ab)], eps_bcd), eps_abd);
    }
    bool holds(int f_ab, int f_bc, int f_cd, int eps_abc, int eps_bcd, int eps_abd,
               int eps_acd) const {
        int a = c.assoc[static_cast<size_t>(f_ab)][static_cast<size_t>(f_bc)][static_cast<size_t>(f_cd)];
        int lhs = c.vcompose(lhs_prefix(f_ab, f_bc, f_cd, eps_abc, a), eps_acd);
        return lhs == rhs_total(f_ab, eps_bcd, eps_abd);
    }
    // solve for eps_acd; -1 when the prefix is not invertible
    int solve_acd(int f_ab, int f_bc, int f_cd, int eps_abc, int eps_bcd, int eps_abd) const {
        int a = c.assoc[static_cast<size_t>(f_ab)][static_cast<size_t>(f_bc)][static_cast<size_t>(f_cd)];
        int prefix = lhs_prefix(f_ab, f_bc, f_cd, eps_abc, a);
        int inv = t.vinv[static_cast<size_t>(prefix)];
        if (inv < 0) return -1;
        return c.vcompose(inv, rhs_total(f_ab, eps_bcd, eps_abd));
    }
};

// Enumerate all coherence families at (m,n) by constraint-ordered search:
// level 0 chain data first, then per level the consecutive lambdas and the
// epsilon witnesses.  Free choices are the consecutive-pair data and one
// epsilon per wide pair; everything else is forced by the coherences and
// re-checked where the system is overdetermined.
std::vector<std::vector<int>> enumerate_families(const Weak2Category& c, const Hom2Tables& t,
                                                 const FamilyLayout& L, long long capacity) {
    std::vector<std::vector<int>> out;
    std::vector<int> fam(static_cast<size_t>(L.size), -1);
    int m = L.m, n = L.n;
    EpsCoherence coh{c, t};

    std::vector<std::pair<int, int>> by_span;
    for (int s = 1; s <= m; ++s)
        for (int i = 0; i + s <= m; ++i) by_span.push_back({i, i + s});

    std::function<void(int)> level_rec;
    std::function<void(int, int)> pair_rec;
    std::function<void(int)> x_rec;

    auto push = [&]() {
        for (int a = 0; a <= n; ++a)
            for (int b = a + 2; b <= n; ++b)
                for (auto [i, j] : L.pairs) {
                    int acc = L.lam(fam, a, a + 1, i, j);
                    for (int mid = a + 1; mid < b; ++mid)
                        acc = c.vcompose(acc, L.lam(fam, mid, mid + 1, i, j));
                    L.lamref(fam, a, b, i, j) = acc;
                }
        out.push_back(fam);
        if (static_cast<long long>(out.size()) > capacity)
            throw CapacityError("double nerve cell set at (" + std::to_string(m) + "," + std::to_string(n) +
                                ") exceeds capacity");
    };

    pair_rec = [&](int level, int p) {
        if (p == static_cast<int>(by_span.size())) {
            if (level == n)
                push();
            else
                level_rec(level + 1);
            return;
        }
        auto [i, k] = by_span[static_cast<size_t>(p)];
        int xi = L.x(fam, i), xk = L.x(fam, k);
        bool consecutive = (k == i + 1);
        for (int f = 0; f < c.c1; ++f) {
            if (c.s1[static_cast<size_t>(f)] != xi || c.b1[static_cast<size_t>(f)] != xk) continue;
            L.fref(fam, level, i, k) = f;
            if (consecutive) {
                if (level == 0) {
                    pair_rec(level, p + 1);
                } else {
                    int prev = L.f(fam, level - 1, i, k);
                    for (int lam : t.hom2[static_cast<size_t>(prev)][static_cast<size_t>(f)]) {
                        L.lamref(fam, level - 1, level, i, k) = lam;
                        pair_rec(level, p + 1);
                    }
                }
                continue;
            }
            // wide pair (i,k): one free epsilon at j = i+1, the rest forced
            int comp_first = c.comp1[static_cast<size_t>(L.f(fam, level, i, i + 1))]
                                    [static_cast<size_t>(L.f(fam, level, i + 1, k))];
            if (comp_first < 0) continue;
            for (int eps0 : t.inv2[static_cast<size_t>(comp_first)][static_cast<size_t>(f)]) {
                L.epsref(fam, level, i, i + 1, k) = eps0;
                bool ok = true;
                // derive eps_{ijk} for j > i+1 via the quadruple (i, i+1, j, k)
                for (int j = i + 2; j < k && ok; ++j) {
                    int solved = coh.solve_acd(
                        L.f(fam, level, i, i + 1), L.f(fam, level, i + 1, j), L.f(fam, level, j, k),
                        L.eps(fam, level, i, i + 1, j), L.eps(fam, level, i + 1, j, k), eps0);
                    if (solved < 0 || t.vinv[static_cast<size_t>(solved)] < 0 ||
                        c.b2[static_cast<size_t>(solved)] != f) {
                        ok = false;
                        break;
                    }
                    L.epsref(fam, level, i, j, k) = solved;
                }
                // remaining quadruples (i, b, c, k) with b > i+1
                for (int b = i + 2; b < k && ok; ++b)
                    for (int cc = b + 1; cc < k && ok; ++cc)
                        if (!coh.holds(L.f(fam, level, i, b), L.f(fam, level, b, cc),
                                       L.f(fam, level, cc, k), L.eps(fam, level, i, b, cc),
                                       L.eps(fam, level, b, cc, k), L.eps(fam, level, i, b, k),
                                       L.eps(fam, level, i, cc, k)))
                            ok = false;
                if (!ok) continue;
                if (level == 0) {
                    pair_rec(level, p + 1);
                    continue;
                }
                // coherence (i) against the previous level: j = i+1 sets the
                // wide lambda, the other j's are checks
                int lam_ij = L.lam(fam, level - 1, level, i, i + 1);
                int lam_jk = L.lam(fam, level - 1, level, i + 1, k);
                int prev_eps = L.eps(fam, level - 1, i, i + 1, k);
                int lam_ik = c.vcompose(t.vinv[static_cast<size_t>(prev_eps)],
                                        c.vcompose(c.hcompose(lam_ij, lam_jk), eps0));
                L.lamref(fam, level - 1, level, i, k) = lam_ik;
                for (int j = i + 2; j < k && ok; ++j) {
                    int rhs = c.vcompose(c.hcompose(L.lam(fam, level - 1, level, i, j),
                                                    L.lam(fam, level - 1, level, j, k)),
                                         L.eps(fam, level, i, j, k));
                    if (c.vcompose(L.eps(fam, level - 1, i, j, k), lam_ik) != rhs) ok = false;
                }
                if (ok) pair_rec(level, p + 1);
            }
        }
        L.fref(fam, level, i, k) = -1;
    };

    level_rec = [&](int level) { pair_rec(level, 0); };

    x_rec = [&](int i) {
        if (i == m + 1) {
            level_rec(0);
            return;
        }
        for (int x = 0; x < c.c0; ++x) {
            fam[static_cast<size_t>(i)] = x;
            x_rec(i + 1);
        }
    };

    if (m == 0) {
        for (int x = 0; x < c.c0; ++x) out.push_back({x});
        return out;
    }
    x_rec(0);
    return out;
}

// Reindex a family along theta1 x theta2 (monotone maps into [m], [n]).
std::vector<int> reindex_family(const Weak2Category& c, const FamilyLayout& from,
                                const FamilyLayout& to, const MonotoneMap& th1,
                                const MonotoneMap& th2, const std::vector<int>& fam) {
    if (to.m == 0) {
        return {from.m == 0 ? fam[0] : from.x(fam, th1(0))};
    }
    std::vector<int> out(static_cast<size_t>(to.size), -1);
    auto fm = [&](int a, int i, int j) {  // f of the source family, degenerate-aware
        if (i == j) return c.e1[static_cast<size_t>(from.x(fam, i))];
        return from.f(fam, a, i, j);
    };
    for (int i = 0; i <= to.m; ++i) out[static_cast<size_t>(i)] = from.x(fam, th1(i));
    for (int a2 = 0; a2 < to.levels; ++a2) {
        int a = th2(a2);
        for (auto [i2, j2] : to.pairs) {
            int i = th1(i2), j = th1(j2);
            to.fref(out, a2, i2, j2) = fm(a, i, j);
        }
    }
    for (int a2 = 0; a2 < to.levels; ++a2)
        for (int b2 = a2 + 1; b2 < to.levels; ++b2) {
            int a = th2(a2), b = th2(b2);
            for (auto [i2, j2] : to.pairs) {
                int i = th1(i2), j = th1(j2);
                int val;
                if (i == j)
                    val = c.e2[static_cast<size_t>(c.e1[static_cast<size_t>(from.x(fam, i))])];
                else if (a == b)
                    val = c.e2[static_cast<size_t>(from.f(fam, a, i, j))];
                else
                    val = from.lam(fam, a, b, i, j);
                to.lamref(out, a2, b2, i2, j2) = val;
            }
        }
    for (int a2 = 0; a2 < to.levels; ++a2) {
        int a = th2(a2);
        for (auto [i2, j2, k2] : to.triples) {
            int i = th1(i2), j = th1(j2), k = th1(k2);
            int val;
            if (i == j && j == k)
                val = c.runit[static_cast<size_t>(c.e1[static_cast<size_t>(from.x(fam, i))])];
            else if (i == j)
                val = c.runit[static_cast<size_t>(fm(a, i, k))];
            else if (j == k)
                val = c.lunit[static_cast<size_t>(fm(a, i, j))];
            else
                val = from.eps(fam, a, i, j, k);
            to.epsref(out, a2, i2, j2, k2) = val;
        }
    }
    return out;
}

} // namespace

namespace {

ContentBuilder double_nerve_builder(const Weak2Category& c, std::vector<int> bounds,
                                    long long capacity) {
    Weak2Report wr = validate_weak2(c);
    if (!wr.ok) throw std::invalid_argument("double_nerve: invalid weak 2-category: " + wr.axiom + " " + wr.detail);
    if (bounds.size() != 2) throw std::invalid_argument("double_nerve: arity-2 bounds required");
    Hom2Tables tables(c);

    ContentBuilder b;
    b.arity = 2;
    b.bounds = bounds;
    b.capacity = capacity;
    b.enumerate = [c, tables, capacity](const MultiIndex& m) {
        FamilyLayout L(m[0], m[1]);
        return enumerate_families(c, tables, L, capacity);
    };
    b.apply = [c](const MultiIndex& m, int axis, bool is_face, int i, const std::vector<int>& cell) {
        FamilyLayout from(m[0], m[1]);
        MultiIndex m2 = m;
        m2[static_cast<size_t>(axis) - 1] += is_face ? -1 : 1;
        FamilyLayout to(m2[0], m2[1]);
        // theta : [m'] -> [m], the arrow whose contravariant action we apply
        MonotoneMap th1 = identity_map(m2[0]);
        MonotoneMap th2 = identity_map(m2[1]);
        if (axis == 1)
            th1 = is_face ? face_map(m[0], i) : degeneracy_map(m[0], i);
        else
            th2 = is_face ? face_map(m[1], i) : degeneracy_map(m[1], i);
        return reindex_family(c, from, to, th1, th2, cell);
    };
    b.label = [c](const MultiIndex& m, const std::vector<int>& cell) {
        FamilyLayout L(m[0], m[1]);
        std::ostringstream os;
        if (m[0] == 0) return c.obj_name(cell[0]);
        os << "{";
        for (int a = 0; a <= m[1]; ++a) {
            if (a) os << ";";
            for (int i = 0; i + 1 <= m[0]; ++i) os << (i ? "," : "") << c.arr_name(L.f(cell, a, i, i + 1));
        }
        if (m[1] >= 1) {
            os << "|";
            for (int a = 0; a + 1 <= m[1]; ++a)
                for (int i = 0; i + 1 <= m[0]; ++i) os << c.cell_name(L.lam(cell, a, a + 1, i, i + 1));
        }
        for (int a = 0; a <= m[1]; ++a)
            for (auto [i, j, k] : L.triples) os << "e" << c.cell_name(L.eps(cell, a, i, j, k));
        os << "}";
        return os.str();
    };
    return b;
}

} // namespace

PresheafPtr double_nerve(const Weak2Category& c, std::vector<int> bounds, long long capacity) {
    return build_presheaf(double_nerve_builder(c, std::move(bounds), capacity));
}

BuiltPresheaf double_nerve_with_content(const Weak2Category& c, std::vector<int> bounds,
                                        long long capacity) {
    return build_presheaf_with_content(double_nerve_builder(c, std::move(bounds), capacity));
}

// ---------------------------------------------------------------------------
// Extraction of the weak 2-category carried by a 2-nerve

namespace {



struct LiftIndex {
    // lookup for Phi(2,1): (s, b, spine01, spine12) -> cell, asserting uniqueness
    std::map<std::array<int, 4>, int> table;
    explicit LiftIndex(const FinPresheaf& phi) {
        MultiIndex m21{2, 1};
        for (int x = 0; x < phi.cell_count(m21); ++x) {
            std::array<int, 4> key{phi.source_along(m21, 2, x), phi.target_along(m21, 2, x),
                                   phi.evaluate(axis_map(m21, 1, edge_map(2, 0, 1)), x),
                                   phi.evaluate(axis_map(m21, 1, edge_map(2, 1, 2)), x)};
            if (table.count(key))
                throw std::runtime_error("extract_weak2: Segal lift not unique (not a 2-nerf)");
            table[key] = x;
        }
    }
    int lift(int s, int b, int p01, int p12) const {
        auto it = table.find({s, b, p01, p12});
        if (it == table.end())
            throw std::runtime_error("extract_weak2: Segal lift missing (not a 2-nerf)");
        return it->second;
    }
};

} // namespace

ExtractedWeak2 extract_weak2(const PresheafPtr& phi, SectionOrder order) {
    phi->ensure_validated();
    if (phi->arity() != 2) throw std::invalid_argument("extract_weak2: arity-2 presheaf required");
    if (phi->bounds()[0] < 3 || phi->bounds()[1] < 2)
        throw std::invalid_argument("extract_weak2: bounds at least (3,2) required");

    MultiIndex m00{0, 0}, m10{1, 0}, m11{1, 1}, m20{2, 0}, m21{2, 1}, m30{3, 0};
    ExtractedWeak2 out;
    Weak2Category& c = out.cat;
    c.c0 = phi->cell_count(m00);
    c.c1 = phi->cell_count(m10);
    c.c2 = phi->cell_count(m11);
    for (int x = 0; x < c.c0; ++x) c.obj_names.push_back(phi->cell_name(m00, x));
    for (int f = 0; f < c.c1; ++f) c.arr_names.push_back(phi->cell_name(m10, f));
    for (int a = 0; a < c.c2; ++a) c.cell2_names.push_back(phi->cell_name(m11, a));

    c.s1.resize(static_cast<size_t>(c.c1));
    c.b1.resize(static_cast<size_t>(c.c1));
    for (int f = 0; f < c.c1; ++f) {
        c.s1[static_cast<size_t>(f)] = phi->apply_face(m10, 1, 1, f);
        c.b1[static_cast<size_t>(f)] = phi->apply_face(m10, 1, 0, f);
    }
    c.e1.resize(static_cast<size_t>(c.c0));
    for (int x = 0; x < c.c0; ++x) c.e1[static_cast<size_t>(x)] = phi->apply_degeneracy(m00, 1, 0, x);
    c.s2.resize(static_cast<size_t>(c.c2));
    c.b2.resize(static_cast<size_t>(c.c2));
    for (int a = 0; a < c.c2; ++a) {
        c.s2[static_cast<size_t>(a)] = phi->apply_face(m11, 2, 1, a);
        c.b2[static_cast<size_t>(a)] = phi->apply_face(m11, 2, 0, a);
    }
    c.e2.resize(static_cast<size_t>(c.c1));
    for (int f = 0; f < c.c1; ++f) c.e2[static_cast<size_t>(f)] = phi->apply_degeneracy(m10, 2, 0, f);

    // (a) vertical composition from the bijective second-axis Segal level
    {
        PresheafPtr vert = slice(phi, {1});
        FinCategory vcat = extract_category(vert);
        c.vcomp = vcat.comp;
    }

    // (b) sections L_2 with comparison pairs
    auto edge01 = [&](int sigma) { return phi->evaluate(axis_map(m20, 1, edge_map(2, 0, 1)), sigma); };
    auto edge12 = [&](int sigma) { return phi->evaluate(axis_map(m20, 1, edge_map(2, 1, 2)), sigma); };
    auto edge02 = [&](int sigma) { return phi->evaluate(axis_map(m20, 1, edge_map(2, 0, 2)), sigma); };
    Hom2Tables t2(c);

    out.l2.assign(static_cast<size_t>(c.c1), std::vector<int>(static_cast<size_t>(c.c1), -1));
    out.a2.assign(static_cast<size_t>(c.c1),
                  std::vector<std::array<int, 2>>(static_cast<size_t>(c.c1), {-1, -1}));
    int cells20 = phi->cell_count(m20);
    for (int f = 0; f < c.c1; ++f)
        for (int g = 0; g < c.c1; ++g) {
            if (!comp1able(c, f, g)) continue;
            int chosen = -1;
            std::array<int, 2> a2v{-1, -1};
            for (int raw = 0; raw < cells20 && chosen < 0; ++raw) {
                int sigma = order == SectionOrder::MinIndex ? raw : cells20 - 1 - raw;
                if (edge01(sigma) == f && edge12(sigma) == g) {
                    chosen = sigma;
                    a2v = {c.e2[static_cast<size_t>(f)], c.e2[static_cast<size_t>(g)]};
                }
            }
            if (chosen < 0) {
                // no exact filler: fall back to a filler up to invertible 2-cells
                for (int raw = 0; raw < cells20 && chosen < 0; ++raw) {
                    int sigma = order == SectionOrder::MinIndex ? raw : cells20 - 1 - raw;
                    const auto& us = t2.inv2[static_cast<size_t>(edge01(sigma))][static_cast<size_t>(f)];
                    const auto& vs = t2.inv2[static_cast<size_t>(edge12(sigma))][static_cast<size_t>(g)];
                    if (!us.empty() && !vs.empty()) {
                        chosen = sigma;
                        a2v = {us.front(), vs.front()};
                    }
                }
            }
            if (chosen < 0)
                throw std::runtime_error("extract_weak2: no invertible witness for spine (" +
                                         c.arr_name(f) + "," + c.arr_name(g) + ")");
            out.l2[static_cast<size_t>(f)][static_cast<size_t>(g)] = chosen;
            out.a2[static_cast<size_t>(f)][static_cast<size_t>(g)] = a2v;
        }

    c.comp1.assign(static_cast<size_t>(c.c1), std::vector<int>(static_cast<size_t>(c.c1), -1));
    for (int f = 0; f < c.c1; ++f)
        for (int g = 0; g < c.c1; ++g)
            if (comp1able(c, f, g))
                c.comp1[static_cast<size_t>(f)][static_cast<size_t>(g)] =
                    edge02(out.l2[static_cast<size_t>(f)][static_cast<size_t>(g)]);

    LiftIndex lifts(*phi);
    auto vinv_cell = [&](int a) {
        int r = t2.vinv[static_cast<size_t>(a)];
        if (r < 0) throw std::runtime_error("extract_weak2: required 2-cell not invertible");
        return r;
    };

    // (c) horizontal composition
    auto edge02_21 = [&](int x) { return phi->evaluate(axis_map(m21, 1, edge_map(2, 0, 2)), x); };
    c.hcomp.assign(static_cast<size_t>(c.c2), std::vector<int>(static_cast<size_t>(c.c2), -1));
    for (int a = 0; a < c.c2; ++a)
        for (int b = 0; b < c.c2; ++b) {
            if (!hable(c, a, b)) continue;
            int f = c.s2[static_cast<size_t>(a)], g = c.s2[static_cast<size_t>(b)];
            int fp = c.b2[static_cast<size_t>(a)], gp = c.b2[static_cast<size_t>(b)];
            int sig = out.l2[static_cast<size_t>(f)][static_cast<size_t>(g)];
            int sigp = out.l2[static_cast<size_t>(fp)][static_cast<size_t>(gp)];
            auto aa = out.a2[static_cast<size_t>(f)][static_cast<size_t>(g)];
            auto ap = out.a2[static_cast<size_t>(fp)][static_cast<size_t>(gp)];
            int lam1 = c.vcompose(c.vcompose(aa[0], a), vinv_cell(ap[0]));
            int lam2 = c.vcompose(c.vcompose(aa[1], b), vinv_cell(ap[1]));
            int eps = lifts.lift(sig, sigp, lam1, lam2);
            c.hcomp[static_cast<size_t>(a)][static_cast<size_t>(b)] = edge02_21(eps);
        }

    // (d) unitors
    c.runit.resize(static_cast<size_t>(c.c1));
    c.lunit.resize(static_cast<size_t>(c.c1));
    for (int f = 0; f < c.c1; ++f) {
        int x = c.s1[static_cast<size_t>(f)], y = c.b1[static_cast<size_t>(f)];
        // sigma_u = Phi(delta_001 x id)(f): spine (I_x, f), 02-edge f
        int sigma_u = phi->evaluate(axis_map(m10, 1, simplex_map(1, {0, 0, 1})), f);
        int tau_u = out.l2[static_cast<size_t>(c.e1[static_cast<size_t>(x)])][static_cast<size_t>(f)];
        auto au = out.a2[static_cast<size_t>(c.e1[static_cast<size_t>(x)])][static_cast<size_t>(f)];
        int eps_u = lifts.lift(tau_u, sigma_u, au[0], au[1]);
        c.runit[static_cast<size_t>(f)] = edge02_21(eps_u);
        int sigma_v = phi->evaluate(axis_map(m10, 1, simplex_map(1, {0, 1, 1})), f);
        int tau_v = out.l2[static_cast<size_t>(f)][static_cast<size_t>(c.e1[static_cast<size_t>(y)])];
        auto av = out.a2[static_cast<size_t>(f)][static_cast<size_t>(c.e1[static_cast<size_t>(y)])];
        int eps_v = lifts.lift(tau_v, sigma_v, av[0], av[1]);
        c.lunit[static_cast<size_t>(f)] = edge02_21(eps_v);
    }

    // (e) associator through a section of the 3-level
    int cells30 = phi->cell_count(m30);
    auto edge30 = [&](int T, int i, int j) {
        return phi->evaluate(axis_map(m30, 1, edge_map(3, i, j)), T);
    };
    auto face30 = [&](int T, int i, int j, int k) {
        return phi->evaluate(axis_map(m30, 1, simplex_map(3, {i, j, k})), T);
    };
    c.assoc.assign(static_cast<size_t>(c.c1),
                   std::vector<std::vector<int>>(static_cast<size_t>(c.c1),
                                                 std::vector<int>(static_cast<size_t>(c.c1), -1)));
    for (int f = 0; f < c.c1; ++f)
        for (int g = 0; g < c.c1; ++g) {
            if (!comp1able(c, f, g)) continue;
            for (int h = 0; h < c.c1; ++h) {
                if (!comp1able(c, g, h)) continue;
                int T = -1;
                std::array<int, 3> a3{-1, -1, -1};
                for (int raw = 0; raw < cells30 && T < 0; ++raw) {
                    int cand = order == SectionOrder::MinIndex ? raw : cells30 - 1 - raw;
                    if (edge30(cand, 0, 1) == f && edge30(cand, 1, 2) == g && edge30(cand, 2, 3) == h) {
                        T = cand;
                        a3 = {c.e2[static_cast<size_t>(f)], c.e2[static_cast<size_t>(g)],
                              c.e2[static_cast<size_t>(h)]};
                    }
                }
                if (T < 0) {
                    for (int raw = 0; raw < cells30 && T < 0; ++raw) {
                        int cand = order == SectionOrder::MinIndex ? raw : cells30 - 1 - raw;
                        const auto& u1 = t2.inv2[static_cast<size_t>(edge30(cand, 0, 1))][static_cast<size_t>(f)];
                        const auto& u2 = t2.inv2[static_cast<size_t>(edge30(cand, 1, 2))][static_cast<size_t>(g)];
                        const auto& u3 = t2.inv2[static_cast<size_t>(edge30(cand, 2, 3))][static_cast<size_t>(h)];
                        if (!u1.empty() && !u2.empty() && !u3.empty()) {
                            T = cand;
                            a3 = {u1.front(), u2.front(), u3.front()};
                        }
                    }
                }
                if (T < 0)
                    throw std::runtime_error("extract_weak2: no 3-section for (" + c.arr_name(f) + "," +
                                             c.arr_name(g) + "," + c.arr_name(h) + ")");
                int gf = c.compose1(f, g), hg = c.compose1(g, h);
                int sigma1 = out.l2[static_cast<size_t>(f)][static_cast<size_t>(g)];
                int tau1 = out.l2[static_cast<size_t>(g)][static_cast<size_t>(h)];
                int sigma2 = out.l2[static_cast<size_t>(gf)][static_cast<size_t>(h)];
                int tau2 = out.l2[static_cast<size_t>(f)][static_cast<size_t>(hg)];
                auto a_fg = out.a2[static_cast<size_t>(f)][static_cast<size_t>(g)];
                auto a_gh = out.a2[static_cast<size_t>(g)][static_cast<size_t>(h)];
                auto a_gf_h = out.a2[static_cast<size_t>(gf)][static_cast<size_t>(h)];
                auto a_f_hg = out.a2[static_cast<size_t>(f)][static_cast<size_t>(hg)];
                int T123 = face30(T, 1, 2, 3), T012 = face30(T, 0, 1, 2);
                int T013 = face30(T, 0, 1, 3), T023 = face30(T, 0, 2, 3);
                // eta1 : T123 -> tau1 over a2(g,h)^{-1} . (a3[1], a3[2])
                int eta1 = lifts.lift(T123, tau1, c.vcompose(a3[1], vinv_cell(a_gh[0])),
                                      c.vcompose(a3[2], vinv_cell(a_gh[1])));
                int mu1 = lifts.lift(T012, sigma1, c.vcompose(a3[0], vinv_cell(a_fg[0])),
                                     c.vcompose(a3[1], vinv_cell(a_fg[1])));
                int d_eta1 = edge02_21(eta1);  // edge 13 of T -> hg
                int d_mu1 = edge02_21(mu1);    // edge 02 of T -> gf
                // eta2 : tau2 -> T013 over (a3[0], d_eta1)^{-1} . a2(f,hg)
                int eta2 = lifts.lift(tau2, T013, c.vcompose(a_f_hg[0], vinv_cell(a3[0])),
                                      c.vcompose(a_f_hg[1], vinv_cell(d_eta1)));
                // mu2 : T023 -> sigma2 over a2(gf,h)^{-1} . (d_mu1, a3[2])
                int mu2 = lifts.lift(T023, sigma2, c.vcompose(d_mu1, vinv_cell(a_gf_h[0])),
                                     c.vcompose(a3[2], vinv_cell(a_gf_h[1])));
                c.assoc[static_cast<size_t>(f)][static_cast<size_t>(g)][static_cast<size_t>(h)] =
                    c.vcompose(edge02_21(eta2), edge02_21(mu2));
            }
        }
    return out;
}

// ---------------------------------------------------------------------------
// Strictification

namespace {

// Grid presheaf on the cells of a weak 2-category: S(m,n) = n-row, m-column
// grids of 2-cells glued over objects horizontally and arrows vertically;
// S(m,0) = 1-cell chains, S(0,n) = objects.
BuiltPresheaf grid_presheaf_built(const Weak2Category& c, std::vector<int> bounds, long long capacity) {
    ContentBuilder b;
    b.arity = 2;
    b.bounds = bounds;
    b.capacity = capacity;
    b.enumerate = [c](const MultiIndex& mi) {
        int m = mi[0], n = mi[1];
        std::vector<std::vector<int>> out;
        if (m == 0) {
            for (int x = 0; x < c.c0; ++x) out.push_back({x});
            return out;
        }
        if (n == 0) {
            std::vector<std::vector<int>> chains;
            for (int f = 0; f < c.c1; ++f) chains.push_back({f});
            for (int step = 1; step < m; ++step) {
                std::vector<std::vector<int>> next;
                for (const auto& ch : chains)
                    for (int g = 0; g < c.c1; ++g)
                        if (c.b1[static_cast<size_t>(ch.back())] == c.s1[static_cast<size_t>(g)]) {
                            auto ext = ch;
                            ext.push_back(g);
                            next.push_back(std::move(ext));
                        }
                chains = std::move(next);
            }
            return chains;
        }
        // grids, row-major: entry (row a, col i) at position a*m + i
        std::vector<int> grid(static_cast<size_t>(m) * static_cast<size_t>(n));
        std::function<void(int)> rec = [&](int pos) {
            if (pos == m * n) {
                out.push_back(grid);
                return;
            }
            int a = pos / m, i = pos % m;
            for (int cand = 0; cand < c.c2; ++cand) {
                if (i > 0) {
                    int left = grid[static_cast<size_t>(pos) - 1];
                    if (c.b1[static_cast<size_t>(c.s2[static_cast<size_t>(left)])] !=
                        c.s1[static_cast<size_t>(c.s2[static_cast<size_t>(cand)])])
                        continue;
                }
                if (a > 0) {
                    int up = grid[static_cast<size_t>(pos - m)];
                    if (c.b2[static_cast<size_t>(up)] != c.s2[static_cast<size_t>(cand)]) continue;
                }
                grid[static_cast<size_t>(pos)] = cand;
                rec(pos + 1);
            }
        };
        rec(0);
        return out;
    };
    b.apply = [c](const MultiIndex& mi, int axis, bool is_face, int idx, const std::vector<int>& cell) {
        int m = mi[0], n = mi[1];
        if (axis == 1) {
            if (is_face) {
                if (m == 1) {
                    // boundary object: d^1_0 target, d^1_1 source
                    if (n == 0)
                        return std::vector<int>{idx == 0 ? c.b1[static_cast<size_t>(cell[0])]
                                                         : c.s1[static_cast<size_t>(cell[0])]};
                    int e = cell[0];
                    int f = c.s2[static_cast<size_t>(e)];
                    return std::vector<int>{idx == 0 ? c.b1[static_cast<size_t>(f)]
                                                     : c.s1[static_cast<size_t>(f)]};
                }
                std::vector<int> out;
                int rows = (n == 0) ? 1 : n;
                int newm = m - 1;
                out.resize(static_cast<size_t>(rows) * static_cast<size_t>(newm));
                for (int a = 0; a < rows; ++a)
                    for (int i = 0; i < newm; ++i) {
                        int v;
                        if (idx == 0)
                            v = cell[static_cast<size_t>(a * m + i + 1)];
                        else if (idx == m)
                            v = cell[static_cast<size_t>(a * m + i)];
                        else if (i < idx - 1)
                            v = cell[static_cast<size_t>(a * m + i)];
                        else if (i == idx - 1) {
                            int l = cell[static_cast<size_t>(a * m + i)];
                            int r = cell[static_cast<size_t>(a * m + i + 1)];
                            v = (n == 0) ? c.compose1(l, r) : c.hcompose(l, r);
                        } else
                            v = cell[static_cast<size_t>(a * m + i + 1)];
                        out[static_cast<size_t>(a * newm + i)] = v;
                    }
                return out;
            }
            // degeneracy on axis 1: insert identity column at position idx
            if (m == 0) {
                int x = cell[0];
                int e = c.e1[static_cast<size_t>(x)];
                if (n == 0) return std::vector<int>{e};
                std::vector<int> out(static_cast<size_t>(n), c.e2[static_cast<size_t>(e)]);
                return out;
            }
            int rows = (n == 0) ? 1 : n;
            std::vector<int> out(static_cast<size_t>(rows) * static_cast<size_t>(m + 1));
            for (int a = 0; a < rows; ++a) {
                for (int i = 0; i <= m; ++i) {
                    int v;
                    if (i == idx) {
                        int vx;
                        if (idx == 0) {
                            int first = cell[static_cast<size_t>(a * m)];
                            vx = (n == 0) ? c.s1[static_cast<size_t>(first)]
                                          : c.s1[static_cast<size_t>(c.s2[static_cast<size_t>(first)])];
                        } else {
                            int prev = cell[static_cast<size_t>(a * m + idx - 1)];
                            vx = (n == 0) ? c.b1[static_cast<size_t>(prev)]
                                          : c.b1[static_cast<size_t>(c.s2[static_cast<size_t>(prev)])];
                        }
                        v = (n == 0) ? c.e1[static_cast<size_t>(vx)]
                                     : c.e2[static_cast<size_t>(c.e1[static_cast<size_t>(vx)])];
                    } else {
                        int j = (i < idx) ? i : i - 1;
                        v = cell[static_cast<size_t>(a * m + j)];
                    }
                    out[static_cast<size_t>(a * (m + 1) + i)] = v;
                }
            }
            return out;
        }
        // axis 2
        if (m == 0) return cell;  // constant in the vertical direction
        if (is_face) {
            if (n == 1) {
                // boundary row of arrows: d^2_0 target (b2), d^2_1 source (s2)
                std::vector<int> out(static_cast<size_t>(m));
                for (int i = 0; i < m; ++i)
                    out[static_cast<size_t>(i)] = idx == 0 ? c.b2[static_cast<size_t>(cell[static_cast<size_t>(i)])]
                                                           : c.s2[static_cast<size_t>(cell[static_cast<size_t>(i)])];
                return out;
            }
            std::vector<int> out(static_cast<size_t>((n - 1)) * static_cast<size_t>(m));
            for (int a = 0; a < n - 1; ++a)
                for (int i = 0; i < m; ++i) {
                    int v;
                    if (idx == 0)
                        v = cell[static_cast<size_t>((a + 1) * m + i)];
                    else if (idx == n)
                        v = cell[static_cast<size_t>(a * m + i)];
                    else if (a < idx - 1)
                        v = cell[static_cast<size_t>(a * m + i)];
                    else if (a == idx - 1)
                        v = c.vcompose(cell[static_cast<size_t>(a * m + i)],
                                       cell[static_cast<size_t>((a + 1) * m + i)]);
                    else
                        v = cell[static_cast<size_t>((a + 1) * m + i)];
                    out[static_cast<size_t>(a * m + i)] = v;
                }
            return out;
        }
        // degeneracy on axis 2: insert a row of vertical identities
        if (n == 0) {
            std::vector<int> out(static_cast<size_t>(m));
            for (int i = 0; i < m; ++i) out[static_cast<size_t>(i)] = c.e2[static_cast<size_t>(cell[static_cast<size_t>(i)])];
            return out;
        }
        std::vector<int> out(static_cast<size_t>((n + 1)) * static_cast<size_t>(m));
        for (int a = 0; a <= n; ++a)
            for (int i = 0; i < m; ++i) {
                int v;
                if (a == idx) {
                    int w = (idx == 0) ? c.s2[static_cast<size_t>(cell[static_cast<size_t>(i)])]
                                       : c.b2[static_cast<size_t>(cell[static_cast<size_t>((idx - 1) * m + i)])];
                    v = c.e2[static_cast<size_t>(w)];
                } else {
                    int b2row = (a < idx) ? a : a - 1;
                    v = cell[static_cast<size_t>(b2row * m + i)];
                }
                out[static_cast<size_t>(a * m + i)] = v;
            }
        return out;
    };
    b.label = [c](const MultiIndex& mi, const std::vector<int>& cell) {
        std::ostringstream os;
        os << "[";
        for (size_t p = 0; p < cell.size(); ++p) {
            if (p) os << " ";
            if (mi[0] == 0)
                os << c.obj_name(cell[p]);
            else if (mi[1] == 0)
                os << c.arr_name(cell[p]);
            else
                os << c.cell_name(cell[p]);
        }
        os << "]";
        return os.str();
    };
    return build_presheaf_with_content(b);
}

// Reads the double spine of a cell: the grid of its (1,1)-restrictions
// (1-cells at n = 0, the object at m = 0).
std::vector<int> spine_reads(const FinPresheaf& p, const MultiIndex& mi, int cell) {
    int m = mi[0], n = mi[1];
    std::vector<int> content;
    if (m == 0) {
        content = {p.evaluate(ProductMap{{identity_map(0), MonotoneMap(0, n, {0})}}, cell)};
    } else if (n == 0) {
        for (int i = 0; i + 1 <= m; ++i)
            content.push_back(p.evaluate(ProductMap{{edge_map(m, i, i + 1), identity_map(0)}}, cell));
    } else {
        for (int a = 0; a + 1 <= n; ++a)
            for (int i = 0; i + 1 <= m; ++i)
                content.push_back(
                    p.evaluate(ProductMap{{edge_map(m, i, i + 1), edge_map(n, a, a + 1)}}, cell));
    }
    return content;
}

// The candidate morphism X -> S reading off the double spine; grid cells of
// S are exactly their own spine reads.
PresheafMorphism double_spine(const PresheafPtr& x, const BuiltPresheaf& s) {
    PresheafMorphism f;
    f.source = x;
    f.target = s.phi;
    f.components.resize(x->all_indices().size());
    for (const auto& mi : x->all_indices()) {
        auto& comp = f.components[static_cast<size_t>(x->ordinal(mi))];
        comp.resize(static_cast<size_t>(x->cell_count(mi)));
        for (int cell = 0; cell < x->cell_count(mi); ++cell) {
            int idx = s.find(mi, spine_reads(*x, mi, cell));
            if (idx < 0)
                throw std::runtime_error("strictify: double spine is not a grid cell at (" +
                                         to_string(mi) + ")");
            comp[static_cast<size_t>(cell)] = idx;
        }
    }
    return f;
}

// The canonical inclusion S -> Psi sending a grid to the coherence family
// with composite edges, identity witnesses and lambda given by iterated
// horizontal composition.  Requires the target to be a double nerve of `c`
// built with content.
PresheafMorphism canonical_grid_inclusion(const BuiltPresheaf& s, const BuiltPresheaf& psi,
                                          const Weak2Category& c) {
    PresheafMorphism f;
    f.source = s.phi;
    f.target = psi.phi;
    f.components.resize(s.phi->all_indices().size());
    for (const auto& mi : s.phi->all_indices()) {
        int m = mi[0], n = mi[1];
        FamilyLayout L(m, n);
        auto& comp = f.components[static_cast<size_t>(s.phi->ordinal(mi))];
        const auto& cells = s.content[static_cast<size_t>(s.phi->ordinal(mi))];
        comp.resize(cells.size());
        for (size_t ci = 0; ci < cells.size(); ++ci) {
            const auto& grid = cells[ci];
            std::vector<int> fam;
            if (m == 0) {
                fam = {grid[0]};
            } else {
                fam.assign(static_cast<size_t>(L.size), -1);
                // objects from the bottom arrow chain
                auto arrow_at = [&](int a, int i) {
                    if (n == 0) return grid[static_cast<size_t>(i)];
                    if (a < n) return c.s2[static_cast<size_t>(grid[static_cast<size_t>(a * m + i)])];
                    return c.b2[static_cast<size_t>(grid[static_cast<size_t>((n - 1) * m + i)])];
                };
                for (int i = 0; i <= m; ++i)
                    fam[static_cast<size_t>(i)] =
                        i == 0 ? c.s1[static_cast<size_t>(arrow_at(0, 0))]
                               : c.b1[static_cast<size_t>(arrow_at(0, i - 1))];
                for (int a = 0; a <= n; ++a)
                    for (auto [i, j] : L.pairs) {
                        int acc = arrow_at(a, i);
                        for (int t = i + 1; t < j; ++t) acc = c.compose1(acc, arrow_at(a, t));
                        L.fref(fam, a, i, j) = acc;
                    }
                // canonical comparison cells: identities on the short
                // triples, associator-built on the rest (ordered so that
                // eps_{i,j,k} can use eps_{i,j,k-1})
                for (int a = 0; a <= n; ++a)
                    for (int k = 2; k <= m; ++k)
                        for (int j = k - 1; j >= 1; --j)
                            for (int i = j - 1; i >= 0; --i) {
                                int val;
                                if (k == j + 1) {
                                    val = c.e2[static_cast<size_t>(L.f(fam, a, i, k))];
                                } else {
                                    int f_ij = L.f(fam, a, i, j);
                                    int f_jk1 = L.f(fam, a, j, k - 1);
                                    int f_k1k = L.f(fam, a, k - 1, k);
                                    int assoc_cell =
                                        c.assoc[static_cast<size_t>(f_ij)][static_cast<size_t>(f_jk1)]
                                               [static_cast<size_t>(f_k1k)];
                                    val = c.vcompose(
                                        assoc_cell,
                                        c.hcompose(L.eps(fam, a, i, j, k - 1),
                                                   c.e2[static_cast<size_t>(f_k1k)]));
                                }
                                L.epsref(fam, a, i, j, k) = val;
                            }
                for (int a = 0; a < n; ++a)
                    for (auto [i, j] : L.pairs) {
                        int acc = grid[static_cast<size_t>(a * m + i)];
                        for (int t = i + 1; t < j; ++t)
                            acc = c.hcompose(acc, grid[static_cast<size_t>(a * m + t)]);
                        L.lamref(fam, a, a + 1, i, j) = acc;
                    }
                for (int a = 0; a <= n; ++a)
                    for (int b = a + 2; b <= n; ++b)
                        for (auto [i, j] : L.pairs) {
                            int acc = L.lam(fam, a, a + 1, i, j);
                            for (int mid = a + 1; mid < b; ++mid)
                                acc = c.vcompose(acc, L.lam(fam, mid, mid + 1, i, j));
                            L.lamref(fam, a, b, i, j) = acc;
                        }
            }
            int idx = psi.find(mi, fam);
            if (idx < 0)
                throw std::runtime_error(
                    "strictify: canonical family is not a double-nerve cell at (" + to_string(mi) +
                    ") — the extracted compositions are not strictly associative here");
            comp[ci] = idx;
        }
    }
    return f;
}

} // namespace

Strictification strictify(const PresheafPtr& phi, long long capacity) {
    ExtractedWeak2 ext = extract_weak2(phi);
    std::vector<int> bounds = phi->bounds();
    Strictification out;
    BuiltPresheaf s = grid_presheaf_built(ext.cat, bounds, capacity);
    out.s = s.phi;
    ValidationReport sv = out.s->validate();
    if (!sv.ok)
        throw std::runtime_error(
            "strictify: the fiber-power presheaf is not functorial for this input (" + sv.message + ")");
    BuiltPresheaf psi = double_nerve_with_content(ext.cat, bounds, capacity);
    out.double_nerve_of_extract = psi.phi;

    auto pick = [&](const PresheafPtr& x, const BuiltPresheaf* x_built,
                    std::optional<PresheafMorphism>& slot, bool& to_s, std::string& note) {
        PresheafMorphism spine = double_spine(x, s);
        ValidationReport spine_nat = spine.validate_natural();
        if (spine_nat.ok) {
            slot = spine;
            to_s = true;
            return;
        }
        note = "double spine to S: " + spine_nat.message;
        if (x_built) {
            PresheafMorphism incl = canonical_grid_inclusion(s, *x_built, ext.cat);
            incl.target = x;
            ValidationReport nat = incl.validate_natural();
            if (nat.ok) {
                slot = incl;
                to_s = false;
                return;
            }
            note += "; canonical inclusion from S: " + nat.message;
        }
        note += "; no strictly natural comparison exists in either direction";
    };

    // beta: between the double nerve of the extracted category and S
    pick(psi.phi, &psi, out.beta, out.beta_to_s, out.beta_note);
    // alpha: between Phi and S; the inclusion route is only meaningful when
    // Phi has the same cells as the double nerve of its own extraction
    bool same_shape = true;
    for (const auto& mi : phi->all_indices())
        if (phi->cell_count(mi) != psi.phi->cell_count(mi)) same_shape = false;
    pick(phi, same_shape ? &psi : nullptr, out.alpha, out.alpha_to_s, out.alpha_note);
    return out;
}

} // namespace nerf
