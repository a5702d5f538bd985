#include "nerf/homotopy.hpp"

#include <algorithm>
#include <sstream>

#include "nerf/equivalence.hpp"

namespace nerf {

namespace {

MultiIndex ones_then(int ones, std::initializer_list<int> tail, int zeros) {
    MultiIndex m(static_cast<size_t>(ones), 1);
    for (int t : tail) m.push_back(t);
    m.insert(m.end(), static_cast<size_t>(zeros), 0);
    return m;
}

} // namespace

ComponentCategory component_category(const PresheafPtr& phi, int i) {
    int n = phi->arity();
    if (i < 1 || i > n) throw std::invalid_argument("component_category: i out of range");
    ComponentCategory out;
    out.i = i;
    MultiIndex prefix(static_cast<size_t>(i - 1), 1);
    PresheafPtr sl = slice(phi, prefix);  // arity n-i+1
    TruncationTower tower = truncation_tower(sl, n - i);
    PresheafPtr top = tower.levels.back();  // arity 1
    out.cat = extract_category(top);

    MultiIndex obj_at(static_cast<size_t>(n - i + 1), 0);
    MultiIndex arr_at = obj_at;
    arr_at[0] = 1;
    int c_im1 = sl->cell_count(obj_at);
    int c_i = sl->cell_count(arr_at);
    out.obj_class.resize(static_cast<size_t>(c_im1));
    out.obj_rep.assign(static_cast<size_t>(out.cat.objects()), -1);
    for (int x = 0; x < c_im1; ++x) {
        int cls = tower.class_at(n - i, {0}, x);
        out.obj_class[static_cast<size_t>(x)] = cls;
        if (out.obj_rep[static_cast<size_t>(cls)] < 0) out.obj_rep[static_cast<size_t>(cls)] = x;
    }
    out.arrow_class.resize(static_cast<size_t>(c_i));
    out.arrow_rep.assign(static_cast<size_t>(out.cat.arrows()), -1);
    for (int x = 0; x < c_i; ++x) {
        int cls = tower.class_at(n - i, {1}, x);
        out.arrow_class[static_cast<size_t>(x)] = cls;
        if (out.arrow_rep[static_cast<size_t>(cls)] < 0) out.arrow_rep[static_cast<size_t>(cls)] = x;
    }
    return out;
}

int compose_i(const PresheafPtr& phi, int i, int f, int g, SectionOrder order) {
    int n = phi->arity();
    if (i < 1 || i > n) throw std::invalid_argument("compose_i: i out of range");
    MultiIndex prefix(static_cast<size_t>(i - 1), 1);
    PresheafPtr sl = slice(phi, prefix);
    TruncationTower tower = truncation_tower(sl, n - i);

    MultiIndex arr_full(static_cast<size_t>(n - i + 1), 0);
    arr_full[0] = 1;
    MultiIndex two_full = arr_full;
    two_full[0] = 2;
    int axis1 = 1;
    if (sl->target_along(arr_full, axis1, f) != sl->source_along(arr_full, axis1, g))
        throw std::invalid_argument("compose_i: arrows not composable");

    int cf = tower.class_at(n - i, {1}, f);
    int cg = tower.class_at(n - i, {1}, g);
    int found = -1;
    int cells = sl->cell_count(two_full);
    for (int raw = 0; raw < cells; ++raw) {
        int lam = (order == SectionOrder::MinIndex) ? raw : cells - 1 - raw;
        int e01 = sl->evaluate(axis_map(two_full, 1, edge_map(2, 0, 1)), lam);
        int e12 = sl->evaluate(axis_map(two_full, 1, edge_map(2, 1, 2)), lam);
        if (tower.class_at(n - i, {1}, e01) == cf && tower.class_at(n - i, {1}, e12) == cg) {
            found = lam;
            break;
        }
    }
    if (found < 0) throw std::runtime_error("compose_i: no filler found (not an n-nerf?)");
    return sl->evaluate(axis_map(two_full, 1, edge_map(2, 0, 2)), found);
}

ValidationReport HomotopyGroup::check_group() const {
    int k = order();
    if (table.size() != static_cast<size_t>(k)) return {false, "table size mismatch", {}};
    for (const auto& row : table) {
        if (row.size() != static_cast<size_t>(k)) return {false, "table row mismatch", {}};
        for (int v : row)
            if (v < 0 || v >= k) return {false, "table not closed", {}};
    }
    if (identity < 0 || identity >= k) return {false, "identity missing", {}};
    for (int a = 0; a < k; ++a)
        if (table[static_cast<size_t>(a)][static_cast<size_t>(identity)] != a ||
            table[static_cast<size_t>(identity)][static_cast<size_t>(a)] != a)
            return {false, "identity law fails", {}};
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            for (int c = 0; c < k; ++c)
                if (table[static_cast<size_t>(table[static_cast<size_t>(a)][static_cast<size_t>(b)])][static_cast<size_t>(c)] !=
                    table[static_cast<size_t>(a)][static_cast<size_t>(table[static_cast<size_t>(b)][static_cast<size_t>(c)])])
                    return {false, "associativity fails", {}};
    for (int a = 0; a < k; ++a) {
        bool inv = false;
        for (int b = 0; b < k; ++b)
            if (table[static_cast<size_t>(a)][static_cast<size_t>(b)] == identity &&
                table[static_cast<size_t>(b)][static_cast<size_t>(a)] == identity)
                inv = true;
        if (!inv) return {false, "inverse missing", {}};
    }
    return {};
}

bool HomotopyGroup::abelian() const {
    int k = order();
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b)
            if (table[static_cast<size_t>(a)][static_cast<size_t>(b)] !=
                table[static_cast<size_t>(b)][static_cast<size_t>(a)])
                return false;
    return true;
}

int HomotopyGroup::position_of(int arrow) const {
    auto it = std::find(elements.begin(), elements.end(), arrow);
    if (it == elements.end()) throw std::invalid_argument("not an element of the group");
    return static_cast<int>(it - elements.begin());
}

HomotopyGroup homotopy_group(const PresheafPtr& phi, int i, int f) {
    ComponentCategory cc = component_category(phi, i);
    if (f < 0 || f >= static_cast<int>(cc.obj_class.size()))
        throw std::invalid_argument("homotopy_group: basepoint not found");
    int obj = cc.obj_class[static_cast<size_t>(f)];
    HomotopyGroup g;
    g.i = i;
    g.base = f;
    g.base_label = cc.cat.object_name(obj);
    for (int a = 0; a < cc.cat.arrows(); ++a)
        if (cc.cat.src[static_cast<size_t>(a)] == obj && cc.cat.tgt[static_cast<size_t>(a)] == obj) {
            g.elements.push_back(a);
            g.element_labels.push_back(cc.cat.arrow_name(a));
        }
    int k = g.order();
    g.table.assign(static_cast<size_t>(k), std::vector<int>(static_cast<size_t>(k), -1));
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int comp = cc.cat.compose(g.elements[static_cast<size_t>(a)], g.elements[static_cast<size_t>(b)]);
            auto it = std::find(g.elements.begin(), g.elements.end(), comp);
            if (it == g.elements.end()) throw std::runtime_error("homotopy_group: not closed");
            g.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = static_cast<int>(it - g.elements.begin());
        }
    g.identity = g.position_of(cc.cat.id[static_cast<size_t>(obj)]);
    ValidationReport r = g.check_group();
    if (!r.ok) throw std::runtime_error("homotopy_group: group axioms fail: " + r.message +
                                        " (is the input an n-groupoid?)");
    return g;
}

int lift_basepoint(const PresheafPtr& phi, int j, int i, int f) {
    int n = phi->arity();
    if (j < 0 || j > i || i > n) throw std::invalid_argument("lift_basepoint: bad levels");
    MultiIndex cur = ones_then(j, {}, n - j);
    int c = f;
    for (int lvl = j; lvl < i; ++lvl) {
        c = phi->apply_degeneracy(cur, lvl + 1, 0, c);
        cur[static_cast<size_t>(lvl)] = 1;
    }
    return c;
}

bool check_abelian(const HomotopyGroup& g) { return g.abelian(); }

bool GroupHom::is_homomorphism() const {
    int k = dom.order();
    if (images.size() != static_cast<size_t>(k)) return false;
    for (int a = 0; a < k; ++a)
        for (int b = 0; b < k; ++b) {
            int lhs = images[static_cast<size_t>(dom.table[static_cast<size_t>(a)][static_cast<size_t>(b)])];
            int rhs = cod.table[static_cast<size_t>(images[static_cast<size_t>(a)])]
                               [static_cast<size_t>(images[static_cast<size_t>(b)])];
            if (lhs != rhs) return false;
        }
    return true;
}

bool GroupHom::is_isomorphism() const {
    if (!is_homomorphism()) return false;
    if (dom.order() != cod.order()) return false;
    std::vector<int> hit(static_cast<size_t>(cod.order()), 0);
    for (int v : images)
        if (hit[static_cast<size_t>(v)]++) return false;
    return true;
}

GroupHom induced_pi(const PresheafMorphism& f, int i, int base) {
    int n = f.source->arity();
    ComponentCategory csrc = component_category(f.source, i);
    ComponentCategory cdst = component_category(f.target, i);
    MultiIndex obj_idx = ones_then(i - 1, {}, n - i + 1);
    MultiIndex arr_idx = ones_then(i, {}, n - i);
    int base_img = f.apply(obj_idx, base);

    GroupHom hom;
    hom.dom = homotopy_group(f.source, i, base);
    hom.cod = homotopy_group(f.target, i, base_img);
    for (size_t p = 0; p < hom.dom.elements.size(); ++p) {
        int arrow = hom.dom.elements[p];
        int rep = csrc.arrow_rep[static_cast<size_t>(arrow)];
        int img_arrow = cdst.arrow_class[static_cast<size_t>(f.apply(arr_idx, rep))];
        hom.images.push_back(hom.cod.position_of(img_arrow));
    }
    if (!hom.is_homomorphism())
        throw std::runtime_error("induced_pi: image is not a homomorphism");
    return hom;
}

PiEquivalenceReport equivalence_via_pi(const PresheafMorphism& f) {
    int n = f.source->arity();
    PiEquivalenceReport rep;
    std::ostringstream detail;

    TruncationTower src_tower = truncation_tower(f.source, n);
    TruncationTower dst_tower = truncation_tower(f.target, n);
    // pi_0 bijectivity via T^n F on classes
    {
        MultiIndex zeros(static_cast<size_t>(n), 0);
        int src_classes = src_tower.levels.back()->cell_count({});
        int dst_classes = dst_tower.levels.back()->cell_count({});
        std::vector<int> tnf(static_cast<size_t>(src_classes), -1);
        for (int c = 0; c < f.source->cell_count(zeros); ++c)
            tnf[static_cast<size_t>(src_tower.class_at(n, {}, c))] =
                dst_tower.class_at(n, {}, f.apply(zeros, c));
        std::vector<int> hit(static_cast<size_t>(dst_classes), 0);
        bool inj = true;
        for (int v : tnf)
            if (v >= 0 && hit[static_cast<size_t>(v)]++) inj = false;
        bool surj = std::all_of(hit.begin(), hit.end(), [](int h) { return h > 0; });
        if (!(inj && surj)) {
            rep.via_pi = false;
            detail << "pi_0 not bijective (" << src_classes << " -> " << dst_classes << "); ";
        }
    }
    for (int i = 1; i <= n && rep.via_pi; ++i) {
        MultiIndex obj_idx = ones_then(i - 1, {}, n - i + 1);
        for (int base = 0; base < f.source->cell_count(obj_idx); ++base) {
            GroupHom h = induced_pi(f, i, base);
            if (!h.is_isomorphism()) {
                rep.via_pi = false;
                detail << "pi_" << i << " at " << f.source->cell_name(obj_idx, base)
                       << " not an isomorphism (" << h.dom.order() << " -> " << h.cod.order()
                       << "); ";
                break;
            }
        }
    }
    EquivalenceReport outer = is_outer_k_equivalence(f, n);
    rep.via_outer = outer.verdict;
    rep.agree = (rep.via_pi == rep.via_outer);
    rep.detail = detail.str();
    return rep;
}

bool WhiskerIso::is_isomorphism() const {
    GroupHom h{dom, cod, images};
    return h.is_isomorphism();
}

WhiskerIso whisker_iso(const PresheafPtr& phi, int tau, SectionOrder order) {
    if (phi->arity() != 2) throw std::invalid_argument("whisker_iso: arity-2 input required");
    phi->ensure_validated();
    MultiIndex m20{2, 0}, m10{1, 0}, m21{2, 1}, m11{1, 1};
    if (tau < 0 || tau >= phi->cell_count(m20))
        throw std::invalid_argument("whisker_iso: tau is not a 2-simplex");
    int f = phi->evaluate(axis_map(m20, 1, edge_map(2, 0, 1)), tau);
    int g = phi->evaluate(axis_map(m20, 1, edge_map(2, 1, 2)), tau);
    int h = phi->evaluate(axis_map(m20, 1, edge_map(2, 0, 2)), tau);

    // section sigma = L_2(f,g): a 2-simplex with exact spine (f,g)
    int sigma = -1;
    int cells20 = phi->cell_count(m20);
    for (int raw = 0; raw < cells20; ++raw) {
        int cand = (order == SectionOrder::MinIndex) ? raw : cells20 - 1 - raw;
        if (phi->evaluate(axis_map(m20, 1, edge_map(2, 0, 1)), cand) == f &&
            phi->evaluate(axis_map(m20, 1, edge_map(2, 1, 2)), cand) == g) {
            sigma = cand;
            break;
        }
    }
    if (sigma < 0) throw std::runtime_error("whisker_iso: no section for the spine");


    // vertical category of 2-cells: the slice at first index 1
    PresheafPtr vert = slice(phi, {1});
    FinCategory vcat = extract_category(vert);

    int idf = phi->apply_degeneracy(m10, 2, 0, f);
    int idg = phi->apply_degeneracy(m10, 2, 0, g);

    // unique X in Phi(2,1) with s = a, b = b2, first-axis spine (p, q)
    auto lift21 = [&](int a, int b2, int p, int q) {
        int found = -1;
        for (int x = 0; x < phi->cell_count(m21); ++x) {
            if (phi->source_along(m21, 2, x) != a || phi->target_along(m21, 2, x) != b2) continue;
            if (phi->evaluate(axis_map(m21, 1, edge_map(2, 0, 1)), x) != p) continue;
            if (phi->evaluate(axis_map(m21, 1, edge_map(2, 1, 2)), x) != q) continue;
            if (found >= 0) throw std::runtime_error("whisker_iso: lift not unique (not a 2-nerf?)");
            found = x;
        }
        if (found < 0) throw std::runtime_error("whisker_iso: lift missing (not a 2-nerf?)");
        return found;
    };

    // m : c -> h, the comparison cell delta^1_02 of mu : sigma -> tau
    int mu = lift21(sigma, tau, idf, idg);
    int m_cell = phi->evaluate(axis_map(m21, 1, edge_map(2, 0, 2)), mu);
    auto m_inv = find_inverse(vcat, m_cell);
    if (!m_inv) throw std::runtime_error("whisker_iso: comparison cell not invertible");

    WhiskerIso out;
    out.dom = homotopy_group(phi, 2, f);
    out.cod = homotopy_group(phi, 2, h);
    ComponentCategory c2 = component_category(phi, 2);
    for (int pos = 0; pos < out.dom.order(); ++pos) {
        int alpha = c2.arrow_rep[static_cast<size_t>(out.dom.elements[static_cast<size_t>(pos)])];
        // I_g * alpha through the section: unique eps : sigma -> sigma over (alpha, I_g)
        int eps = lift21(sigma, sigma, alpha, idg);
        int whisked = phi->evaluate(axis_map(m21, 1, edge_map(2, 0, 2)), eps);  // Aut(c)
        int conj = vcat.compose(vcat.compose(*m_inv, whisked), m_cell);         // m . (I_g*alpha) . m^-1
        out.images.push_back(out.cod.position_of(c2.arrow_class[static_cast<size_t>(conj)]));
    }
    return out;
}

PresheafPtr level_two_nerf(const PresheafPtr& phi, int i) {
    int n = phi->arity();
    if (i < 2 || i > n) throw std::invalid_argument("level_two_nerf: need 2 <= i <= n");
    MultiIndex prefix(static_cast<size_t>(i - 2), 1);
    PresheafPtr sl = slice(phi, prefix);  // arity n-i+2
    TruncationTower tower = truncation_tower(sl, n - i);
    return tower.levels.back();  // arity 2
}

} // namespace nerf
