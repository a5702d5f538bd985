#include "nerf/nerf_validator.hpp"

#include <sstream>

#include "nerf/cat.hpp"
#include "nerf/homotopy.hpp"
#include "nerf/truncation.hpp"

namespace nerf {

std::string NerfReport::summary() const {
    if (ok) return "n-nerf: true";
    return "n-nerf: false [" + failed_axiom + " at (" + to_string(at) + ")] " + detail;
}

namespace {

// Constant-functor check for the arity-s presheaf `sl`: every level is
// identified with the all-zero level by the canonical collapse maps, and
// every elementary action becomes the identity under those relabelings.
bool constant_functor(const PresheafPtr& sl, std::string* why) {
    int s = sl->arity();
    MultiIndex zero(static_cast<size_t>(s), 0);
    int base = sl->cell_count(zero);
    std::vector<std::vector<int>> relabel(sl->all_indices().size());
    for (const auto& p : sl->all_indices()) {
        ProductMap collapse = identity_product(p);
        for (int k = 1; k <= s; ++k)
            collapse.components[static_cast<size_t>(k) - 1] =
                MonotoneMap(p[static_cast<size_t>(k) - 1], 0,
                            std::vector<int>(static_cast<size_t>(p[static_cast<size_t>(k) - 1]) + 1, 0));
        // collapse : P -> 0_s, contravariant action cells(0) -> cells(P)
        if (sl->cell_count(p) != base) {
            if (why) *why = "cell count at (" + to_string(p) + ") differs from the base level";
            return false;
        }
        auto& r = relabel[static_cast<size_t>(sl->ordinal(p))];
        r.resize(static_cast<size_t>(base));
        std::vector<int> hit(static_cast<size_t>(base), 0);
        for (int c = 0; c < base; ++c) {
            r[static_cast<size_t>(c)] = sl->evaluate(collapse, c);
            if (hit[static_cast<size_t>(r[static_cast<size_t>(c)])]++) {
                if (why) *why = "collapse relabeling not bijective at (" + to_string(p) + ")";
                return false;
            }
        }
    }
    for (const auto& p : sl->all_indices()) {
        const auto& rp = relabel[static_cast<size_t>(sl->ordinal(p))];
        for (int k = 1; k <= s; ++k) {
            int pk = p[static_cast<size_t>(k) - 1];
            if (pk >= 1) {
                MultiIndex down = p;
                --down[static_cast<size_t>(k) - 1];
                const auto& rd = relabel[static_cast<size_t>(sl->ordinal(down))];
                for (int i = 0; i <= pk; ++i)
                    for (int c = 0; c < base; ++c)
                        if (sl->apply_face(p, k, i, rp[static_cast<size_t>(c)]) != rd[static_cast<size_t>(c)]) {
                            if (why)
                                *why = "face d/" + std::to_string(k) + "/" + std::to_string(i) +
                                       " at (" + to_string(p) + ") is not the identity on the constant level";
                            return false;
                        }
            }
            if (pk + 1 <= sl->bounds()[static_cast<size_t>(k) - 1]) {
                MultiIndex up = p;
                ++up[static_cast<size_t>(k) - 1];
                const auto& ru = relabel[static_cast<size_t>(sl->ordinal(up))];
                for (int i = 0; i <= pk; ++i)
                    for (int c = 0; c < base; ++c)
                        if (sl->apply_degeneracy(p, k, i, rp[static_cast<size_t>(c)]) != ru[static_cast<size_t>(c)]) {
                            if (why)
                                *why = "degeneracy e/" + std::to_string(k) + "/" + std::to_string(i) +
                                       " at (" + to_string(p) + ") is not the identity on the constant level";
                            return false;
                        }
            }
        }
    }
    return true;
}

} // namespace

NerfReport is_n_nerf(const PresheafPtr& phi) {
    phi->ensure_validated();
    int n = phi->arity();
    NerfReport rep;
    try {
        truncation_tower(phi, n);
    } catch (const TowerError& e) {
        rep.ok = false;
        rep.truncatable = false;
        rep.failed_axiom = "truncatable";
        rep.detail = e.what();
        rep.at = e.failing_index;
        return rep;
    }
    for (int s = 1; s <= n - 1; ++s) {
        std::vector<int> head(phi->bounds().begin(), phi->bounds().end());
        std::vector<int> prefix_bounds(head.begin(), head.begin() + (n - s - 1));
        FinPresheaf pattern(n - s - 1, prefix_bounds);
        for (const auto& m : pattern.all_indices()) {
            // C1: the slice Phi_{M,0} is a constant functor
            MultiIndex m0 = m;
            m0.push_back(0);
            PresheafPtr sl = slice(phi, m0);
            std::string why;
            if (!constant_functor(sl, &why)) {
                rep.ok = false;
                rep.failed_axiom = "constant-slices";
                rep.at = m0;
                rep.detail = why;
                return rep;
            }
            // C2: Segal morphisms are outer s-equivalences
            int axis_bound = phi->bounds()[static_cast<size_t>(n - s) - 1];
            for (int mm = 2; mm <= axis_bound; ++mm) {
                SegalMap sm = segal_map(phi, m, mm);
                EquivalenceReport er = is_outer_k_equivalence(sm.spine, s);
                if (!er.verdict) {
                    rep.ok = false;
                    rep.failed_axiom = "segal-equivalence";
                    MultiIndex at = m;
                    at.push_back(mm);
                    rep.at = at;
                    rep.detail = er.summary();
                    return rep;
                }
            }
        }
    }
    return rep;
}

StrictNerfReport is_strict_nerf(const PresheafPtr& phi) {
    phi->ensure_validated();
    int n = phi->arity();
    for (int j = 0; j <= n - 1; ++j) {
        std::vector<int> prefix_bounds(phi->bounds().begin(), phi->bounds().begin() + j);
        FinPresheaf pattern(j, prefix_bounds);
        for (const auto& m : pattern.all_indices()) {
            int axis_bound = phi->bounds()[static_cast<size_t>(j)];
            for (int mm = 2; mm <= axis_bound; ++mm) {
                SegalMap sm = segal_map(phi, m, mm);
                // bijective on cells at every trailing index
                for (const auto& rest : sm.source->all_indices()) {
                    int cells = sm.source->cell_count(rest);
                    int tuples = sm.target.power->cell_count(rest);
                    std::vector<int> hit(static_cast<size_t>(tuples), 0);
                    for (int c = 0; c < cells; ++c) {
                        int t = sm.spine.apply(rest, c);
                        if (hit[static_cast<size_t>(t)]++) {
                            std::ostringstream os;
                            os << "Segal map at prefix (" << to_string(m) << "), m=" << mm
                               << " not injective at (" << to_string(rest) << ")";
                            return {false, os.str()};
                        }
                    }
                    for (int h : hit)
                        if (!h) {
                            std::ostringstream os;
                            os << "Segal map at prefix (" << to_string(m) << "), m=" << mm
                               << " not surjective at (" << to_string(rest) << ")";
                            return {false, os.str()};
                        }
                }
            }
        }
    }
    return {};
}

GroupoidReport is_n_groupoid(const PresheafPtr& phi) {
    GroupoidReport rep;
    NerfReport nr = is_n_nerf(phi);
    if (!nr.ok) {
        rep.ok = false;
        rep.is_nerf = false;
        rep.detail = nr.summary();
        return rep;
    }
    int n = phi->arity();
    for (int i = 1; i <= n; ++i) {
        ComponentCategory cc = component_category(phi, i);
        for (int a = 0; a < cc.cat.arrows(); ++a)
            if (!find_inverse(cc.cat, a)) {
                rep.ok = false;
                rep.failing_level = i;
                rep.detail = "arrow " + cc.cat.arrow_name(a) + " of C_" + std::to_string(i) +
                             " has no inverse";
                return rep;
            }
    }
    return rep;
}

} // namespace nerf
