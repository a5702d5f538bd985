#include "nerf/equivalence.hpp"

#include <map>
#include <sstream>

#include "nerf/homotopy.hpp"

namespace nerf {

namespace {

MultiIndex ones_zeros(int ones, int zeros) {
    MultiIndex m(static_cast<size_t>(ones), 1);
    m.insert(m.end(), static_cast<size_t>(zeros), 0);
    return m;
}

} // namespace

std::string EquivalenceReport::summary() const {
    std::ostringstream os;
    os << kind << " " << k << "-equivalence: " << (verdict ? "true" : "false");
    for (const auto& w : witnesses)
        os << "\n  h=" << w.h << " u=" << w.u << " v=" << w.v << " w=" << w.w << ": " << w.reason;
    return os.str();
}

bool inner_equivalent(const TruncationTower& tower, int k, int u, int v) {
    int n = tower.base->arity();
    if (k < 0 || k > n || tower.height() < k)
        throw std::invalid_argument("inner_equivalent: tower too short");
    MultiIndex at = ones_zeros(n - k, k);
    if (u < 0 || u >= tower.base->cell_count(at) || v < 0 || v >= tower.base->cell_count(at))
        throw std::invalid_argument("inner_equivalent: cell out of range");
    if (n - k >= 1) {
        int axis = n - k;
        if (tower.base->source_along(at, axis, u) != tower.base->source_along(at, axis, v) ||
            tower.base->target_along(at, axis, u) != tower.base->target_along(at, axis, v))
            throw std::invalid_argument("inner_equivalent: arrows not parallel");
    }
    MultiIndex ones(static_cast<size_t>(n - k), 1);
    return tower.class_at(k, ones, u) == tower.class_at(k, ones, v);
}

EquivalenceReport is_outer_k_equivalence(const PresheafMorphism& f, int k) {
    ValidationReport nat = f.validate_natural();
    if (!nat.ok) throw std::invalid_argument("is_outer_k_equivalence: not natural: " + nat.message);
    int n = f.source->arity();
    if (k < 0 || k > n) throw std::invalid_argument("is_outer_k_equivalence: k out of range");

    TruncationTower src_tower = truncation_tower(f.source, k);
    TruncationTower dst_tower = truncation_tower(f.target, k);

    EquivalenceReport rep;
    rep.kind = "outer";
    rep.k = k;

    for (int h = 0; h <= std::min(k, n - 1); ++h) {
        MultiIndex lo = ones_zeros(n - h - 1, h + 1);
        MultiIndex hi = ones_zeros(n - h, h);
        MultiIndex hi_ones(static_cast<size_t>(n - h), 1);
        int axis = n - h;
        int src_lo = f.source->cell_count(lo);
        int dst_hi_cells = f.target->cell_count(hi);
        int src_hi_cells = f.source->cell_count(hi);

        // bucket target (n-h)-arrows and source candidates by endpoints
        std::map<std::pair<int, int>, std::vector<int>> w_by_ends, x_by_ends;
        for (int w = 0; w < dst_hi_cells; ++w)
            w_by_ends[{f.target->source_along(hi, axis, w), f.target->target_along(hi, axis, w)}]
                .push_back(w);
        for (int x = 0; x < src_hi_cells; ++x)
            x_by_ends[{f.source->source_along(hi, axis, x), f.source->target_along(hi, axis, x)}]
                .push_back(x);

        for (int u = 0; u < src_lo; ++u) {
            int fu = f.apply(lo, u);
            for (int v = 0; v < src_lo; ++v) {
                int fv = f.apply(lo, v);
                auto wit = w_by_ends.find({fu, fv});
                if (wit == w_by_ends.end()) continue;
                auto xit = x_by_ends.find({u, v});
                for (int w : wit->second) {
                    int w_class = dst_tower.class_at(h, hi_ones, w);
                    int found_class = -1;
                    int found_x = -1;
                    bool unique = true;
                    std::string clash;
                    if (xit != x_by_ends.end()) {
                        for (int x : xit->second) {
                            if (dst_tower.class_at(h, hi_ones, f.apply(hi, x)) != w_class) continue;
                            int xc = src_tower.class_at(h, hi_ones, x);
                            if (found_x < 0) {
                                found_x = x;
                                found_class = xc;
                            } else if (xc != found_class) {
                                unique = false;
                                clash = f.source->cell_name(hi, found_x) + " vs " +
                                        f.source->cell_name(hi, x);
                                break;
                            }
                        }
                    }
                    if (found_x < 0) {
                        rep.verdict = false;
                        rep.witnesses.push_back({h, f.source->cell_name(lo, u),
                                                 f.source->cell_name(lo, v),
                                                 f.target->cell_name(hi, w),
                                                 "no lift with these endpoints is h-equivalent to w"});
                    } else if (!unique) {
                        rep.verdict = false;
                        rep.witnesses.push_back({h, f.source->cell_name(lo, u),
                                                 f.source->cell_name(lo, v),
                                                 f.target->cell_name(hi, w),
                                                 "lift not unique up to inner equivalence: " + clash});
                    }
                }
            }
        }
    }

    if (k == n) {
        // essential surjectivity and injectivity on objects up to n-equivalence
        MultiIndex zeros(static_cast<size_t>(n), 0);
        int src_cells = f.source->cell_count(zeros);
        int dst_cells = f.target->cell_count(zeros);
        for (int w = 0; w < dst_cells; ++w) {
            int w_class = dst_tower.class_at(n, {}, w);
            int found_class = -1, found_x = -1;
            bool unique = true;
            std::string clash;
            for (int x = 0; x < src_cells; ++x) {
                if (dst_tower.class_at(n, {}, f.apply(zeros, x)) != w_class) continue;
                int xc = src_tower.class_at(n, {}, x);
                if (found_x < 0) {
                    found_x = x;
                    found_class = xc;
                } else if (xc != found_class) {
                    unique = false;
                    clash = f.source->cell_name(zeros, found_x) + " vs " + f.source->cell_name(zeros, x);
                    break;
                }
            }
            if (found_x < 0) {
                rep.verdict = false;
                rep.witnesses.push_back(
                    {n, "-", "-", f.target->cell_name(zeros, w), "object not hit up to n-equivalence"});
            } else if (!unique) {
                rep.verdict = false;
                rep.witnesses.push_back({n, "-", "-", f.target->cell_name(zeros, w),
                                         "preimage object not unique up to n-equivalence: " + clash});
            }
        }
    }
    return rep;
}

HomMapAudit hom_class_maps(const PresheafMorphism& f) {
    int n = f.source->arity();
    HomMapAudit audit;

    TruncationTower src_tower = truncation_tower(f.source, n);
    TruncationTower dst_tower = truncation_tower(f.target, n);
    audit.tn_bijective = false;
    {
        PresheafPtr tn_src = src_tower.levels.back();
        PresheafPtr tn_dst = dst_tower.levels.back();
        MultiIndex zeros(static_cast<size_t>(n), 0);
        std::vector<int> hit(static_cast<size_t>(tn_dst->cell_count({})), 0);
        bool inj = true;
        // build T^n F on classes
        std::vector<int> tnf(static_cast<size_t>(tn_src->cell_count({})), -1);
        for (int c = 0; c < f.source->cell_count(zeros); ++c) {
            int cls = src_tower.class_at(n, {}, c);
            int img = dst_tower.class_at(n, {}, f.apply(zeros, c));
            if (tnf[static_cast<size_t>(cls)] < 0)
                tnf[static_cast<size_t>(cls)] = img;
            else if (tnf[static_cast<size_t>(cls)] != img)
                throw std::runtime_error("hom_class_maps: T^n F not well defined");
        }
        for (int v : tnf) {
            if (v < 0) continue;
            if (hit[static_cast<size_t>(v)]++) inj = false;
        }
        bool surj = true;
        for (int h : hit)
            if (!h) surj = false;
        audit.tn_bijective = inj && surj;
    }

    for (int i = 1; i <= n; ++i) {
        ComponentCategory csrc = component_category(f.source, i);
        ComponentCategory cdst = component_category(f.target, i);
        MultiIndex obj_idx = MultiIndex(static_cast<size_t>(i - 1), 1);
        obj_idx.insert(obj_idx.end(), static_cast<size_t>(n - i + 1), 0);
        MultiIndex arr_idx = MultiIndex(static_cast<size_t>(i), 1);
        arr_idx.insert(arr_idx.end(), static_cast<size_t>(n - i), 0);

        int objs = csrc.cat.objects();
        // object map: F at the (i-1)-arrow level
        auto obj_map = [&](int u) { return f.apply(obj_idx, u); };
        // arrow-class map: class of F(x)
        for (int u = 0; u < objs; ++u)
            for (int v = 0; v < objs; ++v) {
                int up = obj_map(u), vp = obj_map(v);
                std::map<int, int> image_count;  // target hom class -> hits
                int dom = 0;
                for (int a = 0; a < csrc.cat.arrows(); ++a) {
                    if (csrc.cat.src[static_cast<size_t>(a)] != u ||
                        csrc.cat.tgt[static_cast<size_t>(a)] != v)
                        continue;
                    ++dom;
                    int x = csrc.arrow_rep[static_cast<size_t>(a)];
                    int img_class = cdst.arrow_class[static_cast<size_t>(f.apply(arr_idx, x))];
                    ++image_count[img_class];
                }
                int cod = 0;
                bool surj_ok = true;
                for (int b = 0; b < cdst.cat.arrows(); ++b) {
                    if (cdst.cat.src[static_cast<size_t>(b)] != up ||
                        cdst.cat.tgt[static_cast<size_t>(b)] != vp)
                        continue;
                    ++cod;
                    if (!image_count.count(b)) surj_ok = false;
                }
                bool inj_ok = true;
                for (auto& [cls, cnt] : image_count)
                    if (cnt > 1) inj_ok = false;
                audit.entries.push_back({i, u, v, surj_ok && inj_ok && dom == cod, dom, cod});
            }
    }
    return audit;
}

bool HomMapAudit::all_bijective() const {
    if (!tn_bijective) return false;
    for (const auto& e : entries)
        if (!e.bijective) return false;
    return true;
}

bool outer_equivalence_via_hom_maps(const PresheafMorphism& f) {
    return hom_class_maps(f).all_bijective();
}

} // namespace nerf
