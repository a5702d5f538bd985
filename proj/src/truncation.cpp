#include "nerf/truncation.hpp"

#include <map>
#include <sstream>

namespace nerf {

namespace {

// the truncation machinery revisits the same (often cached-slice) presheaf
// many times; memoize per object
template <typename V>
struct PtrCache {
    struct Entry {
        std::weak_ptr<const FinPresheaf> key;
        V value;
    };
    std::map<const FinPresheaf*, Entry> map;
    const V* find(const PresheafPtr& p) {
        auto it = map.find(p.get());
        if (it == map.end()) return nullptr;
        if (it->second.key.lock() != p) {
            map.erase(it);
            return nullptr;
        }
        return &it->second.value;
    }
    void put(const PresheafPtr& p, V v) { map[p.get()] = {p, std::move(v)}; }
};

PtrCache<TruncatabilityReport>& truncatable_cache() {
    static PtrCache<TruncatabilityReport> c;
    return c;
}
PtrCache<Truncation>& truncate_cache() {
    static PtrCache<Truncation> c;
    return c;
}

TruncatabilityReport is_one_truncatable_uncached(const PresheafPtr& phi);
Truncation truncate_uncached(const PresheafPtr& phi);

} // namespace

TruncatabilityReport is_one_truncatable(const PresheafPtr& phi) {
    if (const TruncatabilityReport* hit = truncatable_cache().find(phi)) return *hit;
    TruncatabilityReport r = is_one_truncatable_uncached(phi);
    truncatable_cache().put(phi, r);
    return r;
}

Truncation truncate(const PresheafPtr& phi) {
    if (const Truncation* hit = truncate_cache().find(phi)) return *hit;
    Truncation t = truncate_uncached(phi);
    truncate_cache().put(phi, t);
    return t;
}

namespace {

TruncatabilityReport is_one_truncatable_uncached(const PresheafPtr& phi) {
    phi->ensure_validated();
    if (phi->arity() < 1) throw std::invalid_argument("is_one_truncatable: arity must be >= 1");
    std::vector<int> head(phi->bounds().begin(), phi->bounds().end() - 1);
    FinPresheaf pattern(phi->arity() - 1 == 0 ? 0 : phi->arity() - 1, head);
    for (const auto& n_index : pattern.all_indices()) {
        PresheafPtr sl = slice(phi, n_index);
        OneNerveReport r = is_one_nerve(sl);
        if (!r.ok) return {false, n_index, r.reason};
    }
    return {};
}

Truncation truncate_uncached(const PresheafPtr& phi) {
    TruncatabilityReport tr = is_one_truncatable(phi);
    if (!tr.ok)
        throw std::invalid_argument("truncate: slice at (" + to_string(tr.failing_index) +
                                    ") is not a category: " + tr.reason);
    int n = phi->arity();
    std::vector<int> bounds(phi->bounds().begin(), phi->bounds().end() - 1);
    auto total = std::make_shared<FinPresheaf>(n - 1, bounds);
    std::vector<std::vector<int>> class_map(total->all_indices().size());

    // cell sets: iso classes of the last-axis categories
    for (const auto& nm : total->all_indices()) {
        PresheafPtr sl = slice(phi, nm);
        FinCategory c = extract_category(sl);
        IsoClasses ic = iso_classes(c);
        auto& cm = class_map[static_cast<size_t>(total->ordinal(nm))];
        cm.resize(static_cast<size_t>(c.objects()));
        std::vector<std::string> labels;
        for (int rep : ic.representatives) labels.push_back("[" + c.object_name(rep) + "]");
        for (int x = 0; x < c.objects(); ++x) cm[static_cast<size_t>(x)] = ic.class_index(x);
        total->set_cells(nm, ic.count(), std::move(labels));
    }
    // induced actions: T(sigma)(t(x)) = t(Phi(sigma x id_0)(x)), checked well defined
    for (const auto& nm : total->all_indices()) {
        MultiIndex at0 = nm;
        at0.push_back(0);
        const auto& cm = class_map[static_cast<size_t>(total->ordinal(nm))];
        int base_cells = phi->cell_count(at0);
        for (int k = 1; k <= n - 1; ++k) {
            int mk = nm[static_cast<size_t>(k) - 1];
            auto induce = [&](bool is_face, int i, const MultiIndex& to) {
                const auto& down_cm = class_map[static_cast<size_t>(total->ordinal(to))];
                std::vector<int> table(static_cast<size_t>(total->cell_count(nm)), -1);
                for (int x = 0; x < base_cells; ++x) {
                    int img = is_face ? phi->apply_face(at0, k, i, x)
                                      : phi->apply_degeneracy(at0, k, i, x);
                    int cls = cm[static_cast<size_t>(x)];
                    int icls = down_cm[static_cast<size_t>(img)];
                    if (table[static_cast<size_t>(cls)] < 0)
                        table[static_cast<size_t>(cls)] = icls;
                    else if (table[static_cast<size_t>(cls)] != icls)
                        throw std::runtime_error(
                            "truncate: induced action not well defined at (" + to_string(nm) +
                            ") — upstream validation bug");
                }
                for (int v : table)
                    if (v < 0)
                        throw std::runtime_error("truncate: class map not surjective at (" +
                                                 to_string(nm) + ")");
                return table;
            };
            if (mk >= 1) {
                MultiIndex down = nm;
                --down[static_cast<size_t>(k) - 1];
                for (int i = 0; i <= mk; ++i) total->set_face_action(nm, k, i, induce(true, i, down));
            }
            if (mk + 1 <= bounds[static_cast<size_t>(k) - 1]) {
                MultiIndex up = nm;
                ++up[static_cast<size_t>(k) - 1];
                for (int i = 0; i <= mk; ++i)
                    total->set_degeneracy_action(nm, k, i, induce(false, i, up));
            }
        }
    }
    ValidationReport v = total->validate();
    if (!v.ok) throw std::runtime_error("truncate: result failed validation: " + v.message);
    return Truncation{total, std::move(class_map), phi};
}

} // namespace

int Truncation::t(const MultiIndex& n_index, int cell_at_n0) const {
    return class_map[static_cast<size_t>(total->ordinal(n_index))][static_cast<size_t>(cell_at_n0)];
}

int TruncationTower::class_at(int h, const MultiIndex& m, int cell) const {
    if (h == 0) return cell;
    // climb: t^h(x) at M = t(level h-1)(M) applied to t^{h-1}(x) at (M,0)
    MultiIndex cur = m;
    for (int j = 0; j < h; ++j) cur.push_back(0);
    int c = cell;
    for (int j = 1; j <= h; ++j) {
        cur.pop_back();
        c = class_maps[static_cast<size_t>(j)][static_cast<size_t>(levels[static_cast<size_t>(j)]->ordinal(cur))]
                      [static_cast<size_t>(c)];
    }
    return c;
}

TruncationTower truncation_tower(const PresheafPtr& phi, int k) {
    if (k < 0 || k > phi->arity()) throw std::invalid_argument("truncation_tower: bad height");
    TruncationTower tower;
    tower.base = phi;
    tower.levels.push_back(phi);
    tower.class_maps.emplace_back();  // level 0 has no class map
    PresheafPtr cur = phi;
    for (int h = 1; h <= k; ++h) {
        TruncatabilityReport tr = is_one_truncatable(cur);
        if (!tr.ok)
            throw TowerError(h, tr.failing_index,
                             "not " + std::to_string(h) + "-truncatable: level " + std::to_string(h - 1) +
                                 " fails at (" + to_string(tr.failing_index) + "): " + tr.reason);
        Truncation t = truncate(cur);
        tower.levels.push_back(t.total);
        tower.class_maps.push_back(std::move(t.class_map));
        cur = t.total;
    }
    return tower;
}

std::vector<std::string> pi0(const PresheafPtr& phi) {
    TruncationTower tw = truncation_tower(phi, phi->arity());
    PresheafPtr top = tw.levels.back();
    std::vector<std::string> out;
    for (int c = 0; c < top->cell_count({}); ++c) out.push_back(top->cell_name({}, c));
    return out;
}

int pi0_count(const PresheafPtr& phi) {
    TruncationTower tw = truncation_tower(phi, phi->arity());
    return tw.levels.back()->cell_count({});
}

PresheafMorphism truncate_morphism(const PresheafMorphism& f, const Truncation& tsrc,
                                   const Truncation& tdst) {
    if (f.source.get() != tsrc.base.get() || f.target.get() != tdst.base.get())
        throw std::invalid_argument("truncate_morphism: truncations do not match morphism endpoints");
    PresheafMorphism tf;
    tf.source = tsrc.total;
    tf.target = tdst.total;
    tf.components.resize(tsrc.total->all_indices().size());
    for (const auto& nm : tsrc.total->all_indices()) {
        MultiIndex at0 = nm;
        at0.push_back(0);
        auto& comp = tf.components[static_cast<size_t>(tsrc.total->ordinal(nm))];
        comp.assign(static_cast<size_t>(tsrc.total->cell_count(nm)), -1);
        for (int x = 0; x < f.source->cell_count(at0); ++x) {
            int cls = tsrc.t(nm, x);
            int img = tdst.t(nm, f.apply(at0, x));
            if (comp[static_cast<size_t>(cls)] < 0)
                comp[static_cast<size_t>(cls)] = img;
            else if (comp[static_cast<size_t>(cls)] != img)
                throw std::runtime_error("truncate_morphism: TF not well defined at (" + to_string(nm) + ")");
        }
    }
    return tf;
}

} // namespace nerf
