#include "nerf/cat.hpp"

#include <algorithm>
#include <numeric>
#include <map>
#include <sstream>

namespace nerf {

int FinCategory::compose(int f, int g) const {
    if (!composable(f, g)) throw std::invalid_argument("compose: arrows not composable");
    int r = comp[static_cast<size_t>(f)][static_cast<size_t>(g)];
    if (r < 0) throw std::runtime_error("compose: table hole on composable pair");
    return r;
}

std::string FinCategory::object_name(int x) const {
    if (static_cast<size_t>(x) < object_names.size()) return object_names[static_cast<size_t>(x)];
    return "x" + std::to_string(x);
}

std::string FinCategory::arrow_name(int f) const {
    if (static_cast<size_t>(f) < arrow_names.size()) return arrow_names[static_cast<size_t>(f)];
    return "f" + std::to_string(f);
}

ValidationReport FinCategory::validate() const {
    int no = objects(), na = arrows();
    if (src.size() != static_cast<size_t>(na) || tgt.size() != static_cast<size_t>(na))
        return {false, "src/tgt size mismatch", {}};
    for (int f = 0; f < na; ++f)
        if (src[static_cast<size_t>(f)] < 0 || src[static_cast<size_t>(f)] >= no ||
            tgt[static_cast<size_t>(f)] < 0 || tgt[static_cast<size_t>(f)] >= no)
            return {false, "src/tgt out of range at " + arrow_name(f), {}};
    for (int x = 0; x < no; ++x) {
        int i = id[static_cast<size_t>(x)];
        if (i < 0 || i >= na || src[static_cast<size_t>(i)] != x || tgt[static_cast<size_t>(i)] != x)
            return {false, "bad identity at " + object_name(x), {}};
    }
    if (comp.size() != static_cast<size_t>(na)) return {false, "composition table size mismatch", {}};
    for (int f = 0; f < na; ++f) {
        if (comp[static_cast<size_t>(f)].size() != static_cast<size_t>(na))
            return {false, "composition row size mismatch", {}};
        for (int g = 0; g < na; ++g) {
            int r = comp[static_cast<size_t>(f)][static_cast<size_t>(g)];
            if (composable(f, g)) {
                if (r < 0 || r >= na) return {false, "composite missing for " + arrow_name(f) + ";" + arrow_name(g), {}};
                if (src[static_cast<size_t>(r)] != src[static_cast<size_t>(f)] ||
                    tgt[static_cast<size_t>(r)] != tgt[static_cast<size_t>(g)])
                    return {false, "composite endpoints wrong for " + arrow_name(f) + ";" + arrow_name(g), {}};
            } else if (r != -1) {
                return {false, "composite defined on non-composable pair", {}};
            }
        }
    }
    for (int f = 0; f < na; ++f) {
        if (compose(id[static_cast<size_t>(src[static_cast<size_t>(f)])], f) != f)
            return {false, "left identity law fails at " + arrow_name(f), {}};
        if (compose(f, id[static_cast<size_t>(tgt[static_cast<size_t>(f)])]) != f)
            return {false, "right identity law fails at " + arrow_name(f), {}};
    }
    for (int f = 0; f < na; ++f)
        for (int g = 0; g < na; ++g) {
            if (!composable(f, g)) continue;
            for (int h = 0; h < na; ++h) {
                if (!composable(g, h)) continue;
                if (compose(compose(f, g), h) != compose(f, compose(g, h)))
                    return {false,
                            "associativity fails at " + arrow_name(f) + ";" + arrow_name(g) + ";" + arrow_name(h),
                            {}};
            }
        }
    return {};
}

PresheafPtr nerve(const FinCategory& c, int bound) {
    ValidationReport r = c.validate();
    if (!r.ok) throw std::invalid_argument("nerve: invalid category: " + r.message);
    if (bound < 2) throw std::invalid_argument("nerve: bound must be >= 2");

    ContentBuilder b;
    b.arity = 1;
    b.bounds = {bound};
    b.enumerate = [c](const MultiIndex& m) {
        int len = m[0];
        std::vector<std::vector<int>> out;
        if (len == 0) {
            for (int x = 0; x < c.objects(); ++x) out.push_back({x});
            return out;
        }
        // composable chains (f_1,...,f_len)
        std::vector<std::vector<int>> chains;
        for (int f = 0; f < c.arrows(); ++f) chains.push_back({f});
        for (int step = 1; step < len; ++step) {
            std::vector<std::vector<int>> next;
            for (const auto& ch : chains)
                for (int g = 0; g < c.arrows(); ++g)
                    if (c.composable(ch.back(), g)) {
                        auto ext = ch;
                        ext.push_back(g);
                        next.push_back(std::move(ext));
                    }
            chains = std::move(next);
        }
        return chains;
    };
    b.apply = [c](const MultiIndex& m, int /*axis*/, bool is_face, int i, const std::vector<int>& cell) {
        int len = m[0];
        if (len == 0) {
            // only degeneracies: object -> identity chain
            return std::vector<int>{c.id[static_cast<size_t>(cell[0])]};
        }
        if (is_face) {
            if (len == 1) {
                // d_0 keeps the target vertex, d_1 keeps the source
                return std::vector<int>{i == 0 ? c.tgt[static_cast<size_t>(cell[0])]
                                               : c.src[static_cast<size_t>(cell[0])]};
            }
            std::vector<int> out;
            if (i == 0) {
                out.assign(cell.begin() + 1, cell.end());
            } else if (i == len) {
                out.assign(cell.begin(), cell.end() - 1);
            } else {
                out.assign(cell.begin(), cell.end());
                int merged = c.compose(out[static_cast<size_t>(i) - 1], out[static_cast<size_t>(i)]);
                out[static_cast<size_t>(i) - 1] = merged;
                out.erase(out.begin() + i);
            }
            return out;
        }
        // degeneracy e_i inserts the identity of vertex i
        int v;
        if (i == 0)
            v = c.src[static_cast<size_t>(cell[0])];
        else
            v = c.tgt[static_cast<size_t>(cell[static_cast<size_t>(i) - 1])];
        std::vector<int> out = cell;
        out.insert(out.begin() + i, c.id[static_cast<size_t>(v)]);
        return out;
    };
    b.label = [c](const MultiIndex& m, const std::vector<int>& cell) {
        if (m[0] == 0) return c.object_name(cell[0]);
        std::string s = "(";
        for (size_t i = 0; i < cell.size(); ++i) s += (i ? "|" : "") + c.arrow_name(cell[i]);
        return s + ")";
    };
    return build_presheaf(b);
}

namespace {
struct OneNerveCacheEntry {
    std::weak_ptr<const FinPresheaf> key;
    OneNerveReport value;
};
std::map<const FinPresheaf*, OneNerveCacheEntry>& one_nerve_cache() {
    static std::map<const FinPresheaf*, OneNerveCacheEntry> cache;
    return cache;
}
OneNerveReport is_one_nerve_uncached(const PresheafPtr& phi);
} // namespace

OneNerveReport is_one_nerve(const PresheafPtr& phi) {
    auto& cache = one_nerve_cache();
    auto it = cache.find(phi.get());
    if (it != cache.end()) {
        if (it->second.key.lock() == phi) return it->second.value;
        cache.erase(it);
    }
    OneNerveReport r = is_one_nerve_uncached(phi);
    cache[phi.get()] = {phi, r};
    return r;
}

namespace {
OneNerveReport is_one_nerve_uncached(const PresheafPtr& phi) {
    phi->ensure_validated();
    if (phi->arity() != 1) throw std::invalid_argument("is_one_nerve: arity must be 1");
    int bound = phi->bounds()[0];
    for (int m = 2; m <= bound; ++m) {
        SegalMap sm = segal_map(phi, {}, m);
        int cells = sm.source->cell_count({});
        int tuples = sm.target.power->cell_count({});
        std::vector<int> hit(static_cast<size_t>(tuples), -1);
        for (int c = 0; c < cells; ++c) {
            int t = sm.spine.apply({}, c);
            if (hit[static_cast<size_t>(t)] >= 0) {
                std::ostringstream os;
                os << "not injective at m=" << m << ": cells "
                   << sm.source->cell_name({}, hit[static_cast<size_t>(t)]) << " and "
                   << sm.source->cell_name({}, c) << " share spine "
                   << sm.target.power->cell_name({}, t);
                return {false, m, os.str()};
            }
            hit[static_cast<size_t>(t)] = c;
        }
        for (int t = 0; t < tuples; ++t)
            if (hit[static_cast<size_t>(t)] < 0) {
                std::ostringstream os;
                os << "not surjective at m=" << m << ": spine "
                   << sm.target.power->cell_name({}, t) << " has no filler";
                return {false, m, os.str()};
            }
    }
    return {};
}
} // namespace

FinCategory extract_category(const PresheafPtr& phi) {
    OneNerveReport rep = is_one_nerve(phi);
    if (!rep.ok) throw std::invalid_argument("extract_category: not a 1-nerve: " + rep.reason);
    FinCategory c;
    int no = phi->cell_count({0});
    int na = phi->cell_count({1});
    c.src.resize(static_cast<size_t>(na));
    c.tgt.resize(static_cast<size_t>(na));
    c.id.resize(static_cast<size_t>(no));
    for (int x = 0; x < no; ++x) {
        c.object_names.push_back(phi->cell_name({0}, x));
        c.id[static_cast<size_t>(x)] = phi->apply_degeneracy({0}, 1, 0, x);
    }
    for (int f = 0; f < na; ++f) {
        c.arrow_names.push_back(phi->cell_name({1}, f));
        c.src[static_cast<size_t>(f)] = phi->apply_face({1}, 1, 1, f);  // delta_0 = d_1
        c.tgt[static_cast<size_t>(f)] = phi->apply_face({1}, 1, 0, f);  // delta_1 = d_0
    }
    // composition via the unique Segal preimage, then the 02 edge = d_1
    SegalMap sm = segal_map(phi, {}, 2);
    std::vector<int> preimage(static_cast<size_t>(sm.target.power->cell_count({})), -1);
    for (int s = 0; s < sm.source->cell_count({}); ++s)
        preimage[static_cast<size_t>(sm.spine.apply({}, s))] = s;
    c.comp.assign(static_cast<size_t>(na), std::vector<int>(static_cast<size_t>(na), -1));
    for (int f = 0; f < na; ++f)
        for (int g = 0; g < na; ++g) {
            if (c.tgt[static_cast<size_t>(f)] != c.src[static_cast<size_t>(g)]) continue;
            int t = sm.target.tuple_index({}, {f, g});
            if (t < 0 || preimage[static_cast<size_t>(t)] < 0)
                throw std::runtime_error("extract_category: missing Segal filler");
            int sigma = preimage[static_cast<size_t>(t)];
            c.comp[static_cast<size_t>(f)][static_cast<size_t>(g)] =
                phi->apply_face({2}, 1, 1, sigma);  // delta_02 = d_1
        }
    ValidationReport r = c.validate();
    if (!r.ok) throw std::runtime_error("extract_category: invariants fail: " + r.message);
    return c;
}

namespace {
struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(static_cast<size_t>(n)) {
        std::iota(parent.begin(), parent.end(), 0);
    }
    int find(int x) {
        while (parent[static_cast<size_t>(x)] != x) {
            parent[static_cast<size_t>(x)] = parent[static_cast<size_t>(parent[static_cast<size_t>(x)])];
            x = parent[static_cast<size_t>(x)];
        }
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (a > b) std::swap(a, b);  // keep the minimal index as root
        parent[static_cast<size_t>(b)] = a;
    }
};
} // namespace

std::optional<int> find_inverse(const FinCategory& c, int f) {
    for (int g = 0; g < c.arrows(); ++g) {
        if (c.src[static_cast<size_t>(g)] != c.tgt[static_cast<size_t>(f)] ||
            c.tgt[static_cast<size_t>(g)] != c.src[static_cast<size_t>(f)])
            continue;
        if (c.compose(f, g) == c.id[static_cast<size_t>(c.src[static_cast<size_t>(f)])] &&
            c.compose(g, f) == c.id[static_cast<size_t>(c.tgt[static_cast<size_t>(f)])])
            return g;
    }
    return std::nullopt;
}

IsoClasses iso_classes(const FinCategory& c) {
    UnionFind uf(c.objects());
    // bucket candidate inverses by (src, tgt)
    std::map<std::pair<int, int>, std::vector<int>> by_ends;
    for (int g = 0; g < c.arrows(); ++g)
        by_ends[{c.src[static_cast<size_t>(g)], c.tgt[static_cast<size_t>(g)]}].push_back(g);
    for (int f = 0; f < c.arrows(); ++f) {
        int x = c.src[static_cast<size_t>(f)], y = c.tgt[static_cast<size_t>(f)];
        if (x == y) continue;
        if (uf.find(x) == uf.find(y)) continue;
        auto it = by_ends.find({y, x});
        if (it == by_ends.end()) continue;
        for (int g : it->second)
            if (c.compose(f, g) == c.id[static_cast<size_t>(x)] &&
                c.compose(g, f) == c.id[static_cast<size_t>(y)]) {
                uf.unite(x, y);
                break;
            }
    }
    IsoClasses out;
    out.class_of.resize(static_cast<size_t>(c.objects()));
    for (int x = 0; x < c.objects(); ++x) out.class_of[static_cast<size_t>(x)] = uf.find(x);
    for (int x = 0; x < c.objects(); ++x)
        if (out.class_of[static_cast<size_t>(x)] == x) out.representatives.push_back(x);
    return out;
}

int IsoClasses::class_index(int object) const {
    int rep = class_of[static_cast<size_t>(object)];
    auto it = std::lower_bound(representatives.begin(), representatives.end(), rep);
    return static_cast<int>(it - representatives.begin());
}

bool categories_isomorphic_strictly(const FinCategory& a, const FinCategory& b) {
    return a.objects() == b.objects() && a.arrows() == b.arrows() && a.src == b.src &&
           a.tgt == b.tgt && a.id == b.id && a.comp == b.comp;
}

} // namespace nerf
