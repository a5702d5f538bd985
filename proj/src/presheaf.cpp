#include "nerf/presheaf.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace nerf {

namespace {

std::vector<MultiIndex> enumerate_indices(const std::vector<int>& bounds) {
    std::vector<MultiIndex> out;
    MultiIndex cur(bounds.size(), 0);
    while (true) {
        out.push_back(cur);
        int k = static_cast<int>(bounds.size()) - 1;
        while (k >= 0) {
            if (cur[static_cast<size_t>(k)] < bounds[static_cast<size_t>(k)]) {
                ++cur[static_cast<size_t>(k)];
                std::fill(cur.begin() + k + 1, cur.end(), 0);
                break;
            }
            --k;
        }
        if (k < 0) break;
    }
    if (bounds.empty()) out = {MultiIndex{}};
    return out;
}

} // namespace

FinPresheaf::FinPresheaf(int arity, std::vector<int> bounds) : n_(arity), bounds_(std::move(bounds)) {
    if (arity < 0) throw std::invalid_argument("presheaf arity must be >= 0");
    if (bounds_.size() != static_cast<size_t>(arity))
        throw std::invalid_argument("bounds arity mismatch");
    for (int b : bounds_)
        if (b < 2) throw std::invalid_argument("per-axis bound must be >= 2");
    indices_ = enumerate_indices(bounds_);
    strides_.assign(static_cast<size_t>(n_), 1);
    for (int k = n_ - 2; k >= 0; --k)
        strides_[static_cast<size_t>(k)] =
            strides_[static_cast<size_t>(k) + 1] * (bounds_[static_cast<size_t>(k) + 1] + 1);
    levels_.resize(indices_.size());
    for (size_t o = 0; o < indices_.size(); ++o) {
        levels_[o].faces.resize(static_cast<size_t>(n_));
        levels_[o].degens.resize(static_cast<size_t>(n_));
        for (int k = 0; k < n_; ++k) {
            int mk = indices_[o][static_cast<size_t>(k)];
            levels_[o].faces[static_cast<size_t>(k)].resize(static_cast<size_t>(mk) + 1);
            levels_[o].degens[static_cast<size_t>(k)].resize(static_cast<size_t>(mk) + 1);
        }
    }
}

FinPresheaf::FinPresheaf(int arity, int uniform_bound)
    : FinPresheaf(arity, std::vector<int>(static_cast<size_t>(arity), uniform_bound)) {}

bool FinPresheaf::within_bounds(const MultiIndex& m) const {
    if (m.size() != static_cast<size_t>(n_)) return false;
    for (int k = 0; k < n_; ++k)
        if (m[static_cast<size_t>(k)] < 0 || m[static_cast<size_t>(k)] > bounds_[static_cast<size_t>(k)]) return false;
    return true;
}

int FinPresheaf::ordinal(const MultiIndex& m) const {
    if (!within_bounds(m)) throw std::invalid_argument("index out of bounds: (" + to_string(m) + ")");
    int o = 0;
    for (int k = 0; k < n_; ++k) o += m[static_cast<size_t>(k)] * strides_[static_cast<size_t>(k)];
    return o;
}

const FinPresheaf::Level& FinPresheaf::level(const MultiIndex& m) const {
    return levels_[static_cast<size_t>(ordinal(m))];
}
FinPresheaf::Level& FinPresheaf::level(const MultiIndex& m) {
    return levels_[static_cast<size_t>(ordinal(m))];
}

int FinPresheaf::cell_count(const MultiIndex& m) const {
    int c = level(m).count;
    if (c < 0) throw std::runtime_error("cells not set at (" + to_string(m) + ")");
    return c;
}

const std::vector<std::string>& FinPresheaf::labels(const MultiIndex& m) const {
    return level(m).labels;
}

std::string FinPresheaf::cell_name(const MultiIndex& m, int cell) const {
    const auto& lv = level(m);
    if (static_cast<size_t>(cell) < lv.labels.size()) return lv.labels[static_cast<size_t>(cell)];
    return "#" + std::to_string(cell);
}

std::optional<int> FinPresheaf::cell_by_label(const MultiIndex& m, const std::string& label) const {
    const auto& lv = level(m);
    for (size_t i = 0; i < lv.labels.size(); ++i)
        if (lv.labels[i] == label) return static_cast<int>(i);
    if (!label.empty() && label[0] == '#') {
        int idx = std::stoi(label.substr(1));
        if (idx >= 0 && idx < lv.count) return idx;
    }
    return std::nullopt;
}

void FinPresheaf::set_cells(const MultiIndex& m, int count, std::vector<std::string> labels) {
    if (count < 0) throw std::invalid_argument("negative cell count");
    if (!labels.empty() && labels.size() != static_cast<size_t>(count))
        throw std::invalid_argument("label count mismatch");
    auto& lv = level(m);
    lv.count = count;
    lv.labels = std::move(labels);
    validated_.reset();
}

void FinPresheaf::set_face_action(const MultiIndex& m, int axis, int i, std::vector<int> table) {
    if (axis < 1 || axis > n_) throw std::invalid_argument("face action: axis out of range");
    int mk = m[static_cast<size_t>(axis) - 1];
    if (mk < 1 || i < 0 || i > mk) throw std::invalid_argument("face action: index out of range");
    level(m).faces[static_cast<size_t>(axis) - 1][static_cast<size_t>(i)] = std::move(table);
    validated_.reset();
}

void FinPresheaf::set_degeneracy_action(const MultiIndex& m, int axis, int i, std::vector<int> table) {
    if (axis < 1 || axis > n_) throw std::invalid_argument("degeneracy action: axis out of range");
    int mk = m[static_cast<size_t>(axis) - 1];
    if (i < 0 || i > mk) throw std::invalid_argument("degeneracy action: index out of range");
    if (mk + 1 > bounds_[static_cast<size_t>(axis) - 1])
        throw std::invalid_argument("degeneracy action: target out of bounds");
    level(m).degens[static_cast<size_t>(axis) - 1][static_cast<size_t>(i)] = std::move(table);
    validated_.reset();
}

bool FinPresheaf::has_face_action(const MultiIndex& m, int axis, int i) const {
    const auto& lv = level(m);
    int mk = m[static_cast<size_t>(axis) - 1];
    if (mk < 1 || i < 0 || i > mk) return false;
    return !lv.faces[static_cast<size_t>(axis) - 1][static_cast<size_t>(i)].empty() || lv.count == 0;
}

bool FinPresheaf::has_degeneracy_action(const MultiIndex& m, int axis, int i) const {
    const auto& lv = level(m);
    int mk = m[static_cast<size_t>(axis) - 1];
    if (i < 0 || i > mk || mk + 1 > bounds_[static_cast<size_t>(axis) - 1]) return false;
    return !lv.degens[static_cast<size_t>(axis) - 1][static_cast<size_t>(i)].empty() || lv.count == 0;
}

const std::vector<int>& FinPresheaf::face_action(const MultiIndex& m, int axis, int i) const {
    return level(m).faces[static_cast<size_t>(axis) - 1][static_cast<size_t>(i)];
}

const std::vector<int>& FinPresheaf::degeneracy_action(const MultiIndex& m, int axis, int i) const {
    return level(m).degens[static_cast<size_t>(axis) - 1][static_cast<size_t>(i)];
}

int FinPresheaf::apply_face(const MultiIndex& m, int axis, int i, int cell) const {
    const auto& t = face_action(m, axis, i);
    if (static_cast<size_t>(cell) >= t.size()) throw std::invalid_argument("apply_face: unknown cell");
    return t[static_cast<size_t>(cell)];
}

int FinPresheaf::apply_degeneracy(const MultiIndex& m, int axis, int i, int cell) const {
    const auto& t = degeneracy_action(m, axis, i);
    if (static_cast<size_t>(cell) >= t.size()) throw std::invalid_argument("apply_degeneracy: unknown cell");
    return t[static_cast<size_t>(cell)];
}

int FinPresheaf::evaluate(const ProductMap& mu, int cell) const {
    if (mu.arity() != n_) throw std::invalid_argument("evaluate: arity mismatch");
    MultiIndex tgt = mu.target();
    MultiIndex src = mu.source();
    if (!within_bounds(tgt) || !within_bounds(src))
        throw std::invalid_argument("evaluate: map leaves the bounded store");
    if (cell < 0 || cell >= cell_count(tgt)) throw std::invalid_argument("evaluate: unknown cell");
    MultiIndex cur = tgt;
    int c = cell;
    for (int k = 1; k <= n_; ++k) {
        Factorization f = factorize(mu.components[static_cast<size_t>(k) - 1]);
        for (const auto& fac : f.faces) {
            c = apply_face(cur, k, fac.index, c);
            --cur[static_cast<size_t>(k) - 1];
        }
        for (const auto& deg : f.degeneracies) {
            c = apply_degeneracy(cur, k, deg.index, c);
            ++cur[static_cast<size_t>(k) - 1];
        }
    }
    return c;
}

int FinPresheaf::source_along(const MultiIndex& m, int axis, int cell) const {
    // delta_0 : [0] -> [1] is the face d_1, so s = Phi(d^k_1) when m_k = 1;
    // in general evaluate the vertex map.
    return evaluate(axis_map(m, axis, vertex_map(m[static_cast<size_t>(axis) - 1], 0)), cell);
}

int FinPresheaf::target_along(const MultiIndex& m, int axis, int cell) const {
    return evaluate(axis_map(m, axis, vertex_map(m[static_cast<size_t>(axis) - 1],
                                                 m[static_cast<size_t>(axis) - 1])), cell);
}

ValidationReport FinPresheaf::validate() const {
    if (validated_.has_value() && *validated_) return {};
    auto fail = [&](const MultiIndex& at, const std::string& msg) {
        validated_ = false;
        return ValidationReport{false, msg, at};
    };
    // structural pass
    for (const auto& m : indices_) {
        const auto& lv = level(m);
        if (lv.count < 0) return fail(m, "cell set missing");
        for (int k = 1; k <= n_; ++k) {
            int mk = m[static_cast<size_t>(k) - 1];
            if (mk >= 1) {
                MultiIndex down = m;
                --down[static_cast<size_t>(k) - 1];
                for (int i = 0; i <= mk; ++i) {
                    const auto& t = lv.faces[static_cast<size_t>(k) - 1][static_cast<size_t>(i)];
                    if (t.size() != static_cast<size_t>(lv.count))
                        return fail(m, "face action d/" + std::to_string(k) + "/" + std::to_string(i) + " missing or wrong size");
                    for (int v : t)
                        if (v < 0 || v >= cell_count(down)) return fail(m, "face action out of range");
                }
            }
            if (mk + 1 <= bounds_[static_cast<size_t>(k) - 1]) {
                MultiIndex up = m;
                ++up[static_cast<size_t>(k) - 1];
                for (int i = 0; i <= mk; ++i) {
                    const auto& t = lv.degens[static_cast<size_t>(k) - 1][static_cast<size_t>(i)];
                    if (t.size() != static_cast<size_t>(lv.count))
                        return fail(m, "degeneracy action e/" + std::to_string(k) + "/" + std::to_string(i) + " missing or wrong size");
                    for (int v : t)
                        if (v < 0 || v >= cell_count(up)) return fail(m, "degeneracy action out of range");
                }
            }
        }
    }
    // coherence pass: every length-2 composite of elementary arrows agrees
    // with the canonical evaluation of the composed product map.
    struct Arrow {
        int axis;
        bool face;
        int i;
    };
    auto arrows_into = [&](const MultiIndex& b) {
        std::vector<Arrow> out;
        for (int k = 1; k <= n_; ++k) {
            int mk = b[static_cast<size_t>(k) - 1];
            if (mk >= 1)
                for (int i = 0; i <= mk; ++i) out.push_back({k, true, i});
            if (mk + 1 <= bounds_[static_cast<size_t>(k) - 1])
                for (int i = 0; i <= mk; ++i) out.push_back({k, false, i});
        }
        return out;
    };
    auto arrow_map = [&](const MultiIndex& b, const Arrow& a) {
        int mk = b[static_cast<size_t>(a.axis) - 1];
        return axis_map(b, a.axis, a.face ? face_map(mk, a.i) : degeneracy_map(mk, a.i));
    };
    for (const auto& b : indices_) {
        int nb = cell_count(b);
        if (nb == 0) continue;
        for (const Arrow& va : arrows_into(b)) {
            ProductMap v = arrow_map(b, va);
            MultiIndex a = v.source();
            const std::vector<int>& tv = va.face ? face_action(b, va.axis, va.i)
                                                 : degeneracy_action(b, va.axis, va.i);
            for (const Arrow& ua : arrows_into(a)) {
                ProductMap u = arrow_map(a, ua);
                ProductMap w = compose(v, u);
                const std::vector<int>& tu = ua.face ? face_action(a, ua.axis, ua.i)
                                                     : degeneracy_action(a, ua.axis, ua.i);
                // canonical evaluation path of w, fixed once per pair
                std::vector<const std::vector<int>*> path;
                {
                    MultiIndex cur = b;
                    for (int k = 1; k <= n_; ++k) {
                        Factorization fz = factorize(w.components[static_cast<size_t>(k) - 1]);
                        for (const auto& fac : fz.faces) {
                            path.push_back(&face_action(cur, k, fac.index));
                            --cur[static_cast<size_t>(k) - 1];
                        }
                        for (const auto& deg : fz.degeneracies) {
                            path.push_back(&degeneracy_action(cur, k, deg.index));
                            ++cur[static_cast<size_t>(k) - 1];
                        }
                    }
                }
                for (int x = 0; x < nb; ++x) {
                    int two = tu[static_cast<size_t>(tv[static_cast<size_t>(x)])];
                    int can = x;
                    for (const auto* t : path) can = (*t)[static_cast<size_t>(can)];
                    if (two != can) {
                        std::ostringstream os;
                        os << "simplicial identity broken at (" << to_string(b) << "): "
                           << (va.face ? "d/" : "e/") << va.axis << "/" << va.i << " then "
                           << (ua.face ? "d/" : "e/") << ua.axis << "/" << ua.i
                           << " on cell " << cell_name(b, x) << " gives " << two
                           << " but the canonical composite gives " << can;
                        validated_ = false;
                        return ValidationReport{false, os.str(), b};
                    }
                }
            }
        }
    }
    validated_ = true;
    return {};
}

void FinPresheaf::ensure_validated() const {
    if (validated_.has_value()) {
        if (!*validated_) throw std::runtime_error("presheaf failed validation");
        return;
    }
    ValidationReport r = validate();
    if (!r.ok) throw std::runtime_error("presheaf failed validation: " + r.message);
}

std::string FinPresheaf::describe() const {
    std::ostringstream os;
    os << "presheaf arity " << n_ << " bounds (";
    for (size_t k = 0; k < bounds_.size(); ++k) os << (k ? "," : "") << bounds_[k];
    os << ")";
    for (const auto& m : indices_) os << " |" << to_string(m) << "|=" << level(m).count;
    return os.str();
}

PresheafPtr terminal_presheaf(int arity, std::vector<int> bounds) {
    auto phi = std::make_shared<FinPresheaf>(arity, std::move(bounds));
    for (const auto& m : phi->all_indices()) phi->set_cells(m, 1, {"*"});
    for (const auto& m : phi->all_indices()) {
        for (int k = 1; k <= arity; ++k) {
            int mk = m[static_cast<size_t>(k) - 1];
            if (mk >= 1)
                for (int i = 0; i <= mk; ++i) phi->set_face_action(m, k, i, {0});
            if (mk + 1 <= phi->bounds()[static_cast<size_t>(k) - 1])
                for (int i = 0; i <= mk; ++i) phi->set_degeneracy_action(m, k, i, {0});
        }
    }
    return phi;
}

PresheafPtr empty_presheaf(int arity, std::vector<int> bounds) {
    auto phi = std::make_shared<FinPresheaf>(arity, std::move(bounds));
    for (const auto& m : phi->all_indices()) phi->set_cells(m, 0);
    return phi;
}

namespace {
// slices are requested over and over by the truncation and equivalence
// machinery; share one instance per (presheaf, prefix)
struct SliceCacheEntry {
    std::weak_ptr<const FinPresheaf> key;
    PresheafPtr value;
};
std::map<std::pair<const FinPresheaf*, MultiIndex>, SliceCacheEntry>& slice_cache() {
    static std::map<std::pair<const FinPresheaf*, MultiIndex>, SliceCacheEntry> cache;
    return cache;
}
PresheafPtr slice_uncached(const PresheafPtr& phi, const MultiIndex& prefix);
} // namespace

PresheafPtr slice(const PresheafPtr& phi, const MultiIndex& prefix) {
    auto& cache = slice_cache();
    auto it = cache.find({phi.get(), prefix});
    if (it != cache.end()) {
        if (it->second.key.lock() == phi) return it->second.value;
        cache.erase(it);
    }
    PresheafPtr out = slice_uncached(phi, prefix);
    cache[{phi.get(), prefix}] = {phi, out};
    return out;
}

namespace {
PresheafPtr slice_uncached(const PresheafPtr& phi, const MultiIndex& prefix) {
    phi->ensure_validated();
    int s = static_cast<int>(prefix.size());
    int p = phi->arity() - s;
    if (p < 0) throw std::invalid_argument("slice: prefix longer than arity");
    for (int k = 0; k < s; ++k)
        if (prefix[static_cast<size_t>(k)] < 0 ||
            prefix[static_cast<size_t>(k)] > phi->bounds()[static_cast<size_t>(k)])
            throw std::invalid_argument("slice: prefix out of bounds");
    std::vector<int> bounds(phi->bounds().begin() + s, phi->bounds().end());
    auto out = std::make_shared<FinPresheaf>(p, bounds);
    auto full = [&](const MultiIndex& rest) {
        MultiIndex m = prefix;
        m.insert(m.end(), rest.begin(), rest.end());
        return m;
    };
    for (const auto& rest : out->all_indices()) {
        MultiIndex m = full(rest);
        out->set_cells(rest, phi->cell_count(m), phi->labels(m));
    }
    for (const auto& rest : out->all_indices()) {
        MultiIndex m = full(rest);
        for (int k = 1; k <= p; ++k) {
            int mk = rest[static_cast<size_t>(k) - 1];
            if (mk >= 1)
                for (int i = 0; i <= mk; ++i)
                    out->set_face_action(rest, k, i, phi->face_action(m, s + k, i));
            if (mk + 1 <= bounds[static_cast<size_t>(k) - 1])
                for (int i = 0; i <= mk; ++i)
                    out->set_degeneracy_action(rest, k, i, phi->degeneracy_action(m, s + k, i));
        }
    }
    return out;
}
} // namespace

int FiberPower::tuple_index(const MultiIndex& n, const std::vector<int>& tuple) const {
    int o = power->ordinal(n);
    auto it = lookup_[static_cast<size_t>(o)].find(tuple);
    if (it == lookup_[static_cast<size_t>(o)].end()) return -1;
    return it->second;
}

FiberPower fiber_power(const PresheafPtr& phi, int m) {
    phi->ensure_validated();
    if (phi->arity() < 1) throw std::invalid_argument("fiber_power: arity must be >= 1");
    if (m < 1) throw std::invalid_argument("fiber_power: m must be >= 1");
    if (phi->bounds()[0] < 1) throw std::invalid_argument("fiber_power: first-axis bound too small");
    int p = phi->arity() - 1;
    std::vector<int> bounds(phi->bounds().begin() + 1, phi->bounds().end());

    FiberPower fp;
    fp.factors = m;
    auto power = std::make_shared<FinPresheaf>(p, bounds);

    auto one = [&](const MultiIndex& rest) {
        MultiIndex m1 = rest;
        m1.insert(m1.begin(), 1);
        return m1;
    };

    fp.tuples.resize(power->all_indices().size());
    fp.lookup_.resize(power->all_indices().size());
    for (const auto& rest : power->all_indices()) {
        MultiIndex m1 = one(rest);
        int edge_cells = phi->cell_count(m1);
        std::vector<int> src(static_cast<size_t>(edge_cells)), tgt(static_cast<size_t>(edge_cells));
        for (int c = 0; c < edge_cells; ++c) {
            src[static_cast<size_t>(c)] = phi->source_along(m1, 1, c);
            tgt[static_cast<size_t>(c)] = phi->target_along(m1, 1, c);
        }
        // group edges by source for chain extension
        std::unordered_map<int, std::vector<int>> by_src;
        for (int c = 0; c < edge_cells; ++c) by_src[src[static_cast<size_t>(c)]].push_back(c);
        std::vector<std::vector<int>> chains;
        for (int c = 0; c < edge_cells; ++c) chains.push_back({c});
        for (int step = 1; step < m; ++step) {
            std::vector<std::vector<int>> next;
            for (const auto& ch : chains) {
                int end = tgt[static_cast<size_t>(ch.back())];
                auto it = by_src.find(end);
                if (it == by_src.end()) continue;
                for (int c : it->second) {
                    auto ext = ch;
                    ext.push_back(c);
                    next.push_back(std::move(ext));
                }
            }
            chains = std::move(next);
        }
        int o = power->ordinal(rest);
        fp.tuples[static_cast<size_t>(o)] = chains;
        for (size_t i = 0; i < chains.size(); ++i)
            fp.lookup_[static_cast<size_t>(o)][chains[i]] = static_cast<int>(i);
        std::vector<std::string> labels;
        if (chains.size() <= 4096) {
            for (const auto& ch : chains) {
                std::string lab = "(";
                for (size_t i = 0; i < ch.size(); ++i)
                    lab += (i ? "|" : "") + phi->cell_name(m1, ch[i]);
                lab += ")";
                labels.push_back(lab);
            }
        }
        power->set_cells(rest, static_cast<int>(chains.size()), std::move(labels));
    }
    for (const auto& rest : power->all_indices()) {
        MultiIndex m1 = one(rest);
        int cnt = power->cell_count(rest);
        for (int k = 1; k <= p; ++k) {
            int mk = rest[static_cast<size_t>(k) - 1];
            MultiIndex down = rest, up = rest;
            if (mk >= 1) --down[static_cast<size_t>(k) - 1];
            if (mk + 1 <= bounds[static_cast<size_t>(k) - 1]) ++up[static_cast<size_t>(k) - 1];
            if (mk >= 1) {
                for (int i = 0; i <= mk; ++i) {
                    const auto& table = phi->face_action(m1, k + 1, i);
                    std::vector<int> t(static_cast<size_t>(cnt));
                    int od = power->ordinal(down);
                    for (int c = 0; c < cnt; ++c) {
                        std::vector<int> img;
                        for (int e : fp.tuples[static_cast<size_t>(power->ordinal(rest))][static_cast<size_t>(c)])
                            img.push_back(table[static_cast<size_t>(e)]);
                        auto it = fp.lookup_[static_cast<size_t>(od)].find(img);
                        if (it == fp.lookup_[static_cast<size_t>(od)].end())
                            throw std::runtime_error("fiber_power: componentwise image is not a chain");
                        t[static_cast<size_t>(c)] = it->second;
                    }
                    power->set_face_action(rest, k, i, std::move(t));
                }
            }
            if (mk + 1 <= bounds[static_cast<size_t>(k) - 1]) {
                for (int i = 0; i <= mk; ++i) {
                    const auto& table = phi->degeneracy_action(m1, k + 1, i);
                    std::vector<int> t(static_cast<size_t>(cnt));
                    int ou = power->ordinal(up);
                    for (int c = 0; c < cnt; ++c) {
                        std::vector<int> img;
                        for (int e : fp.tuples[static_cast<size_t>(power->ordinal(rest))][static_cast<size_t>(c)])
                            img.push_back(table[static_cast<size_t>(e)]);
                        auto it = fp.lookup_[static_cast<size_t>(ou)].find(img);
                        if (it == fp.lookup_[static_cast<size_t>(ou)].end())
                            throw std::runtime_error("fiber_power: componentwise image is not a chain");
                        t[static_cast<size_t>(c)] = it->second;
                    }
                    power->set_degeneracy_action(rest, k, i, std::move(t));
                }
            }
        }
    }
    fp.power = power;
    return fp;
}

int PresheafMorphism::apply(const MultiIndex& m, int cell) const {
    return components[static_cast<size_t>(source->ordinal(m))][static_cast<size_t>(cell)];
}

ValidationReport PresheafMorphism::validate_natural() const {
    if (!source || !target) return {false, "morphism endpoints missing", {}};
    if (source->arity() != target->arity()) return {false, "arity mismatch", {}};
    if (source->bounds() != target->bounds()) return {false, "bounds mismatch", {}};
    source->ensure_validated();
    target->ensure_validated();
    int n = source->arity();
    for (const auto& m : source->all_indices()) {
        int o = source->ordinal(m);
        if (components.size() <= static_cast<size_t>(o) ||
            components[static_cast<size_t>(o)].size() != static_cast<size_t>(source->cell_count(m)))
            return {false, "component missing or wrong size", m};
        for (int v : components[static_cast<size_t>(o)])
            if (v < 0 || v >= target->cell_count(m)) return {false, "component out of range", m};
    }
    for (const auto& m : source->all_indices()) {
        int cnt = source->cell_count(m);
        for (int k = 1; k <= n; ++k) {
            int mk = m[static_cast<size_t>(k) - 1];
            if (mk >= 1) {
                MultiIndex down = m;
                --down[static_cast<size_t>(k) - 1];
                for (int i = 0; i <= mk; ++i)
                    for (int c = 0; c < cnt; ++c)
                        if (apply(down, source->apply_face(m, k, i, c)) !=
                            target->apply_face(m, k, i, apply(m, c)))
                            return {false,
                                    "not natural at d/" + std::to_string(k) + "/" + std::to_string(i) +
                                        " cell " + source->cell_name(m, c),
                                    m};
            }
            if (mk + 1 <= source->bounds()[static_cast<size_t>(k) - 1]) {
                MultiIndex up = m;
                ++up[static_cast<size_t>(k) - 1];
                for (int i = 0; i <= mk; ++i)
                    for (int c = 0; c < cnt; ++c)
                        if (apply(up, source->apply_degeneracy(m, k, i, c)) !=
                            target->apply_degeneracy(m, k, i, apply(m, c)))
                            return {false,
                                    "not natural at e/" + std::to_string(k) + "/" + std::to_string(i) +
                                        " cell " + source->cell_name(m, c),
                                    m};
            }
        }
    }
    return {};
}

PresheafMorphism identity_morphism(const PresheafPtr& phi) {
    PresheafMorphism f;
    f.source = phi;
    f.target = phi;
    f.components.resize(phi->all_indices().size());
    for (const auto& m : phi->all_indices()) {
        auto& comp = f.components[static_cast<size_t>(phi->ordinal(m))];
        comp.resize(static_cast<size_t>(phi->cell_count(m)));
        for (int c = 0; c < phi->cell_count(m); ++c) comp[static_cast<size_t>(c)] = c;
    }
    return f;
}

PresheafMorphism compose(const PresheafMorphism& g, const PresheafMorphism& f) {
    if (f.target.get() != g.source.get())
        throw std::invalid_argument("compose: middle presheaf mismatch");
    PresheafMorphism h;
    h.source = f.source;
    h.target = g.target;
    h.components.resize(f.components.size());
    for (size_t o = 0; o < f.components.size(); ++o) {
        h.components[o].resize(f.components[o].size());
        for (size_t c = 0; c < f.components[o].size(); ++c)
            h.components[o][static_cast<size_t>(c)] =
                g.components[o][static_cast<size_t>(f.components[o][c])];
    }
    return h;
}

SegalMap segal_map(const PresheafPtr& phi, const MultiIndex& prefix, int m) {
    phi->ensure_validated();
    int s = static_cast<int>(prefix.size());
    if (phi->arity() - s < 1) throw std::invalid_argument("segal_map: no axis left for the grouping");
    if (m < 1 || m > phi->bounds()[static_cast<size_t>(s)])
        throw std::invalid_argument("segal_map: m out of bound");
    PresheafPtr sliced = slice(phi, prefix);  // arity p+1
    SegalMap out;
    MultiIndex at_m = prefix;
    at_m.push_back(m);
    out.source = slice(phi, at_m);
    out.target = fiber_power(sliced, m);
    out.spine.source = out.source;
    out.spine.target = out.target.power;

    out.spine.components.resize(out.source->all_indices().size());
    for (const auto& rest : out.source->all_indices()) {
        int cnt = out.source->cell_count(rest);
        auto& comp = out.spine.components[static_cast<size_t>(out.source->ordinal(rest))];
        comp.resize(static_cast<size_t>(cnt));
        // edge maps delta_{i,i+1} x id on the sliced presheaf
        MultiIndex m_full = rest;
        m_full.insert(m_full.begin(), m);
        for (int c = 0; c < cnt; ++c) {
            std::vector<int> spine;
            spine.reserve(static_cast<size_t>(m));
            for (int i = 0; i + 1 <= m; ++i)
                spine.push_back(sliced->evaluate(axis_map(m_full, 1, edge_map(m, i, i + 1)), c));
            int idx = out.target.tuple_index(rest, spine);
            if (idx < 0) throw std::runtime_error("segal_map: spine is not a composable tuple");
            comp[static_cast<size_t>(c)] = idx;
        }
    }
    return out;
}

std::vector<std::vector<int>> interchange_gamma(const std::vector<std::vector<int>>& grid,
                                                const InterchangeSquare& maps) {
    if (grid.empty() || grid[0].empty()) throw std::invalid_argument("interchange_gamma: empty grid");
    size_t m = grid.size(), mp = grid[0].size();
    for (const auto& row : grid)
        if (row.size() != mp) throw std::invalid_argument("interchange_gamma: ragged grid");
    // row direction glues over C (s2/b2), column direction over B (s1/b1)
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j + 1 < mp; ++j)
            if (maps.b2(grid[i][j]) != maps.s2(grid[i][j + 1]))
                throw std::invalid_argument("interchange_gamma: row gluing violated");
    for (size_t i = 0; i + 1 < m; ++i)
        for (size_t j = 0; j < mp; ++j)
            if (maps.b1(grid[i][j]) != maps.s1(grid[i + 1][j]))
                throw std::invalid_argument("interchange_gamma: column gluing violated");
    std::vector<std::vector<int>> out(mp, std::vector<int>(m));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < mp; ++j) out[j][i] = grid[i][j];
    return out;
}

PresheafPtr build_presheaf(const ContentBuilder& builder) {
    return build_presheaf_with_content(builder).phi;
}

int BuiltPresheaf::find(const MultiIndex& m, const std::vector<int>& cell_content) const {
    const auto& table = lookup[static_cast<size_t>(phi->ordinal(m))];
    auto it = table.find(cell_content);
    return it == table.end() ? -1 : it->second;
}

BuiltPresheaf build_presheaf_with_content(const ContentBuilder& builder) {
    auto phi = std::make_shared<FinPresheaf>(builder.arity, builder.bounds);
    std::vector<std::vector<std::vector<int>>> content(phi->all_indices().size());
    std::vector<CellLookup> lookup(phi->all_indices().size());
    for (const auto& m : phi->all_indices()) {
        int o = phi->ordinal(m);
        content[static_cast<size_t>(o)] = builder.enumerate(m);
        auto& cells = content[static_cast<size_t>(o)];
        if (static_cast<long long>(cells.size()) > builder.capacity)
            throw CapacityError("cell set at (" + to_string(m) + ") exceeds capacity: " +
                                std::to_string(cells.size()) + " cells");
        for (size_t i = 0; i < cells.size(); ++i) lookup[static_cast<size_t>(o)][cells[i]] = static_cast<int>(i);
        std::vector<std::string> labels;
        if (builder.label && cells.size() <= 4096)
            for (const auto& c : cells) labels.push_back(builder.label(m, c));
        phi->set_cells(m, static_cast<int>(cells.size()), std::move(labels));
    }
    for (const auto& m : phi->all_indices()) {
        int o = phi->ordinal(m);
        const auto& cells = content[static_cast<size_t>(o)];
        for (int k = 1; k <= builder.arity; ++k) {
            int mk = m[static_cast<size_t>(k) - 1];
            if (mk >= 1) {
                MultiIndex down = m;
                --down[static_cast<size_t>(k) - 1];
                int od = phi->ordinal(down);
                for (int i = 0; i <= mk; ++i) {
                    std::vector<int> t(cells.size());
                    for (size_t c = 0; c < cells.size(); ++c) {
                        auto img = builder.apply(m, k, true, i, cells[c]);
                        auto it = lookup[static_cast<size_t>(od)].find(img);
                        if (it == lookup[static_cast<size_t>(od)].end())
                            throw std::runtime_error("build_presheaf: face image not found at (" +
                                                     to_string(down) + ")");
                        t[c] = it->second;
                    }
                    phi->set_face_action(m, k, i, std::move(t));
                }
            }
            if (mk + 1 <= builder.bounds[static_cast<size_t>(k) - 1]) {
                MultiIndex up = m;
                ++up[static_cast<size_t>(k) - 1];
                int ou = phi->ordinal(up);
                for (int i = 0; i <= mk; ++i) {
                    std::vector<int> t(cells.size());
                    for (size_t c = 0; c < cells.size(); ++c) {
                        auto img = builder.apply(m, k, false, i, cells[c]);
                        auto it = lookup[static_cast<size_t>(ou)].find(img);
                        if (it == lookup[static_cast<size_t>(ou)].end())
                            throw std::runtime_error("build_presheaf: degeneracy image not found at (" +
                                                     to_string(up) + ")");
                        t[c] = it->second;
                    }
                    phi->set_degeneracy_action(m, k, i, std::move(t));
                }
            }
        }
    }
    return BuiltPresheaf{phi, std::move(content), std::move(lookup)};
}

} // namespace nerf
