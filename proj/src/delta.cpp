#include "nerf/delta.hpp"

#include <sstream>
#include <stdexcept>

namespace nerf {

std::string to_string(const MultiIndex& m) {
    std::string s;
    for (size_t i = 0; i < m.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(m[i]);
    }
    return s;
}

MultiIndex parse_multi_index(const std::string& s) {
    MultiIndex m;
    if (s.empty()) return m;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) m.push_back(std::stoi(tok));
    return m;
}

MonotoneMap::MonotoneMap(int src_, int dst_, std::vector<int> vals)
    : src(src_), dst(dst_), values(std::move(vals)) {
    if (src < 0 || dst < 0 || values.size() != static_cast<size_t>(src) + 1)
        throw std::invalid_argument("monotone map: bad shape");
    int prev = 0;
    for (int v : values) {
        if (v < prev || v > dst) throw std::invalid_argument("monotone map: not monotone or out of range");
        prev = v;
    }
}

bool MonotoneMap::is_identity() const {
    if (src != dst) return false;
    for (int i = 0; i <= src; ++i)
        if (values[static_cast<size_t>(i)] != i) return false;
    return true;
}

MonotoneMap identity_map(int m) {
    std::vector<int> v(static_cast<size_t>(m) + 1);
    for (int i = 0; i <= m; ++i) v[static_cast<size_t>(i)] = i;
    return MonotoneMap(m, m, std::move(v));
}

MonotoneMap face_map(int m, int i) {
    if (m < 1 || i < 0 || i > m) throw std::invalid_argument("face_map: index out of range");
    std::vector<int> v;
    v.reserve(static_cast<size_t>(m));
    for (int j = 0; j <= m - 1; ++j) v.push_back(j < i ? j : j + 1);
    return MonotoneMap(m - 1, m, std::move(v));
}

MonotoneMap degeneracy_map(int m, int i) {
    if (i < 0 || i > m) throw std::invalid_argument("degeneracy_map: index out of range");
    std::vector<int> v;
    v.reserve(static_cast<size_t>(m) + 2);
    for (int j = 0; j <= m + 1; ++j) v.push_back(j <= i ? j : j - 1);
    return MonotoneMap(m + 1, m, std::move(v));
}

MonotoneMap vertex_map(int m, int i) {
    if (i < 0 || i > m) throw std::invalid_argument("vertex_map: index out of range");
    return MonotoneMap(0, m, {i});
}

MonotoneMap edge_map(int m, int i, int j) {
    if (i < 0 || j < i || j > m) throw std::invalid_argument("edge_map: bad indices");
    return MonotoneMap(1, m, {i, j});
}

MonotoneMap simplex_map(int m, const std::vector<int>& vertices) {
    if (vertices.empty()) throw std::invalid_argument("simplex_map: empty vertex list");
    return MonotoneMap(static_cast<int>(vertices.size()) - 1, m, vertices);
}

MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g) {
    if (g.dst != f.src) throw std::invalid_argument("compose: mismatched levels");
    std::vector<int> v;
    v.reserve(g.values.size());
    for (int x : g.values) v.push_back(f.values[static_cast<size_t>(x)]);
    return MonotoneMap(g.src, f.dst, std::move(v));
}

Factorization factorize(const MonotoneMap& sigma) {
    Factorization out;
    // Faces: elements of [dst] not hit, in decreasing order.  The first
    // factor d_{i1} has codomain [dst], the next [dst-1], and so on; the
    // missed elements must be re-indexed as outer faces are peeled off.
    std::vector<bool> hit(static_cast<size_t>(sigma.dst) + 1, false);
    for (int v : sigma.values) hit[static_cast<size_t>(v)] = true;
    std::vector<int> missed;
    for (int v = sigma.dst; v >= 0; --v)
        if (!hit[static_cast<size_t>(v)]) missed.push_back(v);
    int level = sigma.dst;
    for (int v : missed) {
        // Decreasing order means smaller missed values are unaffected by
        // the faces already removed above them.
        out.faces.push_back({level, v});
        --level;
    }
    // Degeneracies: j with sigma(j) = sigma(j+1), increasing.  Factor
    // e_{j1} has domain [src - t + 1], ..., e_{jt} has domain [src].
    std::vector<int> repeats;
    for (int j = 0; j + 1 <= sigma.src; ++j)
        if (sigma.values[static_cast<size_t>(j)] == sigma.values[static_cast<size_t>(j) + 1]) repeats.push_back(j);
    int t = static_cast<int>(repeats.size());
    for (int idx = 0; idx < t; ++idx) {
        // e_{j_k} sits at domain level src - t + 1 + k, and the later
        // repeats (which happen at higher positions) have not yet been
        // collapsed below it; the written index j_k needs no shift because
        // collapses strictly above position j_k do not move it.
        out.degeneracies.push_back({sigma.src - t + 1 + idx, repeats[static_cast<size_t>(idx)]});
    }
    return out;
}

MonotoneMap recompose(const Factorization& f, int src, int dst) {
    MonotoneMap acc = identity_map(src);
    // Apply degeneracies right-to-left (e_{jt} first), then faces.
    for (auto it = f.degeneracies.rbegin(); it != f.degeneracies.rend(); ++it)
        acc = compose(degeneracy_map(it->level - 1, it->index), acc);
    for (auto it = f.faces.rbegin(); it != f.faces.rend(); ++it)
        acc = compose(face_map(it->level, it->index), acc);
    if (acc.dst != dst) throw std::invalid_argument("recompose: wrong target level");
    return acc;
}

MultiIndex ProductMap::source() const {
    MultiIndex m;
    m.reserve(components.size());
    for (const auto& c : components) m.push_back(c.src);
    return m;
}

MultiIndex ProductMap::target() const {
    MultiIndex m;
    m.reserve(components.size());
    for (const auto& c : components) m.push_back(c.dst);
    return m;
}

bool ProductMap::is_identity() const {
    for (const auto& c : components)
        if (!c.is_identity()) return false;
    return true;
}

ProductMap identity_product(const MultiIndex& m) {
    ProductMap p;
    p.components.reserve(m.size());
    for (int mi : m) p.components.push_back(identity_map(mi));
    return p;
}

ProductMap axis_map(const MultiIndex& m, int axis, const MonotoneMap& f) {
    int n = static_cast<int>(m.size());
    if (axis < 1 || axis > n) throw std::invalid_argument("axis_map: axis out of range");
    if (m[static_cast<size_t>(axis) - 1] != f.dst)
        throw std::invalid_argument("axis_map: component does not land at M");
    ProductMap p = identity_product(m);
    p.components[static_cast<size_t>(axis) - 1] = f;
    return p;
}

ProductMap product_elementary(const MultiIndex& m, int axis, ElementaryKind kind, int i, int j) {
    int n = static_cast<int>(m.size());
    if (axis < 1 || axis > n) throw std::invalid_argument("product_elementary: axis out of range");
    int mk = m[static_cast<size_t>(axis) - 1];
    switch (kind) {
        case ElementaryKind::Face: return axis_map(m, axis, face_map(mk, i));
        case ElementaryKind::Degeneracy: return axis_map(m, axis, degeneracy_map(mk, i));
        case ElementaryKind::Vertex: return axis_map(m, axis, vertex_map(mk, i));
        case ElementaryKind::Edge: return axis_map(m, axis, edge_map(mk, i, j));
    }
    throw std::logic_error("product_elementary: bad kind");
}

ProductMap compose(const ProductMap& f, const ProductMap& g) {
    if (f.arity() != g.arity()) throw std::invalid_argument("compose: arity mismatch");
    ProductMap p;
    p.components.reserve(f.components.size());
    for (size_t k = 0; k < f.components.size(); ++k)
        p.components.push_back(compose(f.components[k], g.components[k]));
    return p;
}

} // namespace nerf
