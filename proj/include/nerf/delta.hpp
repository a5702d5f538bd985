#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Combinatorics of the simplex category Delta and its n-fold product.
//
// Objects [m] = {0,...,m} are represented by the integer m.  Arrows are
// weakly monotone value tables.  Every arrow factors uniquely as
//   sigma = d_{i1} ... d_{is} . e_{j1} ... e_{jt}
// with i's strictly decreasing (the elements of the codomain missed by
// sigma) and j's strictly increasing (the j with sigma(j) = sigma(j+1)).

namespace nerf {

using MultiIndex = std::vector<int>;

std::string to_string(const MultiIndex& m);
MultiIndex parse_multi_index(const std::string& s);

// Weakly monotone map [src] -> [dst]; values has src+1 entries in {0..dst}.
struct MonotoneMap {
    int src = 0;
    int dst = 0;
    std::vector<int> values;

    MonotoneMap() = default;
    MonotoneMap(int src_, int dst_, std::vector<int> vals);

    bool is_identity() const;
    int operator()(int i) const { return values[static_cast<size_t>(i)]; }
    bool operator==(const MonotoneMap& o) const = default;
};

MonotoneMap identity_map(int m);
// d_i : [m-1] -> [m], skips i (0 <= i <= m, m >= 1).
MonotoneMap face_map(int m, int i);
// e_i : [m+1] -> [m], repeats i (0 <= i <= m).
MonotoneMap degeneracy_map(int m, int i);
// delta_i : [0] -> [m], picks vertex i.
MonotoneMap vertex_map(int m, int i);
// delta_ij : [1] -> [m], 0 -> i, 1 -> j (i <= j).
MonotoneMap edge_map(int m, int i, int j);
// delta on an arbitrary weakly increasing vertex list: [k] -> [m].
MonotoneMap simplex_map(int m, const std::vector<int>& vertices);

// compose(f, g) = f after g, for g : [a]->[b], f : [b]->[c].
MonotoneMap compose(const MonotoneMap& f, const MonotoneMap& g);

// One factor of the canonical decomposition.  For faces, `level` is the
// codomain: d_index : [level-1] -> [level].  For degeneracies it is the
// domain: e_index : [level] -> [level-1].
struct ElementaryFactor {
    int level = 0;
    int index = 0;
    bool operator==(const ElementaryFactor&) const = default;
};

struct Factorization {
    std::vector<ElementaryFactor> faces;        // indices strictly decreasing
    std::vector<ElementaryFactor> degeneracies; // indices strictly increasing
};

Factorization factorize(const MonotoneMap& sigma);
MonotoneMap recompose(const Factorization& f, int src, int dst);

// Arrow of Delta^n, one monotone component per axis.
struct ProductMap {
    std::vector<MonotoneMap> components;

    int arity() const { return static_cast<int>(components.size()); }
    MultiIndex source() const;
    MultiIndex target() const;
    bool is_identity() const;
};

ProductMap identity_product(const MultiIndex& m);
// Identity on all axes except `axis` (1-based), which carries `f`.
// M is the codomain multi-index; M[axis-1] must equal f.dst.
ProductMap axis_map(const MultiIndex& m, int axis, const MonotoneMap& f);

enum class ElementaryKind { Face, Degeneracy, Vertex, Edge };

// d^k_i, e^k_i, delta^k_i, delta^k_ij at codomain M (axis k 1-based).
ProductMap product_elementary(const MultiIndex& m, int axis, ElementaryKind kind,
                              int i, int j = -1);

ProductMap compose(const ProductMap& f, const ProductMap& g);

} // namespace nerf
