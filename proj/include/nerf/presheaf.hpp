#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "nerf/delta.hpp"

// Finite, degree-bounded presheaves on Delta^n.  A FinPresheaf stores, for
// every multi-index within its per-axis bounds, an indexed cell set and the
// actions of all elementary arrows whose codomain and domain are both in
// bounds.  Everything else (evaluation on arbitrary arrows, slices, fiber
// powers, Segal morphisms) is derived from that store.

namespace nerf {

struct ValidationReport {
    bool ok = true;
    std::string message;           // first violation, empty when ok
    MultiIndex at;                 // index where it happened
    explicit operator bool() const { return ok; }
};

class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class FinPresheaf;
using PresheafPtr = std::shared_ptr<const FinPresheaf>;

struct VecHash {
    size_t operator()(const std::vector<int>& v) const {
        size_t h = 1469598103934665603ull;
        for (int x : v) {
            h ^= static_cast<size_t>(x) + 0x9e3779b97f4a7c15ull;
            h *= 1099511628211ull;
        }
        return h;
    }
};
using CellLookup = std::unordered_map<std::vector<int>, int, VecHash>;

class FinPresheaf {
  public:
    FinPresheaf(int arity, std::vector<int> bounds);
    FinPresheaf(int arity, int uniform_bound);

    int arity() const { return n_; }
    const std::vector<int>& bounds() const { return bounds_; }
    bool within_bounds(const MultiIndex& m) const;
    const std::vector<MultiIndex>& all_indices() const { return indices_; }

    int ordinal(const MultiIndex& m) const;

    int cell_count(const MultiIndex& m) const;
    const std::vector<std::string>& labels(const MultiIndex& m) const;
    std::string cell_name(const MultiIndex& m, int cell) const;
    std::optional<int> cell_by_label(const MultiIndex& m, const std::string& label) const;

    void set_cells(const MultiIndex& m, int count, std::vector<std::string> labels = {});
    // Action of d^k_i : (M - e_k) -> M, as a function cells(M) -> cells(M - e_k).
    void set_face_action(const MultiIndex& m, int axis, int i, std::vector<int> table);
    // Action of e^k_i : (M + e_k) -> M, as a function cells(M) -> cells(M + e_k).
    void set_degeneracy_action(const MultiIndex& m, int axis, int i, std::vector<int> table);

    bool has_face_action(const MultiIndex& m, int axis, int i) const;
    bool has_degeneracy_action(const MultiIndex& m, int axis, int i) const;
    const std::vector<int>& face_action(const MultiIndex& m, int axis, int i) const;
    const std::vector<int>& degeneracy_action(const MultiIndex& m, int axis, int i) const;

    int apply_face(const MultiIndex& m, int axis, int i, int cell) const;
    int apply_degeneracy(const MultiIndex& m, int axis, int i, int cell) const;

    // Contravariant evaluation: mu : A -> B gives cells(B) -> cells(A).
    int evaluate(const ProductMap& mu, int cell) const;

    // Source and target of cells along `axis`: images of the vertex maps
    // delta_0 and delta_1 on that axis.
    int source_along(const MultiIndex& m, int axis, int cell) const;
    int target_along(const MultiIndex& m, int axis, int cell) const;

    ValidationReport validate() const;
    // Throws std::runtime_error when validation fails; caches the verdict.
    void ensure_validated() const;

    std::string describe() const;

  private:
    int n_;
    std::vector<int> bounds_;
    std::vector<MultiIndex> indices_;
    std::vector<int> strides_;

    struct Level {
        int count = -1;
        std::vector<std::string> labels;
        // faces[k-1][i], degens[k-1][i]; empty vector = not stored
        std::vector<std::vector<std::vector<int>>> faces;
        std::vector<std::vector<std::vector<int>>> degens;
    };
    std::vector<Level> levels_;
    mutable std::optional<bool> validated_;

    const Level& level(const MultiIndex& m) const;
    Level& level(const MultiIndex& m);
};

PresheafPtr terminal_presheaf(int arity, std::vector<int> bounds);
PresheafPtr empty_presheaf(int arity, std::vector<int> bounds);

// Slice at a prefix: Phi_M(N) = Phi(M, N) on the trailing axes.
PresheafPtr slice(const PresheafPtr& phi, const MultiIndex& prefix);

// m-fold fiber power of Phi_1 over Phi_0 along the first axis of an
// (p+1)-ary presheaf.  Cells at N are m-tuples of Phi(1,N) cells with
// b(x_i) = s(x_{i+1}); actions are componentwise.
struct FiberPower {
    PresheafPtr power;                                   // arity p
    std::vector<std::vector<std::vector<int>>> tuples;   // by power ordinal
    int factors = 0;
    int tuple_index(const MultiIndex& n, const std::vector<int>& tuple) const;

  private:
    friend FiberPower fiber_power(const PresheafPtr&, int);
    std::vector<CellLookup> lookup_;
};

FiberPower fiber_power(const PresheafPtr& phi, int m);

// Natural transformation between presheaves of equal arity and bounds.
struct PresheafMorphism {
    PresheafPtr source;
    PresheafPtr target;
    std::vector<std::vector<int>> components;  // by source ordinal

    int apply(const MultiIndex& m, int cell) const;
    ValidationReport validate_natural() const;
};

PresheafMorphism identity_morphism(const PresheafPtr& phi);
PresheafMorphism compose(const PresheafMorphism& g, const PresheafMorphism& f);

// The Segal morphism delta^[m]_M : Phi_{M,m} -> Phi_{M,1} x_{Phi_{M,0}} ...
// The struct keeps the slice, the fiber power and the spine morphism between
// them alive together.
struct SegalMap {
    PresheafPtr source;   // slice of Phi at (M, m)
    FiberPower target;    // m-fold fiber power of Phi_M
    PresheafMorphism spine;
};

SegalMap segal_map(const PresheafPtr& phi, const MultiIndex& prefix, int m);

// Interchange bijection on an m-tuple of m'-tuples drawn from a doubly
// fibered square of maps; returns the transposed m'-tuple of m-tuples.
// Compatibility of the grid is checked through the supplied boundary maps.
struct InterchangeSquare {
    std::function<int(int)> s1, b1;  // A -> B
    std::function<int(int)> s2, b2;  // A -> C
};
std::vector<std::vector<int>> interchange_gamma(const std::vector<std::vector<int>>& grid,
                                                const InterchangeSquare& maps);

// Shared builder for generated presheaves.  Content vectors are canonical
// encodings of cells; `apply` must implement the elementary actions on
// content.  Enumeration order fixes cell indices.
struct ContentBuilder {
    int arity = 0;
    std::vector<int> bounds;
    long long capacity = 2'000'000;  // max cells per index
    std::function<std::vector<std::vector<int>>(const MultiIndex&)> enumerate;
    std::function<std::vector<int>(const MultiIndex&, int axis, bool is_face, int i,
                                   const std::vector<int>&)> apply;
    std::function<std::string(const MultiIndex&, const std::vector<int>&)> label;
};

PresheafPtr build_presheaf(const ContentBuilder& builder);

// Same, but keeps the canonical content vectors for cell lookup.
struct BuiltPresheaf {
    PresheafPtr phi;
    std::vector<std::vector<std::vector<int>>> content;  // by ordinal
    std::vector<CellLookup> lookup;
    int find(const MultiIndex& m, const std::vector<int>& cell_content) const;
};

BuiltPresheaf build_presheaf_with_content(const ContentBuilder& builder);

} // namespace nerf
