#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nerf/homotopy.hpp"
#include "nerf/presheaf.hpp"
#include "nerf/strict_ncat.hpp"

// Weak 2-categories with the ten-axiom checker, the double nerve, the
// extraction of a weak 2-category from a 2-nerf, and strictification.

namespace nerf {

struct Weak2Category {
    std::vector<std::string> obj_names, arr_names, cell2_names;
    int c0 = 0, c1 = 0, c2 = 0;
    std::vector<int> s1, b1;  // C_1 -> C_0
    std::vector<int> e1;      // C_0 -> C_1
    std::vector<int> s2, b2;  // C_2 -> C_1
    std::vector<int> e2;      // C_1 -> C_2
    std::vector<std::vector<int>> comp1;  // comp1[f][g] = gf, -1 when not composable
    std::vector<std::vector<int>> vcomp;  // vcomp[a][b] = b . a (b after a)
    std::vector<std::vector<int>> hcomp;  // hcomp[a][b] = b * a (a over the first arrow)
    // assoc[f][g][h] : (hg)f => h(gf) for composable f,g,h; -1 otherwise
    std::vector<std::vector<std::vector<int>>> assoc;
    std::vector<int> runit;  // U(f) : f I_{s f} => f
    std::vector<int> lunit;  // V(f) : I_{b f} f => f

    int compose1(int f, int g) const;
    int vcompose(int a, int b) const;  // b after a
    int hcompose(int a, int b) const;  // b * a
    std::optional<int> vinverse(int a) const;

    std::string obj_name(int x) const;
    std::string arr_name(int f) const;
    std::string cell_name(int a) const;
};

struct Weak2Report {
    bool ok = true;
    std::string axiom;  // name of the first failing axiom
    std::string detail;
    explicit operator bool() const { return ok; }
};

Weak2Report validate_weak2(const Weak2Category& c);

// A strict 2-category viewed weakly (identity coherences).
Weak2Category weak2_from_strict(const StrictNCategory& c);

// Double nerve: cells at (m,n) are the coherence families
// (x_i, f^a_ij, lambda^{ab}_ij, eps^a_ijk).  Per-axis bounds; throws
// CapacityError when a cell set would exceed `capacity`.
PresheafPtr double_nerve(const Weak2Category& c, std::vector<int> bounds,
                         long long capacity = 2'000'000);

// Family layout at (m,n): [x_0..x_m | f^a_{ij} | lambda^{ab}_{ij} | eps^a_{ijk}],
// pairs and triples in lexicographic order, levels major.
BuiltPresheaf double_nerve_with_content(const Weak2Category& c, std::vector<int> bounds,
                                        long long capacity = 2'000'000);

// Extraction of a weak 2-category from a 2-nerf, with canonical sections
// (exact minimal-index fillers preferred).  Requires first-axis bound >= 3
// (associator) and second-axis bound >= 2 (vertical composition).
struct ExtractedWeak2 {
    Weak2Category cat;
    // section data: L2[f][g] = chosen 2-simplex in Phi(2,0) for each
    // composable spine, with the comparison pair witnessing the spine.
    std::vector<std::vector<int>> l2;
    std::vector<std::vector<std::array<int, 2>>> a2;  // pair of invertible 2-cells
};

ExtractedWeak2 extract_weak2(const PresheafPtr& phi, SectionOrder order = SectionOrder::MinIndex);

// Strictification: the strict 2-nerf S on the extracted cells, with
// comparison morphisms where they exist.  For genuinely weak inputs no
// strictly natural comparison exists in either direction (a parity
// obstruction; see the README), in which case the morphism is
// absent and `note` records the first non-naturality witness.
struct Strictification {
    PresheafPtr s;
    std::optional<PresheafMorphism> alpha;  // between Phi and S
    bool alpha_to_s = true;
    std::string alpha_note;
    std::optional<PresheafMorphism> beta;   // between double_nerve(extract(Phi)) and S
    bool beta_to_s = true;
    std::string beta_note;
    PresheafPtr double_nerve_of_extract;
};

Strictification strictify(const PresheafPtr& phi, long long capacity = 2'000'000);

} // namespace nerf
