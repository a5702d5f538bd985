#pragma once

#include "nerf/truncation.hpp"

// Inner and outer k-equivalence.  Inner: parallel (n-k)-arrows with the
// same t^k class.  Outer: a morphism with the h-lift property for every
// h <= k (existence of fillers up to inner h-equivalence, uniqueness up to
// inner h-equivalence), plus essential surjectivity on objects when k = n.

namespace nerf {

struct EquivalenceWitness {
    int h = 0;
    std::string u, v, w;
    std::string reason;
};

struct EquivalenceReport {
    std::string kind;  // "inner" or "outer"
    int k = 0;
    bool verdict = true;
    std::vector<EquivalenceWitness> witnesses;
    explicit operator bool() const { return verdict; }
    std::string summary() const;
};

// Both arrows live at (I_{n-k}, 0_k); they must be parallel when k < n.
bool inner_equivalent(const TruncationTower& tower, int k, int u, int v);

EquivalenceReport is_outer_k_equivalence(const PresheafMorphism& f, int k);

// Hom-class maps G^{u,v}_i between component categories, with bijectivity
// verdicts, and the characterization "all G bijective and T^n F bijective".
struct HomMapAudit {
    struct Entry {
        int i;
        int u, v;
        bool bijective;
        int dom_size, cod_size;
    };
    std::vector<Entry> entries;
    bool tn_bijective = true;
    bool all_bijective() const;
};

HomMapAudit hom_class_maps(const PresheafMorphism& f);

// Characterization fast path: n-equivalence iff every hom-class map
// G^{u,v} and the top class map T^n F are bijective.
bool outer_equivalence_via_hom_maps(const PresheafMorphism& f);

} // namespace nerf
