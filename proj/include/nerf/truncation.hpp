#pragma once

#include "nerf/cat.hpp"
#include "nerf/presheaf.hpp"

// Truncation calculus: the truncatability predicates, T Phi with its class
// maps t, iterated towers, and pi_0.  Truncation always eats the last axis;
// slices fix a prefix of leading axes.

namespace nerf {

struct TruncatabilityReport {
    bool ok = true;
    MultiIndex failing_index;  // (n-1)-index N whose last-axis slice is not a category
    std::string reason;
    explicit operator bool() const { return ok; }
};

TruncatabilityReport is_one_truncatable(const PresheafPtr& phi);

struct Truncation {
    PresheafPtr total;                        // T Phi, arity n-1
    std::vector<std::vector<int>> class_map;  // t : Phi(N,0) -> TPhi(N), by TPhi ordinal
    PresheafPtr base;                         // Phi

    int t(const MultiIndex& n_index, int cell_at_n0) const;
};

Truncation truncate(const PresheafPtr& phi);

struct TruncationTower {
    PresheafPtr base;
    std::vector<PresheafPtr> levels;             // levels[h] = T^h Phi, levels[0] = base
    std::vector<std::vector<std::vector<int>>> class_maps;  // class_maps[h]: level h-1 (N,0) -> level h (N)

    int height() const { return static_cast<int>(levels.size()) - 1; }
    // t^h : Phi(M, 0_h) -> T^h Phi(M) for a multi-index M of arity n-h.
    int class_at(int h, const MultiIndex& m, int cell) const;
};

struct TowerError : std::runtime_error {
    int failing_level;
    MultiIndex failing_index;
    TowerError(int level, MultiIndex idx, const std::string& msg)
        : std::runtime_error(msg), failing_level(level), failing_index(std::move(idx)) {}
};

TruncationTower truncation_tower(const PresheafPtr& phi, int k);

// pi_0 = the single cell set of T^n Phi.
std::vector<std::string> pi0(const PresheafPtr& phi);
int pi0_count(const PresheafPtr& phi);

// T on morphisms: TF(t(x)) = t(F(x)); throws if not well defined.
PresheafMorphism truncate_morphism(const PresheafMorphism& f, const Truncation& tsrc,
                                   const Truncation& tdst);

} // namespace nerf
