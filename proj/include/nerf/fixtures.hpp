#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nerf/cat.hpp"
#include "nerf/strict_ncat.hpp"
#include "nerf/weak2.hpp"

// Deterministic generators for the structures used across the test suites
// and exposed through the CLI `fixture` command.  Generators are the single
// source of truth for derived example values.

namespace nerf::fixtures {

FinCategory terminal_category();
FinCategory z2_delooping();
FinCategory z_delooping(int order);   // cyclic group Z/k, one object
FinCategory s3_delooping();
FinCategory arrow_category();         // 2 objects, one non-identity arrow
FinCategory discrete_category(int objects);
FinCategory contractible_groupoid(int objects);  // exactly one arrow between any two
FinCategory preorder_category(const std::vector<std::pair<int, int>>& relations, int objects);
FinCategory product_category(const FinCategory& a, const FinCategory& b);

// Seeded random finite categories (preorders and group deloopings mixed).
FinCategory random_category(uint64_t seed);

StrictNCategory strict1_from_category(const FinCategory& c);
// One-object strict 2-category with C_1 = Z/k and identity 2-cells.
StrictNCategory strict2_delooping(int order);
// C_1 = group G (cyclic k), 2-cells G x A with A = Z/l automorphisms.
StrictNCategory strict2_group_with_autos(int k, int l);
// Any finite category with identity 2-cells on top.
StrictNCategory strict2_from_category(const FinCategory& c);
// Degenerate tower: objects only.
StrictNCategory strict2_discrete(int objects);
// One object, C_1 = Z/2 and identity 2-cells.
StrictNCategory strict2_z2();
StrictNCategory strict3_z2();  // the same tower one level up

// One object, 1-cells Z/2, Aut(f) = Z/2 for every f, associator the
// non-trivial 3-cocycle of Z/2 with Z/2 coefficients; unitors identities.
Weak2Category weak_cocycle();
// Same tables with one associator value flipped (pentagon must fail).
Weak2Category weak_cocycle_broken();
// Trivial associator variant (a strict 2-category in weak clothing).
Weak2Category weak_trivial_cocycle();

// Constructed-violation presheaves for validator tests.
PresheafPtr broken_presheaf_action();       // simplicial identity broken at (1,1)
PresheafPtr broken_segal_injectivity();     // two 2-cells share a spine
PresheafPtr broken_segal_surjectivity();    // a composable pair has no filler
StrictNCategory broken_interchange();       // Godement fails at one quadruple

// Morphism fixtures between nerves (arity 1, bound `bound`).
struct MorphismFixture {
    std::string name;
    bool expected_equivalence;
    PresheafMorphism morphism;
};
std::vector<MorphismFixture> morphism_fixtures(int bound);

std::vector<std::string> fixture_names();

} // namespace nerf::fixtures
