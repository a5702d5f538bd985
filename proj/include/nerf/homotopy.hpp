#pragma once

#include "nerf/cat.hpp"
#include "nerf/truncation.hpp"

// Component categories C_i(Phi) = T^{n-i} Phi_{I_{i-1}}, homotopy groups
// pi_i(Phi, f) = Aut_{C_i}(f), induced maps, and the change-of-basepoint
// isomorphism by whiskering.

namespace nerf {

enum class SectionOrder { MinIndex, MaxIndex };

struct ComponentCategory {
    int i = 1;
    FinCategory cat;              // objects ~ (i-1)-arrows, arrows ~ classes of i-arrows
    std::vector<int> obj_class;   // C_{i-1} cell -> object of cat (bijective for n-nerfs)
    std::vector<int> obj_rep;     // object of cat -> C_{i-1} cell
    std::vector<int> arrow_class; // C_i cell -> arrow of cat
    std::vector<int> arrow_rep;   // arrow of cat -> representative C_i cell
};

ComponentCategory component_category(const PresheafPtr& phi, int i);

// Composition of i-arrows with respect to (i-1)-arrows, through a chosen
// section of the Segal 2-level.  Returns the composed i-arrow cell.
int compose_i(const PresheafPtr& phi, int i, int f, int g, SectionOrder order);

struct HomotopyGroup {
    int i = 0;
    int base = 0;                  // object of C_i (an (i-1)-arrow cell)
    std::string base_label;
    std::vector<int> elements;     // arrows of C_i with src = tgt = base
    std::vector<std::string> element_labels;
    std::vector<std::vector<int>> table;  // table[a][b] = position of "b after a"
    int identity = 0;

    int order() const { return static_cast<int>(elements.size()); }
    ValidationReport check_group() const;
    bool abelian() const;
    int position_of(int arrow) const;
};

// Basepoint f is an object of C_i(Phi), i.e. a cell of Phi(I_{i-1}, 0_{n-i+1}).
HomotopyGroup homotopy_group(const PresheafPtr& phi, int i, int f);

// Iterated identity lift I^{i-j}_f of a j-arrow to an i-arrow basepoint.
int lift_basepoint(const PresheafPtr& phi, int j, int i, int f);

bool check_abelian(const HomotopyGroup& g);

struct GroupHom {
    HomotopyGroup dom, cod;
    std::vector<int> images;  // position in dom.elements -> position in cod.elements
    bool is_homomorphism() const;
    bool is_isomorphism() const;
};

GroupHom induced_pi(const PresheafMorphism& f, int i, int base);

struct PiEquivalenceReport {
    bool via_pi = true;        // all pi_i isomorphisms and pi_0 bijective
    bool via_outer = true;     // enumerative outer n-equivalence
    bool agree = true;
    std::string detail;
    bool decision() const { return via_pi; }
};

PiEquivalenceReport equivalence_via_pi(const PresheafMorphism& f);

// Change of basepoint along a 2-simplex tau of a 2-groupoid: an isomorphism
// pi_2(Phi, f) -> pi_2(Phi, h) with (f,g) the spine of tau and h its long
// edge, computed by conjugation with a whiskered comparison cell.
struct WhiskerIso {
    HomotopyGroup dom, cod;
    std::vector<int> images;  // positions
    bool is_isomorphism() const;
};

WhiskerIso whisker_iso(const PresheafPtr& phi, int tau, SectionOrder order = SectionOrder::MinIndex);

// The auxiliary 2-nerf A_i = T^{n-i} Phi_{I_{i-2}} used to transport
// whiskering to higher i.
PresheafPtr level_two_nerf(const PresheafPtr& phi, int i);

} // namespace nerf
