#pragma once

#include "nerf/equivalence.hpp"
#include "nerf/presheaf.hpp"

// The headline predicates: n-nerf (troncability + axioms C1/C2), strict
// n-nerf (all Segal maps bijective) and n-groupoid (all component
// categories are groupoids).

namespace nerf {

struct NerfReport {
    bool ok = true;
    bool truncatable = true;
    std::string failed_axiom;  // "truncatable", "constant-slices", "segal-equivalence"
    std::string detail;
    MultiIndex at;
    explicit operator bool() const { return ok; }
    std::string summary() const;
};

NerfReport is_n_nerf(const PresheafPtr& phi);

struct StrictNerfReport {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

StrictNerfReport is_strict_nerf(const PresheafPtr& phi);

struct GroupoidReport {
    bool ok = true;
    bool is_nerf = true;
    int failing_level = 0;    // i with C_i not a groupoid
    std::string detail;       // offending arrow
    explicit operator bool() const { return ok; }
};

GroupoidReport is_n_groupoid(const PresheafPtr& phi);

} // namespace nerf
