#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nerf/presheaf.hpp"

// Finite categories and the dictionary with 1-nerves: nerve construction,
// the Segal bijectivity test, category extraction, and isomorphism classes
// of objects.

namespace nerf {

struct FinCategory {
    std::vector<std::string> object_names;
    std::vector<std::string> arrow_names;
    std::vector<int> src, tgt;       // arrow -> object
    std::vector<int> id;             // object -> arrow
    std::vector<std::vector<int>> comp;  // comp[f][g] = g.f when tgt(f)=src(g), else -1

    int objects() const { return static_cast<int>(id.size()); }
    int arrows() const { return static_cast<int>(src.size()); }
    // g after f; throws when not composable.
    int compose(int f, int g) const;
    bool composable(int f, int g) const { return tgt[static_cast<size_t>(f)] == src[static_cast<size_t>(g)]; }

    ValidationReport validate() const;
    std::string object_name(int x) const;
    std::string arrow_name(int f) const;
};

// Nerve as an arity-1 presheaf with cells at m = composable chains
// (f_1,...,f_m), spine-first.
PresheafPtr nerve(const FinCategory& c, int bound);

struct OneNerveReport {
    bool ok = true;
    int m = 0;                 // failing level
    std::string reason;        // injectivity/surjectivity witness
    explicit operator bool() const { return ok; }
};

// Segal maps bijective for 2 <= m <= bound.
OneNerveReport is_one_nerve(const PresheafPtr& phi);

FinCategory extract_category(const PresheafPtr& phi);

struct IsoClasses {
    std::vector<int> class_of;       // object -> minimal representative
    std::vector<int> representatives;  // distinct reps, increasing
    int count() const { return static_cast<int>(representatives.size()); }
    int class_index(int object) const;  // position of the class in representatives
};

IsoClasses iso_classes(const FinCategory& c);

// Invertibility helper: arrows g with gf = id and fg = id.
std::optional<int> find_inverse(const FinCategory& c, int f);

bool categories_isomorphic_strictly(const FinCategory& a, const FinCategory& b);

} // namespace nerf
