#pragma once

#include <string>

#include "nerf/cat.hpp"
#include "nerf/presheaf.hpp"
#include "nerf/strict_ncat.hpp"
#include "nerf/weak2.hpp"

// Structure file format: one JSON document per structure with a "kind"
// header field.  Presheaf actions use the key grammar "d/k/i@M" and
// "e/k/i@M", where M is the multi-index of the action's input cells,
// k the 1-based axis and i the elementary index; the stored list maps
// cells at M to cells at M -/+ e_k.

namespace nerf::io {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string kind_of_file(const std::string& path);

PresheafPtr load_presheaf(const std::string& path);
void save_presheaf(const PresheafPtr& phi, const std::string& path);
std::string presheaf_to_string(const PresheafPtr& phi);
PresheafPtr presheaf_from_string(const std::string& text);

FinCategory load_category(const std::string& path, bool check_axioms = true);
void save_category(const FinCategory& c, const std::string& path);

StrictNCategory load_strict(const std::string& path, bool check_axioms = true);
void save_strict(const StrictNCategory& c, const std::string& path);

Weak2Category load_weak2(const std::string& path, bool check_axioms = true);
void save_weak2(const Weak2Category& c, const std::string& path);

// Morphism files carry components only; endpoints are supplied separately.
PresheafMorphism load_morphism(const std::string& path, const PresheafPtr& source,
                               const PresheafPtr& target);
void save_morphism(const PresheafMorphism& f, const std::string& path);

} // namespace nerf::io
