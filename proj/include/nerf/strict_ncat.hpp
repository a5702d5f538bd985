#pragma once

#include <map>
#include <string>
#include <vector>

#include "nerf/presheaf.hpp"

// Strict n-categories with Godement interchange and their multi-nerves.

namespace nerf {

struct StrictNCategory {
    int n = 0;
    std::vector<std::vector<std::string>> cell_names;  // levels 0..n
    std::vector<std::vector<int>> src, tgt;            // src[i]: C_{i+1} -> C_i
    std::vector<std::vector<int>> id;                  // id[i]: C_i -> C_{i+1}
    // comp[{i,j}]: composition over C_i of j-cells (0 <= i < j <= n),
    // dense |C_j| x |C_j| with -1 on non-composable pairs.
    std::map<std::pair<int, int>, std::vector<std::vector<int>>> comp;

    int cells(int level) const {
        if (level == 0)
            return static_cast<int>(id.empty() ? cell_names.at(0).size() : id[0].size());
        return static_cast<int>(src[static_cast<size_t>(level) - 1].size());
    }
    std::string cell_name(int level, int c) const;

    // iterated boundaries down to `level`
    int src_to(int from_level, int to_level, int c) const;
    int tgt_to(int from_level, int to_level, int c) const;
    // iterated identity up to `level`
    int id_to(int from_level, int to_level, int c) const;
    // g after f over level i, both at level j
    int compose(int i, int j, int f, int g) const;
    bool composable(int i, int j, int f, int g) const;
};

struct StrictReport {
    bool ok = true;
    std::string detail;
    explicit operator bool() const { return ok; }
};

StrictReport validate_strict(const StrictNCategory& c);

// Iterated fiber-power nerve; a strict n-nerf by construction.
PresheafPtr multi_nerve(const StrictNCategory& c, std::vector<int> bounds);

// T C: drop C_n, quotient C_{n-1} by isomorphism (over C_{n-2} composition).
StrictNCategory strict_truncate(const StrictNCategory& c);

} // namespace nerf
