#include "nerf/strict_ncat.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "nerf/cat.hpp"

namespace nerf {

std::string StrictNCategory::cell_name(int level, int c) const {
    if (static_cast<size_t>(level) < cell_names.size() &&
        static_cast<size_t>(c) < cell_names[static_cast<size_t>(level)].size())
        return cell_names[static_cast<size_t>(level)][static_cast<size_t>(c)];
    return "c" + std::to_string(level) + "_" + std::to_string(c);
}

int StrictNCategory::src_to(int from_level, int to_level, int c) const {
    for (int l = from_level; l > to_level; --l) c = src[static_cast<size_t>(l) - 1][static_cast<size_t>(c)];
    return c;
}

int StrictNCategory::tgt_to(int from_level, int to_level, int c) const {
    for (int l = from_level; l > to_level; --l) c = tgt[static_cast<size_t>(l) - 1][static_cast<size_t>(c)];
    return c;
}

int StrictNCategory::id_to(int from_level, int to_level, int c) const {
    for (int l = from_level; l < to_level; ++l) c = id[static_cast<size_t>(l)][static_cast<size_t>(c)];
    return c;
}

bool StrictNCategory::composable(int i, int j, int f, int g) const {
    return tgt_to(j, i, f) == src_to(j, i, g);
}

int StrictNCategory::compose(int i, int j, int f, int g) const {
    if (!composable(i, j, f, g)) throw std::invalid_argument("strict compose: not composable");
    int r = comp.at({i, j})[static_cast<size_t>(f)][static_cast<size_t>(g)];
    if (r < 0) throw std::runtime_error("strict compose: table hole");
    return r;
}

StrictReport validate_strict(const StrictNCategory& c) {
    auto fail = [](const std::string& s) { return StrictReport{false, s}; };
    int n = c.n;
    if (c.src.size() != static_cast<size_t>(n) || c.tgt.size() != static_cast<size_t>(n) ||
        c.id.size() != static_cast<size_t>(n))
        return fail("level table sizes do not match n");
    for (int i = 0; i < n; ++i) {
        if (c.src[static_cast<size_t>(i)].size() != c.tgt[static_cast<size_t>(i)].size() ||
            c.id[static_cast<size_t>(i)].size() != static_cast<size_t>(c.cells(i)))
            return fail("boundary table sizes wrong at level " + std::to_string(i));
        for (int x = 0; x < c.cells(i + 1); ++x)
            if (c.src[static_cast<size_t>(i)][static_cast<size_t>(x)] < 0 ||
                c.src[static_cast<size_t>(i)][static_cast<size_t>(x)] >= c.cells(i) ||
                c.tgt[static_cast<size_t>(i)][static_cast<size_t>(x)] < 0 ||
                c.tgt[static_cast<size_t>(i)][static_cast<size_t>(x)] >= c.cells(i))
            return fail("boundary entry out of range at level " + std::to_string(i + 1));
        for (int x = 0; x < c.cells(i); ++x)
            if (c.id[static_cast<size_t>(i)][static_cast<size_t>(x)] < 0 ||
                c.id[static_cast<size_t>(i)][static_cast<size_t>(x)] >= c.cells(i + 1))
                return fail("identity entry out of range at level " + std::to_string(i));
    }
    // globularity and identity sections
    for (int i = 1; i < n; ++i)
        for (int x = 0; x < c.cells(i + 1); ++x) {
            if (c.src_to(i, i - 1, c.src[static_cast<size_t>(i)][static_cast<size_t>(x)]) !=
                c.src_to(i, i - 1, c.tgt[static_cast<size_t>(i)][static_cast<size_t>(x)]))
                return fail("globularity s.s = s.b fails at level " + std::to_string(i + 1));
            if (c.tgt_to(i, i - 1, c.src[static_cast<size_t>(i)][static_cast<size_t>(x)]) !=
                c.tgt_to(i, i - 1, c.tgt[static_cast<size_t>(i)][static_cast<size_t>(x)]))
                return fail("globularity b.s = b.b fails at level " + std::to_string(i + 1));
        }
    for (int i = 0; i < n; ++i)
        for (int x = 0; x < c.cells(i); ++x) {
            int e = c.id[static_cast<size_t>(i)][static_cast<size_t>(x)];
            if (c.src[static_cast<size_t>(i)][static_cast<size_t>(e)] != x ||
                c.tgt[static_cast<size_t>(i)][static_cast<size_t>(e)] != x)
                return fail("identity section fails at level " + std::to_string(i));
        }
    // each (C_i, C_j, comp_ij) is a category, with boundary and identity
    // compatibility at the intermediate levels
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            auto it = c.comp.find({i, j});
            if (it == c.comp.end()) return fail("composition table (" + std::to_string(i) + "," + std::to_string(j) + ") missing");
            const auto& table = it->second;
            int cj = c.cells(j);
            if (table.size() != static_cast<size_t>(cj)) return fail("composition table wrong size");
            for (int f = 0; f < cj; ++f)
                for (int g = 0; g < cj; ++g) {
                    int r = table[static_cast<size_t>(f)][static_cast<size_t>(g)];
                    bool ok = c.composable(i, j, f, g);
                    if (!ok) {
                        if (r != -1) return fail("composite on non-composable pair");
                        continue;
                    }
                    if (r < 0 || r >= cj) return fail("composite missing");
                    if (c.src_to(j, i, r) != c.src_to(j, i, f) || c.tgt_to(j, i, r) != c.tgt_to(j, i, g))
                        return fail("composite endpoints wrong over level " + std::to_string(i));
                    for (int w = i + 1; w < j; ++w) {
                        if (c.src_to(j, w, r) !=
                            c.compose(i, w, c.src_to(j, w, f), c.src_to(j, w, g)))
                            return fail("source boundary not compatible with composition (" +
                                        std::to_string(i) + "," + std::to_string(j) + ") at level " +
                                        std::to_string(w));
                        if (c.tgt_to(j, w, r) !=
                            c.compose(i, w, c.tgt_to(j, w, f), c.tgt_to(j, w, g)))
                            return fail("target boundary not compatible with composition");
                    }
                }
            // identities and associativity
            for (int f = 0; f < cj; ++f) {
                int lf = c.id_to(i, j, c.src_to(j, i, f));
                int rf = c.id_to(i, j, c.tgt_to(j, i, f));
                if (c.compose(i, j, lf, f) != f) return fail("left identity law fails over level " + std::to_string(i));
                if (c.compose(i, j, f, rf) != f) return fail("right identity law fails over level " + std::to_string(i));
            }
            for (int f = 0; f < cj; ++f)
                for (int g = 0; g < cj; ++g) {
                    if (!c.composable(i, j, f, g)) continue;
                    for (int h = 0; h < cj; ++h) {
                        if (!c.composable(i, j, g, h)) continue;
                        if (c.compose(i, j, c.compose(i, j, f, g), h) !=
                            c.compose(i, j, f, c.compose(i, j, g, h)))
                            return fail("associativity fails over level " + std::to_string(i));
                    }
                }
            // identity map is a functor for lower compositions
            if (j < n)
                for (int f = 0; f < cj; ++f)
                    for (int g = 0; g < cj; ++g) {
                        if (!c.composable(i, j, f, g)) continue;
                        int e = c.id[static_cast<size_t>(j)][static_cast<size_t>(c.compose(i, j, f, g))];
                        int e2 = c.compose(i, j + 1, c.id[static_cast<size_t>(j)][static_cast<size_t>(f)],
                                           c.id[static_cast<size_t>(j)][static_cast<size_t>(g)]);
                        if (e != e2) return fail("identity not functorial over level " + std::to_string(i));
                    }
        }
    // Godement interchange between comp_{ik} and comp_{jk} for i < j < k
    for (int k = 2; k <= n; ++k)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int ck = c.cells(k);
                for (int f1 = 0; f1 < ck; ++f1)
                    for (int f2 = 0; f2 < ck; ++f2) {
                        if (!c.composable(j, k, f1, f2)) continue;
                        for (int g1 = 0; g1 < ck; ++g1) {
                            if (!c.composable(i, k, f1, g1)) continue;
                            for (int g2 = 0; g2 < ck; ++g2) {
                                if (!c.composable(j, k, g1, g2) || !c.composable(i, k, f2, g2)) continue;
                                int lhs = c.compose(i, k, c.compose(j, k, f1, f2), c.compose(j, k, g1, g2));
                                int rhs = c.compose(j, k, c.compose(i, k, f1, g1), c.compose(i, k, f2, g2));
                                if (lhs != rhs) {
                                    std::ostringstream os;
                                    os << "Godement interchange fails for (*_" << i << k << ", *_" << j << k
                                       << ") at (" << c.cell_name(k, f1) << "," << c.cell_name(k, f2) << ","
                                       << c.cell_name(k, g1) << "," << c.cell_name(k, g2) << ")";
                                    return fail(os.str());
                                }
                            }
                        }
                    }
            }
    return {};
}

namespace {

// Effective grid profile: axes before the first zero coordinate.
int effective_axes(const MultiIndex& m) {
    int j = 0;
    while (j < static_cast<int>(m.size()) && m[static_cast<size_t>(j)] >= 1) ++j;
    return j;
}

struct GridShape {
    std::vector<int> dims;  // m_1..m_j
    int total() const {
        int t = 1;
        for (int d : dims) t *= d;
        return t;
    }
    std::vector<int> unflatten(int pos) const {
        std::vector<int> idx(dims.size());
        for (int k = static_cast<int>(dims.size()) - 1; k >= 0; --k) {
            idx[static_cast<size_t>(k)] = pos % dims[static_cast<size_t>(k)];
            pos /= dims[static_cast<size_t>(k)];
        }
        return idx;
    }
    int flatten(const std::vector<int>& idx) const {
        int pos = 0;
        for (size_t k = 0; k < dims.size(); ++k) pos = pos * dims[k] + idx[k];
        return pos;
    }
};

GridShape shape_of(const MultiIndex& m) {
    GridShape s;
    int j = effective_axes(m);
    for (int k = 0; k < j; ++k) s.dims.push_back(m[static_cast<size_t>(k)]);
    return s;
}

} // namespace

PresheafPtr multi_nerve(const StrictNCategory& c, std::vector<int> bounds) {
    StrictReport sr = validate_strict(c);
    if (!sr.ok) throw std::invalid_argument("multi_nerve: invalid strict n-category: " + sr.detail);
    int n = c.n;
    if (static_cast<int>(bounds.size()) != n) throw std::invalid_argument("multi_nerve: bounds arity mismatch");
    if (n > 3) throw std::invalid_argument("multi_nerve: n <= 3 enforced (grid size explodes)");

    ContentBuilder b;
    b.arity = n;
    b.bounds = bounds;
    b.enumerate = [c](const MultiIndex& m) {
        GridShape shape = shape_of(m);
        int j = static_cast<int>(shape.dims.size());
        int total = shape.total();
        std::vector<std::vector<int>> out;
        std::vector<int> grid(static_cast<size_t>(total));
        std::function<void(int)> rec = [&](int pos) {
            if (pos == total) {
                out.push_back(grid);
                return;
            }
            std::vector<int> idx = shape.unflatten(pos);
            for (int cand = 0; cand < c.cells(j); ++cand) {
                bool ok = true;
                for (int k = 0; k < j && ok; ++k) {
                    if (idx[static_cast<size_t>(k)] == 0) continue;
                    auto prev = idx;
                    --prev[static_cast<size_t>(k)];
                    int neighbor = grid[static_cast<size_t>(shape.flatten(prev))];
                    if (c.tgt_to(j, k, neighbor) != c.src_to(j, k, cand)) ok = false;
                }
                if (ok) {
                    grid[static_cast<size_t>(pos)] = cand;
                    rec(pos + 1);
                }
            }
        };
        rec(0);
        return out;
    };
    b.apply = [c](const MultiIndex& m, int axis, bool is_face, int i, const std::vector<int>& cell) {
        GridShape shape = shape_of(m);
        int j = static_cast<int>(shape.dims.size());
        int k = axis;  // 1-based
        MultiIndex m2 = m;
        m2[static_cast<size_t>(k) - 1] += is_face ? -1 : 1;
        GridShape shape2 = shape_of(m2);
        int j2 = static_cast<int>(shape2.dims.size());
        std::vector<int> out(static_cast<size_t>(shape2.total()));
        if (k > j + 1 || (k > j2 && !is_face) || (is_face && k > j)) {
            // beyond the first zero: constant functor, identity on content
            return cell;
        }
        if (is_face) {
            int mk = m[static_cast<size_t>(k) - 1];
            if (mk == 1) {
                // vertex map to the boundary level: project to axes 1..k-1
                for (int pos = 0; pos < shape2.total(); ++pos) {
                    auto idx2 = shape2.unflatten(pos);
                    std::vector<int> idx(idx2.begin(), idx2.begin() + (k - 1));
                    idx.push_back(0);
                    for (int l = k; l < j; ++l) idx.push_back(0);
                    int entry = cell[static_cast<size_t>(shape.flatten(idx))];
                    // d^k_0 = delta_1 (target), d^k_1 = delta_0 (source)
                    out[static_cast<size_t>(pos)] =
                        (i == 0) ? c.tgt_to(j, k - 1, entry) : c.src_to(j, k - 1, entry);
                }
                return out;
            }
            for (int pos = 0; pos < shape2.total(); ++pos) {
                auto idx2 = shape2.unflatten(pos);
                if (i == 0 || i == mk) {
                    auto idx = idx2;
                    if (i == 0) ++idx[static_cast<size_t>(k) - 1];
                    out[static_cast<size_t>(pos)] = cell[static_cast<size_t>(shape.flatten(idx))];
                } else {
                    if (idx2[static_cast<size_t>(k) - 1] < i - 1) {
                        out[static_cast<size_t>(pos)] = cell[static_cast<size_t>(shape.flatten(idx2))];
                    } else if (idx2[static_cast<size_t>(k) - 1] == i - 1) {
                        auto left = idx2, right = idx2;
                        ++right[static_cast<size_t>(k) - 1];
                        out[static_cast<size_t>(pos)] =
                            c.compose(k - 1, j, cell[static_cast<size_t>(shape.flatten(left))],
                                      cell[static_cast<size_t>(shape.flatten(right))]);
                    } else {
                        auto idx = idx2;
                        ++idx[static_cast<size_t>(k) - 1];
                        out[static_cast<size_t>(pos)] = cell[static_cast<size_t>(shape.flatten(idx))];
                    }
                }
            }
            return out;
        }
        // degeneracy e^k_i
        if (k == j + 1) {
            // first zero axis acquires length 1: lift entries by iterated identities
            for (int pos = 0; pos < shape2.total(); ++pos) {
                auto idx2 = shape2.unflatten(pos);
                std::vector<int> idx(idx2.begin(), idx2.begin() + j);
                int entry = cell[static_cast<size_t>(shape.flatten(idx))];
                out[static_cast<size_t>(pos)] = c.id_to(j, j2, entry);
            }
            return out;
        }
        // k <= j: insert a degenerate slice after chain vertex i
        for (int pos = 0; pos < shape2.total(); ++pos) {
            auto idx2 = shape2.unflatten(pos);
            int ik = idx2[static_cast<size_t>(k) - 1];
            if (ik == i) {
                // the inserted slice: identity over the chain vertex at this prefix
                auto probe = idx2;
                int v;
                if (i == 0) {
                    probe[static_cast<size_t>(k) - 1] = 0;
                    for (int l = k; l < j; ++l) probe[static_cast<size_t>(l)] = 0;
                    v = c.src_to(j, k - 1, cell[static_cast<size_t>(shape.flatten(probe))]);
                } else {
                    probe[static_cast<size_t>(k) - 1] = i - 1;
                    for (int l = k; l < j; ++l) probe[static_cast<size_t>(l)] = 0;
                    v = c.tgt_to(j, k - 1, cell[static_cast<size_t>(shape.flatten(probe))]);
                }
                out[static_cast<size_t>(pos)] = c.id_to(k - 1, j, v);
            } else {
                auto idx = idx2;
                if (ik > i) --idx[static_cast<size_t>(k) - 1];
                out[static_cast<size_t>(pos)] = cell[static_cast<size_t>(shape.flatten(idx))];
            }
        }
        return out;
    };
    b.label = [c](const MultiIndex& m, const std::vector<int>& cell) {
        GridShape shape = shape_of(m);
        int j = static_cast<int>(shape.dims.size());
        std::string s = "[";
        for (size_t p = 0; p < cell.size(); ++p) s += (p ? " " : "") + c.cell_name(j, cell[p]);
        return s + "]";
    };
    return build_presheaf(b);
}

StrictNCategory strict_truncate(const StrictNCategory& c) {
    if (c.n < 1) throw std::invalid_argument("strict_truncate: n must be >= 1");
    int n = c.n;
    // isomorphism classes of (n-1)-cells through invertible n-cells
    FinCategory top;
    top.src = c.src[static_cast<size_t>(n) - 1];
    top.tgt = c.tgt[static_cast<size_t>(n) - 1];
    top.id = c.id[static_cast<size_t>(n) - 1];
    top.comp = c.comp.at({n - 1, n});
    for (int x = 0; x < c.cells(n - 1); ++x) top.object_names.push_back(c.cell_name(n - 1, x));
    for (int f = 0; f < c.cells(n); ++f) top.arrow_names.push_back(c.cell_name(n, f));
    IsoClasses ic = iso_classes(top);

    StrictNCategory out;
    out.n = n - 1;
    out.cell_names.assign(c.cell_names.begin(), c.cell_names.begin() + (n - 1));
    out.cell_names.push_back({});
    for (int rep : ic.representatives)
        out.cell_names.back().push_back("[" + c.cell_name(n - 1, rep) + "]");
    out.src.assign(c.src.begin(), c.src.begin() + (n - 1));
    out.tgt.assign(c.tgt.begin(), c.tgt.begin() + (n - 1));
    out.id.assign(c.id.begin(), c.id.begin() + (n - 1));
    if (n - 1 >= 1) {
        // top-level boundaries land in classes; representatives are
        // parallel within a class, so any choice works
        std::vector<int> new_src(static_cast<size_t>(ic.count())), new_tgt(static_cast<size_t>(ic.count()));
        for (int cls = 0; cls < ic.count(); ++cls) {
            int rep = ic.representatives[static_cast<size_t>(cls)];
            new_src[static_cast<size_t>(cls)] = c.src[static_cast<size_t>(n) - 2][static_cast<size_t>(rep)];
            new_tgt[static_cast<size_t>(cls)] = c.tgt[static_cast<size_t>(n) - 2][static_cast<size_t>(rep)];
        }
        out.src[static_cast<size_t>(n) - 2] = new_src;
        out.tgt[static_cast<size_t>(n) - 2] = new_tgt;
        std::vector<int>& new_id = out.id[static_cast<size_t>(n) - 2];
        for (int x = 0; x < c.cells(n - 2); ++x)
            new_id[static_cast<size_t>(x)] = ic.class_index(c.id[static_cast<size_t>(n) - 2][static_cast<size_t>(x)]);
    }
    for (int i = 0; i < n - 2; ++i)
        for (int j = i + 1; j <= n - 2; ++j) out.comp[{i, j}] = c.comp.at({i, j});
    // quotient compositions into the class level
    for (int i = 0; i < n - 1; ++i) {
        std::vector<std::vector<int>> q(static_cast<size_t>(ic.count()),
                                        std::vector<int>(static_cast<size_t>(ic.count()), -1));
        for (int f = 0; f < c.cells(n - 1); ++f)
            for (int g = 0; g < c.cells(n - 1); ++g) {
                if (!c.composable(i, n - 1, f, g)) continue;
                int cf = ic.class_index(f), cg = ic.class_index(g);
                int r = ic.class_index(c.compose(i, n - 1, f, g));
                int& slot = q[static_cast<size_t>(cf)][static_cast<size_t>(cg)];
                if (slot >= 0 && slot != r)
                    throw std::runtime_error("strict_truncate: quotient composition not well defined");
                slot = r;
            }
        out.comp[{i, n - 1}] = std::move(q);
    }
    StrictReport sr = validate_strict(out);
    if (!sr.ok) throw std::runtime_error("strict_truncate: result invalid: " + sr.detail);
    return out;
}

} // namespace nerf
