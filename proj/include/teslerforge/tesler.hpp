#ifndef TESLERFORGE_TESLER_HPP
#define TESLERFORGE_TESLER_HPP

#include <utility>
#include <vector>

#include "teslerforge/core.hpp"

namespace teslerforge::tesler {

inline constexpr int kDefaultMaxN = 8;

/// All vertices of Tes_n(a) for a >= 0, via the support characterization:
/// a point is a vertex exactly when each row holds at most one nonzero
/// entry. Patterns are solved top-down from the hook sum equations and
/// deduplicated by point value; output is sorted lexicographically.
std::vector<UpperTri> tesler_vertices(const HookVector& a, int max_n = kDefaultMaxN);

/// Vertex adjacency in Tes_n(a): every row of supp(w) must arise from the
/// matching row of supp(v) by exactly one of
///   keep the row / delete its 1 / create a 1 in a zero row / move the 1,
/// with the move occurring in precisely one row.
bool are_adjacent(const UpperTri& v, const UpperTri& w);

/// Chain of positions obtained by following the unique nonzero entry of
/// each successive row, starting from row k, until it stabilizes on the
/// diagonal; `matrix` is its 0/1 indicator. Its hook vector is e_k.
struct DepChain {
    int start_row;
    std::vector<std::pair<int, int>> chain;
    UpperTri matrix;

    DepChain() : start_row(0), matrix(1) {}
};

DepChain dep_chain(const UpperTri& v, int k);

/// Edge vector w - v between adjacent vertices. Internally cross-checked
/// against c (D_w(k) - D_v(k)) where k is the first row on which the
/// supports differ and c the unique nonzero entry of row k; a mismatch
/// would be a formula_violation and must never fire.
UpperTri edge_vector(const UpperTri& v, const UpperTri& w);

/// The unique point of Tes_n(a) whose support is dominated by supp(v),
/// for a vertex v with exactly one nonzero per row. Always a vertex of
/// Tes_n(a).
UpperTri support_map_vertex(const UpperTri& v, const HookVector& a);

/// Two members of Tes_n(a) that jointly attain every coordinate minimum:
/// first the diagonal matrix of a, second the prefix-sum matrix supported
/// on the superdiagonal and (n,n).
std::pair<UpperTri, UpperTri> tightness_witnesses(const HookVector& a);

}  // namespace teslerforge::tesler

#endif
