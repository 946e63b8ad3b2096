#include "teslerforge/tesler.hpp"

#include <algorithm>

namespace teslerforge::tesler {

namespace {

void require_nonnegative(const HookVector& a) {
    for (const Rat& x : a) {
        if (x < 0) throw Error(errc::negative_input, "hook sum vector must be nonnegative");
    }
}

/// Vertex membership test for Tes_n(hook_vector(v)): nonnegative entries,
/// at most one nonzero per row, nonnegative hook sums.
void require_vertex(const UpperTri& v) {
    if (!v.all_nonnegative()) throw Error(errc::not_a_vertex, "vertex entries must be nonnegative");
    for (int i = 1; i <= v.n(); ++i) {
        int nonzero = 0;
        for (int j = i; j <= v.n(); ++j) nonzero += v.at(i, j) != 0 ? 1 : 0;
        if (nonzero > 1) {
            throw Error(errc::not_a_vertex, "a vertex has at most one nonzero entry per row");
        }
    }
    for (int i = 1; i <= v.n(); ++i) {
        if (hook_sum(v, i) < 0) {
            throw Error(errc::not_a_vertex, "vertex hook sums must be nonnegative");
        }
    }
}

/// Column of the unique nonzero entry of row k, or 0 for a zero row.
int row_pivot(const UpperTri& v, int k) {
    for (int j = k; j <= v.n(); ++j) {
        if (v.at(k, j) != 0) return j;
    }
    return 0;
}

// Row-by-row support pattern walk. Each row either stays zero (admissible
// only when the forced value is zero) or places its single entry in one
// column; the hook sum equation pins the value either way.
void walk_patterns(const HookVector& a, int row, UpperTri& partial, std::vector<UpperTri>& out) {
    const int n = static_cast<int>(a.size());
    if (row > n) {
        out.push_back(partial);
        return;
    }
    Rat incoming = 0;
    for (int j = 1; j < row; ++j) incoming += partial.at(j, row);
    const Rat value = a[row - 1] + incoming;

    if (value == 0) {
        // a zero entry and a zero row continue identically; one branch suffices
        walk_patterns(a, row + 1, partial, out);
        return;
    }
    for (int col = row; col <= n; ++col) {
        partial.set(row, col, value);
        walk_patterns(a, row + 1, partial, out);
        partial.set(row, col, Rat(0));
    }
}

}  // namespace

std::vector<UpperTri> tesler_vertices(const HookVector& a, int max_n) {
    require_nonnegative(a);
    const int n = static_cast<int>(a.size());
    if (n < 1) throw Error(errc::size_mismatch, "hook sum vector must be nonempty");
    if (n > max_n) {
        throw Error(errc::max_n_exceeded,
                    "n = " + std::to_string(n) + " exceeds the enumeration cap " +
                        std::to_string(max_n));
    }
    std::vector<UpperTri> out;
    UpperTri partial(n);
    walk_patterns(a, 1, partial, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool are_adjacent(const UpperTri& v, const UpperTri& w) {
    if (v.n() != w.n()) throw Error(errc::size_mismatch, "matrix sizes differ");
    require_vertex(v);
    require_vertex(w);
    if (hook_vector(v) != hook_vector(w)) {
        throw Error(errc::not_a_vertex, "vertices belong to different Tesler polytopes");
    }

    int moves = 0;
    for (int k = 1; k <= v.n(); ++k) {
        const int pv = row_pivot(v, k);
        const int pw = row_pivot(w, k);
        if (pv == pw) continue;          // row kept (possibly both zero)
        if (pv != 0 && pw != 0) ++moves; // the 1 moved within the row
        // pv == 0 or pw == 0: a 1 created in or deleted from a zero row.
    }
    return moves == 1;
}

DepChain dep_chain(const UpperTri& v, int k) {
    require_vertex(v);
    if (k < 1 || k > v.n()) throw Error(errc::index_out_of_range, "row index out of range");
    if (row_pivot(v, k) == 0) throw Error(errc::zero_row, "row k of the vertex is zero");

    DepChain d;
    d.start_row = k;
    d.matrix = UpperTri(v.n());
    int cur = k;
    int nxt = row_pivot(v, cur);
    d.chain.emplace_back(cur, nxt);
    d.matrix.set(cur, nxt, Rat(1));
    while (nxt != cur) {
        cur = nxt;
        nxt = row_pivot(v, cur);
        if (nxt == 0) {
            // Unreachable for a genuine vertex: a nonzero column entry above
            // the diagonal forces the row to be nonzero.
            throw Error(errc::formula_violation, "dependency chain hit a zero row");
        }
        d.chain.emplace_back(cur, nxt);
        d.matrix.set(cur, nxt, Rat(1));
    }
    return d;
}

UpperTri edge_vector(const UpperTri& v, const UpperTri& w) {
    if (!are_adjacent(v, w)) {
        throw Error(errc::not_adjacent, "vertices are not adjacent");
    }
    int k = 0;
    for (int i = 1; i <= v.n() && k == 0; ++i) {
        if (row_pivot(v, i) != row_pivot(w, i)) k = i;
    }
    if (row_pivot(v, k) == 0 || row_pivot(w, k) == 0) {
        throw Error(errc::formula_violation, "first differing row is not a moved row");
    }
    const Rat c = v.at(k, row_pivot(v, k));
    if (w.at(k, row_pivot(w, k)) != c) {
        throw Error(errc::formula_violation, "moved entries of adjacent vertices differ");
    }

    const UpperTri difference = w - v;
    const UpperTri formula =
        (dep_chain(w, k).matrix - dep_chain(v, k).matrix).scaled(c);
    if (difference != formula) {
        throw Error(errc::formula_violation, "edge vector disagrees with the chain formula");
    }
    return difference;
}

UpperTri support_map_vertex(const UpperTri& v, const HookVector& a) {
    require_vertex(v);
    require_nonnegative(a);
    if (static_cast<int>(a.size()) != v.n()) {
        throw Error(errc::size_mismatch, "hook sum vector size does not match the vertex");
    }
    for (int i = 1; i <= v.n(); ++i) {
        if (row_pivot(v, i) == 0) {
            throw Error(errc::not_a_vertex,
                        "the vertex must have exactly one nonzero entry per row");
        }
    }
    UpperTri out(v.n());
    for (int i = 1; i <= v.n(); ++i) {
        Rat incoming = 0;
        for (int j = 1; j < i; ++j) incoming += out.at(j, i);
        out.set(i, row_pivot(v, i), a[i - 1] + incoming);
    }
    return out;
}

std::pair<UpperTri, UpperTri> tightness_witnesses(const HookVector& a) {
    require_nonnegative(a);
    const int n = static_cast<int>(a.size());
    if (n < 1) throw Error(errc::size_mismatch, "hook sum vector must be nonempty");

    UpperTri diag(n);
    for (int i = 1; i <= n; ++i) diag.set(i, i, a[i - 1]);

    UpperTri chain(n);
    Rat prefix = 0;
    for (int i = 1; i < n; ++i) {
        prefix += a[i - 1];
        chain.set(i, i + 1, prefix);
    }
    chain.set(n, n, prefix + a[n - 1]);
    return {diag, chain};
}

}  // namespace teslerforge::tesler
