#ifndef TESLERFORGE_CORE_HPP
#define TESLERFORGE_CORE_HPP

#include <cstdint>
#include <vector>

#include "teslerforge/polyhedra.hpp"
#include "teslerforge/rational.hpp"

namespace teslerforge {

/// Coordinates for the edge space of the complete DAG on n+1 nodes,
/// written as n x n upper triangular matrices. Entry (i,i) carries the
/// edge (i, n+1) and entry (i,j), i < j <= n, the edge (i,j). Indices are
/// 1-based throughout; storage is row-major (i,i)..(i,n).
inline std::size_t tri_count(int n) {
    return static_cast<std::size_t>(n) * (n + 1) / 2;
}

inline std::size_t tri_offset(int n, int i, int j) {
    return static_cast<std::size_t>(i - 1) * n - static_cast<std::size_t>(i - 1) * (i - 2) / 2 +
           static_cast<std::size_t>(j - i);
}

/// Element of U(n): exact upper triangular matrix. Values are immutable in
/// spirit; all operations below are pure functions.
class UpperTri {
  public:
    explicit UpperTri(int n);
    static UpperTri from_flat(int n, RatVector entries);
    static UpperTri basis(int n, int i, int j);  // e_{i,j}

    int n() const { return n_; }
    const Rat& at(int i, int j) const;
    void set(int i, int j, Rat value);

    const RatVector& flat() const { return entries_; }

    UpperTri operator+(const UpperTri& other) const;
    UpperTri operator-(const UpperTri& other) const;
    UpperTri scaled(const Rat& factor) const;

    bool operator==(const UpperTri& other) const = default;
    bool operator<(const UpperTri& other) const;  // lexicographic on flat()

    bool all_nonnegative() const;

  private:
    void check_index(int i, int j) const;

    int n_;
    RatVector entries_;
};

/// Element of the projection of U(n) that forgets the (n,n) coordinate.
class TildeUpperTri {
  public:
    explicit TildeUpperTri(int n);
    static TildeUpperTri from_flat(int n, RatVector entries);

    int n() const { return n_; }
    const Rat& at(int i, int j) const;  // (i,j) != (n,n)
    void set(int i, int j, Rat value);

    const RatVector& flat() const { return entries_; }

    bool operator==(const TildeUpperTri& other) const = default;

  private:
    void check_index(int i, int j) const;

    int n_;
    RatVector entries_;
};

/// Drops the (n,n) entry.
TildeUpperTri project_tilde(const UpperTri& m);

/// Appends the given (n,n) entry.
UpperTri extend_tilde(const TildeUpperTri& b, Rat last);

/// 0/1 pattern of nonzero positions, ordered entrywise.
class SupportPattern {
  public:
    explicit SupportPattern(int n);

    int n() const { return n_; }
    bool bit(int i, int j) const;
    void set_bit(int i, int j, bool value);

    int row_ones(int i) const;
    /// Column of the single 1 in row i, or 0 for a zero row. Requires the
    /// row to hold at most one 1.
    int row_position(int i) const;

    bool operator==(const SupportPattern& other) const = default;

  private:
    int n_;
    std::vector<std::uint8_t> bits_;
};

/// Entrywise partial order on patterns of equal size.
bool leq(const SupportPattern& a, const SupportPattern& b);

using HookVector = RatVector;

/// i-th hook sum: m_{i,i} + (row i to the right) - (column i above).
Rat hook_sum(const UpperTri& m, int i);

HookVector hook_vector(const UpperTri& m);

/// Hook sums survive the projection for i <= n-1; i = n is rejected.
Rat hook_sum_tilde(const TildeUpperTri& b, int i);

SupportPattern support(const UpperTri& m);

/// Flat coefficient vector of the i-th hook sum functional.
RatVector hook_row(int n, int i);

/// H-representation of the Tesler polytope of hook sum vector a: the n hook
/// sum equalities plus -m_{i,j} <= 0 for every coordinate except (n,n),
/// inequality rows in row-major order. Any rational a is admitted; the
/// caller decides the semantics.
polyhedra::HRep tesler_hrep(const HookVector& a);

}  // namespace teslerforge

#endif
