#ifndef TESLERFORGE_FLOW_HPP
#define TESLERFORGE_FLOW_HPP

#include <map>
#include <optional>
#include <utility>
#include <variant>
#include <vector>

#include "teslerforge/core.hpp"

namespace teslerforge::flow {

/// Net flow vector for the complete DAG on n+1 nodes; entries may be
/// negative. The polytope of nonnegative flows with these net values is
/// nonempty exactly when all prefix sums are nonnegative.
struct NetFlow {
    int n = 0;
    RatVector a;
};

bool is_feasible(const NetFlow& a);

/// Full H-representation of Flow_n(a): hook sum equalities plus all
/// n(n+1)/2 coordinate lower bounds, the (n,n) row last.
polyhedra::HRep flow_hrep(const NetFlow& a);

struct CriticalInfo {
    int l = 0;                 // critical position
    std::vector<int> voided;   // i < n with a_i > 0 and a_i + a_{i+1} = 0
};

/// The critical position: the first positive entry that is not voided, or
/// n if every positive entry is voided.
CriticalInfo critical_position(const NetFlow& a);

/// Entries fixed across every point of Flow_n(a): in the first l-1 rows,
/// each voided position i contributes (i, i+1) -> a_i and everything else
/// is zero. The map covers every entry of rows 1..l-1.
std::map<std::pair<int, int>, Rat> forced_entries(const NetFlow& a);

struct ReducedFlow {
    NetFlow a_hat;   // zeros before l, a_hat_l > 0, a_hat_{l+1} >= 0
    UpperTri shift;  // t with Flow_n(a) = Flow_n(a_hat) + t
};

/// Strips the forced part: translates away the voided pairs and, when
/// a_{l+1} < 0, the additional forced (l, l+1) amount. When l = n the
/// polytope is a single point, returned directly.
std::variant<ReducedFlow, UpperTri> translate_reduce(const NetFlow& a);

/// Explicit flow used to certify non-deformation when the first negative
/// tail entry a_m sits strictly before position n: f routes -a_m into
/// column m, the leftovers into column m+1, then chains the running totals.
/// Satisfies f_{l,m} > 0, column-m total -a_m, zero row m, zero rows 1..l-1.
UpperTri witness_flow(const NetFlow& a, int m);

struct TightDescription {
    /// Set when m_{n,n} >= 0 is redundant: -btilde_{i,j} is the exact
    /// minimum of m_{i,j} over Flow_n(a), giving a tight description
    /// without the (n,n) row.
    std::optional<TildeUpperTri> btilde;
    /// Otherwise a point satisfying all constraints except m_{n,n} >= 0:
    /// the diagonal matrix of a when that is such a point, else the
    /// lexicographically smallest minimizer of m_{n,n}.
    std::optional<UpperTri> witness;

    bool representable() const { return btilde.has_value(); }
};

TightDescription tight_description(const NetFlow& a);

struct FlowCertificate {
    enum class Kind { PointPolytope, AllNonnegTail, NegativeTail, NonRedundantDiagonal };

    Kind kind = Kind::PointPolytope;
    // NegativeTail payload: eta_m(btilde) < -a_hat_m, exactly.
    int m = 0;
    Rat eta_m;
    Rat neg_a_m;
    // NonRedundantDiagonal payload.
    std::optional<UpperTri> witness;
};

struct FlowVerdict {
    bool is_deformation = false;
    int l = 0;
    std::vector<int> voided;
    FlowCertificate certificate;
    std::optional<NetFlow> a_hat;  // reduced vector backing a false verdict
};

/// Decides whether Flow_n(a) is a deformation of a positive Tesler
/// polytope: yes exactly when l = n or a_i >= 0 for all l+2 <= i <= n.
/// The verdict itself is pure prefix-sum arithmetic; false verdicts carry
/// a machine-checkable certificate computed from the reduced vector.
FlowVerdict is_deformation_of_tesler(const NetFlow& a);

}  // namespace teslerforge::flow

#endif
