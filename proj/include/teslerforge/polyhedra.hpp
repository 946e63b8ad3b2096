#ifndef TESLERFORGE_POLYHEDRA_HPP
#define TESLERFORGE_POLYHEDRA_HPP

#include <optional>
#include <utility>
#include <vector>

#include "teslerforge/rational.hpp"

namespace teslerforge::polyhedra {

/// One linear constraint: <coeffs, x> = rhs (equality) or <= rhs (inequality).
struct LinearRow {
    RatVector coeffs;
    Rat rhs;
};

/// Equality + inequality description of a polytope in R^dim.
struct HRep {
    int dim = 0;
    std::vector<LinearRow> eq;
    std::vector<LinearRow> ineq;
};

/// Exact vertex description. Vertices are deduplicated and sorted
/// lexicographically; adjacency pairs (i, j) with i < j index into them.
struct VRep {
    std::vector<RatVector> vertices;
    std::vector<std::vector<int>> active_sets;  // tight inequality rows per vertex
    std::vector<std::pair<int, int>> adjacency;
};

inline constexpr int kDefaultMaxDim = 15;

/// Brute-force exact vertex enumeration: every subset of inequality rows
/// that together with the equalities forms a full-rank square system is
/// solved exactly, and feasible solutions are kept.
///
/// The caller guarantees boundedness. Throws unbounded_or_rank_deficient if
/// no subset achieves full rank, and dim_guard_exceeded above max_dim.
/// An infeasible system yields an empty vertex list.
VRep enumerate_vertices(const HRep& h, int max_dim = kDefaultMaxDim);

/// Exact minimum of <objective, x> over a nonempty polytope, with ties
/// broken by the lexicographically smallest minimizer.
std::pair<Rat, RatVector> minimize(const HRep& h, const RatVector& objective,
                                   int max_dim = kDefaultMaxDim);

struct DeformCheck {
    enum class Verdict { NotDeformation, Weak, Strong };
    enum class Reason { None, EmptyQ, NonTight, NonVertexIntersection };

    Verdict verdict = Verdict::NotDeformation;
    Reason reason = Reason::None;
    int offending_row = -1;     // set for NonTight
    int offending_vertex = -1;  // set for NonVertexIntersection
    std::vector<int> vertex_map;  // p0 vertex index -> q vertex index
    VRep q;

    bool is_deformation() const { return verdict != Verdict::NotDeformation; }
};

/// Decides whether the polytope Q built from p0's constraint matrix with
/// right-hand sides (eq_rhs, ineq_rhs) is a deformation of p0:
///   (1) every inequality row of Q's description is attained with equality
///       somewhere on Q, and
///   (2) for each vertex of p0, intersecting Q with that vertex's tight
///       rows (set to equality) yields a single point that is a vertex of Q.
/// Weak means the induced vertex map is a bijection onto Vert(Q).
///
/// p0's description must be minimal (facet-defining inequalities, equalities
/// spanning the affine hull); that is the caller's contract.
DeformCheck is_deformation(const HRep& p0, const VRep& p0_vertices,
                           const RatVector& eq_rhs, const RatVector& ineq_rhs,
                           int max_dim = kDefaultMaxDim);

/// Predicate form of the edge-scaling characterization: vertex_map must be
/// surjective onto q's vertices and every p0 edge (v, w) must satisfy
/// map(v) - map(w) = r (v - w) for some exact scalar r >= 0.
bool edge_check_deformation(const VRep& p0, const VRep& q,
                            const std::vector<int>& vertex_map);

/// Exact vertex-set equality.
bool polytopes_equal(const VRep& p, const VRep& q);

/// Minimal description derived from the vertex set: equalities span the
/// affine hull, and only facet-defining inequality rows survive (one row
/// per facet). Used to prepare degenerate polytopes for is_deformation.
HRep minimal_description(const HRep& h, const VRep& v);

/// Self-check for an already-minimal description: dropping any single
/// inequality row must change the vertex set.
bool is_minimal_description(const HRep& h, int max_dim = kDefaultMaxDim);

}  // namespace teslerforge::polyhedra

#endif
