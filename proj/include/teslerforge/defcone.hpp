#ifndef TESLERFORGE_DEFCONE_HPP
#define TESLERFORGE_DEFCONE_HPP

#include <vector>

#include "teslerforge/core.hpp"

namespace teslerforge::defcone {

/// Candidate deforming vector (a, btilde) for the fixed minimal description
/// of a positive Tesler polytope: a replaces the hook sum right-hand side,
/// btilde the inequality right-hand side.
struct DeformingVector {
    HookVector a;
    TildeUpperTri btilde;

    int n() const { return btilde.n(); }
};

/// Membership in the deformation cone: eta_i(btilde) >= -a_i for all
/// 1 <= i <= n-1. The base polytope's positive hook sum vector does not
/// enter; every positive choice yields the same cone.
bool cone_contains(const DeformingVector& dv);

/// The polytope Q(a, btilde): hook sums fixed to a, coordinate lower bounds
/// -btilde (the (n,n) coordinate unconstrained).
polyhedra::HRep q_polytope(const DeformingVector& dv);

struct TeslerTranslate {
    UpperTri shift;       // t with Q(a, btilde) = Tes_n(a_T) + t
    HookVector hook_sums; // a_T, nonnegative with last entry 0
};

/// Writes an in-cone Q(a, btilde) as a translated Tesler polytope:
/// a_T = (eta_1(btilde) + a_1, ..., eta_{n-1}(btilde) + a_{n-1}, 0) and
/// t = -b where b extends btilde by sum_i btilde_{i,n} - a_n.
TeslerTranslate tesler_translate(const DeformingVector& dv);

/// Image of a vertex v of a positive Tesler polytope under the vertex
/// correspondence onto Q(a, btilde): zero entries of v become the forced
/// values -btilde_{i,j}, the n remaining entries (one per row) are solved
/// top-down from the hook sum equations.
UpperTri deform_vertex(const UpperTri& v, const DeformingVector& dv);

/// Sorted subset of {1, ..., n-1} labelling a face of the deformation cone.
struct FaceIndex {
    int n = 0;
    std::vector<int> indices;

    bool operator==(const FaceIndex& other) const = default;
};

/// Whether a's face is contained in b's in the face lattice.
bool face_leq(const FaceIndex& a, const FaceIndex& b);

/// The index set {i <= n-1 : a_i > 0} of a nonnegative hook sum vector.
FaceIndex face_index(const HookVector& a);

enum class TeslerRelation { Neither, Deformation, NormallyEquivalent };

struct TeslerCompare {
    TeslerRelation relation;
    FaceIndex index_a;  // certificate: the two face index sets
    FaceIndex index_b;
};

/// Relation between Tes_n(a) and Tes_n(b) for a, b >= 0, read off the face
/// lattice of the deformation cone: normally equivalent when the index sets
/// agree, a (strict) deformation when a's is properly contained in b's,
/// neither otherwise.
TeslerCompare tesler_deforms(const HookVector& a, const HookVector& b);

/// The unique face whose relative interior contains an in-cone dv:
/// I = {i <= n-1 : eta_i(btilde) > -a_i}.
FaceIndex cone_face_membership(const DeformingVector& dv);

/// Vertex set of Q(a, btilde), obtained by mapping every vertex of the unit
/// Tesler polytope through deform_vertex and deduplicating (the map is
/// non-injective on the cone's boundary). Sorted lexicographically.
std::vector<UpperTri> q_vertex_set(const DeformingVector& dv);

}  // namespace teslerforge::defcone

#endif
