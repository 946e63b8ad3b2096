#include "teslerforge/defcone.hpp"

#include <algorithm>

#include "teslerforge/tesler.hpp"

namespace teslerforge::defcone {

namespace {

void check_shape(const DeformingVector& dv) {
    if (static_cast<int>(dv.a.size()) != dv.btilde.n()) {
        throw Error(errc::size_mismatch, "hook sum part and matrix part sizes differ");
    }
}

void require_nonnegative(const HookVector& a) {
    for (const Rat& x : a) {
        if (x < 0) throw Error(errc::negative_input, "hook sum vector must be nonnegative");
    }
}

}  // namespace

bool cone_contains(const DeformingVector& dv) {
    check_shape(dv);
    for (int i = 1; i <= dv.n() - 1; ++i) {
        if (hook_sum_tilde(dv.btilde, i) < -dv.a[i - 1]) return false;
    }
    return true;
}

polyhedra::HRep q_polytope(const DeformingVector& dv) {
    check_shape(dv);
    polyhedra::HRep h = tesler_hrep(dv.a);
    const RatVector& rhs = dv.btilde.flat();  // inequality rows share the flat order
    for (std::size_t k = 0; k < h.ineq.size(); ++k) h.ineq[k].rhs = rhs[k];
    return h;
}

TeslerTranslate tesler_translate(const DeformingVector& dv) {
    if (!cone_contains(dv)) {
        throw Error(errc::not_in_cone, "vector is outside the deformation cone");
    }
    const int n = dv.n();

    HookVector hook_sums;
    for (int i = 1; i <= n - 1; ++i) {
        hook_sums.push_back(hook_sum_tilde(dv.btilde, i) + dv.a[i - 1]);
    }
    hook_sums.push_back(Rat(0));

    Rat last = -dv.a[n - 1];
    for (int i = 1; i <= n - 1; ++i) last += dv.btilde.at(i, n);
    const UpperTri b = extend_tilde(dv.btilde, last);
    return {UpperTri(n) - b, std::move(hook_sums)};
}

UpperTri deform_vertex(const UpperTri& v, const DeformingVector& dv) {
    check_shape(dv);
    if (v.n() != dv.n()) throw Error(errc::size_mismatch, "vertex size does not match");
    if (!cone_contains(dv)) {
        throw Error(errc::not_in_cone, "vector is outside the deformation cone");
    }
    if (!v.all_nonnegative()) throw Error(errc::not_a_vertex, "vertex entries must be nonnegative");

    const int n = v.n();
    std::vector<int> pivot(n + 1, 0);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            if (v.at(i, j) != 0) {
                if (pivot[i] != 0) {
                    throw Error(errc::not_a_vertex, "a vertex has at most one nonzero per row");
                }
                pivot[i] = j;
            }
        }
        if (pivot[i] == 0) {
            throw Error(errc::not_a_vertex,
                        "the vertex must have exactly one nonzero entry per row");
        }
    }

    // Zero positions of v take the forced values -btilde; the single unknown
    // per row then follows from the hook sum equations, top-down.
    UpperTri out(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            if (j == pivot[i] || (i == n && j == n)) continue;
            out.set(i, j, -dv.btilde.at(i, j));
        }
    }
    for (int i = 1; i <= n; ++i) {
        Rat value = dv.a[i - 1];
        for (int j = 1; j < i; ++j) value += out.at(j, i);
        for (int j = i; j <= n; ++j) {
            if (j != pivot[i]) value -= out.at(i, j);
        }
        out.set(i, pivot[i], value);
    }
    return out;
}

bool face_leq(const FaceIndex& a, const FaceIndex& b) {
    if (a.n != b.n) throw Error(errc::size_mismatch, "face index sizes differ");
    return std::includes(b.indices.begin(), b.indices.end(), a.indices.begin(), a.indices.end());
}

FaceIndex face_index(const HookVector& a) {
    require_nonnegative(a);
    FaceIndex f;
    f.n = static_cast<int>(a.size());
    for (int i = 1; i <= f.n - 1; ++i) {
        if (a[i - 1] > 0) f.indices.push_back(i);
    }
    return f;
}

TeslerCompare tesler_deforms(const HookVector& a, const HookVector& b) {
    if (a.size() != b.size()) throw Error(errc::size_mismatch, "hook sum vector sizes differ");
    TeslerCompare out{TeslerRelation::Neither, face_index(a), face_index(b)};
    if (out.index_a == out.index_b) {
        out.relation = TeslerRelation::NormallyEquivalent;
    } else if (face_leq(out.index_a, out.index_b)) {
        out.relation = TeslerRelation::Deformation;
    }
    return out;
}

FaceIndex cone_face_membership(const DeformingVector& dv) {
    if (!cone_contains(dv)) {
        throw Error(errc::not_in_cone, "vector is outside the deformation cone");
    }
    FaceIndex f;
    f.n = dv.n();
    for (int i = 1; i <= dv.n() - 1; ++i) {
        if (hook_sum_tilde(dv.btilde, i) > -dv.a[i - 1]) f.indices.push_back(i);
    }
    return f;
}

std::vector<UpperTri> q_vertex_set(const DeformingVector& dv) {
    if (!cone_contains(dv)) {
        throw Error(errc::not_in_cone, "vector is outside the deformation cone");
    }
    const HookVector ones(dv.n(), Rat(1));
    std::vector<UpperTri> out;
    for (const UpperTri& v : tesler::tesler_vertices(ones)) {
        out.push_back(deform_vertex(v, dv));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace teslerforge::defcone
