#include "teslerforge/polyhedra.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace teslerforge::polyhedra {

namespace {

using Matrix = std::vector<RatVector>;

// Gaussian elimination with first-nonzero pivoting. Exact, deterministic.
std::optional<RatVector> solve_square(Matrix a, RatVector b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            const Rat factor = a[r][col] / a[col][col];
            for (std::size_t c = col; c < n; ++c) a[r][c] -= factor * a[col][c];
            b[r] -= factor * b[col];
        }
    }
    RatVector x(n, Rat(0));
    for (std::size_t row = n; row-- > 0;) {
        Rat acc = b[row];
        for (std::size_t c = row + 1; c < n; ++c) acc -= a[row][c] * x[c];
        x[row] = acc / a[row][row];
    }
    return x;
}

int matrix_rank(Matrix m) {
    if (m.empty()) return 0;
    const std::size_t cols = m[0].size();
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        for (std::size_t r = row + 1; r < m.size(); ++r) {
            if (m[r][col] == 0) continue;
            const Rat factor = m[r][col] / m[row][col];
            for (std::size_t c = col; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        ++row;
    }
    return static_cast<int>(row);
}

// Basis of {x : m x = 0} from the reduced row echelon form; deterministic.
Matrix nullspace(Matrix m, std::size_t cols) {
    std::vector<int> pivot_col_of_row;
    std::size_t row = 0;
    for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
        std::size_t pivot = row;
        while (pivot < m.size() && m[pivot][col] == 0) ++pivot;
        if (pivot == m.size()) continue;
        std::swap(m[pivot], m[row]);
        const Rat lead = m[row][col];
        for (std::size_t c = 0; c < cols; ++c) m[row][c] /= lead;
        for (std::size_t r = 0; r < m.size(); ++r) {
            if (r == row || m[r][col] == 0) continue;
            const Rat factor = m[r][col];
            for (std::size_t c = 0; c < cols; ++c) m[r][c] -= factor * m[row][c];
        }
        pivot_col_of_row.push_back(static_cast<int>(col));
        ++row;
    }
    std::set<int> pivot_cols(pivot_col_of_row.begin(), pivot_col_of_row.end());
    Matrix basis;
    for (std::size_t free_col = 0; free_col < cols; ++free_col) {
        if (pivot_cols.count(static_cast<int>(free_col))) continue;
        RatVector v(cols, Rat(0));
        v[free_col] = 1;
        for (std::size_t r = 0; r < pivot_col_of_row.size(); ++r) {
            v[pivot_col_of_row[r]] = -m[r][free_col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

Rat dot(const RatVector& a, const RatVector& b) {
    Rat acc = 0;
    for (std::size_t k = 0; k < a.size(); ++k) acc += a[k] * b[k];
    return acc;
}

}  // namespace

VRep enumerate_vertices(const HRep& h, int max_dim) {
    if (h.dim < 1) throw Error(errc::size_mismatch, "polytope dimension must be positive");
    if (h.dim > max_dim) {
        throw Error(errc::dim_guard_exceeded,
                    "dimension " + std::to_string(h.dim) + " exceeds the guard " +
                        std::to_string(max_dim));
    }
    for (const auto& row : h.eq) {
        if (static_cast<int>(row.coeffs.size()) != h.dim) {
            throw Error(errc::size_mismatch, "equality row length does not match dim");
        }
    }
    for (const auto& row : h.ineq) {
        if (static_cast<int>(row.coeffs.size()) != h.dim) {
            throw Error(errc::size_mismatch, "inequality row length does not match dim");
        }
    }

    const int n_eq = static_cast<int>(h.eq.size());
    const int n_ineq = static_cast<int>(h.ineq.size());
    const int pick = h.dim - n_eq;

    std::vector<RatVector> found;
    bool any_full_rank = false;

    if (pick >= 0 && pick <= n_ineq) {
        std::vector<int> subset(pick);
        std::iota(subset.begin(), subset.end(), 0);
        while (true) {
            Matrix a;
            RatVector rhs;
            a.reserve(h.dim);
            for (const auto& row : h.eq) {
                a.push_back(row.coeffs);
                rhs.push_back(row.rhs);
            }
            for (int idx : subset) {
                a.push_back(h.ineq[idx].coeffs);
                rhs.push_back(h.ineq[idx].rhs);
            }
            if (auto x = solve_square(std::move(a), std::move(rhs))) {
                any_full_rank = true;
                bool feasible = true;
                for (const auto& row : h.ineq) {
                    if (dot(row.coeffs, *x) > row.rhs) {
                        feasible = false;
                        break;
                    }
                }
                if (feasible) found.push_back(std::move(*x));
            }

            // next combination
            int i = pick - 1;
            while (i >= 0 && subset[i] == n_ineq - pick + i) --i;
            if (i < 0) break;
            ++subset[i];
            for (int k = i + 1; k < pick; ++k) subset[k] = subset[k - 1] + 1;
        }
    }

    if (!any_full_rank) {
        throw Error(errc::unbounded_or_rank_deficient,
                    "no constraint subset achieves full rank; input is not a bounded "
                    "full-description polytope");
    }

    std::sort(found.begin(), found.end());
    found.erase(std::unique(found.begin(), found.end()), found.end());

    VRep out;
    out.vertices = std::move(found);
    out.active_sets.resize(out.vertices.size());
    for (std::size_t v = 0; v < out.vertices.size(); ++v) {
        for (int r = 0; r < n_ineq; ++r) {
            if (dot(h.ineq[r].coeffs, out.vertices[v]) == h.ineq[r].rhs) {
                out.active_sets[v].push_back(r);
            }
        }
    }

    // Vertices u, v are adjacent exactly when the constraints tight at both
    // cut out a line: rank(equalities + common tight rows) = dim - 1.
    for (std::size_t u = 0; u < out.vertices.size(); ++u) {
        for (std::size_t v = u + 1; v < out.vertices.size(); ++v) {
            std::vector<int> common;
            std::set_intersection(out.active_sets[u].begin(), out.active_sets[u].end(),
                                  out.active_sets[v].begin(), out.active_sets[v].end(),
                                  std::back_inserter(common));
            Matrix rows;
            for (const auto& row : h.eq) rows.push_back(row.coeffs);
            for (int r : common) rows.push_back(h.ineq[r].coeffs);
            if (matrix_rank(std::move(rows)) == h.dim - 1) {
                out.adjacency.emplace_back(static_cast<int>(u), static_cast<int>(v));
            }
        }
    }
    return out;
}

std::pair<Rat, RatVector> minimize(const HRep& h, const RatVector& objective, int max_dim) {
    if (static_cast<int>(objective.size()) != h.dim) {
        throw Error(errc::size_mismatch, "objective length does not match dim");
    }
    const VRep v = enumerate_vertices(h, max_dim);
    if (v.vertices.empty()) throw Error(errc::empty_polytope, "polytope is empty");
    std::size_t best = 0;
    Rat best_value = dot(objective, v.vertices[0]);
    for (std::size_t k = 1; k < v.vertices.size(); ++k) {
        const Rat value = dot(objective, v.vertices[k]);
        if (value < best_value) {
            best_value = value;
            best = k;
        }
    }
    return {best_value, v.vertices[best]};
}

DeformCheck is_deformation(const HRep& p0, const VRep& p0_vertices, const RatVector& eq_rhs,
                           const RatVector& ineq_rhs, int max_dim) {
    if (eq_rhs.size() != p0.eq.size() || ineq_rhs.size() != p0.ineq.size()) {
        throw Error(errc::size_mismatch, "right-hand side lengths do not match the description");
    }
    HRep qh = p0;
    for (std::size_t k = 0; k < eq_rhs.size(); ++k) qh.eq[k].rhs = eq_rhs[k];
    for (std::size_t k = 0; k < ineq_rhs.size(); ++k) qh.ineq[k].rhs = ineq_rhs[k];

    DeformCheck result;
    result.q = enumerate_vertices(qh, max_dim);
    if (result.q.vertices.empty()) {
        result.reason = DeformCheck::Reason::EmptyQ;
        return result;
    }

    // (1) Every inequality row must be attained with equality somewhere on Q.
    for (std::size_t r = 0; r < qh.ineq.size(); ++r) {
        Rat max_value = dot(qh.ineq[r].coeffs, result.q.vertices[0]);
        for (std::size_t v = 1; v < result.q.vertices.size(); ++v) {
            max_value = std::max(max_value, dot(qh.ineq[r].coeffs, result.q.vertices[v]));
        }
        if (max_value != qh.ineq[r].rhs) {
            result.reason = DeformCheck::Reason::NonTight;
            result.offending_row = static_cast<int>(r);
            return result;
        }
    }

    // (2) The tight rows of each p0 vertex must cut a single vertex out of Q.
    result.vertex_map.assign(p0_vertices.vertices.size(), -1);
    for (std::size_t v = 0; v < p0_vertices.vertices.size(); ++v) {
        int hit = -1;
        int hits = 0;
        for (std::size_t u = 0; u < result.q.vertices.size(); ++u) {
            bool on_face = true;
            for (int r : p0_vertices.active_sets[v]) {
                if (dot(qh.ineq[r].coeffs, result.q.vertices[u]) != qh.ineq[r].rhs) {
                    on_face = false;
                    break;
                }
            }
            if (on_face) {
                hit = static_cast<int>(u);
                if (++hits > 1) break;
            }
        }
        if (hits != 1) {
            result.reason = DeformCheck::Reason::NonVertexIntersection;
            result.offending_vertex = static_cast<int>(v);
            result.vertex_map.clear();
            return result;
        }
        result.vertex_map[v] = hit;
    }

    std::set<int> image(result.vertex_map.begin(), result.vertex_map.end());
    const bool surjective = image.size() == result.q.vertices.size();
    const bool injective = image.size() == p0_vertices.vertices.size();
    result.verdict = (surjective && injective) ? DeformCheck::Verdict::Weak
                                               : DeformCheck::Verdict::Strong;
    return result;
}

bool edge_check_deformation(const VRep& p0, const VRep& q, const std::vector<int>& vertex_map) {
    if (vertex_map.size() != p0.vertices.size()) {
        throw Error(errc::size_mismatch, "vertex map must cover every vertex");
    }
    std::set<int> image(vertex_map.begin(), vertex_map.end());
    if (image.size() != q.vertices.size()) return false;
    for (int idx : image) {
        if (idx < 0 || idx >= static_cast<int>(q.vertices.size())) return false;
    }

    for (const auto& [u, v] : p0.adjacency) {
        const RatVector& pu = p0.vertices[u];
        const RatVector& pv = p0.vertices[v];
        const RatVector& qu = q.vertices[vertex_map[u]];
        const RatVector& qv = q.vertices[vertex_map[v]];
        Rat ratio = 0;
        bool ratio_set = false;
        for (std::size_t k = 0; k < pu.size(); ++k) {
            const Rat d = pu[k] - pv[k];
            if (d != 0) {
                ratio = (qu[k] - qv[k]) / d;
                ratio_set = true;
                break;
            }
        }
        if (!ratio_set) return false;  // adjacent vertices cannot coincide
        if (ratio < 0) return false;
        for (std::size_t k = 0; k < pu.size(); ++k) {
            if (qu[k] - qv[k] != ratio * (pu[k] - pv[k])) return false;
        }
    }
    return true;
}

bool polytopes_equal(const VRep& p, const VRep& q) {
    return p.vertices == q.vertices;
}

HRep minimal_description(const HRep& h, const VRep& v) {
    if (v.vertices.empty()) throw Error(errc::empty_polytope, "polytope is empty");
    const RatVector& base = v.vertices[0];

    Matrix directions;
    for (std::size_t k = 1; k < v.vertices.size(); ++k) {
        RatVector d(h.dim);
        for (int c = 0; c < h.dim; ++c) d[c] = v.vertices[k][c] - base[c];
        directions.push_back(std::move(d));
    }
    const int poly_dim = directions.empty() ? 0 : matrix_rank(directions);

    HRep out;
    out.dim = h.dim;
    for (auto& normal : nullspace(directions, static_cast<std::size_t>(h.dim))) {
        const Rat rhs = dot(normal, base);
        out.eq.push_back({std::move(normal), rhs});
    }

    std::set<std::vector<int>> seen_facets;
    for (const auto& row : h.ineq) {
        std::vector<int> tight;
        for (std::size_t k = 0; k < v.vertices.size(); ++k) {
            if (dot(row.coeffs, v.vertices[k]) == row.rhs) tight.push_back(static_cast<int>(k));
        }
        if (tight.empty()) continue;
        Matrix tight_dirs;
        for (std::size_t k = 1; k < tight.size(); ++k) {
            RatVector d(h.dim);
            for (int c = 0; c < h.dim; ++c) {
                d[c] = v.vertices[tight[k]][c] - v.vertices[tight[0]][c];
            }
            tight_dirs.push_back(std::move(d));
        }
        const int face_dim = tight_dirs.empty() ? 0 : matrix_rank(std::move(tight_dirs));
        if (face_dim != poly_dim - 1) continue;
        if (!seen_facets.insert(tight).second) continue;  // same facet, keep the first row
        out.ineq.push_back(row);
    }
    return out;
}

bool is_minimal_description(const HRep& h, int max_dim) {
    const VRep full = enumerate_vertices(h, max_dim);
    for (std::size_t drop = 0; drop < h.ineq.size(); ++drop) {
        HRep reduced = h;
        reduced.ineq.erase(reduced.ineq.begin() + static_cast<std::ptrdiff_t>(drop));
        const VRep trimmed = enumerate_vertices(reduced, max_dim);
        if (trimmed.vertices == full.vertices) return false;
    }
    return true;
}

}  // namespace teslerforge::polyhedra
