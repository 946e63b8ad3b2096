#include "teslerforge/flow.hpp"

#include <algorithm>

namespace teslerforge::flow {

namespace {

void check_shape(const NetFlow& a) {
    if (a.n < 1 || static_cast<int>(a.a.size()) != a.n) {
        throw Error(errc::size_mismatch, "net flow vector size does not match n");
    }
}

void require_feasible(const NetFlow& a) {
    if (!is_feasible(a)) {
        throw Error(errc::infeasible, "some prefix sum is negative; the flow polytope is empty");
    }
}

/// The point Flow_n(a) collapses to when the critical position is n: the
/// forced first n-1 rows plus the (n,n) entry from the last hook equation.
UpperTri point_polytope(const NetFlow& a) {
    UpperTri point(a.n);
    for (const auto& [pos, value] : forced_entries(a)) {
        point.set(pos.first, pos.second, value);
    }
    Rat last = a.a[a.n - 1];
    for (int i = 1; i < a.n; ++i) last += point.at(i, a.n);
    point.set(a.n, a.n, last);
    if (!point.all_nonnegative() || hook_vector(point) != a.a) {
        throw Error(errc::formula_violation, "collapsed flow point fails its defining equations");
    }
    return point;
}

}  // namespace

bool is_feasible(const NetFlow& a) {
    check_shape(a);
    Rat prefix = 0;
    for (const Rat& x : a.a) {
        prefix += x;
        if (prefix < 0) return false;
    }
    return true;
}

polyhedra::HRep flow_hrep(const NetFlow& a) {
    check_shape(a);
    polyhedra::HRep h = tesler_hrep(a.a);
    RatVector row(tri_count(a.n), Rat(0));
    row[tri_offset(a.n, a.n, a.n)] = -1;
    h.ineq.push_back({std::move(row), Rat(0)});
    return h;
}

CriticalInfo critical_position(const NetFlow& a) {
    require_feasible(a);
    CriticalInfo info;
    for (int i = 1; i <= a.n - 1; ++i) {
        if (a.a[i - 1] > 0 && a.a[i - 1] + a.a[i] == 0) info.voided.push_back(i);
    }
    info.l = a.n;
    for (int i = 1; i <= a.n - 1; ++i) {
        if (a.a[i - 1] > 0 && !std::binary_search(info.voided.begin(), info.voided.end(), i)) {
            info.l = i;
            break;
        }
    }
    return info;
}

std::map<std::pair<int, int>, Rat> forced_entries(const NetFlow& a) {
    const CriticalInfo info = critical_position(a);
    std::map<std::pair<int, int>, Rat> out;
    for (int i = 1; i <= info.l - 1; ++i) {
        for (int j = i; j <= a.n; ++j) out[{i, j}] = 0;
    }
    for (int i : info.voided) {
        if (i < info.l) out[{i, i + 1}] = a.a[i - 1];
    }
    return out;
}

std::variant<ReducedFlow, UpperTri> translate_reduce(const NetFlow& a) {
    const CriticalInfo info = critical_position(a);
    if (info.l == a.n) return point_polytope(a);

    UpperTri shift(a.n);
    NetFlow a_hat{a.n, RatVector(a.n, Rat(0))};
    for (int i = info.l; i <= a.n; ++i) a_hat.a[i - 1] = a.a[i - 1];
    for (int i : info.voided) {
        if (i < info.l) shift.set(i, i + 1, a.a[i - 1]);
    }
    if (a.a[info.l] < 0) {
        // The (l, l+1) entry is forced to at least -a_{l+1}; translate it away.
        const Rat c = -a.a[info.l];
        shift.set(info.l, info.l + 1, shift.at(info.l, info.l + 1) + c);
        a_hat.a[info.l - 1] -= c;
        a_hat.a[info.l] = 0;
    }
    if (!(a_hat.a[info.l - 1] > 0) || a_hat.a[info.l] < 0 || !is_feasible(a_hat)) {
        throw Error(errc::formula_violation, "reduced net flow fails its defining shape");
    }
    return ReducedFlow{std::move(a_hat), std::move(shift)};
}

UpperTri witness_flow(const NetFlow& a, int m) {
    require_feasible(a);
    const int n = a.n;

    int l = 0;
    for (int i = 1; i <= n && l == 0; ++i) {
        if (a.a[i - 1] != 0) l = i;
    }
    if (l == 0 || a.a[l - 1] <= 0 || (l < n && a.a[l] < 0)) {
        throw Error(errc::precondition_violated,
                    "expected zeros, then a positive entry, then a nonnegative one");
    }
    int first_negative = 0;
    for (int i = 1; i <= n && first_negative == 0; ++i) {
        if (a.a[i - 1] < 0) first_negative = i;
    }
    if (m != first_negative || m < l + 2 || m >= n) {
        throw Error(errc::precondition_violated,
                    "m must be the first negative position, with l+2 <= m < n");
    }

    // Split -a_m across the rows l..m-1: whole entries up to row k-1, the
    // remainder at row k, nothing after.
    const Rat target = -a.a[m - 1];
    Rat prefix = 0;  // sum of a_1..a_{k-1}
    int k = 0;
    for (int i = l; i <= m - 1; ++i) {
        if (prefix < target && target <= prefix + a.a[i - 1]) {
            k = i;
            break;
        }
        prefix += a.a[i - 1];
    }
    if (k == 0) throw Error(errc::formula_violation, "no split point for the witness flow");

    UpperTri f(n);
    Rat column_total = 0;
    for (int i = l; i <= m - 1; ++i) {
        Rat c;
        if (i < k) c = a.a[i - 1];
        else if (i == k) c = target - prefix;
        else c = 0;
        const Rat d = a.a[i - 1] - c;
        if (c < 0 || d < 0) throw Error(errc::formula_violation, "witness split went negative");
        f.set(i, m, c);
        f.set(i, m + 1, d);
        column_total += c;
    }
    Rat running = 0;
    for (int i = 1; i <= m + 1; ++i) running += a.a[i - 1];
    for (int i = m + 1; i <= n - 1; ++i) {
        f.set(i, i + 1, running);
        if (i + 1 <= n) running += a.a[i];
    }
    Rat total = 0;
    for (const Rat& x : a.a) total += x;
    f.set(n, n, total);

    if (f.at(l, m) <= 0 || column_total != target || !f.all_nonnegative() ||
        hook_vector(f) != a.a) {
        throw Error(errc::formula_violation, "witness flow fails its defining conditions");
    }
    return f;
}

TightDescription tight_description(const NetFlow& a) {
    require_feasible(a);
    const int n = a.n;

    // Relaxation dropping m_{n,n} >= 0. If its minimum there is negative the
    // dropped row is essential and no description without it exists.
    const polyhedra::HRep relaxed = tesler_hrep(a.a);
    const polyhedra::VRep relaxed_v = polyhedra::enumerate_vertices(relaxed);
    if (relaxed_v.vertices.empty()) {
        throw Error(errc::formula_violation, "relaxation of a feasible flow polytope is empty");
    }
    const std::size_t last = tri_offset(n, n, n);
    std::size_t argmin = 0;
    for (std::size_t v = 1; v < relaxed_v.vertices.size(); ++v) {
        if (relaxed_v.vertices[v][last] < relaxed_v.vertices[argmin][last]) argmin = v;
    }

    TightDescription out;
    if (relaxed_v.vertices[argmin][last] < 0) {
        bool diagonal_works = a.a[n - 1] < 0;
        for (int i = 1; i <= n - 1 && diagonal_works; ++i) diagonal_works = a.a[i - 1] >= 0;
        if (diagonal_works) {
            UpperTri diag(n);
            for (int i = 1; i <= n; ++i) diag.set(i, i, a.a[i - 1]);
            out.witness = std::move(diag);
        } else {
            out.witness = UpperTri::from_flat(n, relaxed_v.vertices[argmin]);
        }
        return out;
    }

    // Redundant (n,n) row: the relaxation equals the flow polytope, so the
    // coordinate minima over its vertices give the tight right-hand side.
    TildeUpperTri btilde(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            if (i == n && j == n) continue;
            const std::size_t idx = tri_offset(n, i, j);
            Rat minimum = relaxed_v.vertices[0][idx];
            for (std::size_t v = 1; v < relaxed_v.vertices.size(); ++v) {
                minimum = std::min(minimum, relaxed_v.vertices[v][idx]);
            }
            btilde.set(i, j, -minimum);
        }
    }
    out.btilde = std::move(btilde);
    return out;
}

FlowVerdict is_deformation_of_tesler(const NetFlow& a) {
    const CriticalInfo info = critical_position(a);

    FlowVerdict verdict;
    verdict.l = info.l;
    verdict.voided = info.voided;

    if (info.l == a.n) {
        verdict.is_deformation = true;
        verdict.certificate.kind = FlowCertificate::Kind::PointPolytope;
        return verdict;
    }
    bool tail_nonnegative = true;
    for (int i = info.l + 2; i <= a.n; ++i) tail_nonnegative = tail_nonnegative && a.a[i - 1] >= 0;
    if (tail_nonnegative) {
        verdict.is_deformation = true;
        verdict.certificate.kind = FlowCertificate::Kind::AllNonnegTail;
        return verdict;
    }

    verdict.is_deformation = false;
    const auto reduced = std::get<ReducedFlow>(translate_reduce(a));
    verdict.a_hat = reduced.a_hat;

    int m = 0;
    for (int i = info.l + 2; i <= a.n && m == 0; ++i) {
        if (reduced.a_hat.a[i - 1] < 0) m = i;
    }

    const TightDescription tight = tight_description(reduced.a_hat);
    if (!tight.representable()) {
        verdict.certificate.kind = FlowCertificate::Kind::NonRedundantDiagonal;
        verdict.certificate.witness = tight.witness;
        return verdict;
    }

    verdict.certificate.kind = FlowCertificate::Kind::NegativeTail;
    verdict.certificate.m = m;
    verdict.certificate.eta_m = hook_sum_tilde(*tight.btilde, m);
    verdict.certificate.neg_a_m = -reduced.a_hat.a[m - 1];
    if (!(verdict.certificate.eta_m < verdict.certificate.neg_a_m)) {
        throw Error(errc::formula_violation, "negative-tail certificate inequality failed");
    }
    return verdict;
}

}  // namespace teslerforge::flow
