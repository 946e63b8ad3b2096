#include "teslerforge/core.hpp"

#include <algorithm>

namespace teslerforge {

namespace {

void check_size(int n) {
    if (n < 1) throw Error(errc::size_mismatch, "matrix size must be positive");
}

}  // namespace

UpperTri::UpperTri(int n) : n_(n) {
    check_size(n);
    entries_.assign(tri_count(n), Rat(0));
}

UpperTri UpperTri::from_flat(int n, RatVector entries) {
    check_size(n);
    if (entries.size() != tri_count(n)) {
        throw Error(errc::size_mismatch, "flat entry count does not match matrix size");
    }
    UpperTri m(n);
    m.entries_ = std::move(entries);
    return m;
}

UpperTri UpperTri::basis(int n, int i, int j) {
    UpperTri m(n);
    m.set(i, j, Rat(1));
    return m;
}

void UpperTri::check_index(int i, int j) const {
    if (i < 1 || j < i || j > n_) {
        throw Error(errc::index_out_of_range, "matrix index out of range");
    }
}

const Rat& UpperTri::at(int i, int j) const {
    check_index(i, j);
    return entries_[tri_offset(n_, i, j)];
}

void UpperTri::set(int i, int j, Rat value) {
    check_index(i, j);
    entries_[tri_offset(n_, i, j)] = std::move(value);
}

UpperTri UpperTri::operator+(const UpperTri& other) const {
    if (n_ != other.n_) throw Error(errc::size_mismatch, "matrix sizes differ");
    UpperTri out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] + other.entries_[k];
    return out;
}

UpperTri UpperTri::operator-(const UpperTri& other) const {
    if (n_ != other.n_) throw Error(errc::size_mismatch, "matrix sizes differ");
    UpperTri out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] - other.entries_[k];
    return out;
}

UpperTri UpperTri::scaled(const Rat& factor) const {
    UpperTri out(n_);
    for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k] * factor;
    return out;
}

bool UpperTri::operator<(const UpperTri& other) const {
    if (n_ != other.n_) return n_ < other.n_;
    return entries_ < other.entries_;
}

bool UpperTri::all_nonnegative() const {
    return std::all_of(entries_.begin(), entries_.end(), [](const Rat& r) { return r >= 0; });
}

TildeUpperTri::TildeUpperTri(int n) : n_(n) {
    check_size(n);
    entries_.assign(tri_count(n) - 1, Rat(0));
}

TildeUpperTri TildeUpperTri::from_flat(int n, RatVector entries) {
    check_size(n);
    if (entries.size() != tri_count(n) - 1) {
        throw Error(errc::size_mismatch, "flat entry count does not match projected matrix size");
    }
    TildeUpperTri b(n);
    b.entries_ = std::move(entries);
    return b;
}

void TildeUpperTri::check_index(int i, int j) const {
    if (i < 1 || j < i || j > n_ || (i == n_ && j == n_)) {
        throw Error(errc::index_out_of_range, "projected matrix index out of range");
    }
}

const Rat& TildeUpperTri::at(int i, int j) const {
    check_index(i, j);
    return entries_[tri_offset(n_, i, j)];
}

void TildeUpperTri::set(int i, int j, Rat value) {
    check_index(i, j);
    entries_[tri_offset(n_, i, j)] = std::move(value);
}

TildeUpperTri project_tilde(const UpperTri& m) {
    RatVector flat = m.flat();
    flat.pop_back();
    return TildeUpperTri::from_flat(m.n(), std::move(flat));
}

UpperTri extend_tilde(const TildeUpperTri& b, Rat last) {
    RatVector flat = b.flat();
    flat.push_back(std::move(last));
    return UpperTri::from_flat(b.n(), std::move(flat));
}

SupportPattern::SupportPattern(int n) : n_(n) {
    check_size(n);
    bits_.assign(tri_count(n), 0);
}

bool SupportPattern::bit(int i, int j) const {
    if (i < 1 || j < i || j > n_) throw Error(errc::index_out_of_range, "pattern index out of range");
    return bits_[tri_offset(n_, i, j)] != 0;
}

void SupportPattern::set_bit(int i, int j, bool value) {
    if (i < 1 || j < i || j > n_) throw Error(errc::index_out_of_range, "pattern index out of range");
    bits_[tri_offset(n_, i, j)] = value ? 1 : 0;
}

int SupportPattern::row_ones(int i) const {
    int count = 0;
    for (int j = i; j <= n_; ++j) count += bit(i, j) ? 1 : 0;
    return count;
}

int SupportPattern::row_position(int i) const {
    int pos = 0;
    for (int j = i; j <= n_; ++j) {
        if (bit(i, j)) {
            if (pos != 0) throw Error(errc::not_a_vertex, "row holds more than one nonzero entry");
            pos = j;
        }
    }
    return pos;
}

bool leq(const SupportPattern& a, const SupportPattern& b) {
    if (a.n() != b.n()) throw Error(errc::size_mismatch, "pattern sizes differ");
    for (int i = 1; i <= a.n(); ++i) {
        for (int j = i; j <= a.n(); ++j) {
            if (a.bit(i, j) && !b.bit(i, j)) return false;
        }
    }
    return true;
}

Rat hook_sum(const UpperTri& m, int i) {
    if (i < 1 || i > m.n()) throw Error(errc::index_out_of_range, "hook sum index out of range");
    Rat total = 0;
    for (int j = i; j <= m.n(); ++j) total += m.at(i, j);
    for (int j = 1; j < i; ++j) total -= m.at(j, i);
    return total;
}

HookVector hook_vector(const UpperTri& m) {
    HookVector out;
    out.reserve(m.n());
    for (int i = 1; i <= m.n(); ++i) out.push_back(hook_sum(m, i));
    return out;
}

Rat hook_sum_tilde(const TildeUpperTri& b, int i) {
    if (i < 1 || i > b.n() - 1) {
        throw Error(errc::index_out_of_range,
                    "hook sum of a projected matrix is defined for 1 <= i <= n-1");
    }
    Rat total = 0;
    for (int j = i; j <= b.n(); ++j) total += b.at(i, j);
    for (int j = 1; j < i; ++j) total -= b.at(j, i);
    return total;
}

SupportPattern support(const UpperTri& m) {
    SupportPattern s(m.n());
    for (int i = 1; i <= m.n(); ++i) {
        for (int j = i; j <= m.n(); ++j) s.set_bit(i, j, m.at(i, j) != 0);
    }
    return s;
}

RatVector hook_row(int n, int i) {
    RatVector row(tri_count(n), Rat(0));
    for (int j = i; j <= n; ++j) row[tri_offset(n, i, j)] = 1;
    for (int j = 1; j < i; ++j) row[tri_offset(n, j, i)] = -1;
    return row;
}

polyhedra::HRep tesler_hrep(const HookVector& a) {
    const int n = static_cast<int>(a.size());
    check_size(n);
    polyhedra::HRep h;
    h.dim = static_cast<int>(tri_count(n));
    for (int i = 1; i <= n; ++i) {
        h.eq.push_back({hook_row(n, i), a[i - 1]});
    }
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            if (i == n && j == n) continue;
            RatVector row(tri_count(n), Rat(0));
            row[tri_offset(n, i, j)] = -1;
            h.ineq.push_back({std::move(row), Rat(0)});
        }
    }
    return h;
}

}  // namespace teslerforge
