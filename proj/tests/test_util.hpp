#ifndef TESLERFORGE_TEST_UTIL_HPP
#define TESLERFORGE_TEST_UTIL_HPP

#include <random>
#include <string>
#include <vector>

#include "teslerforge/core.hpp"

namespace teslerforge::testutil {

inline UpperTri tri(const std::vector<std::vector<long long>>& rows) {
    const int n = static_cast<int>(rows.size());
    UpperTri m(n);
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) m.set(i, j, Rat(rows[i - 1][j - i]));
    }
    return m;
}

inline TildeUpperTri tilde(const std::vector<std::vector<long long>>& rows) {
    const int n = static_cast<int>(rows.size()) + 1;
    TildeUpperTri b(n);
    for (int i = 1; i <= n - 1; ++i) {
        for (int j = i; j <= n; ++j) b.set(i, j, Rat(rows[i - 1][j - i]));
    }
    return b;
}

inline HookVector hv(const std::vector<long long>& values) {
    HookVector out;
    for (long long v : values) out.push_back(Rat(v));
    return out;
}

inline HookVector hv_s(const std::vector<std::string>& values) {
    HookVector out;
    for (const auto& v : values) out.push_back(parse_rat(v));
    return out;
}

/// Deterministic rational sampler for property tests.
class RatSampler {
  public:
    explicit RatSampler(unsigned seed) : rng_(seed) {}

    Rat rat(int lo_num, int hi_num, int max_den = 4) {
        std::uniform_int_distribution<int> num(lo_num, hi_num);
        std::uniform_int_distribution<int> den(1, max_den);
        return Rat(num(rng_)) / Rat(den(rng_));
    }

    Rat nonneg(int hi_num, int max_den = 4) { return rat(0, hi_num, max_den); }

    Rat positive(int hi_num, int max_den = 4) {
        std::uniform_int_distribution<int> num(1, hi_num);
        std::uniform_int_distribution<int> den(1, max_den);
        return Rat(num(rng_)) / Rat(den(rng_));
    }

    int integer(int lo, int hi) {
        std::uniform_int_distribution<int> d(lo, hi);
        return d(rng_);
    }

    UpperTri upper_tri(int n, int lo = -9, int hi = 9) {
        UpperTri m(n);
        for (int i = 1; i <= n; ++i) {
            for (int j = i; j <= n; ++j) m.set(i, j, rat(lo, hi));
        }
        return m;
    }

    HookVector hook_vector(int n, bool strictly_positive) {
        HookVector a;
        for (int i = 0; i < n; ++i) {
            a.push_back(strictly_positive ? positive(12) : nonneg(12));
        }
        return a;
    }

  private:
    std::mt19937_64 rng_;
};

}  // namespace teslerforge::testutil

#endif
