#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "teslerforge/json_io.hpp"
#include "test_util.hpp"

using namespace teslerforge;
using testutil::hv;
using testutil::tilde;
using testutil::tri;

TEST_CASE("hook sums of the running 3x3 example") {
    const UpperTri m = tri({{1, 2, 3}, {4, 5}, {10}});
    CHECK(hook_sum(m, 2) == Rat(7));  // 4 + 5 - 2
    CHECK(hook_vector(m) == hv({6, 7, 2}));
}

TEST_CASE("hook sum edge cases") {
    const UpperTri zero(4);
    for (int i = 1; i <= 4; ++i) CHECK(hook_sum(zero, i) == Rat(0));

    UpperTri diag(4);
    for (int i = 1; i <= 4; ++i) diag.set(i, i, Rat(i + 5));
    for (int i = 1; i <= 4; ++i) CHECK(hook_sum(diag, i) == Rat(i + 5));

    CHECK_THROWS_WITH_AS(hook_sum(zero, 0), doctest::Contains("out of range"), Error);
    CHECK_THROWS_AS(hook_sum(zero, 5), Error);
}

TEST_CASE("hook vectors of basis matrices") {
    const int n = 4;
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            HookVector expected(n, Rat(0));
            expected[i - 1] += 1;
            if (j > i) expected[j - 1] -= 1;
            CHECK(hook_vector(UpperTri::basis(n, i, j)) == expected);
        }
    }
}

TEST_CASE("projected hook sums") {
    const TildeUpperTri b = tilde({{-1, 2, -3, -4}, {-5, 6, 7}, {-8, 9}});
    CHECK(hook_sum_tilde(b, 1) == Rat(-6));
    CHECK(hook_sum_tilde(b, 2) == Rat(6));
    CHECK(hook_sum_tilde(b, 3) == Rat(-2));
    CHECK_THROWS_AS(hook_sum_tilde(b, 4), Error);  // undefined after projection

    const TildeUpperTri zero(4);
    for (int i = 1; i <= 3; ++i) CHECK(hook_sum_tilde(zero, i) == Rat(0));

    TildeUpperTri single(3);
    single.set(1, 2, Rat(1));
    CHECK(hook_sum_tilde(single, 2) == Rat(-1));
}

TEST_CASE("support patterns") {
    const UpperTri v = tri({{0, 2, 0, 0}, {0, 0, 4}, {3, 0}, {8}});
    const SupportPattern s = support(v);
    CHECK(s.bit(1, 2));
    CHECK(s.bit(2, 4));
    CHECK(s.bit(3, 3));
    CHECK(s.bit(4, 4));
    CHECK_FALSE(s.bit(1, 1));
    CHECK_FALSE(s.bit(2, 3));

    CHECK(support(UpperTri(3)) == SupportPattern(3));

    UpperTri ones(3);
    for (int i = 1; i <= 3; ++i) {
        for (int j = i; j <= 3; ++j) ones.set(i, j, Rat(1));
    }
    const SupportPattern all = support(ones);
    for (int i = 1; i <= 3; ++i) {
        for (int j = i; j <= 3; ++j) CHECK(all.bit(i, j));
    }
}

TEST_CASE("tesler H-representation row counts") {
    const auto h2 = tesler_hrep(hv({1, 1}));
    CHECK(h2.dim == 3);
    CHECK(h2.eq.size() == 2);
    REQUIRE(h2.ineq.size() == 2);
    // the two inequality rows bound entries (1,1) and (1,2)
    CHECK(h2.ineq[0].coeffs == RatVector{-1, 0, 0});
    CHECK(h2.ineq[1].coeffs == RatVector{0, -1, 0});

    const auto h4 = tesler_hrep(hv({1, 2, 3, 4}));
    CHECK(h4.eq.size() == 4);
    CHECK(h4.ineq.size() == 9);
    CHECK(h4.eq[1].rhs == Rat(2));
}

TEST_CASE("hook vector is linear") {
    testutil::RatSampler sampler(20240901);
    for (int round = 0; round < 25; ++round) {
        const int n = sampler.integer(1, 5);
        const UpperTri m1 = sampler.upper_tri(n);
        const UpperTri m2 = sampler.upper_tri(n);
        const Rat c = sampler.rat(-6, 6);

        HookVector sum = hook_vector(m1);
        const HookVector h2 = hook_vector(m2);
        for (int i = 0; i < n; ++i) sum[i] += h2[i];
        CHECK(hook_vector(m1 + m2) == sum);

        HookVector scaled = hook_vector(m1);
        for (int i = 0; i < n; ++i) scaled[i] *= c;
        CHECK(hook_vector(m1.scaled(c)) == scaled);
    }
}

TEST_CASE("projection preserves the first n-1 hook sums") {
    testutil::RatSampler sampler(77);
    for (int round = 0; round < 25; ++round) {
        const int n = sampler.integer(2, 5);
        const UpperTri m = sampler.upper_tri(n);
        const TildeUpperTri b = project_tilde(m);
        for (int i = 1; i <= n - 1; ++i) CHECK(hook_sum_tilde(b, i) == hook_sum(m, i));
        CHECK(extend_tilde(b, m.at(n, n)) == m);
    }
}

TEST_CASE("hook sums telescope to the diagonal total") {
    testutil::RatSampler sampler(4242);
    for (int round = 0; round < 25; ++round) {
        const int n = sampler.integer(1, 6);
        const UpperTri m = sampler.upper_tri(n);
        Rat hook_total = 0;
        for (const Rat& x : hook_vector(m)) hook_total += x;
        Rat diag_total = 0;
        for (int i = 1; i <= n; ++i) diag_total += m.at(i, i);
        CHECK(hook_total == diag_total);
    }
}

TEST_CASE("support domination is a partial order") {
    testutil::RatSampler sampler(555);
    std::vector<SupportPattern> patterns;
    for (int round = 0; round < 12; ++round) {
        SupportPattern s(4);
        for (int i = 1; i <= 4; ++i) {
            for (int j = i; j <= 4; ++j) s.set_bit(i, j, sampler.integer(0, 1) == 1);
        }
        patterns.push_back(s);
    }
    for (const auto& s : patterns) CHECK(leq(s, s));
    for (const auto& s : patterns) {
        for (const auto& t : patterns) {
            if (leq(s, t) && leq(t, s)) CHECK(s == t);
            for (const auto& u : patterns) {
                if (leq(s, t) && leq(t, u)) CHECK(leq(s, u));
            }
        }
    }
}

TEST_CASE("rational parsing and formatting") {
    CHECK(parse_rat("3/4") == Rat(3) / 4);
    CHECK(parse_rat("-3/6") == Rat(-1) / 2);
    CHECK(rat_to_string(parse_rat("-3/6")) == "-1/2");
    CHECK(parse_rat("7") == Rat(7));
    CHECK(rat_to_string(Rat(10) / 2) == "5");
    CHECK_THROWS_AS(parse_rat("1.5"), Error);
    CHECK_THROWS_AS(parse_rat("1/0"), Error);
    CHECK_THROWS_AS(parse_rat(""), Error);
    CHECK_THROWS_AS(parse_rat("2/-3"), Error);
}

TEST_CASE("matrix JSON round trip") {
    testutil::RatSampler sampler(909);
    for (int round = 0; round < 10; ++round) {
        const int n = sampler.integer(1, 5);
        const UpperTri m = sampler.upper_tri(n);
        CHECK(io::upper_tri_from_json(io::upper_tri_to_json(m)) == m);
        if (n >= 2) {
            const TildeUpperTri b = project_tilde(m);
            CHECK(io::tilde_upper_tri_from_json(io::tilde_upper_tri_to_json(b)) == b);
        }
    }

    const auto parsed = io::upper_tri_from_json(
        io::json::parse(R"({"n":3,"rows":[["1","2","3"],["4","5"],["10"]]})"));
    CHECK(parsed == tri({{1, 2, 3}, {4, 5}, {10}}));

    CHECK_THROWS_AS(io::upper_tri_from_json(io::json::parse(R"({"n":2,"rows":[["1","2"]]})")),
                    Error);
    CHECK_THROWS_AS(io::upper_tri_from_json(io::json::parse(R"({"rows":[["1"]]})")), Error);
}

TEST_CASE("flat storage uses the documented row-major layout") {
    const UpperTri m = tri({{1, 2, 3}, {4, 5}, {6}});
    CHECK(m.flat() == RatVector{1, 2, 3, 4, 5, 6});
    CHECK(tri_offset(4, 2, 4) == 6);
    CHECK(tri_offset(4, 4, 4) == 9);
    CHECK(tri_count(5) == 15);
}
