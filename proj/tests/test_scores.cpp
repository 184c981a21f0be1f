#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "ranktau/scores.hpp"

using namespace ranktau;

TEST_CASE("parse_scores: plain numbers, decimal and scientific") {
    const ScoreVector v = parse_scores("1.0\n2.5\n-3e2\n");
    REQUIRE(v.size() == 3);
    CHECK(v[0] == 1.0);
    CHECK(v[1] == 2.5);
    CHECK(v[2] == -300.0);
}

TEST_CASE("parse_scores: column projection with tab delimiter") {
    ParseOptions opts;
    opts.column = 1;
    const ScoreVector v = parse_scores("a\t1\nb\t2\n", opts);
    CHECK(v == ScoreVector{1.0, 2.0});
}

TEST_CASE("parse_scores: custom delimiter and leading plus") {
    ParseOptions opts;
    opts.column = 2;
    opts.delimiter = ',';
    const ScoreVector v = parse_scores("x,y,+0.5\nx,y,1e-3\n", opts);
    CHECK(v == ScoreVector{0.5, 0.001});
}

TEST_CASE("parse_scores: non-numeric field reports the line") {
    try {
        parse_scores("1\nx\n");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("parse_scores: NaN and infinity literals are rejected") {
    CHECK_THROWS_AS(parse_scores("nan\n"), ParseError);
    CHECK_THROWS_AS(parse_scores("inf\n"), ParseError);
    CHECK_THROWS_AS(parse_scores("1e999\n"), ParseError);
}

TEST_CASE("parse_scores: empty input is an error, blank lines are skipped") {
    CHECK_THROWS_AS(parse_scores(""), ParseError);
    CHECK_THROWS_AS(parse_scores("\n\n  \n"), ParseError);
    CHECK(parse_scores("1\n\n2\n") == ScoreVector{1.0, 2.0});
}

TEST_CASE("parse_scores: CRLF line endings and missing trailing newline") {
    CHECK(parse_scores("1\r\n2\r\n") == ScoreVector{1.0, 2.0});
    CHECK(parse_scores("1\n2") == ScoreVector{1.0, 2.0});
}

TEST_CASE("parse_scores: missing column") {
    ParseOptions opts;
    opts.column = 3;
    CHECK_THROWS_AS(parse_scores("a\tb\n", opts), ParseError);
}

TEST_CASE("parse_ranks: naturals and inf") {
    const RankAssignment r = parse_ranks("0\n2\n1\ninf\n");
    CHECK(r == RankAssignment{0, 2, 1, kInfiniteRank});
}

TEST_CASE("parse_ranks: invalid assignments") {
    CHECK_THROWS_AS(parse_ranks("0\n0\n"), ParseError);   // duplicate
    CHECK_THROWS_AS(parse_ranks("0\n2\n"), ParseError);   // gap: not a prefix
    CHECK_THROWS_AS(parse_ranks("1\ninf\n"), ParseError); // rank 0 missing
    CHECK_THROWS_AS(parse_ranks("-1\n"), ParseError);
    CHECK_THROWS_AS(parse_ranks("abc\n"), ParseError);
    CHECK_THROWS_AS(parse_ranks(""), ParseError);
}

TEST_CASE("is_valid_rank_assignment") {
    CHECK(is_valid_rank_assignment({0, 1, 2}));
    CHECK(is_valid_rank_assignment({2, 0, 1}));
    CHECK(is_valid_rank_assignment({0, kInfiniteRank, 1}));
    CHECK(is_valid_rank_assignment({kInfiniteRank, kInfiniteRank}));
    CHECK_FALSE(is_valid_rank_assignment({0, 0}));
    CHECK_FALSE(is_valid_rank_assignment({0, 2}));
    CHECK_FALSE(is_valid_rank_assignment({1, kInfiniteRank}));
}

TEST_CASE("lex_rank: descending, secondary breaks ties, index breaks joint ties") {
    CHECK(lex_rank({3, 1, 2}, {0, 0, 0}) == RankAssignment{0, 2, 1});
    CHECK(lex_rank({1, 1}, {5, 7}) == RankAssignment{1, 0});
    CHECK(lex_rank({1, 1}, {2, 2}) == RankAssignment{0, 1});
}

TEST_CASE("lex_rank: length mismatch") {
    CHECK_THROWS_AS(lex_rank({1, 2}, {1}), std::invalid_argument);
}

TEST_CASE("lex_rank: output is a permutation, tie blocks ordered by descending secondary") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<int> d(0, 3);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = 1 + rng() % 40;
        ScoreVector r(n), s(n);
        for (auto& x : r) x = double(d(rng));
        for (auto& x : s) x = double(d(rng));
        const RankAssignment ranks = lex_rank(r, s);

        std::vector<bool> seen(n, false);
        for (Rank rk : ranks) {
            REQUIRE(rk < n);
            REQUIRE_FALSE(seen[rk]);
            seen[rk] = true;
        }

        const auto order = lex_order(r, s);
        for (std::size_t p = 1; p < n; ++p) {
            const std::size_t a = order[p - 1], b = order[p];
            REQUIRE(r[a] >= r[b]);
            if (r[a] == r[b]) REQUIRE(s[a] >= s[b]);
        }
    }
}

TEST_CASE("truncate_ranks") {
    CHECK(truncate_ranks({0, 1, 2}, 2) == RankAssignment{0, 1, kInfiniteRank});
    CHECK(truncate_ranks({0, 1, 2}, 0) ==
          RankAssignment{kInfiniteRank, kInfiniteRank, kInfiniteRank});
    CHECK(truncate_ranks({2, 0, 1}, 1) == RankAssignment{kInfiniteRank, 0, kInfiniteRank});
}

TEST_CASE("truncate_ranks is idempotent and preserves validity") {
    std::mt19937_64 rng(11);
    for (int iter = 0; iter < 50; ++iter) {
        const std::size_t n = 1 + rng() % 30;
        ScoreVector r(n), s(n);
        for (auto& x : r) x = double(rng() % 5);
        for (auto& x : s) x = double(rng() % 5);
        const Rank k = rng() % (n + 2);
        const RankAssignment once = truncate_ranks(lex_rank(r, s), k);
        CHECK(truncate_ranks(once, k) == once);
        CHECK(is_valid_rank_assignment(once));
    }
}

TEST_CASE("format_score round-trips through parse_scores") {
    std::mt19937_64 rng(13);
    std::uniform_real_distribution<double> mant(-1.0, 1.0);
    std::uniform_int_distribution<int> expo(-30, 30);
    for (int iter = 0; iter < 500; ++iter) {
        const double x = std::ldexp(mant(rng), expo(rng));
        const ScoreVector parsed = parse_scores(format_score(x) + "\n");
        REQUIRE(parsed.size() == 1);
        CHECK(parsed[0] == x);
    }
    CHECK(parse_scores(format_score(0.1))[0] == 0.1);
    CHECK(parse_scores(format_score(-0.0))[0] == 0.0);
}
