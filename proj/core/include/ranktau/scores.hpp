#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ranktau/errors.hpp"

namespace ranktau {

using Rank = std::size_t;

// Items beyond a partial ground truth carry this rank; weight functions are
// expected to provide a meaningful value for it (usually zero).
inline constexpr Rank kInfiniteRank = std::numeric_limits<Rank>::max();

// Index-aligned real scores: entry i of two vectors refers to the same item.
// Equal values are meaningful ties, never broken.
using ScoreVector = std::vector<double>;

// ranks[i] is the importance rank of item i: 0 is the most important.
// Finite ranks are pairwise distinct and form a prefix {0, ..., m-1};
// everything else is kInfiniteRank.
using RankAssignment = std::vector<Rank>;

struct ParseOptions {
    // 0-based field to read; the whole line is the score when absent.
    std::optional<std::size_t> column;
    char delimiter = '\t';
};

// One score per non-empty line, in file order. Decimal and scientific
// notation are accepted; non-numeric fields raise ParseError with the line
// number, and NaN/infinity literals are rejected.
ScoreVector parse_scores(std::string_view text, const ParseOptions& opts = {});

// One natural number or the literal `inf` per line; the result must satisfy
// the RankAssignment invariants or ParseError is raised.
RankAssignment parse_ranks(std::string_view text);

bool is_valid_rank_assignment(const RankAssignment& ranks);

// Indices sorted by descending primary score, then descending secondary
// score, then ascending index.
std::vector<std::size_t> lex_order(const ScoreVector& primary, const ScoreVector& secondary);

// lex_order turned into ranks: the lexicographically largest item gets rank 0.
RankAssignment lex_rank(const ScoreVector& primary, const ScoreVector& secondary);

// Entries with rank < k survive; all others become kInfiniteRank. Idempotent.
RankAssignment truncate_ranks(RankAssignment ranks, Rank k);

// 17 significant digits; parse_scores(format_score(x)) recovers x exactly.
std::string format_score(double x);

}  // namespace ranktau
