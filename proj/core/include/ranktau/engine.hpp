#pragma once

// O(n log n) weighted rank correlation.
//
// Every index pair falls into one of five classes: joint tie, left tie
// (first vector only), right tie (second only), concordance, discordance.
// With T the total pair weight, L/R the weight of pairs tied in the
// first/second vector (joint ties included in both), J the weight of joint
// ties and D the weight of discordances,
//
//     tau = (T - L - R + J - 2 D) / (sqrt(T - L) * sqrt(T - R)).
//
// T, L, R and J come from linear tie-block sums over rank-sorted views; D is
// accumulated by a merge sort that weighs each exchange, a weighted version
// of the classic exchange-counting trick.

#include <cstddef>
#include <span>
#include <vector>

#include "ranktau/scores.hpp"
#include "ranktau/weights.hpp"

namespace ranktau {

enum class RankSource { LexByFirst, LexBySecond, External };

struct CorrelationBreakdown {
    double total = 0;       // T
    double left = 0;        // L: pairs tied in the first vector (joint ties included)
    double right = 0;       // R: pairs tied in the second vector (joint ties included)
    double joint = 0;       // J: pairs tied in both
    double discordant = 0;  // D
    std::size_t n = 0;

    double concordant() const { return total - left - right + joint - discordant; }
};

struct TauResult {
    double value = 0;
    CorrelationBreakdown breakdown;
    RankSource rank_source = RankSource::External;
};

struct TieWeights {
    double left = 0;
    double right = 0;
    double joint = 0;
};

// Stably sorts `items` in place by descending keys[item] and returns the
// accumulated exchange weight: every pair that was inverted in the initial
// arrangement contributes its pair weight. An element leaves the second
// sublist of a merge only when it is strictly greater, so key ties never
// contribute. The merge keeps a residual sum of f over the first sublist;
// moving an element x from the second sublist adds g(ranks[x]) * remaining +
// residual (additive) or g(ranks[x]) * residual (multiplicative).
double weighted_exchange_count(std::vector<std::size_t>& items, std::span<const double> keys,
                               const RankAssignment& ranks, const WeightScheme& w);

// L, J from the maximal r-blocks (and joint blocks) of `order`, which must be
// sorted by (r desc, s desc); R from the maximal s-blocks after re-sorting.
TieWeights tie_weights(const ScoreVector& r, const ScoreVector& s, const RankAssignment& ranks,
                       const WeightScheme& w, std::span<const std::size_t> order);

// The weighted totals without normalization. `source` tells the engine how
// the ranks were built; asymmetric schemes need a ranking that is monotone in
// one of the score vectors, and External ranks are checked for that.
CorrelationBreakdown correlation_breakdown(const ScoreVector& r, const ScoreVector& s,
                                           const RankAssignment& ranks, const WeightScheme& w,
                                           RankSource source = RankSource::External);

// tau over the given ranking. Throws UndefinedCorrelation when a weighted
// norm is zero (constant vector, or every untied pair weighted zero, e.g.
// after aggressive top-k truncation).
TauResult weighted_tau(const ScoreVector& r, const ScoreVector& s, const RankAssignment& ranks,
                       const WeightScheme& w, RankSource source = RankSource::External);

// Average of the tau values under the two lexicographic rankings
// (by r then s, and by s then r); symmetric in its arguments.
double symmetric_weighted_tau(const ScoreVector& r, const ScoreVector& s, const WeightScheme& w);

// Classic tau-b. Pair counts are kept in exact integers, so tie-free inputs
// divide num/P exactly. Equals weighted_tau under the constant additive
// scheme up to rounding.
double kendall_tau_b(const ScoreVector& r, const ScoreVector& s);

// (C - D) / (C + D): tied pairs vanish entirely, whatever their weight.
double goodman_kruskal_gamma(const ScoreVector& r, const ScoreVector& s,
                             const RankAssignment& ranks, const WeightScheme& w,
                             RankSource source = RankSource::External);

// Non-standard variant: the average-precision weights pushed through the
// tie-aware machinery with ranks by the second vector. Unlike ap_correlation
// this accepts ties, but the probabilistic reading of the result is lost.
double ap_correlation_with_ties(const ScoreVector& r, const ScoreVector& s);

}  // namespace ranktau
