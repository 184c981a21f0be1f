#pragma once

// Brute-force O(n^2) reference implementations. Deliberately written as a
// plain loop over all pairs so that the fast engine has an independent,
// auditable check. Not meant for large inputs.

#include "ranktau/engine.hpp"
#include "ranktau/scores.hpp"
#include "ranktau/weights.hpp"

namespace ranktau::oracle {

enum class PairClass { JointTie, LeftTie, RightTie, Concordance, Discordance };

PairClass classify_pair(double r_i, double r_j, double s_i, double s_j);

// All weighted totals by pair enumeration. A pair's weight is
// pair_weight(min(rank_i, rank_j), max(rank_i, rank_j)).
CorrelationBreakdown breakdown(const ScoreVector& r, const ScoreVector& s,
                               const RankAssignment& ranks, const WeightScheme& w);

// sum over pairs of sgn(r_i - r_j) * sgn(s_i - s_j) * weight.
double inner_product(const ScoreVector& r, const ScoreVector& s, const RankAssignment& ranks,
                     const WeightScheme& w);

double norm(const ScoreVector& r, const RankAssignment& ranks, const WeightScheme& w);

// inner / (norm_r * norm_s); UndefinedCorrelation on a zero norm.
double tau(const ScoreVector& r, const ScoreVector& s, const RankAssignment& ranks,
           const WeightScheme& w);

double symmetric_tau(const ScoreVector& r, const ScoreVector& s, const WeightScheme& w);

// Definitional AP correlation, tie-free inputs: with C(i) the number of items
// ranked above s-rank i that are also ranked above it in r,
// (2 / (n-1)) * sum_{i>=1} C(i)/i - 1.
double ap_correlation(const ScoreVector& r, const ScoreVector& s);

double symmetric_ap(const ScoreVector& r, const ScoreVector& s);

}  // namespace ranktau::oracle
