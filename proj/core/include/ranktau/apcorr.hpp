#pragma once

#include "ranktau/scores.hpp"

namespace ranktau {

// True when any two items share a score.
bool has_tied_scores(const ScoreVector& v);

// AP (average precision) correlation of r against s. Both vectors must be
// tie-free (TiesNotAllowed otherwise) and hold at least two items. Ranks are
// induced by descending s; each discordance weighs the reciprocal of its
// lower item's rank, and the result is (T - 2e) / T with T = n - 1.
double ap_correlation(const ScoreVector& r, const ScoreVector& s);

// (ap_correlation(r, s) + ap_correlation(s, r)) / 2.
double symmetric_ap(const ScoreVector& r, const ScoreVector& s);

}  // namespace ranktau
