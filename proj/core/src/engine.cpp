#include "ranktau/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "ranktau/errors.hpp"

namespace ranktau {
namespace {

// The merge works on self-contained 32-byte records so the hot loop streams
// memory instead of gathering keys and weights through an index indirection.
struct MergeItem {
    double key;
    double f;  // f(rank of item)
    double g;  // g(rank of item)
    std::size_t idx;
};

// The engine only applies g to the worse-ranked end of a pair, so the rank-0
// item's g is never read; it may be undefined (AP scheme).
double item_g_weight(const WeightScheme& w, Rank rank) {
    return (w.symmetric || rank != 0) ? w.g(rank) : 0.0;
}

// Merge sort, descending by key, stable (ties stay with the first sublist and
// never count as exchanges). Each recursive call returns the f-sum of its
// sublist, which seeds the residual of the parent merge.
struct WeighedMerge {
    std::span<MergeItem> items;
    std::span<MergeItem> tmp;
    bool multiplicative = false;
    double exchanges = 0.0;

    double run(std::size_t lo, std::size_t len) {
        if (len == 1) return items[lo].f;
        const std::size_t half = len / 2;
        const std::size_t mid = lo + half;
        double residual = run(lo, half);
        const double sublist_f = run(mid, len - half) + residual;
        std::size_t i = 0, j = 0, k = 0;
        while (j < half && k < len - half) {
            const MergeItem& a = items[lo + j];
            const MergeItem& b = items[mid + k];
            if (a.key >= b.key) {
                residual -= a.f;
                tmp[i++] = a;
                ++j;
            } else {
                // b jumps over the half - j elements left in the first
                // sublist; the residual holds their f-sum.
                exchanges += multiplicative ? b.g * residual
                                            : b.g * double(half - j) + residual;
                tmp[i++] = b;
                ++k;
            }
        }
        while (j < half) tmp[i++] = items[lo + j++];
        // Anything left from the second sublist is already in place.
        std::copy(tmp.begin(), tmp.begin() + std::ptrdiff_t(i), items.begin() + std::ptrdiff_t(lo));
        return sublist_f;
    }
};

// Sum of block_weight over the maximal blocks of `order` on which eq holds.
template <typename Eq>
double block_sum(std::span<const std::size_t> order, const RankAssignment& ranks,
                 const WeightScheme& w, Eq&& eq) {
    double sum = 0.0;
    const std::size_t n = order.size();
    std::size_t start = 0;
    std::vector<Rank> scratch;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && eq(order[start], order[end])) ++end;
        if (end - start >= 2) {
            scratch.assign(end - start, 0);
            for (std::size_t p = start; p < end; ++p) scratch[p - start] = ranks[order[p]];
            sum += block_weight(w, scratch);
        }
        start = end;
    }
    return sum;
}

// Sum of block_weight over the maximal equal-key blocks of a merged record
// sequence.
double block_sum_by_key(std::span<const MergeItem> items, const RankAssignment& ranks,
                        const WeightScheme& w) {
    double sum = 0.0;
    const std::size_t n = items.size();
    std::size_t start = 0;
    std::vector<Rank> scratch;
    while (start < n) {
        std::size_t end = start + 1;
        while (end < n && items[start].key == items[end].key) ++end;
        if (end - start >= 2) {
            scratch.assign(end - start, 0);
            for (std::size_t p = start; p < end; ++p) scratch[p - start] = ranks[items[p].idx];
            sum += block_weight(w, scratch);
        }
        start = end;
    }
    return sum;
}

// The six-step layout: `order` arrives sorted by (x desc, y desc); T plus the
// x-tie and joint-tie weights come from it, the weighted merge to y-order
// yields D, and the y-tie weights close it out.
CorrelationBreakdown run_pipeline(const ScoreVector& x, const ScoreVector& y,
                                  const RankAssignment& ranks, const WeightScheme& w,
                                  const std::vector<std::size_t>& order) {
    const std::size_t n = x.size();
    CorrelationBreakdown bd;
    bd.n = n;
    bd.total = total_weight(w, ranks);
    if (n < 2) return bd;
    bd.left = block_sum(order, ranks, w, [&](std::size_t a, std::size_t b) { return x[a] == x[b]; });
    bd.joint = block_sum(order, ranks, w, [&](std::size_t a, std::size_t b) {
        return x[a] == x[b] && y[a] == y[b];
    });
    std::vector<MergeItem> items(n);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t i = order[p];
        items[p] = {y[i], w.f(ranks[i]), item_g_weight(w, ranks[i]), i};
    }
    std::vector<MergeItem> tmp(n);
    WeighedMerge merge{items, tmp, w.combiner == Combiner::Multiplicative};
    merge.run(0, n);
    bd.discordant = merge.exchanges;
    bd.right = block_sum_by_key(items, ranks, w);
    return bd;
}

// v_i > v_j must imply rank_i < rank_j (extended order; pairs that are both
// infinite are exempt). Holds by construction for lexicographic rankings and
// their top-k truncations.
bool rank_aligned(const ScoreVector& v, const RankAssignment& ranks) {
    std::size_t finite = 0;
    for (Rank r : ranks) {
        if (r != kInfiniteRank) ++finite;
    }
    if (finite == 0) return true;
    std::vector<std::size_t> at(finite, SIZE_MAX);
    bool any_inf = false;
    double max_inf = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < ranks.size(); ++i) {
        if (ranks[i] == kInfiniteRank) {
            any_inf = true;
            max_inf = std::max(max_inf, v[i]);
        } else {
            if (ranks[i] >= finite || at[ranks[i]] != SIZE_MAX) {
                throw std::invalid_argument(
                    "invalid rank assignment: finite ranks must be distinct and form a prefix");
            }
            at[ranks[i]] = i;
        }
    }
    for (std::size_t p = 1; p < finite; ++p) {
        if (v[at[p]] > v[at[p - 1]]) return false;
    }
    if (any_inf && max_inf > v[at[finite - 1]]) return false;
    return true;
}

// Symmetric schemes do not care which end of a pair gets f and which gets g,
// so they always run the canonical orientation (first vector as the primary
// sort key). An asymmetric scheme must apply f to the better rank of every
// discordant pair, which the merge can only guarantee when the initial order
// refines the ranking; the pipeline is therefore run on whichever side the
// ranking follows.
bool use_swapped_orientation(const WeightScheme& w, RankSource source, const ScoreVector& r,
                             const ScoreVector& s, const RankAssignment& ranks) {
    if (w.symmetric) return false;
    switch (source) {
        case RankSource::LexByFirst:
            return false;
        case RankSource::LexBySecond:
            return true;
        case RankSource::External:
            if (rank_aligned(r, ranks)) return false;
            if (rank_aligned(s, ranks)) return true;
            throw std::invalid_argument(
                "an asymmetric weight scheme requires a ranking that is monotone in one of the "
                "score vectors");
    }
    return false;
}

void check_lengths(const ScoreVector& r, const ScoreVector& s, const RankAssignment& ranks) {
    if (r.size() != s.size()) {
        throw std::invalid_argument("score vectors differ in length (" +
                                    std::to_string(r.size()) + " vs " + std::to_string(s.size()) +
                                    ")");
    }
    if (ranks.size() != r.size()) {
        throw std::invalid_argument("rank assignment length " + std::to_string(ranks.size()) +
                                    " does not match the " + std::to_string(r.size()) +
                                    " scores");
    }
}

std::string degenerate_message(const char* which, const ScoreVector& v) {
    std::string msg = "undefined correlation: the ";
    msg += which;
    if (v.size() < 2) {
        return msg + " vector has fewer than two items";
    }
    const bool constant = std::all_of(v.begin(), v.end(), [&](double x) { return x == v.front(); });
    if (constant) {
        return msg + " vector is constant, so its weighted norm is zero";
    }
    return msg +
           " vector has zero weighted norm: every untied pair weighs zero under this ranking "
           "(e.g. after top-k truncation)";
}

double normalized_tau(const CorrelationBreakdown& bd, const ScoreVector& r, const ScoreVector& s) {
    const double norm2_r = bd.total - bd.left;
    const double norm2_s = bd.total - bd.right;
    if (norm2_r <= 0.0) throw UndefinedCorrelation(degenerate_message("first", r));
    if (norm2_s <= 0.0) throw UndefinedCorrelation(degenerate_message("second", s));
    const double num = bd.total - bd.left - bd.right + bd.joint - 2.0 * bd.discordant;
    return num / (std::sqrt(norm2_r) * std::sqrt(norm2_s));
}

// Plain integer exchange counter for tau-b, on packed (key, idx) records.
struct KeyedItem {
    double key;
    std::size_t idx;
};

std::uint64_t count_inversions(std::vector<KeyedItem>& items, std::vector<KeyedItem>& tmp,
                               std::size_t lo, std::size_t len) {
    if (len <= 1) return 0;
    const std::size_t half = len / 2;
    const std::size_t mid = lo + half;
    std::uint64_t inv =
        count_inversions(items, tmp, lo, half) + count_inversions(items, tmp, mid, len - half);
    std::size_t i = 0, j = 0, k = 0;
    while (j < half && k < len - half) {
        if (items[lo + j].key >= items[mid + k].key) {
            tmp[i++] = items[lo + j++];
        } else {
            tmp[i++] = items[mid + k++];
            inv += half - j;
        }
    }
    while (j < half) tmp[i++] = items[lo + j++];
    std::copy(tmp.begin(), tmp.begin() + std::ptrdiff_t(i), items.begin() + std::ptrdiff_t(lo));
    return inv;
}

template <typename Eq>
std::uint64_t tie_pair_count(std::span<const std::size_t> order, Eq&& eq) {
    std::uint64_t pairs = 0;
    std::size_t start = 0;
    while (start < order.size()) {
        std::size_t end = start + 1;
        while (end < order.size() && eq(order[start], order[end])) ++end;
        const std::uint64_t k = end - start;
        pairs += k * (k - 1) / 2;
        start = end;
    }
    return pairs;
}

}  // namespace

double weighted_exchange_count(std::vector<std::size_t>& items, std::span<const double> keys,
                               const RankAssignment& ranks, const WeightScheme& w) {
    if (items.empty()) return 0.0;
    const std::size_t n = items.size();
    std::vector<MergeItem> packed(n);
    for (std::size_t p = 0; p < n; ++p) {
        const std::size_t i = items[p];
        packed[p] = {keys[i], w.f(ranks[i]), item_g_weight(w, ranks[i]), i};
    }
    std::vector<MergeItem> tmp(n);
    WeighedMerge merge{packed, tmp, w.combiner == Combiner::Multiplicative};
    merge.run(0, n);
    for (std::size_t p = 0; p < n; ++p) items[p] = packed[p].idx;
    return merge.exchanges;
}

TieWeights tie_weights(const ScoreVector& r, const ScoreVector& s, const RankAssignment& ranks,
                       const WeightScheme& w, std::span<const std::size_t> order) {
    check_lengths(r, s, ranks);
    TieWeights tw;
    tw.left = block_sum(order, ranks, w, [&](std::size_t a, std::size_t b) { return r[a] == r[b]; });
    tw.joint = block_sum(order, ranks, w, [&](std::size_t a, std::size_t b) {
        return r[a] == r[b] && s[a] == s[b];
    });
    std::vector<std::size_t> by_s(order.begin(), order.end());
    std::stable_sort(by_s.begin(), by_s.end(),
                     [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
    tw.right = block_sum(by_s, ranks, w, [&](std::size_t a, std::size_t b) { return s[a] == s[b]; });
    return tw;
}

CorrelationBreakdown correlation_breakdown(const ScoreVector& r, const ScoreVector& s,
                                           const RankAssignment& ranks, const WeightScheme& w,
                                           RankSource source) {
    check_lengths(r, s, ranks);
    const bool swapped = use_swapped_orientation(w, source, r, s, ranks);
    const ScoreVector& x = swapped ? s : r;
    const ScoreVector& y = swapped ? r : s;
    CorrelationBreakdown bd = run_pipeline(x, y, ranks, w, lex_order(x, y));
    if (swapped) std::swap(bd.left, bd.right);
    return bd;
}

TauResult weighted_tau(const ScoreVector& r, const ScoreVector& s, const RankAssignment& ranks,
                       const WeightScheme& w, RankSource source) {
    TauResult out;
    out.breakdown = correlation_breakdown(r, s, ranks, w, source);
    out.value = normalized_tau(out.breakdown, r, s);
    out.rank_source = source;
    return out;
}

double symmetric_weighted_tau(const ScoreVector& r, const ScoreVector& s, const WeightScheme& w) {
    if (r.size() != s.size()) {
        throw std::invalid_argument("score vectors differ in length (" +
                                    std::to_string(r.size()) + " vs " + std::to_string(s.size()) +
                                    ")");
    }
    const std::size_t n = r.size();

    std::vector<std::size_t> order = lex_order(r, s);
    RankAssignment ranks(n);
    for (std::size_t p = 0; p < n; ++p) ranks[order[p]] = p;
    const CorrelationBreakdown bd1 = run_pipeline(r, s, ranks, w, order);
    const double t1 = normalized_tau(bd1, r, s);

    order = lex_order(s, r);
    for (std::size_t p = 0; p < n; ++p) ranks[order[p]] = p;
    CorrelationBreakdown bd2 = run_pipeline(s, r, ranks, w, order);
    std::swap(bd2.left, bd2.right);
    const double t2 = normalized_tau(bd2, r, s);

    return (t1 + t2) / 2.0;
}

double kendall_tau_b(const ScoreVector& r, const ScoreVector& s) {
    if (r.size() != s.size()) {
        throw std::invalid_argument("score vectors differ in length (" +
                                    std::to_string(r.size()) + " vs " + std::to_string(s.size()) +
                                    ")");
    }
    const std::uint64_t n = r.size();
    if (n < 2) throw UndefinedCorrelation(degenerate_message("first", r));

    const std::vector<std::size_t> items = lex_order(r, s);
    const std::uint64_t pairs = n * (n - 1) / 2;
    const std::uint64_t left =
        tie_pair_count(items, [&](std::size_t a, std::size_t b) { return r[a] == r[b]; });
    const std::uint64_t joint = tie_pair_count(
        items, [&](std::size_t a, std::size_t b) { return r[a] == r[b] && s[a] == s[b]; });

    std::vector<KeyedItem> keyed(items.size());
    for (std::size_t p = 0; p < items.size(); ++p) keyed[p] = {s[items[p]], items[p]};
    std::vector<KeyedItem> tmp(items.size());
    const std::uint64_t disc = count_inversions(keyed, tmp, 0, keyed.size());
    std::uint64_t right = 0;
    for (std::size_t start = 0; start < keyed.size();) {
        std::size_t end = start + 1;
        while (end < keyed.size() && keyed[end].key == keyed[start].key) ++end;
        const std::uint64_t block = end - start;
        right += block * (block - 1) / 2;
        start = end;
    }

    if (pairs == left) throw UndefinedCorrelation(degenerate_message("first", r));
    if (pairs == right) throw UndefinedCorrelation(degenerate_message("second", s));

    const std::int64_t num = std::int64_t(pairs) - std::int64_t(left) - std::int64_t(right) +
                             std::int64_t(joint) - 2 * std::int64_t(disc);
    if (left == 0 && right == 0) {
        return double(num) / double(pairs);
    }
    return double(num) / std::sqrt(double(pairs - left) * double(pairs - right));
}

double goodman_kruskal_gamma(const ScoreVector& r, const ScoreVector& s,
                             const RankAssignment& ranks, const WeightScheme& w,
                             RankSource source) {
    const CorrelationBreakdown bd = correlation_breakdown(r, s, ranks, w, source);
    const double concordant = bd.concordant();
    const double denom = concordant + bd.discordant;
    if (denom <= 0.0) {
        throw UndefinedCorrelation(
            "undefined gamma: no concordant or discordant weight (every pair is tied or "
            "weighted zero)");
    }
    return (concordant - bd.discordant) / denom;
}

double ap_correlation_with_ties(const ScoreVector& r, const ScoreVector& s) {
    return weighted_tau(r, s, lex_rank(s, r), WeightScheme::average_precision(),
                        RankSource::LexBySecond)
        .value;
}

}  // namespace ranktau
