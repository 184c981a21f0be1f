#include "ranktau/apcorr.hpp"

#include <algorithm>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "ranktau/errors.hpp"

namespace ranktau {
namespace {

bool has_ties(const ScoreVector& v) {
    ScoreVector sorted(v);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

// The weighted merge with f identically zero: the residual vanishes and each
// element moved from the second sublist contributes the remaining first-
// sublist length times the reciprocal of its ground-truth rank.
struct ApItem {
    double key;       // r score
    double inv_rank;  // 1 / s-rank
};

struct ApMerge {
    std::span<ApItem> items;
    std::span<ApItem> tmp;
    double exchanges = 0.0;

    void run(std::size_t lo, std::size_t len) {
        if (len <= 1) return;
        const std::size_t half = len / 2;
        const std::size_t mid = lo + half;
        run(lo, half);
        run(mid, len - half);
        std::size_t i = 0, j = 0, k = 0;
        while (j < half && k < len - half) {
            if (items[lo + j].key >= items[mid + k].key) {
                tmp[i++] = items[lo + j++];
            } else {
                exchanges += double(half - j) * items[mid + k].inv_rank;
                tmp[i++] = items[mid + k++];
            }
        }
        while (j < half) tmp[i++] = items[lo + j++];
        std::copy(tmp.begin(), tmp.begin() + std::ptrdiff_t(i), items.begin() + std::ptrdiff_t(lo));
    }
};

}  // namespace

bool has_tied_scores(const ScoreVector& v) { return has_ties(v); }

double ap_correlation(const ScoreVector& r, const ScoreVector& s) {
    if (r.size() != s.size()) {
        throw std::invalid_argument("score vectors differ in length (" + std::to_string(r.size()) +
                                    " vs " + std::to_string(s.size()) + ")");
    }
    const std::size_t n = r.size();
    if (n < 2) throw UndefinedCorrelation("AP correlation needs at least two items");
    if (has_ties(r)) {
        throw TiesNotAllowed(1, "the first vector has tied scores; AP correlation is undefined");
    }
    if (has_ties(s)) {
        throw TiesNotAllowed(2, "the second vector has tied scores; AP correlation is undefined");
    }

    // Ground-truth order: descending s, i.e. ascending s-rank.
    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return s[a] > s[b]; });
    std::vector<ApItem> items(n);
    items[0] = {r[order[0]], 0.0};  // the top item never leaves a second sublist
    for (std::size_t p = 1; p < n; ++p) items[p] = {r[order[p]], 1.0 / double(p)};

    std::vector<ApItem> tmp(n);
    ApMerge merge{items, tmp};
    merge.run(0, n);

    const double total = double(n - 1);
    return (total - 2.0 * merge.exchanges) / total;
}

double symmetric_ap(const ScoreVector& r, const ScoreVector& s) {
    return (ap_correlation(r, s) + ap_correlation(s, r)) / 2.0;
}

}  // namespace ranktau
