#include "ranktau/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "ranktau/errors.hpp"

namespace ranktau::oracle {
namespace {

int sgn(double x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

// Neumaier-compensated accumulator. The reference sums one term per pair, so
// at a few million pairs naive summation would drift past the 1e-9 tolerance
// the fast engine is held to.
struct CompensatedSum {
    double sum = 0.0;
    double compensation = 0.0;

    void add(double x) {
        const double t = sum + x;
        if (std::abs(sum) >= std::abs(x)) {
            compensation += (sum - t) + x;
        } else {
            compensation += (x - t) + sum;
        }
        sum = t;
    }
    double value() const { return sum + compensation; }
};

void check_lengths(std::size_t a, std::size_t b, const char* what) {
    if (a != b) {
        throw std::invalid_argument(std::string(what) + ": lengths differ (" + std::to_string(a) +
                                    " vs " + std::to_string(b) + ")");
    }
}

// Per-item weights, so the pair loop stays at a few flops per pair.
struct PairWeigher {
    std::vector<double> f, g;
    const RankAssignment& ranks;
    bool additive;

    PairWeigher(const RankAssignment& ranks_, const WeightScheme& w) : ranks(ranks_) {
        additive = w.combiner == Combiner::Additive;
        f.resize(ranks.size());
        g.resize(ranks.size());
        for (std::size_t i = 0; i < ranks.size(); ++i) {
            f[i] = w.f(ranks[i]);
            g[i] = (w.symmetric || ranks[i] != 0) ? w.g(ranks[i]) : 0.0;
        }
    }

    // f at the better rank, g at the worse one; equal (infinite) ranks keep
    // index order, which cannot matter since both ends then share a rank.
    double operator()(std::size_t i, std::size_t j) const {
        if (ranks[j] < ranks[i]) std::swap(i, j);
        return additive ? f[i] + g[j] : f[i] * g[j];
    }
};

bool has_ties(const ScoreVector& v) {
    ScoreVector sorted(v);
    std::sort(sorted.begin(), sorted.end());
    return std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
}

// 0-based ranks by descending score, assuming no ties.
std::vector<std::size_t> descending_rank(const ScoreVector& v) {
    std::vector<std::size_t> idx(v.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) { return v[a] > v[b]; });
    std::vector<std::size_t> rank(v.size());
    for (std::size_t p = 0; p < idx.size(); ++p) rank[idx[p]] = p;
    return rank;
}

}  // namespace

PairClass classify_pair(double r_i, double r_j, double s_i, double s_j) {
    const bool left = r_i == r_j;
    const bool right = s_i == s_j;
    if (left && right) return PairClass::JointTie;
    if (left) return PairClass::LeftTie;
    if (right) return PairClass::RightTie;
    return sgn(r_i - r_j) * sgn(s_i - s_j) == 1 ? PairClass::Concordance : PairClass::Discordance;
}

CorrelationBreakdown breakdown(const ScoreVector& r, const ScoreVector& s,
                               const RankAssignment& ranks, const WeightScheme& w) {
    check_lengths(r.size(), s.size(), "oracle breakdown");
    check_lengths(r.size(), ranks.size(), "oracle breakdown (ranks)");
    const std::size_t n = r.size();
    const PairWeigher weigh(ranks, w);
    CompensatedSum total, left, right, joint, discordant;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const double wt = weigh(i, j);
            total.add(wt);
            const bool lt = r[i] == r[j];
            const bool rt = s[i] == s[j];
            if (lt) left.add(wt);
            if (rt) right.add(wt);
            if (lt && rt) {
                joint.add(wt);
            } else if (!lt && !rt && sgn(r[i] - r[j]) * sgn(s[i] - s[j]) < 0) {
                discordant.add(wt);
            }
        }
    }
    CorrelationBreakdown bd;
    bd.n = n;
    bd.total = total.value();
    bd.left = left.value();
    bd.right = right.value();
    bd.joint = joint.value();
    bd.discordant = discordant.value();
    return bd;
}

double inner_product(const ScoreVector& r, const ScoreVector& s, const RankAssignment& ranks,
                     const WeightScheme& w) {
    check_lengths(r.size(), s.size(), "oracle inner product");
    check_lengths(r.size(), ranks.size(), "oracle inner product (ranks)");
    const std::size_t n = r.size();
    const PairWeigher weigh(ranks, w);
    CompensatedSum sum;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            const int product = sgn(r[i] - r[j]) * sgn(s[i] - s[j]);
            if (product != 0) sum.add(product * weigh(i, j));
        }
    }
    return sum.value();
}

double norm(const ScoreVector& r, const RankAssignment& ranks, const WeightScheme& w) {
    return std::sqrt(inner_product(r, r, ranks, w));
}

double tau(const ScoreVector& r, const ScoreVector& s, const RankAssignment& ranks,
           const WeightScheme& w) {
    const double norm_r = norm(r, ranks, w);
    const double norm_s = norm(s, ranks, w);
    if (norm_r == 0.0) {
        throw UndefinedCorrelation("undefined correlation: the first vector has zero weighted norm");
    }
    if (norm_s == 0.0) {
        throw UndefinedCorrelation(
            "undefined correlation: the second vector has zero weighted norm");
    }
    return inner_product(r, s, ranks, w) / (norm_r * norm_s);
}

double symmetric_tau(const ScoreVector& r, const ScoreVector& s, const WeightScheme& w) {
    return (tau(r, s, lex_rank(r, s), w) + tau(r, s, lex_rank(s, r), w)) / 2.0;
}

double ap_correlation(const ScoreVector& r, const ScoreVector& s) {
    check_lengths(r.size(), s.size(), "oracle AP correlation");
    const std::size_t n = r.size();
    if (n < 2) throw UndefinedCorrelation("AP correlation needs at least two items");
    if (has_ties(r)) {
        throw TiesNotAllowed(1, "the first vector has tied scores; AP correlation is undefined");
    }
    if (has_ties(s)) {
        throw TiesNotAllowed(2, "the second vector has tied scores; AP correlation is undefined");
    }
    const std::vector<std::size_t> r_rank = descending_rank(r);
    const std::vector<std::size_t> s_rank = descending_rank(s);
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t k = s_rank[i];
        if (k == 0) continue;
        std::size_t correct = 0;
        for (std::size_t j = 0; j < n; ++j) {
            if (s_rank[j] < k && r_rank[j] < r_rank[i]) ++correct;
        }
        acc += double(correct) / double(k);
    }
    return 2.0 * acc / double(n - 1) - 1.0;
}

double symmetric_ap(const ScoreVector& r, const ScoreVector& s) {
    return (ap_correlation(r, s) + ap_correlation(s, r)) / 2.0;
}

}  // namespace ranktau::oracle
