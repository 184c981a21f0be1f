#include "ranktau/weights.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

namespace ranktau {
namespace {

double hyperbolic_f(Rank r) { return r == kInfiniteRank ? 0.0 : 1.0 / (double(r) + 1.0); }

double logarithmic_f(Rank r) { return r == kInfiniteRank ? 0.0 : 1.0 / std::log2(double(r) + 2.0); }

double quadratic_f(Rank r) {
    if (r == kInfiniteRank) return 0.0;
    const double d = double(r) + 1.0;
    return 1.0 / (d * d);
}

double constant_f(Rank) { return 1.0; }

double ap_g(Rank r) {
    if (r == kInfiniteRank) return 0.0;
    assert(r >= 1 && "the AP weight g is undefined at rank 0");
    return 1.0 / double(r);
}

WeightScheme symmetric_scheme(double (*f)(Rank), Combiner c, const char* base) {
    WeightScheme w;
    w.f = f;
    w.g = f;
    w.combiner = c;
    w.symmetric = true;
    w.name = std::string(base) + (c == Combiner::Additive ? "/add" : "/mul");
    return w;
}

// Sum of pair weights over a rank multiset listed in ascending extended order
// through rank_at(p), p in [0, k). total_weight and block_weight both funnel
// through this so that degenerate differences (e.g. T - L for a constant
// vector) cancel exactly, not just approximately.
template <typename RankAt>
double pairset_weight(const WeightScheme& w, std::size_t k, RankAt rank_at) {
    if (k < 2) return 0.0;
    double sum = 0.0;
    if (w.combiner == Combiner::Additive) {
        for (std::size_t p = 0; p < k; ++p) {
            const Rank rp = rank_at(p);
            double term = double(k - 1 - p) * w.f(rp);
            if (p > 0) term += double(p) * w.g(rp);  // p = 0 would be g at the best rank
            sum += term;
        }
    } else {
        double prefix = 0.0;  // f summed over positions before p
        for (std::size_t p = 0; p < k; ++p) {
            const Rank rp = rank_at(p);
            if (p > 0) sum += w.g(rp) * prefix;
            prefix += w.f(rp);
        }
    }
    return sum;
}

}  // namespace

WeightScheme WeightScheme::hyperbolic(Combiner c) {
    return symmetric_scheme(&hyperbolic_f, c, "hyperbolic");
}

WeightScheme WeightScheme::logarithmic(Combiner c) {
    return symmetric_scheme(&logarithmic_f, c, "logarithmic");
}

WeightScheme WeightScheme::quadratic(Combiner c) {
    return symmetric_scheme(&quadratic_f, c, "quadratic");
}

WeightScheme WeightScheme::constant(Combiner c) {
    return symmetric_scheme(&constant_f, c, "constant");
}

WeightScheme WeightScheme::average_precision() {
    WeightScheme w;
    w.f = [](Rank) { return 0.0; };
    w.g = &ap_g;
    w.combiner = Combiner::Additive;
    w.symmetric = false;
    w.name = "ap";
    return w;
}

WeightScheme WeightScheme::by_name(std::string_view weight, std::string_view combine) {
    Combiner c;
    if (combine == "add") {
        c = Combiner::Additive;
    } else if (combine == "mul") {
        c = Combiner::Multiplicative;
    } else {
        throw std::invalid_argument("unknown combiner '" + std::string(combine) +
                                    "' (expected add or mul)");
    }
    if (weight == "hyperbolic") return hyperbolic(c);
    if (weight == "logarithmic") return logarithmic(c);
    if (weight == "quadratic") return quadratic(c);
    if (weight == "constant") return constant(c);
    if (weight == "ap") {
        if (c != Combiner::Additive) {
            throw std::invalid_argument("the ap weight scheme is additive only");
        }
        return average_precision();
    }
    throw std::invalid_argument("unknown weight scheme '" + std::string(weight) + "'");
}

double pair_weight(const WeightScheme& w, Rank a, Rank b) {
    assert(a <= b && "pair_weight expects ranks in ascending extended order");
    return w.combiner == Combiner::Additive ? w.f(a) + w.g(b) : w.f(a) * w.g(b);
}

double total_weight(const WeightScheme& w, const RankAssignment& ranks) {
    const std::size_t n = ranks.size();
    std::size_t finite = 0;
    for (Rank r : ranks) {
        if (r != kInfiniteRank) ++finite;
    }
    // Valid assignments have finite ranks exactly {0, ..., finite-1}, so the
    // ascending multiset never needs an actual sort.
    return pairset_weight(w, n,
                          [finite](std::size_t p) { return p < finite ? Rank(p) : kInfiniteRank; });
}

double block_weight(const WeightScheme& w, std::vector<Rank> block_ranks) {
    std::sort(block_ranks.begin(), block_ranks.end());
    return pairset_weight(w, block_ranks.size(),
                          [&block_ranks](std::size_t p) { return block_ranks[p]; });
}

}  // namespace ranktau
