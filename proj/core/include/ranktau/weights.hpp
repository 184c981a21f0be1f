#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "ranktau/scores.hpp"

namespace ranktau {

enum class Combiner { Additive, Multiplicative };

// A pair of items whose ranks are a <= b weighs f(a) + g(b) (additive) or
// f(a) * g(b) (multiplicative). Symmetric schemes use g = f, which makes the
// pair weight independent of the argument order.
struct WeightScheme {
    std::function<double(Rank)> f;
    std::function<double(Rank)> g;
    Combiner combiner = Combiner::Additive;
    bool symmetric = true;
    std::string name = "custom";

    // f(r) = 1/(r+1), zero at infinite rank.
    static WeightScheme hyperbolic(Combiner c = Combiner::Additive);
    // f(r) = 1/log2(r+2), zero at infinite rank.
    static WeightScheme logarithmic(Combiner c = Combiner::Additive);
    // f(r) = 1/(r+1)^2, zero at infinite rank.
    static WeightScheme quadratic(Combiner c = Combiner::Additive);
    // f(r) = 1 everywhere, including infinite rank; reduces tau to tau-b.
    static WeightScheme constant(Combiner c = Combiner::Additive);
    // f = 0 and g(b) = 1/b for b >= 1, zero at infinite rank; additive and
    // asymmetric. g is never evaluated at rank 0 (the top item of a pair is
    // always the f side).
    static WeightScheme average_precision();

    // CLI selector strings: hyperbolic|logarithmic|quadratic|constant|ap and
    // add|mul. Throws std::invalid_argument on anything else.
    static WeightScheme by_name(std::string_view weight, std::string_view combine = "add");
};

// Weight of one pair with ranks a <= b (in the extended order, finite < inf).
double pair_weight(const WeightScheme& w, Rank a, Rank b);

// Sum of pair_weight over all n(n-1)/2 item pairs, in O(n). Infinite-rank
// items sit after every finite rank, in an arbitrary internal order (their
// mutual pair weight only involves f/g at infinite rank).
double total_weight(const WeightScheme& w, const RankAssignment& ranks);

// Sum of pair_weight over the internal pairs of one tie block, given the
// multiset of ranks in the block. Blocks of size < 2 weigh zero.
double block_weight(const WeightScheme& w, std::vector<Rank> block_ranks);

}  // namespace ranktau
