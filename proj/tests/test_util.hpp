#pragma once

#include <algorithm>
#include <cstddef>
#include <random>

#include "ranktau/ranktau.hpp"

namespace testutil {

// Integer scores 0..4 give heavy ties; uniform reals are tie-free in practice.
inline ranktau::ScoreVector random_scores(std::mt19937_64& rng, std::size_t n, bool heavy_ties) {
    ranktau::ScoreVector v(n);
    if (heavy_ties) {
        std::uniform_int_distribution<int> d(0, 4);
        for (auto& x : v) x = double(d(rng));
    } else {
        std::uniform_real_distribution<double> d(0.0, 1.0);
        for (auto& x : v) x = d(rng);
    }
    return v;
}

inline ranktau::ScoreVector random_permutation(std::mt19937_64& rng, std::size_t n) {
    ranktau::ScoreVector v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = double(i);
    std::shuffle(v.begin(), v.end(), rng);
    return v;
}

inline std::vector<ranktau::WeightScheme> all_symmetric_schemes() {
    using ranktau::Combiner;
    using ranktau::WeightScheme;
    std::vector<WeightScheme> out;
    for (Combiner c : {Combiner::Additive, Combiner::Multiplicative}) {
        out.push_back(WeightScheme::hyperbolic(c));
        out.push_back(WeightScheme::logarithmic(c));
        out.push_back(WeightScheme::quadratic(c));
        out.push_back(WeightScheme::constant(c));
    }
    return out;
}

}  // namespace testutil
