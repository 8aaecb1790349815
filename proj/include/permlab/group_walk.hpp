#ifndef PERMLAB_GROUP_WALK_HPP
#define PERMLAB_GROUP_WALK_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "permlab/lattice.hpp"
#include "permlab/permutation.hpp"

namespace permlab {

inline constexpr std::uint64_t kDefaultGroupCap = 40320;  // 8!

// f(g, t): probability vector over all N! permutations, Lehmer-rank indexed.
struct GroupDistribution {
    double t = 0.0;
    int N = 0;
    std::vector<double> weights;
};

// Exact e^{-Ht} delta_identity via uniformization: with E = edge count and
// A = sum of edge transpositions acting on ranks, e^{-Ht} = e^{-Et} e^{tA}
// and the Poisson-weighted series has a computable tail bound.
GroupDistribution evolve_group(const LatticeSpec& lattice, double t,
                               std::uint64_t cap = kDefaultGroupCap);

// Law of p(i) under f; exactly the heat-kernel column of i.
SiteField marginal_of_vertex(const LatticeSpec& lattice, const GroupDistribution& dist, int i);

struct WalkSampleBatch {
    std::uint64_t seed = 0;
    double t = 0.0;
    int d = 0;
    int L = 0;
    int N = 0;
    // samples[k] = tuple (p(0), ..., p(N-1)) of where each starting vertex ended
    std::vector<std::vector<int>> samples;

    std::string to_jsonl() const;
};

// Poisson(E t) random edge transpositions applied to the identity; sample k is
// a pure function of (seed, k), so the batch is replay-identical at any thread count.
WalkSampleBatch sample_walk(const LatticeSpec& lattice, double t, int count,
                            std::uint64_t seed, int threads = 1);

// Empirical single-vertex marginal of the batch.
SiteField empirical_marginal(const WalkSampleBatch& batch, int i);

struct PairGap {
    double tv = 0.0;       // total-variation distance to the product of kernel columns
    double std_error = 0.0;
};

PairGap empirical_pair_gap(const LatticeSpec& lattice, const WalkSampleBatch& batch, int i, int j);

// TV distance plus its multinomial plug-in standard error for a single marginal.
PairGap marginal_gap(const WalkSampleBatch& batch, int i, const std::vector<double>& reference);

}  // namespace permlab

#endif
