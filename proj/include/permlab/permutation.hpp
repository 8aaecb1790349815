#ifndef PERMLAB_PERMUTATION_HPP
#define PERMLAB_PERMUTATION_HPP

#include <cstdint>
#include <vector>

#include "permlab/errors.hpp"

namespace permlab {

// Lehmer-code ranking of permutations of {0..n-1}. The identity has rank 0.
// A permutation is stored as the tuple (p(0), p(1), ...) of Eq-style images.

std::uint64_t factorial_u64(int n);

std::uint64_t rank_permutation(const std::vector<int>& p);

std::vector<int> unrank_permutation(int n, std::uint64_t rank);

std::vector<int> invert_permutation(const std::vector<int>& p);

}  // namespace permlab

#endif
