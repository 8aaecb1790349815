#include "permlab/permutation.hpp"

namespace permlab {

std::uint64_t factorial_u64(int n) {
    if (n < 0 || n > 20) throw PreconditionError("factorial_u64 supports 0..20");
    std::uint64_t f = 1;
    for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
    return f;
}

std::uint64_t rank_permutation(const std::vector<int>& p) {
    const int n = static_cast<int>(p.size());
    std::uint64_t rank = 0;
    for (int i = 0; i < n; ++i) {
        int smaller = 0;
        for (int j = i + 1; j < n; ++j)
            if (p[j] < p[i]) ++smaller;
        rank = rank * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
    }
    return rank;
}

std::vector<int> unrank_permutation(int n, std::uint64_t rank) {
    std::vector<int> code(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        code[i] = static_cast<int>(rank % static_cast<std::uint64_t>(n - i));
        rank /= static_cast<std::uint64_t>(n - i);
    }
    std::vector<int> pool(n);
    for (int i = 0; i < n; ++i) pool[i] = i;
    std::vector<int> p(n);
    for (int i = 0; i < n; ++i) {
        p[i] = pool[code[i]];
        pool.erase(pool.begin() + code[i]);
    }
    return p;
}

std::vector<int> invert_permutation(const std::vector<int>& p) {
    std::vector<int> inv(p.size());
    for (int i = 0; i < static_cast<int>(p.size()); ++i) inv[p[i]] = i;
    return inv;
}

}  // namespace permlab
