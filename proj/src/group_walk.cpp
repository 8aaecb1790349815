#include "permlab/group_walk.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <thread>

#include "permlab/rng.hpp"

namespace permlab {

namespace {

// rank -> ranks after each edge transposition (acting on values of the tuple)
std::vector<std::uint64_t> transposition_table(const LatticeSpec& lattice, std::uint64_t order) {
    const int n = lattice.N;
    const auto& edges = lattice.edges;
    std::vector<std::uint64_t> table(order * edges.size());
    std::vector<int> p(n);
    for (std::uint64_t g = 0; g < order; ++g) {
        p = unrank_permutation(n, g);
        for (std::size_t e = 0; e < edges.size(); ++e) {
            auto [i, j] = edges[e];
            // interchange the contents of lattice sites i and j
            std::vector<int> q = p;
            for (int a = 0; a < n; ++a) {
                if (q[a] == i) q[a] = j;
                else if (q[a] == j) q[a] = i;
            }
            table[g * edges.size() + e] = rank_permutation(q);
        }
    }
    return table;
}

}  // namespace

GroupDistribution evolve_group(const LatticeSpec& lattice, double t, std::uint64_t cap) {
    if (t < 0) throw PreconditionError("time must be nonnegative");
    if (lattice.N > 20) throw CapExceeded("group order overflows 64-bit rank");
    const std::uint64_t order = factorial_u64(lattice.N);
    if (order > cap) throw CapExceeded("group order exceeds configured cap");

    GroupDistribution dist;
    dist.t = t;
    dist.N = lattice.N;
    dist.weights.assign(order, 0.0);
    dist.weights[0] = 1.0;  // delta at the identity (rank 0)
    if (t == 0.0) return dist;

    const auto table = transposition_table(lattice, order);
    const double E = static_cast<double>(lattice.edges.size());
    const double mu = E * t;

    // f = sum_k PoissonPmf(k; mu) * M^k f0 with M = A / E (doubly stochastic)
    std::vector<double> term = dist.weights;
    std::vector<double> next(order);
    std::vector<double> acc(order, 0.0);
    double log_pmf = -mu;  // log PoissonPmf(0)
    double cdf = 0.0;
    for (std::uint64_t k = 0;; ++k) {
        const double pmf = std::exp(log_pmf);
        cdf += pmf;
        for (std::uint64_t g = 0; g < order; ++g) acc[g] += pmf * term[g];
        if (1.0 - cdf <= 1e-12 && k >= 1) break;
        if (k > 100000) throw std::runtime_error("uniformization failed to converge");
        // term <- M term
        std::fill(next.begin(), next.end(), 0.0);
        const std::size_t ne = lattice.edges.size();
        for (std::uint64_t g = 0; g < order; ++g) {
            const double w = term[g] / E;
            if (w == 0.0) continue;
            for (std::size_t e = 0; e < ne; ++e) next[table[g * ne + e]] += w;
        }
        term.swap(next);
        log_pmf += std::log(mu) - std::log(static_cast<double>(k + 1));
    }
    dist.weights.swap(acc);
    return dist;
}

SiteField marginal_of_vertex(const LatticeSpec& lattice, const GroupDistribution& dist, int i) {
    if (i < 0 || i >= lattice.N) throw PreconditionError("vertex index out of range");
    SiteField law(lattice.N, 0.0);
    const std::uint64_t order = dist.weights.size();
    for (std::uint64_t g = 0; g < order; ++g) {
        if (dist.weights[g] == 0.0) continue;
        auto p = unrank_permutation(lattice.N, g);
        law[p[i]] += dist.weights[g];
    }
    return law;
}

namespace {

std::vector<int> draw_sample(const LatticeSpec& lattice, double t,
                             std::uint64_t seed, std::uint64_t index) {
    PhiloxRng rng(seed, index);
    const double mu = static_cast<double>(lattice.edges.size()) * t;
    const std::uint64_t k = mu > 0.0 ? rng.poisson(mu) : 0;
    std::vector<int> x(lattice.N);
    for (int a = 0; a < lattice.N; ++a) x[a] = a;
    for (std::uint64_t step = 0; step < k; ++step) {
        const auto [i, j] = lattice.edges[rng.uniform_int(lattice.edges.size())];
        for (int a = 0; a < lattice.N; ++a) {
            if (x[a] == i) x[a] = j;
            else if (x[a] == j) x[a] = i;
        }
    }
    return x;
}

}  // namespace

WalkSampleBatch sample_walk(const LatticeSpec& lattice, double t, int count,
                            std::uint64_t seed, int threads) {
    if (count < 1) throw PreconditionError("count must be >= 1");
    if (t < 0) throw PreconditionError("time must be nonnegative");
    WalkSampleBatch batch;
    batch.seed = seed;
    batch.t = t;
    batch.d = lattice.d;
    batch.L = lattice.L;
    batch.N = lattice.N;
    batch.samples.assign(count, {});
    if (threads < 1) threads = 1;
    if (threads == 1) {
        for (int k = 0; k < count; ++k)
            batch.samples[k] = draw_sample(lattice, t, seed, static_cast<std::uint64_t>(k));
    } else {
        // each sample depends only on (seed, index); slot assembly is fixed
        std::vector<std::thread> pool;
        for (int w = 0; w < threads; ++w) {
            pool.emplace_back([&, w] {
                for (int k = w; k < count; k += threads)
                    batch.samples[k] = draw_sample(lattice, t, seed, static_cast<std::uint64_t>(k));
            });
        }
        for (auto& th : pool) th.join();
    }
    return batch;
}

std::string WalkSampleBatch::to_jsonl() const {
    std::ostringstream out;
    for (std::size_t k = 0; k < samples.size(); ++k) {
        out << "{\"index\":" << k << ",\"tuple\":[";
        for (std::size_t a = 0; a < samples[k].size(); ++a) {
            if (a) out << ',';
            out << samples[k][a];
        }
        out << "]}\n";
    }
    return out.str();
}

SiteField empirical_marginal(const WalkSampleBatch& batch, int i) {
    if (i < 0 || i >= batch.N) throw PreconditionError("vertex index out of range");
    SiteField law(batch.N, 0.0);
    for (const auto& s : batch.samples) law[s[i]] += 1.0;
    const double n = static_cast<double>(batch.samples.size());
    for (auto& v : law) v /= n;
    return law;
}

PairGap marginal_gap(const WalkSampleBatch& batch, int i, const std::vector<double>& reference) {
    const auto emp = empirical_marginal(batch, i);
    const double n = static_cast<double>(batch.samples.size());
    PairGap gap;
    double var = 0.0;
    for (int v = 0; v < batch.N; ++v) {
        gap.tv += 0.5 * std::abs(emp[v] - reference[v]);
        var += emp[v] * (1.0 - emp[v]) / n;
    }
    gap.std_error = 0.5 * std::sqrt(var);
    return gap;
}

PairGap empirical_pair_gap(const LatticeSpec& lattice, const WalkSampleBatch& batch, int i, int j) {
    if (i == j) throw PreconditionError("pair gap needs two distinct vertices");
    const int N = batch.N;
    std::vector<double> joint(static_cast<std::size_t>(N) * N, 0.0);
    for (const auto& s : batch.samples) joint[static_cast<std::size_t>(s[i]) * N + s[j]] += 1.0;
    const double n = static_cast<double>(batch.samples.size());
    for (auto& v : joint) v /= n;

    const auto K = heat_kernel_spectral(lattice, batch.t);
    const auto ci = K.column(i);
    const auto cj = K.column(j);
    PairGap gap;
    double var = 0.0;
    for (int u = 0; u < N; ++u) {
        for (int v = 0; v < N; ++v) {
            const double emp = joint[static_cast<std::size_t>(u) * N + v];
            gap.tv += 0.5 * std::abs(emp - ci[u] * cj[v]);
            var += emp * (1.0 - emp) / n;
        }
    }
    gap.std_error = 0.5 * std::sqrt(var);
    return gap;
}

}  // namespace permlab
