#ifndef PERMLAB_EXTENSION_HPP
#define PERMLAB_EXTENSION_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "permlab/group_walk.hpp"
#include "permlab/lattice.hpp"

namespace permlab {

inline constexpr std::uint64_t kDefaultStateCap = 1000000;

// The configuration space Lambda^n with a mixed-radix indexer:
// config c encodes the tuple (x_0, ..., x_{n-1}), x_a = (c / N^a) mod N.
// The extension PDE uses n = N (one particle per vertex); the diagram
// engine reuses the same machinery with small n.
struct ConfigurationSpace {
    LatticeSpec lattice;
    int n = 0;                        // particle count
    std::uint64_t size = 0;           // N^n
    std::vector<std::uint64_t> pow;   // N^a for a in 0..n

    explicit ConfigurationSpace(const LatticeSpec& lat, std::uint64_t cap = kDefaultStateCap);
    ConfigurationSpace(const LatticeSpec& lat, int particles, std::uint64_t cap);

    int coordinate(std::uint64_t config, int particle) const {
        return static_cast<int>((config / pow[particle]) % static_cast<std::uint64_t>(lattice.N));
    }
    std::uint64_t with_coordinate(std::uint64_t config, int particle, int vertex) const {
        const int old = coordinate(config, particle);
        return config + (static_cast<std::uint64_t>(vertex) - static_cast<std::uint64_t>(old)) * pow[particle];
    }
    std::uint64_t encode(const std::vector<int>& tuple) const;
    std::vector<int> decode(std::uint64_t config) const;
    std::uint64_t identity_config() const;  // x_a = a
};

struct ExtendedField {
    double t = 0.0;
    std::vector<double> values;
};

struct PairPotentialSpec {
    double r = 0.0;
    // empty = all unordered particle pairs active
    std::vector<std::pair<int, int>> active_pairs;
    // turn the interaction off entirely (pure heat flow on Lambda^n)
    bool disable_all = false;
};

// In-place accumulating operator applications, shared with the diagram engine.
void add_laplacian(const ConfigurationSpace& space, const std::vector<double>& in,
                   std::vector<double>& out);
void add_potential(const PairPotentialSpec& spec, const ConfigurationSpace& space,
                   const std::vector<double>& in, std::vector<double>& out);

// The pair interaction extended by linearity from its action on products:
// it couples coordinates (x_i, x_j) through a sparse nearest-neighbor stencil
// and acts identically across all other coordinates.
ExtendedField apply_potential(const PairPotentialSpec& spec, const ConfigurationSpace& space,
                              const ExtendedField& field);

// RK4 on df/dt = Delta f + V f from the delta at the identity configuration.
ExtendedField evolve_extended(const PairPotentialSpec& spec, const ConfigurationSpace& space,
                              double t, double step);

// Read f^e at the N! distinct tuples, reindexed by permutation rank.
GroupDistribution restrict_to_distinct(const ConfigurationSpace& space, const ExtendedField& field);

double total_mass_A(const ExtendedField& field);

double sum_over_distinct(const ConfigurationSpace& space, const ExtendedField& field);

}  // namespace permlab

#endif
