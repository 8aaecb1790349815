#include "permlab/extension.hpp"

#include <algorithm>
#include <cmath>

namespace permlab {

ConfigurationSpace::ConfigurationSpace(const LatticeSpec& lat, std::uint64_t cap)
    : ConfigurationSpace(lat, lat.N, cap) {}

ConfigurationSpace::ConfigurationSpace(const LatticeSpec& lat, int particles, std::uint64_t cap)
    : lattice(lat), n(particles) {
    if (n < 1) throw PreconditionError("particle count must be >= 1");
    const auto N = static_cast<std::uint64_t>(lattice.N);
    pow.assign(n + 1, 1);
    for (int a = 0; a < n; ++a) {
        if (pow[a] > cap / N + 1) throw CapExceeded("state space exceeds cap");
        pow[a + 1] = pow[a] * N;
    }
    size = pow[n];
    if (size > cap) throw CapExceeded("state space exceeds cap");
}

std::uint64_t ConfigurationSpace::encode(const std::vector<int>& tuple) const {
    std::uint64_t c = 0;
    for (int a = 0; a < n; ++a) c += static_cast<std::uint64_t>(tuple[a]) * pow[a];
    return c;
}

std::vector<int> ConfigurationSpace::decode(std::uint64_t config) const {
    std::vector<int> tuple(n);
    for (int a = 0; a < n; ++a) tuple[a] = coordinate(config, a);
    return tuple;
}

std::uint64_t ConfigurationSpace::identity_config() const {
    std::uint64_t c = 0;
    for (int a = 0; a < n; ++a) c += static_cast<std::uint64_t>(a) * pow[a];
    return c;
}

namespace {

std::vector<std::pair<int, int>> resolve_pairs(const PairPotentialSpec& spec, int n) {
    if (!spec.active_pairs.empty()) {
        for (auto [i, j] : spec.active_pairs)
            if (i == j || i < 0 || j < 0 || i >= n || j >= n)
                throw PreconditionError("active pair indices must be distinct particles");
        return spec.active_pairs;
    }
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    return pairs;
}

}  // namespace

// out += V applied to in.  For output coordinates (a, b) of an active pair:
//   a ~ b :  -[F(a,a) - F(a,b) - F(b,a) + F(b,b)]
//   a == b:  -r * sum over neighbors c of [F(a,a) - F(a,c) - F(c,a) + F(c,c)]
// where F(u,v) is the field with (x_i, x_j) replaced by (u, v).
void add_potential(const PairPotentialSpec& spec, const ConfigurationSpace& space,
                   const std::vector<double>& in, std::vector<double>& out) {
    if (spec.disable_all) return;
    const auto& lat = space.lattice;
    const auto pairs = resolve_pairs(spec, space.n);
    std::vector<char> adjacent(static_cast<std::size_t>(lat.N) * lat.N, 0);
    for (auto [u, v] : lat.edges) {
        adjacent[static_cast<std::size_t>(u) * lat.N + v] = 1;
        adjacent[static_cast<std::size_t>(v) * lat.N + u] = 1;
    }
    for (std::uint64_t c = 0; c < space.size; ++c) {
        for (auto [i, j] : pairs) {
            const int a = space.coordinate(c, i);
            const int b = space.coordinate(c, j);
            if (a != b) {
                if (!adjacent[static_cast<std::size_t>(a) * lat.N + b]) continue;
                const std::uint64_t caa = space.with_coordinate(c, j, a);
                const std::uint64_t cbb = space.with_coordinate(c, i, b);
                const std::uint64_t cba = space.with_coordinate(cbb, j, a);
                out[c] += -in[caa] + in[c] + in[cba] - in[cbb];
            } else if (spec.r != 0.0) {
                for (int nb : lat.neighbors[a]) {
                    const std::uint64_t cac = space.with_coordinate(c, j, nb);
                    const std::uint64_t cca = space.with_coordinate(c, i, nb);
                    const std::uint64_t ccc = space.with_coordinate(cca, j, nb);
                    out[c] += -spec.r * (in[c] - in[cac] - in[cca] + in[ccc]);
                }
            }
        }
    }
}

void add_laplacian(const ConfigurationSpace& space, const std::vector<double>& in,
                   std::vector<double>& out) {
    const auto& lat = space.lattice;
    for (std::uint64_t c = 0; c < space.size; ++c) {
        double acc = 0.0;
        for (int a = 0; a < space.n; ++a) {
            const int x = space.coordinate(c, a);
            for (int nb : lat.neighbors[x])
                acc += in[space.with_coordinate(c, a, nb)];
        }
        out[c] += acc - static_cast<double>(2 * lat.d * space.n) * in[c];
    }
}

// Fused application of Delta + V with the coincidence cancellation done
// symbolically: for an active pair at adjacent positions (a, b), the two
// Laplacian moves landing on coincident configurations cancel the stencil's
// -F(a,a) and -F(b,b) exactly, leaving in(c) + in(swap). Doing this in the
// algebra instead of in floating point keeps the distinct sector clean when
// the coincident sector grows (r < 0 has growing modes there).
void add_generator(const PairPotentialSpec& spec, const ConfigurationSpace& space,
                   const std::vector<double>& in, std::vector<double>& out) {
    if (spec.disable_all) {
        add_laplacian(space, in, out);
        return;
    }
    const auto& lat = space.lattice;
    const auto pairs = resolve_pairs(spec, space.n);
    std::vector<char> adjacent(static_cast<std::size_t>(lat.N) * lat.N, 0);
    for (auto [u, v] : lat.edges) {
        adjacent[static_cast<std::size_t>(u) * lat.N + v] = 1;
        adjacent[static_cast<std::size_t>(v) * lat.N + u] = 1;
    }
    std::vector<int> coord(space.n);
    for (std::uint64_t c = 0; c < space.size; ++c) {
        for (int a = 0; a < space.n; ++a) coord[a] = space.coordinate(c, a);
        double acc = -static_cast<double>(2 * lat.d * space.n) * in[c];
        for (auto [i, j] : pairs) {
            const int a = coord[i];
            const int b = coord[j];
            if (a != b) {
                if (!adjacent[static_cast<std::size_t>(a) * lat.N + b]) continue;
                const std::uint64_t cswap =
                    space.with_coordinate(space.with_coordinate(c, i, b), j, a);
                acc += in[c] + in[cswap];
            } else if (spec.r != 0.0) {
                for (int nb : lat.neighbors[a]) {
                    const std::uint64_t cac = space.with_coordinate(c, j, nb);
                    const std::uint64_t cca = space.with_coordinate(c, i, nb);
                    const std::uint64_t ccc = space.with_coordinate(cca, j, nb);
                    acc += -spec.r * (in[c] - in[cac] - in[cca] + in[ccc]);
                }
            }
        }
        for (int i = 0; i < space.n; ++i) {
            for (int nb : lat.neighbors[coord[i]]) {
                // number of active partners sitting on the landing vertex;
                // each consumes one copy of this move against its stencil
                int k = 0;
                for (auto [p, q] : pairs) {
                    if (p == i && coord[q] == nb) ++k;
                    else if (q == i && coord[p] == nb) ++k;
                }
                if (k == 1) continue;
                const double w = 1.0 - static_cast<double>(k);
                acc += w * in[space.with_coordinate(c, i, nb)];
            }
        }
        out[c] += acc;
    }
}

ExtendedField apply_potential(const PairPotentialSpec& spec, const ConfigurationSpace& space,
                              const ExtendedField& field) {
    if (field.values.size() != space.size) throw PreconditionError("field length != N^N");
    ExtendedField out;
    out.t = field.t;
    out.values.assign(space.size, 0.0);
    add_potential(spec, space, field.values, out.values);
    return out;
}

ExtendedField evolve_extended(const PairPotentialSpec& spec, const ConfigurationSpace& space,
                              double t, double step) {
    if (t < 0) throw PreconditionError("time must be nonnegative");
    if (step <= 0) throw PreconditionError("step must be positive");
    ExtendedField f;
    f.t = t;
    f.values.assign(space.size, 0.0);
    f.values[space.identity_config()] = 1.0;

    auto rhs = [&](const std::vector<double>& in, std::vector<double>& out) {
        std::fill(out.begin(), out.end(), 0.0);
        add_generator(spec, space, in, out);
    };

    std::vector<double> k1(space.size), k2(space.size), k3(space.size), k4(space.size),
        tmp(space.size);
    double remaining = t;
    while (remaining > 1e-15) {
        const double h = remaining < step ? remaining : step;
        rhs(f.values, k1);
        for (std::uint64_t c = 0; c < space.size; ++c) tmp[c] = f.values[c] + 0.5 * h * k1[c];
        rhs(tmp, k2);
        for (std::uint64_t c = 0; c < space.size; ++c) tmp[c] = f.values[c] + 0.5 * h * k2[c];
        rhs(tmp, k3);
        for (std::uint64_t c = 0; c < space.size; ++c) tmp[c] = f.values[c] + h * k3[c];
        rhs(tmp, k4);
        for (std::uint64_t c = 0; c < space.size; ++c)
            f.values[c] += h / 6.0 * (k1[c] + 2.0 * k2[c] + 2.0 * k3[c] + k4[c]);
        remaining -= h;
    }
    return f;
}

GroupDistribution restrict_to_distinct(const ConfigurationSpace& space, const ExtendedField& field) {
    const int N = space.lattice.N;
    if (space.n != N) throw PreconditionError("restriction needs one particle per vertex");
    GroupDistribution dist;
    dist.t = field.t;
    dist.N = N;
    const std::uint64_t order = factorial_u64(N);
    dist.weights.assign(order, 0.0);
    for (std::uint64_t g = 0; g < order; ++g) {
        const auto p = unrank_permutation(N, g);
        dist.weights[g] = field.values[space.encode(p)];
    }
    return dist;
}

double total_mass_A(const ExtendedField& field) {
    double acc = 0.0;
    for (double v : field.values) acc += v;
    return acc;
}

double sum_over_distinct(const ConfigurationSpace& space, const ExtendedField& field) {
    const auto dist = restrict_to_distinct(space, field);
    double acc = 0.0;
    for (double w : dist.weights) acc += w;
    return acc;
}

}  // namespace permlab
