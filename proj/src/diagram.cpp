#include "permlab/diagram.hpp"

#include <algorithm>
#include <cmath>

namespace permlab {

double theorem1_contribution(const LatticeSpec& lattice, int z1, int z2, double t1) {
    if (z1 < 0 || z1 >= lattice.N || z2 < 0 || z2 >= lattice.N)
        throw PreconditionError("vertex out of range");
    const auto K = heat_kernel_spectral(lattice, t1);
    const auto phi1 = K.column(z1);
    const auto phi2 = K.column(z2);
    const auto d1 = apply_laplacian(lattice, phi1);
    const auto d2 = apply_laplacian(lattice, phi2);
    double acc = 0.0;
    for (int y = 0; y < lattice.N; ++y) acc += d1[y] * phi2[y] + phi1[y] * d2[y];
    return acc;
}

double T_n_lower_limits_value(const LatticeSpec& lattice, int n, double t) {
    if (n < 2 || n > 4) throw PreconditionError("lower-limit sums support n in {2,3,4}");
    const auto K = heat_kernel_spectral(lattice, t);
    const int N = lattice.N;
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;

    // T_n = (-1)^n sum_y K_{0,y} * sum over ordered distinct z_2..z_n (all != 0)
    //       of prod_i K_{z_i, y}; inclusion-exclusion over the distinctness.
    double total = 0.0;
    for (int y = 0; y < N; ++y) {
        const double g0 = K(0, y);
        double p1 = 0.0, p2 = 0.0, p3 = 0.0;  // power sums over z != 0
        for (int z = 0; z < N; ++z) {
            if (z == 0) continue;
            const double g = K(z, y);
            p1 += g;
            p2 += g * g;
            p3 += g * g * g;
        }
        double inner = 0.0;
        switch (n) {
            case 2: inner = p1; break;
            case 3: inner = p1 * p1 - p2; break;
            case 4: inner = p1 * p1 * p1 - 3.0 * p1 * p2 + 2.0 * p3; break;
        }
        total += g0 * inner;
    }
    return sign * total;
}

DiagramEvaluation T_n_lower_limits(const LatticeSpec& lattice, int n,
                                   const std::vector<double>& times) {
    DiagramEvaluation eval;
    eval.n = n;
    eval.kind = "lower-limits";
    for (double t : times) eval.curve.emplace_back(t, T_n_lower_limits_value(lattice, n, t));
    if (!eval.curve.empty()) eval.extrapolated_limit = eval.curve.back().second;
    eval.method = "curve endpoint; combine across L via extrapolate_in_inverse_N";
    return eval;
}

namespace {

// initial field on Lambda^n: sum of deltas at (0, z_2, ..., z_n)
std::vector<double> initial_sum_field(const ConfigurationSpace& space, bool distinct_z) {
    std::vector<double> f(space.size, 0.0);
    for (std::uint64_t c = 0; c < space.size; ++c) {
        if (space.coordinate(c, 0) != 0) continue;
        if (distinct_z) {
            bool ok = true;
            for (int a = 0; a < space.n && ok; ++a)
                for (int b = a + 1; b < space.n; ++b)
                    if (space.coordinate(c, a) == space.coordinate(c, b)) { ok = false; break; }
            if (!ok) continue;
        }
        f[c] = 1.0;
    }
    return f;
}

double inner_with_potential(const PairPotentialSpec& spec, const ConfigurationSpace& space,
                            const std::vector<double>& u, std::vector<double>& scratch) {
    std::fill(scratch.begin(), scratch.end(), 0.0);
    add_potential(spec, space, u, scratch);
    double acc = 0.0;
    for (double v : scratch) acc += v;
    return acc;
}

}  // namespace

double dyson_oracle(const LatticeSpec& lattice, int n,
                    const std::vector<std::pair<int, int>>& pair_sequence, double t, double step,
                    bool distinct_z) {
    if (n < 2 || n > 3) throw PreconditionError("dyson oracle supports n in {2,3}");
    if (pair_sequence.size() > 2) throw PreconditionError("sequence length must be <= 2");
    if (step <= 0) throw PreconditionError("step must be positive");
    ConfigurationSpace space(lattice, n, kDefaultStateCap);

    const std::size_t m = pair_sequence.size();
    std::vector<PairPotentialSpec> specs(m);
    for (std::size_t k = 0; k < m; ++k) specs[k].active_pairs = {pair_sequence[k]};

    // state: u_0 .. u_{m-1} plus the accumulated value s
    std::vector<std::vector<double>> u(m > 0 ? m : 1, std::vector<double>(space.size, 0.0));
    u[0] = initial_sum_field(space, distinct_z);
    double s = 0.0;
    if (m == 0) {
        // free evolution conserves mass: unit mass per initial tuple
        double mass = 0.0;
        for (double v : u[0]) mass += v;
        double count = mass;
        return count > 0.0 ? mass / count : 0.0;
    }

    std::vector<double> scratch(space.size);
    auto rhs = [&](const std::vector<std::vector<double>>& in,
                   std::vector<std::vector<double>>& out, double& ds) {
        for (std::size_t k = 0; k < m; ++k) {
            std::fill(out[k].begin(), out[k].end(), 0.0);
            add_laplacian(space, in[k], out[k]);
            if (k > 0) add_potential(specs[k - 1], space, in[k - 1], out[k]);
        }
        ds = inner_with_potential(specs[m - 1], space, in[m - 1], scratch);
    };

    std::vector<std::vector<double>> k1(m), k2(m), k3(m), k4(m), tmp(m);
    for (std::size_t k = 0; k < m; ++k) {
        k1[k].resize(space.size); k2[k].resize(space.size);
        k3[k].resize(space.size); k4[k].resize(space.size);
        tmp[k].resize(space.size);
    }
    double ds1 = 0.0, ds2 = 0.0, ds3 = 0.0, ds4 = 0.0;
    double remaining = t;
    while (remaining > 1e-15) {
        const double h = remaining < step ? remaining : step;
        rhs(u, k1, ds1);
        for (std::size_t k = 0; k < m; ++k)
            for (std::uint64_t c = 0; c < space.size; ++c) tmp[k][c] = u[k][c] + 0.5 * h * k1[k][c];
        rhs(tmp, k2, ds2);
        for (std::size_t k = 0; k < m; ++k)
            for (std::uint64_t c = 0; c < space.size; ++c) tmp[k][c] = u[k][c] + 0.5 * h * k2[k][c];
        rhs(tmp, k3, ds3);
        for (std::size_t k = 0; k < m; ++k)
            for (std::uint64_t c = 0; c < space.size; ++c) tmp[k][c] = u[k][c] + h * k3[k][c];
        rhs(tmp, k4, ds4);
        for (std::size_t k = 0; k < m; ++k)
            for (std::uint64_t c = 0; c < space.size; ++c)
                u[k][c] += h / 6.0 * (k1[k][c] + 2.0 * k2[k][c] + 2.0 * k3[k][c] + k4[k][c]);
        s += h / 6.0 * (ds1 + 2.0 * ds2 + 2.0 * ds3 + ds4);
        remaining -= h;
    }
    return s;
}

double T_tilde_n_value(const LatticeSpec& lattice, int n, double t, double step) {
    if (n == 2) {
        return dyson_oracle(lattice, 2, {{0, 1}}, t, step);
    }
    if (n != 3) throw PreconditionError("full tree sums support n in {2,3}");
    // the three spanning interaction orderings for three particles
    const std::vector<std::vector<std::pair<int, int>>> cases = {
        {{0, 1}, {0, 2}},
        {{0, 1}, {1, 2}},
        {{1, 2}, {0, 1}},
    };
    double total = 0.0;
    for (const auto& seq : cases) total += dyson_oracle(lattice, 3, seq, t, step);
    return total;
}

DiagramEvaluation T_tilde_n(const LatticeSpec& lattice, int n, const std::vector<double>& times,
                            double step) {
    DiagramEvaluation eval;
    eval.n = n;
    eval.kind = "full";
    for (double t : times) eval.curve.emplace_back(t, T_tilde_n_value(lattice, n, t, step));
    if (!eval.curve.empty()) eval.extrapolated_limit = eval.curve.back().second;
    eval.method = "curve endpoint; combine across L via extrapolate_in_inverse_N";
    return eval;
}

std::pair<double, double> telescopic_identity_check(const LatticeSpec& lattice,
                                                    const std::vector<SiteField>& fields) {
    const int n = static_cast<int>(fields.size());
    if (n < 3) throw PreconditionError("telescopic identity needs n >= 3 fields");
    for (const auto& f : fields)
        if (static_cast<int>(f.size()) != lattice.N) throw PreconditionError("field length mismatch");

    // permutation of the roles of fields 1..n-1 (0-based: 0..n-2)
    std::vector<int> perm(n - 1);
    for (int i = 0; i < n - 1; ++i) perm[i] = i;

    double lhs = 0.0;
    do {
        for (int y = 0; y < lattice.N; ++y) {
            for (int m = 0; m < lattice.d; ++m) {
                const int ye = lattice.shift(y, m, +1);
                double bracket = 0.0;
                for (int j = 0; j <= n - 2; ++j) {
                    double prod = 1.0;
                    for (int a = 0; a < j; ++a) prod *= fields[perm[a]][y];
                    for (int a = j; a < n - 2; ++a) prod *= fields[perm[a]][ye];
                    bracket += prod;
                }
                const double dlast = fields[perm[n - 2]][y] - fields[perm[n - 2]][ye];
                const double dn = fields[n - 1][y] - fields[n - 1][ye];
                lhs += bracket * dlast * dn;
            }
        }
    } while (std::next_permutation(perm.begin(), perm.end()));

    double fact = 1.0;
    for (int k = 2; k <= n - 1; ++k) fact *= k;
    double rhs = 0.0;
    for (int y = 0; y < lattice.N; ++y) {
        for (int m = 0; m < lattice.d; ++m) {
            const int ye = lattice.shift(y, m, +1);
            double at_y = 1.0, at_ye = 1.0;
            for (int a = 0; a < n - 1; ++a) {
                at_y *= fields[a][y];
                at_ye *= fields[a][ye];
            }
            rhs += fact * (at_y - at_ye) * (fields[n - 1][y] - fields[n - 1][ye]);
        }
    }
    return {lhs, rhs};
}

Extrapolation extrapolate_in_inverse_N(const std::vector<std::pair<double, double>>& n_and_value) {
    const int m = static_cast<int>(n_and_value.size());
    if (m < 2) throw PreconditionError("extrapolation needs at least two points");
    std::vector<double> x(m), p(m);
    for (int i = 0; i < m; ++i) {
        x[i] = 1.0 / n_and_value[i].first;
        p[i] = n_and_value[i].second;
    }
    // Neville tableau evaluated at x = 0
    double prev_best = p[m - 1];
    for (int level = 1; level < m; ++level) {
        for (int i = 0; i < m - level; ++i)
            p[i] = (x[i + level] * p[i] - x[i] * p[i + 1]) / (x[i + level] - x[i]);
        if (level == m - 1) return {p[0], std::abs(p[0] - prev_best)};
        prev_best = p[0];
    }
    return {p[0], 0.0};
}

}  // namespace permlab
