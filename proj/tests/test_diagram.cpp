#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <utility>
#include <vector>

#include "permlab/diagram.hpp"
#include "permlab/extension.hpp"
#include "permlab/lattice.hpp"

using namespace permlab;

namespace {

// independent double time quadrature of the order-2 term:
//   int_0^t dt2 int_0^{t2} dt1 <1, V_b e^{Delta (t2-t1)} V_a u(t1)>
// with exact spectral propagation between interaction times
double quadrature_order2(const LatticeSpec& lat, const std::pair<int, int>& pa,
                         const std::pair<int, int>& pb, double t, int nodes) {
    ConfigurationSpace space(lat, 3, kDefaultStateCap);
    PairPotentialSpec sa, sb;
    sa.active_pairs = {pa};
    sb.active_pairs = {pb};

    std::vector<double> init(space.size, 0.0);
    for (std::uint64_t c = 0; c < space.size; ++c) {
        const int x0 = space.coordinate(c, 0);
        const int x1 = space.coordinate(c, 1);
        const int x2 = space.coordinate(c, 2);
        if (x0 == 0 && x0 != x1 && x0 != x2 && x1 != x2) init[c] = 1.0;
    }

    auto propagate = [&](const std::vector<double>& in, double s) {
        const auto K = heat_kernel_spectral(lat, s);
        std::vector<double> cur = in, next(space.size);
        for (int a = 0; a < space.n; ++a) {
            std::fill(next.begin(), next.end(), 0.0);
            for (std::uint64_t c = 0; c < space.size; ++c) {
                if (cur[c] == 0.0) continue;
                const int x = space.coordinate(c, a);
                for (int v = 0; v < lat.N; ++v)
                    next[space.with_coordinate(c, a, v)] += K(v, x) * cur[c];
            }
            cur.swap(next);
        }
        return cur;
    };

    auto inner = [&](double t1, double t2) {
        auto u = propagate(init, t1);
        std::vector<double> v(space.size, 0.0);
        add_potential(sa, space, u, v);
        auto w = propagate(v, t2 - t1);
        std::vector<double> z(space.size, 0.0);
        add_potential(sb, space, w, z);
        double acc = 0.0;
        for (double x : z) acc += x;
        return acc;
    };

    // composite Simpson in t2, and in t1 on [0, t2]
    const int n2 = nodes;
    const double h2 = t / n2;
    double total = 0.0;
    for (int j = 0; j <= n2; ++j) {
        const double t2 = j * h2;
        double inner_int = 0.0;
        if (j > 0) {
            const int n1 = nodes;
            const double h1 = t2 / n1;
            for (int i = 0; i <= n1; ++i) {
                const double w1 = (i == 0 || i == n1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
                inner_int += w1 * inner(i * h1, t2);
            }
            inner_int *= h1 / 3.0;
        }
        const double w2 = (j == 0 || j == n2) ? 1.0 : (j % 2 == 1 ? 4.0 : 2.0);
        total += w2 * inner_int;
    }
    return total * h2 / 3.0;
}

}  // namespace

TEST_CASE("alternating sign constants") {
    CHECK(sign_constant(1) == 1);
    CHECK(sign_constant(2) == -1);
    CHECK(sign_constant(7) == 1);
}

TEST_CASE("two particle contact term equilibrium and oracles") {
    const auto lat = build_lattice(1, 5);

    CHECK(std::abs(theorem1_contribution(lat, 0, 1, 50.0)) <= 1e-8);

    // matches <1, V (phi1 x phi2)> on the two particle space at r=0
    {
        ConfigurationSpace space(lat, 2, kDefaultStateCap);
        PairPotentialSpec spec;
        const double t1 = 0.5;
        const auto K = heat_kernel_spectral(lat, t1);
        const auto phi1 = K.column(0);
        const auto phi2 = K.column(1);
        std::vector<double> prod(space.size), out(space.size, 0.0);
        for (std::uint64_t c = 0; c < space.size; ++c)
            prod[c] = phi1[space.coordinate(c, 0)] * phi2[space.coordinate(c, 1)];
        add_potential(spec, space, prod, out);
        double acc = 0.0;
        for (double v : out) acc += v;
        CHECK(std::abs(theorem1_contribution(lat, 0, 1, t1) - acc) <= 1e-8);
    }

    // analytic derivative vs centered finite difference of sum_y phi(y,t)^2
    {
        const double t = 0.3, h = 1e-4;
        auto norm2 = [&](double s) {
            const auto col = heat_kernel_spectral(lat, s).column(0);
            double acc = 0.0;
            for (double v : col) acc += v * v;
            return acc;
        };
        const double fd = (norm2(t + h) - norm2(t - h)) / (2.0 * h);
        CHECK(std::abs(theorem1_contribution(lat, 0, 0, t) - fd) <= 1e-6);
    }

    CHECK_THROWS_AS(theorem1_contribution(lat, -1, 0, 1.0), PreconditionError);
}

TEST_CASE("pair tree sum closed form") {
    const auto lat = build_lattice(1, 5);
    for (double t : {0.2, 0.5, 1.0, 3.0}) {
        const auto K = heat_kernel_spectral(lat, t);
        double sq = 0.0;
        for (int y = 0; y < lat.N; ++y) sq += K(0, y) * K(0, y);
        CHECK(std::abs(T_n_lower_limits_value(lat, 2, t) - (1.0 - sq)) <= 1e-12);
    }

    CHECK(std::abs(T_n_lower_limits_value(lat, 2, 50.0) - (1.0 - 1.0 / lat.N)) <= 1e-8);

    double prev = -1.0;
    for (double t : {0.1, 0.3, 0.6, 1.0, 2.0, 5.0}) {
        const double v = T_n_lower_limits_value(lat, 2, t);
        CHECK(v >= prev - 1e-12);
        prev = v;
    }

    CHECK_THROWS_AS(T_n_lower_limits_value(lat, 5, 1.0), PreconditionError);
}

TEST_CASE("pair tree sum agrees with the hierarchy oracle") {
    const auto lat = build_lattice(1, 5);
    for (double t : {0.5, 1.0, 2.0}) {
        const double closed = T_n_lower_limits_value(lat, 2, t);
        const double oracle = dyson_oracle(lat, 2, {{0, 1}}, t, 0.0025);
        CHECK(std::abs(closed - oracle) <= 1e-8);
    }
}

TEST_CASE("hierarchy oracle basics") {
    const auto lat = build_lattice(1, 5);
    CHECK(dyson_oracle(lat, 2, {}, 1.0, 0.01) == doctest::Approx(1.0));
    CHECK_THROWS_AS(dyson_oracle(lat, 4, {}, 1.0, 0.01), PreconditionError);
    CHECK_THROWS_AS(dyson_oracle(lat, 2, {{0, 1}}, 1.0, 0.0), PreconditionError);
}

TEST_CASE("order two hierarchy value matches direct time quadrature") {
    const auto lat = build_lattice(1, 8);
    const double t = 2.0;
    const double ode = dyson_oracle(lat, 3, {{1, 2}, {0, 1}}, t, 0.005);
    const double quad = quadrature_order2(lat, {1, 2}, {0, 1}, t, 64);
    CHECK(std::abs(ode - quad) <= 1e-5);
}

TEST_CASE("full pair sum coincides with the lower limit sum at n=2") {
    const auto lat = build_lattice(1, 5);
    for (double t : {0.5, 1.0}) {
        CHECK(std::abs(T_tilde_n_value(lat, 2, t, 0.0025) -
                       T_n_lower_limits_value(lat, 2, t)) <= 1e-8);
    }
}

TEST_CASE("dropping distinctness annihilates the term") {
    // summed over all z the initial field is constant in the unpinned
    // coordinates, and the pair interaction kills fields constant in one
    // member of the pair, so the unrestricted sum is exactly zero; the
    // reported gap is therefore the distinct-sum value itself
    const double t = 2.0;
    for (int L : {8, 12}) {
        const auto lat = build_lattice(1, L);
        const double without = dyson_oracle(lat, 3, {{0, 1}, {0, 2}}, t, 0.02, false);
        CHECK(std::abs(without) <= 1e-12);
        const double with = dyson_oracle(lat, 3, {{0, 1}, {0, 2}}, t, 0.02, true);
        CHECK(std::abs(with) > 0.1);
    }
}

TEST_CASE("repeated pair term flattens out") {
    const auto lat = build_lattice(1, 12);
    const double v2 = dyson_oracle(lat, 2, {{0, 1}, {0, 1}}, 2.0, 0.02);
    const double v4 = dyson_oracle(lat, 2, {{0, 1}, {0, 1}}, 4.0, 0.02);
    const double v8 = dyson_oracle(lat, 2, {{0, 1}, {0, 1}}, 8.0, 0.02);
    CHECK(std::abs(v8 - v4) < std::abs(v4 - v2));
}

TEST_CASE("telescopic identity") {
    const auto lat = build_lattice(1, 5);

    std::vector<SiteField> consts(3, SiteField(lat.N, 1.3));
    const auto both = telescopic_identity_check(lat, consts);
    CHECK(std::abs(both.first) <= 1e-14);
    CHECK(std::abs(both.second) <= 1e-14);

    std::srand(101);
    for (int n : {3, 4}) {
        std::vector<SiteField> fields(n, SiteField(lat.N));
        for (auto& f : fields)
            for (auto& v : f) v = (std::rand() % 1000) / 500.0 - 1.0;
        const auto lr = telescopic_identity_check(lat, fields);
        CHECK(std::abs(lr.first - lr.second) <= 1e-10);
    }

    const auto K = heat_kernel_spectral(lat, 0.8);
    std::vector<SiteField> cols = {K.column(0), K.column(1), K.column(2), K.column(3)};
    const auto lr = telescopic_identity_check(lat, cols);
    CHECK(std::abs(lr.first - lr.second) <= 1e-10);

    CHECK_THROWS_AS(telescopic_identity_check(lat, {K.column(0), K.column(1)}),
                    PreconditionError);
}

TEST_CASE("inverse size extrapolation is exact on polynomials") {
    std::vector<std::pair<double, double>> pts;
    for (double L : {8.0, 12.0, 16.0}) pts.emplace_back(L, 3.0 - 2.0 / L + 5.0 / (L * L));
    const auto ex = extrapolate_in_inverse_N(pts);
    CHECK(std::abs(ex.limit - 3.0) <= 1e-10);
    CHECK_THROWS_AS(extrapolate_in_inverse_N({{8.0, 1.0}}), PreconditionError);
}
