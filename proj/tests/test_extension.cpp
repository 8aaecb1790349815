#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <vector>

#include "permlab/extension.hpp"
#include "permlab/group_walk.hpp"
#include "permlab/lattice.hpp"

using namespace permlab;

namespace {

// direct delta-selector form of the pair interaction on a two-particle
// product field: sum over sites y and positive directions of the four
// selector patterns (two at weight 1, two at weight r) times the product
// of differences, overall sign -1
double direct_pair_action(const LatticeSpec& lat, double r, const SiteField& phi1,
                          const SiteField& phi2, int x1, int x2) {
    double acc = 0.0;
    for (int y = 0; y < lat.N; ++y) {
        for (int m = 0; m < lat.d; ++m) {
            const int ye = lat.shift(y, m, +1);
            const double d1 = phi1[y] - phi1[ye];
            const double d2 = phi2[y] - phi2[ye];
            double sel = 0.0;
            if (x1 == y && x2 == ye) sel += 1.0;
            if (x1 == ye && x2 == y) sel += 1.0;
            if (x1 == y && x2 == y) sel += r;
            if (x1 == ye && x2 == ye) sel += r;
            acc += -sel * d1 * d2;
        }
    }
    return acc;
}

}  // namespace

TEST_CASE("configuration space indexing") {
    const auto lat = build_lattice(1, 3);
    ConfigurationSpace space(lat);
    CHECK(space.size == 27);

    for (std::uint64_t c = 0; c < space.size; ++c)
        CHECK(space.encode(space.decode(c)) == c);

    CHECK(space.decode(space.identity_config()) == std::vector<int>{0, 1, 2});

    int distinct = 0;
    for (std::uint64_t c = 0; c < space.size; ++c) {
        const auto t = space.decode(c);
        if (t[0] != t[1] && t[0] != t[2] && t[1] != t[2]) ++distinct;
    }
    CHECK(distinct == 6);

    CHECK_THROWS_AS(ConfigurationSpace(lat, std::uint64_t{10}), CapExceeded);
}

TEST_CASE("pair interaction vanishes off the contact set") {
    const auto lat = build_lattice(1, 5);
    ConfigurationSpace space(lat, 2, kDefaultStateCap);
    PairPotentialSpec spec;
    spec.r = 0.5;
    spec.active_pairs = {{0, 1}};

    ExtendedField f;
    f.values.assign(space.size, 0.0);
    f.values[space.encode({0, 2})] = 1.0;  // neither equal nor adjacent
    const auto out = apply_potential(spec, space, f);
    for (double v : out.values) CHECK(std::abs(v) <= 1e-15);
}

TEST_CASE("pair interaction on product fields matches the direct form") {
    const auto lat = build_lattice(1, 3);
    ConfigurationSpace space(lat, 2, kDefaultStateCap);
    std::srand(31);
    SiteField phi1(lat.N), phi2(lat.N);
    for (int v = 0; v < lat.N; ++v) {
        phi1[v] = (std::rand() % 1000) / 500.0 - 1.0;
        phi2[v] = (std::rand() % 1000) / 500.0 - 1.0;
    }
    for (double r : {0.0, 0.7, -0.3}) {
        PairPotentialSpec spec;
        spec.r = r;
        ExtendedField f;
        f.values.assign(space.size, 0.0);
        for (std::uint64_t c = 0; c < space.size; ++c)
            f.values[c] = phi1[space.coordinate(c, 0)] * phi2[space.coordinate(c, 1)];
        const auto out = apply_potential(spec, space, f);
        for (std::uint64_t c = 0; c < space.size; ++c) {
            const double want = direct_pair_action(lat, r, phi1, phi2, space.coordinate(c, 0),
                                                   space.coordinate(c, 1));
            CHECK(std::abs(out.values[c] - want) <= 1e-12);
        }
    }
}

TEST_CASE("pair interaction is linear") {
    const auto lat = build_lattice(1, 3);
    ConfigurationSpace space(lat);
    PairPotentialSpec spec;
    spec.r = 0.4;
    std::srand(17);
    ExtendedField u, v, w;
    u.values.resize(space.size);
    v.values.resize(space.size);
    w.values.resize(space.size);
    const double alpha = 1.7, beta = -0.6;
    for (std::uint64_t c = 0; c < space.size; ++c) {
        u.values[c] = (std::rand() % 1000) / 500.0 - 1.0;
        v.values[c] = (std::rand() % 1000) / 500.0 - 1.0;
        w.values[c] = alpha * u.values[c] + beta * v.values[c];
    }
    const auto Vu = apply_potential(spec, space, u);
    const auto Vv = apply_potential(spec, space, v);
    const auto Vw = apply_potential(spec, space, w);
    for (std::uint64_t c = 0; c < space.size; ++c)
        CHECK(std::abs(Vw.values[c] - alpha * Vu.values[c] - beta * Vv.values[c]) <= 1e-12);
}

TEST_CASE("extended evolution at t=0 is the identity delta") {
    const auto lat = build_lattice(1, 3);
    ConfigurationSpace space(lat);
    PairPotentialSpec spec;
    const auto f = evolve_extended(spec, space, 0.0, 0.01);
    for (std::uint64_t c = 0; c < space.size; ++c)
        CHECK(f.values[c] == doctest::Approx(c == space.identity_config() ? 1.0 : 0.0));
    CHECK_THROWS_AS(evolve_extended(spec, space, 1.0, 0.0), PreconditionError);
    CHECK_THROWS_AS(evolve_extended(spec, space, -1.0, 0.01), PreconditionError);
}

TEST_CASE("restriction to distinct tuples reproduces the group walk") {
    const auto lat = build_lattice(1, 3);
    ConfigurationSpace space(lat);
    for (double r : {0.0, 0.5, -0.5}) {
        PairPotentialSpec spec;
        spec.r = r;
        const auto f = evolve_extended(spec, space, 1.0, 0.005);
        const auto restricted = restrict_to_distinct(space, f);
        const auto exact = evolve_group(lat, 1.0);
        for (std::size_t g = 0; g < exact.weights.size(); ++g)
            CHECK(std::abs(restricted.weights[g] - exact.weights[g]) <= 1e-6);
        CHECK(std::abs(sum_over_distinct(space, f) - 1.0) <= 1e-8);
    }
}

TEST_CASE("restriction basics and equilibrium") {
    const auto lat = build_lattice(1, 3);
    ConfigurationSpace space(lat);

    ExtendedField delta;
    delta.values.assign(space.size, 0.0);
    delta.values[space.identity_config()] = 1.0;
    const auto d = restrict_to_distinct(space, delta);
    CHECK(d.weights[0] == doctest::Approx(1.0));
    for (std::size_t g = 1; g < d.weights.size(); ++g) CHECK(d.weights[g] == doctest::Approx(0.0));

    PairPotentialSpec spec;
    const auto feq = evolve_extended(spec, space, 50.0, 0.01);
    const auto deq = restrict_to_distinct(space, feq);
    for (double w : deq.weights) CHECK(std::abs(w - 1.0 / 6.0) <= 1e-6);
}

TEST_CASE("total mass over the full configuration space") {
    const auto lat = build_lattice(1, 3);
    ConfigurationSpace space(lat);
    PairPotentialSpec spec;
    const auto f0 = evolve_extended(spec, space, 0.0, 0.01);
    CHECK(total_mass_A(f0) == doctest::Approx(1.0));

    ExtendedField zero;
    zero.values.assign(space.size, 0.0);
    CHECK(total_mass_A(zero) == doctest::Approx(0.0));
}

TEST_CASE("with the interaction off the flow separates into kernel factors") {
    const auto lat = build_lattice(1, 3);
    ConfigurationSpace space(lat);
    PairPotentialSpec spec;
    spec.disable_all = true;
    const double t = 0.7;
    const auto f = evolve_extended(spec, space, t, 0.002);
    const auto K = heat_kernel_spectral(lat, t);
    for (std::uint64_t c = 0; c < space.size; ++c) {
        double prod = 1.0;
        for (int a = 0; a < space.n; ++a) prod *= K(space.coordinate(c, a), a);
        CHECK(std::abs(f.values[c] - prod) <= 1e-9);
    }
}

TEST_CASE("step halving shows fourth order convergence of the defect") {
    const auto lat = build_lattice(1, 3);
    ConfigurationSpace space(lat);
    PairPotentialSpec spec;
    const auto exact = evolve_group(lat, 1.0);
    auto defect = [&](double step) {
        const auto f = evolve_extended(spec, space, 1.0, step);
        const auto restricted = restrict_to_distinct(space, f);
        double worst = 0.0;
        for (std::size_t g = 0; g < exact.weights.size(); ++g)
            worst = std::max(worst, std::abs(restricted.weights[g] - exact.weights[g]));
        return worst;
    };
    const double d1 = defect(0.1);
    const double d2 = defect(0.05);
    if (d1 > 1e-9) CHECK(d1 / d2 >= 8.0);
    CHECK(d2 < d1);
}
