#ifndef PERMLAB_LATTICE_HPP
#define PERMLAB_LATTICE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "permlab/errors.hpp"

namespace permlab {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// A function on the lattice vertices.
using SiteField = std::vector<double>;

// Periodic d-dimensional cube of edge size L, N = L^d vertices.
// Vertices are indexed mixed-radix over coordinates: v = sum_m c_m * L^m.
struct LatticeSpec {
    int d = 0;
    int L = 0;
    int N = 0;
    std::vector<std::pair<int, int>> edges;      // unordered nearest-neighbor pairs, d*N of them
    std::vector<std::vector<int>> neighbors;     // 2d neighbors per vertex

    std::vector<int> coords(int v) const;
    int vertex(const std::vector<int>& c) const;
    // Neighbor of v one step in +direction m (periodic).
    int shift(int v, int m, int delta = 1) const;
};

LatticeSpec build_lattice(int d, int L);

SiteField apply_laplacian(const LatticeSpec& lattice, const SiteField& phi);

// Dense symmetric doubly stochastic matrix (e^{Delta t})_{i,j}.
struct HeatKernelMatrix {
    double t = 0.0;
    int N = 0;
    std::vector<double> entries;  // row-major N*N

    double operator()(int i, int j) const { return entries[static_cast<std::size_t>(i) * N + j]; }
    std::vector<double> column(int j) const;
};

// Exact diagonalization in the discrete Fourier basis of the periodic Laplacian.
HeatKernelMatrix heat_kernel_spectral(const LatticeSpec& lattice, double t);

// Independent route: fixed-step RK4 on d(phi)/dt = Delta phi, column by column.
HeatKernelMatrix heat_kernel_ode(const LatticeSpec& lattice, double t, double step);

// C_N = N^N / N!, with its N-th root (C_N^{1/N} -> e).
struct CConstant {
    Rational value;
    double as_double = 0.0;
    double root = 0.0;
};

CConstant c_constant(int N);

}  // namespace permlab

#endif
