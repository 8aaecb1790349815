#include "permlab/lattice.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace permlab {

std::vector<int> LatticeSpec::coords(int v) const {
    std::vector<int> c(d);
    for (int m = 0; m < d; ++m) {
        c[m] = v % L;
        v /= L;
    }
    return c;
}

int LatticeSpec::vertex(const std::vector<int>& c) const {
    int v = 0;
    for (int m = d - 1; m >= 0; --m) v = v * L + ((c[m] % L) + L) % L;
    return v;
}

int LatticeSpec::shift(int v, int m, int delta) const {
    int stride = 1;
    for (int k = 0; k < m; ++k) stride *= L;
    int c = (v / stride) % L;
    int cc = ((c + delta) % L + L) % L;
    return v + (cc - c) * stride;
}

LatticeSpec build_lattice(int d, int L) {
    if (d < 1) throw PreconditionError("lattice dimension must be >= 1");
    if (L < 3) throw PreconditionError("L must be >= 3");
    LatticeSpec lat;
    lat.d = d;
    lat.L = L;
    long long n = 1;
    for (int m = 0; m < d; ++m) n *= L;
    if (n > (1 << 28)) throw CapExceeded("lattice too large");
    lat.N = static_cast<int>(n);
    lat.neighbors.assign(lat.N, {});
    for (int v = 0; v < lat.N; ++v) {
        for (int m = 0; m < d; ++m) {
            int w = lat.shift(v, m, +1);
            lat.edges.emplace_back(v, w);
            lat.neighbors[v].push_back(w);
            lat.neighbors[v].push_back(lat.shift(v, m, -1));
        }
    }
    return lat;
}

SiteField apply_laplacian(const LatticeSpec& lattice, const SiteField& phi) {
    if (static_cast<int>(phi.size()) != lattice.N)
        throw PreconditionError("field length does not match vertex count");
    SiteField out(lattice.N, 0.0);
    for (int v = 0; v < lattice.N; ++v) {
        double acc = 0.0;
        for (int w : lattice.neighbors[v]) acc += phi[w] - phi[v];
        out[v] = acc;
    }
    return out;
}

std::vector<double> HeatKernelMatrix::column(int j) const {
    std::vector<double> col(N);
    for (int i = 0; i < N; ++i) col[i] = (*this)(i, j);
    return col;
}

namespace {

// 1D periodic kernel as a function of the coordinate difference.
std::vector<double> kernel_1d(int L, double t) {
    std::vector<double> k(L, 0.0);
    for (int delta = 0; delta < L; ++delta) {
        double acc = 0.0;
        for (int j = 0; j < L; ++j) {
            double lam = -2.0 * (1.0 - std::cos(2.0 * std::numbers::pi * j / L));
            acc += std::exp(lam * t) * std::cos(2.0 * std::numbers::pi * j * delta / L);
        }
        k[delta] = acc / L;
    }
    return k;
}

}  // namespace

HeatKernelMatrix heat_kernel_spectral(const LatticeSpec& lattice, double t) {
    if (t < 0) throw PreconditionError("time must be nonnegative");
    HeatKernelMatrix K;
    K.t = t;
    K.N = lattice.N;
    K.entries.assign(static_cast<std::size_t>(lattice.N) * lattice.N, 0.0);
    const auto k1 = kernel_1d(lattice.L, t);
    for (int i = 0; i < lattice.N; ++i) {
        const auto ci = lattice.coords(i);
        for (int j = 0; j < lattice.N; ++j) {
            const auto cj = lattice.coords(j);
            double v = 1.0;
            for (int m = 0; m < lattice.d; ++m) {
                int delta = ((ci[m] - cj[m]) % lattice.L + lattice.L) % lattice.L;
                v *= k1[delta];
            }
            K.entries[static_cast<std::size_t>(i) * lattice.N + j] = v;
        }
    }
    return K;
}

HeatKernelMatrix heat_kernel_ode(const LatticeSpec& lattice, double t, double step) {
    if (t < 0) throw PreconditionError("time must be nonnegative");
    if (step <= 0) throw PreconditionError("step must be positive");
    HeatKernelMatrix K;
    K.t = t;
    K.N = lattice.N;
    K.entries.assign(static_cast<std::size_t>(lattice.N) * lattice.N, 0.0);
    for (int j = 0; j < lattice.N; ++j) {
        SiteField phi(lattice.N, 0.0);
        phi[j] = 1.0;
        double remaining = t;
        while (remaining > 0.0) {
            double h = remaining < step ? remaining : step;
            auto k1 = apply_laplacian(lattice, phi);
            SiteField tmp(lattice.N);
            for (int v = 0; v < lattice.N; ++v) tmp[v] = phi[v] + 0.5 * h * k1[v];
            auto k2 = apply_laplacian(lattice, tmp);
            for (int v = 0; v < lattice.N; ++v) tmp[v] = phi[v] + 0.5 * h * k2[v];
            auto k3 = apply_laplacian(lattice, tmp);
            for (int v = 0; v < lattice.N; ++v) tmp[v] = phi[v] + h * k3[v];
            auto k4 = apply_laplacian(lattice, tmp);
            for (int v = 0; v < lattice.N; ++v)
                phi[v] += h / 6.0 * (k1[v] + 2.0 * k2[v] + 2.0 * k3[v] + k4[v]);
            remaining -= h;
        }
        for (int i = 0; i < lattice.N; ++i)
            K.entries[static_cast<std::size_t>(i) * lattice.N + j] = phi[i];
    }
    return K;
}

CConstant c_constant(int N) {
    if (N < 1) throw PreconditionError("N must be >= 1");
    BigInt nn = 1;
    BigInt fact = 1;
    for (int k = 1; k <= N; ++k) {
        nn *= N;
        fact *= k;
    }
    CConstant c;
    c.value = Rational(nn, fact);
    // log-domain root; N^N/N! overflows double long before N = 128
    double logc = N * std::log(static_cast<double>(N)) - std::lgamma(N + 1.0);
    c.root = std::exp(logc / N);
    c.as_double = N <= 120 ? std::exp(logc) : std::numeric_limits<double>::infinity();
    return c;
}

}  // namespace permlab
