#include "permlab/series.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace permlab {

PowerSeries PowerSeries::operator+(const PowerSeries& o) const {
    PowerSeries out(std::min(order_, o.order_));
    for (int k = 0; k <= out.order_; ++k) out.c_[k] = c_[k] + o.c_[k];
    return out;
}

PowerSeries PowerSeries::operator-(const PowerSeries& o) const {
    PowerSeries out(std::min(order_, o.order_));
    for (int k = 0; k <= out.order_; ++k) out.c_[k] = c_[k] - o.c_[k];
    return out;
}

PowerSeries PowerSeries::operator*(const PowerSeries& o) const {
    PowerSeries out(std::min(order_, o.order_));
    for (int a = 0; a <= out.order_; ++a) {
        if (c_[a] == 0) continue;
        for (int b = 0; a + b <= out.order_; ++b) {
            if (o.c_[b] == 0) continue;
            out.c_[a + b] += c_[a] * o.c_[b];
        }
    }
    return out;
}

PowerSeries PowerSeries::pow(int e) const {
    if (e < 0) throw PreconditionError("negative series power");
    PowerSeries out = constant(1, order_);
    PowerSeries base = *this;
    while (e > 0) {
        if (e & 1) out = out * base;
        base = base * base;
        e >>= 1;
    }
    return out;
}

PowerSeries PowerSeries::compose(const PowerSeries& o) const {
    if (o.c_[0] != 0) throw PreconditionError("composition needs zero constant term");
    PowerSeries out = constant(c_[0], std::min(order_, o.order_));
    PowerSeries xk = constant(1, out.order());
    for (int k = 1; k <= out.order(); ++k) {
        xk = xk * o;
        if (c_[k] == 0) continue;
        PowerSeries term = xk;
        for (int j = 0; j <= out.order(); ++j) term.c_[j] *= c_[k];
        out = out + term;
    }
    return out;
}

double PowerSeries::eval(double x) const {
    double acc = 0.0;
    for (int k = order_; k >= 0; --k) acc = acc * x + static_cast<double>(c_[k]);
    return acc;
}

long long a_constant(int i) {
    if (i < 1) throw PreconditionError("a_i defined for i >= 1");
    return (i % 2 == 0) ? -1 : 1;
}

std::vector<BigInt> catalan_by_recursion(int K) {
    if (K < 0) throw PreconditionError("K must be >= 0");
    std::vector<BigInt> A(K + 1, 0);
    A[0] = 1;
    // degree-by-degree tables: S = P^2 and U[k] = P^{2k+3} for k >= 0,
    // each valid through the orders extended so far; the coefficient of
    // order j in any power of P depends only on A_0..A_j, so extending
    // the tables one order per step keeps every read within known data
    std::vector<BigInt> S(K + 1, 0);
    std::vector<std::vector<BigInt>> U;
    S[0] = 1;

    auto extend = [&](int i) {
        // S[i] = sum_c A_c A_{i-c}
        BigInt s = 0;
        for (int c = 0; c <= i; ++c) s += A[c] * A[i - c];
        S[i] = s;
        // U[0] = P * S, U[k] = U[k-1] * S
        for (std::size_t k = 0; k < U.size(); ++k) {
            BigInt u = 0;
            const auto& prev = (k == 0) ? A : U[k - 1];
            for (int c = 0; c <= i; ++c) u += prev[c] * S[i - c];
            U[k][i] = u;
        }
    };

    for (int i = 1; i <= K; ++i) {
        // A_i reads coef(P^{2k+1}, i-k) for k = 1..i-1; grow the table list
        // first so U[k-1] exists, filled through order i-1
        while (static_cast<int>(U.size()) < i - 1) {
            U.emplace_back(K + 1, BigInt(0));
            const std::size_t k = U.size() - 1;
            const auto& prev = (k == 0) ? A : U[k - 1];
            for (int j = 0; j <= i - 1; ++j) {
                BigInt u = 0;
                for (int c = 0; c <= j; ++c) u += prev[c] * S[j - c];
                U[k][j] = u;
            }
        }
        BigInt v = a_constant(i);
        for (int k = 1; k <= i - 1; ++k) v += a_constant(k) * U[k - 1][i - k];
        A[i] = v;
        extend(i);
    }
    return A;
}

BigInt catalan_closed_form(int i) {
    if (i < 0) throw PreconditionError("index must be >= 0");
    // binomial(2i, i) / (i + 1)
    BigInt binom = 1;
    for (int k = 1; k <= i; ++k) {
        binom *= (i + k);
        binom /= k;
    }
    return binom / (i + 1);
}

GenFunValue generating_function_value(double z, int order) {
    if (z > 0.25) throw PreconditionError("series diverges past the z = 1/4 singularity");
    GenFunValue out;
    const auto A = catalan_by_recursion(order);
    double acc = 0.0;
    for (int i = order; i >= 1; --i) acc = (acc + static_cast<double>(A[i])) * z;
    out.series = acc;
    const double s = std::sqrt(1.0 - 4.0 * z);
    out.closed = (1.0 - s) / (1.0 + s);
    const double q = std::abs(4.0 * z);
    out.tail_bound = q < 1.0 ? std::pow(q, order + 1) / (1.0 - q) : std::numeric_limits<double>::infinity();
    return out;
}

FunEqResult verify_functional_equation(double rho, int order) {
    if (rho <= 0.0 || rho >= 0.5) throw PreconditionError("rho must lie in (0, 1/2)");
    const double p = 1.0 - rho;
    const auto f = generating_function_value(rho * p, order);
    FunEqResult res;
    res.residual = std::abs(p + p * f.closed - 1.0);
    res.ok = res.residual <= 1e-12;
    return res;
}

}  // namespace permlab
