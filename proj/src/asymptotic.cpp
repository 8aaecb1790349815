#include "permlab/asymptotic.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include <boost/multiprecision/cpp_bin_float.hpp>

namespace permlab {

long ConnectivityProfile::clustered_vertices() const {
    long total = 0;
    for (std::size_t k = 0; k < counts.size(); ++k) total += static_cast<long>(k + 2) * counts[k];
    return total;
}

void ConnectivityProfile::validate() const {
    for (long m : counts)
        if (m < 0) throw PreconditionError("cluster counts must be nonnegative");
    if (clustered_vertices() > N)
        throw PreconditionError("profile covers more vertices than the lattice has");
}

namespace {

BigInt factorial_big(long n) {
    BigInt f = 1;
    for (long k = 2; k <= n; ++k) f *= k;
    return f;
}

}  // namespace

Eq51Value eval_connected_count(int N, const ConnectivityProfile& profile,
                               const std::vector<BigInt>& catalan) {
    profile.validate();
    const long M = profile.clustered_vertices();

    Rational value = 1;
    for (std::size_t k = 0; k < profile.counts.size(); ++k) {
        const long m = profile.counts[k];
        if (m == 0) continue;
        const int i = static_cast<int>(k) + 1;  // cluster of i+1 vertices
        if (i >= static_cast<int>(catalan.size()))
            throw PreconditionError("catalan table too short for profile");
        BigInt npow = 1;
        for (int e = 0; e < i; ++e) npow *= N;
        const Rational weight(catalan[i] * factorial_big(i), npow);
        for (long rep = 0; rep < m; ++rep) value *= weight;
    }
    // which vertices are clustered
    value *= Rational(factorial_big(N), factorial_big(M) * factorial_big(N - M));
    // how the clustered vertices are grouped
    Rational assign(factorial_big(M), 1);
    for (std::size_t k = 0; k < profile.counts.size(); ++k) {
        const long m = profile.counts[k];
        if (m == 0) continue;
        assign /= factorial_big(m);
        const BigInt block = factorial_big(static_cast<long>(k) + 2);
        for (long rep = 0; rep < m; ++rep) assign /= block;
    }
    value *= assign;

    Eq51Value out;
    out.value = value;
    const double num = static_cast<double>(log(static_cast<boost::multiprecision::cpp_bin_float_100>(
        boost::multiprecision::cpp_bin_float_100(numerator(value)) /
        boost::multiprecision::cpp_bin_float_100(denominator(value)))));
    out.log_per_vertex = num / N;
    return out;
}

namespace {

// log of the count in doubles; safe for N up to 1e4
double log_value(int N, const std::vector<long>& m, const std::vector<double>& logA) {
    long M = 0;
    for (std::size_t k = 0; k < m.size(); ++k) M += static_cast<long>(k + 2) * m[k];
    if (M > N) return -std::numeric_limits<double>::infinity();
    double acc = 0.0;
    for (std::size_t k = 0; k < m.size(); ++k) {
        if (m[k] == 0) continue;
        const int i = static_cast<int>(k) + 1;
        acc += m[k] * (logA[i] + std::lgamma(i + 1.0) - i * std::log(static_cast<double>(N)));
        acc -= std::lgamma(m[k] + 1.0) + m[k] * std::lgamma(i + 2.0);
    }
    acc += std::lgamma(N + 1.0) - std::lgamma(N - M + 1.0);
    return acc;
}

}  // namespace

MaximizeResult maximize_connected_count(int N, int I_max) {
    if (N < 1 || N > 10000) throw PreconditionError("N out of range");
    if (I_max < 0 || I_max > 16) throw PreconditionError("I_max out of range");
    MaximizeResult best;
    best.profile.N = N;
    best.profile.counts.assign(I_max, 0);
    if (I_max == 0) {
        best.q_N = 0.0;
        return best;
    }
    const auto A = catalan_by_recursion(I_max);
    std::vector<double> logA(I_max + 1);
    for (int i = 0; i <= I_max; ++i) logA[i] = std::log(static_cast<double>(A[i]));

    std::vector<long> m(I_max, 0);
    double best_log = log_value(N, m, logA);
    std::vector<long> best_m = m;

    if (I_max == 1) {
        // exhaustive over the only coordinate
        for (long m1 = 0; 2 * m1 <= N; ++m1) {
            m[0] = m1;
            const double v = log_value(N, m, logA);
            if (v > best_log) {
                best_log = v;
                best_m = m;
            }
        }
    } else {
        // coordinate ascent from deterministic starts
        std::vector<std::vector<long>> starts;
        starts.push_back(std::vector<long>(I_max, 0));
        for (int k = 0; k < I_max; ++k) {
            std::vector<long> s(I_max, 0);
            s[k] = N / (2 * (k + 2));
            starts.push_back(s);
        }
        std::vector<long> filled(I_max, 0);
        for (int k = 0; k < I_max; ++k) filled[k] = N / (4 * I_max * (k + 2));
        starts.push_back(filled);

        for (auto start : starts) {
            auto cur = start;
            double cur_log = log_value(N, cur, logA);
            bool improved = true;
            while (improved) {
                improved = false;
                for (int k = 0; k < I_max; ++k) {
                    for (long delta : {+1L, -1L}) {
                        if (cur[k] + delta < 0) continue;
                        cur[k] += delta;
                        const double v = log_value(N, cur, logA);
                        if (v > cur_log) {
                            cur_log = v;
                            improved = true;
                        } else {
                            cur[k] -= delta;
                        }
                    }
                }
            }
            if (cur_log > best_log) {
                best_log = cur_log;
                best_m = cur;
            }
        }
    }
    best.profile.counts = best_m;
    best.q_N = best_log / N;
    return best;
}

FrustrationReport attempt_normalization_equation() {
    FrustrationReport rep;
    // S(p) = p g(p) = (1 - sqrt(1 - 4p)) / 2, increasing on (0, 1/4]
    rep.s_at_quarter = 0.5;
    rep.sup_value = 0.5;
    rep.solvable = false;
    // exponent value at the boundary point p = 1/4
    const double p = 0.25;
    // sum A_i p^{i+1}/(i+1) = 1 - sqrt(1-4p) + log((1 + sqrt(1-4p))/2)
    const double s = std::sqrt(1.0 - 4.0 * p);
    const double h = 1.0 - s + std::log((1.0 + s) / 2.0);
    rep.q_at_boundary = -1.0 + h - std::log(p);
    return rep;
}

double rho_p_equation_residual(double rho) {
    const double p = 1.0 - rho;
    const double z = rho * p;
    const double s = std::sqrt(std::max(0.0, 1.0 - 4.0 * z));
    const double g = 2.0 / (1.0 + s);  // Catalan generating function at z
    return std::abs(p * g - 1.0);
}

RhoPoint rho_variant(double rho, int order) {
    if (rho <= 0.0 || rho >= 0.5) throw PreconditionError("rho must lie in (0, 1/2)");
    if (order < 1) throw PreconditionError("order must be >= 1");
    RhoPoint pt;
    pt.rho = rho;
    pt.p = 1.0 - rho;
    const double z = rho * pt.p;

    // exact-rational partial sum of sum_i A_i p^{i+1} rho^i / (i+1)
    const auto A = catalan_by_recursion(order);
    Rational rrho(rho), rp(1.0 - rho);
    Rational partial = 0;
    Rational zpow = rp;  // p^{i+1} rho^i at i=0
    for (int i = 0; i <= order; ++i) {
        partial += Rational(A[i], i + 1) * zpow;
        zpow *= rrho * rp;
    }
    // closed-form tail: H(z) = sum_i A_i z^{i+1}/(i+1) = 1 - s + log((1+s)/2)
    const double s = std::sqrt(1.0 - 4.0 * z);
    const double H = 1.0 - s + std::log((1.0 + s) / 2.0);
    double partial_z = 0.0;  // same partial sum in z, for the tail difference
    {
        double zp = z;
        for (int i = 0; i <= order; ++i) {
            partial_z += static_cast<double>(A[i]) / (i + 1) * zp;
            zp *= z;
        }
    }
    const double tail = (H - partial_z) / rho;

    pt.q_tilde_series = -1.0 + static_cast<double>(partial) + tail - std::log(pt.p);
    pt.q_tilde_target = 1.0 + (pt.p / rho) * std::log(pt.p);
    pt.difference = pt.q_tilde_series - pt.q_tilde_target;
    pt.eq_p_residual = rho_p_equation_residual(rho);
    return pt;
}

PowerSeries q_tilde_series_in_rho(int order) {
    const auto A = catalan_by_recursion(order);
    PowerSeries q(order);
    q.set_coef(0, Rational(-1));
    // one_minus = (1 - x)
    PowerSeries one_minus(order);
    one_minus.set_coef(0, 1);
    one_minus.set_coef(1, -1);
    PowerSeries pm = one_minus;  // (1-x)^{i+1}
    for (int i = 0; i <= order; ++i) {
        // add A_i/(i+1) * x^i * (1-x)^{i+1}
        const Rational w(A[i], i + 1);
        for (int j = 0; i + j <= order; ++j) {
            if (pm.coef(j) == 0) continue;
            q.set_coef(i + j, q.coef(i + j) + w * pm.coef(j));
        }
        pm = pm * one_minus;
    }
    // minus log(1 - x) = + sum x^k / k
    for (int k = 1; k <= order; ++k) q.set_coef(k, q.coef(k) + Rational(1, k));
    return q;
}

PowerSeries q_tilde_target_series_in_rho(int order) {
    // 1 + ((1-x)/x) log(1-x): coefficient of x^j is 1/(j(j+1)) for j >= 1, 0 at j = 0
    PowerSeries t(order);
    for (int j = 1; j <= order; ++j) t.set_coef(j, Rational(1, static_cast<long long>(j) * (j + 1)));
    return t;
}

double permanent_ryser(const HeatKernelMatrix& K) {
    const int N = K.N;
    if (N > 14) throw CapExceeded("permanent supported for N <= 14");
    std::vector<double> rowsum(N, 0.0);
    double total = 0.0;
    std::uint32_t gray = 0;
    int popcount = 0;
    const std::uint32_t count = 1u << N;
    for (std::uint32_t k = 1; k < count; ++k) {
        const std::uint32_t next = k ^ (k >> 1);
        const std::uint32_t flipped = gray ^ next;
        const int j = std::countr_zero(flipped);
        const bool added = next & flipped;
        for (int i = 0; i < N; ++i) rowsum[i] += added ? K(i, j) : -K(i, j);
        popcount += added ? 1 : -1;
        gray = next;
        double prod = 1.0;
        for (int i = 0; i < N; ++i) prod *= rowsum[i];
        total += ((N - popcount) % 2 == 0) ? prod : -prod;
    }
    return total;
}

}  // namespace permlab
