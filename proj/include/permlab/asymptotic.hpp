#ifndef PERMLAB_ASYMPTOTIC_HPP
#define PERMLAB_ASYMPTOTIC_HPP

#include <vector>

#include "permlab/lattice.hpp"
#include "permlab/series.hpp"

namespace permlab {

// Connectivity pattern: counts[i-1] = m_i, the number of (i+1)-vertex
// connected clusters present in a product term.
struct ConnectivityProfile {
    int N = 0;
    std::vector<long> counts;

    long clustered_vertices() const;  // sum (i+1) m_i
    void validate() const;
};

struct Eq51Value {
    Rational value;
    double log_per_vertex = 0.0;
};

// The three-factor product-of-connected-diagrams count, exact in big rationals:
// cluster weights (A_i i! / N^i)^{m_i}, the vertex-selection binomial, and the
// assignment multinomial.
Eq51Value eval_connected_count(int N, const ConnectivityProfile& profile,
                               const std::vector<BigInt>& catalan);

struct MaximizeResult {
    ConnectivityProfile profile;
    double q_N = 0.0;
};

// Integer-profile maximization of the per-vertex log at finite N:
// exhaustive search when the profile lattice is small, coordinate ascent
// from several deterministic starts otherwise.
MaximizeResult maximize_connected_count(int N, int I_max);

struct FrustrationReport {
    double sup_value = 0.0;       // sup of S(p) = sum A_i p^{i+1} on (0, 1/4]
    double s_at_quarter = 0.0;
    bool solvable = false;        // whether S(p) = 1 is attainable
    double q_at_boundary = 0.0;   // q from the exponent formula at p = 1/4
};

// S(p) = (1 - sqrt(1-4p))/2 is bounded by 1/2 on its real domain, so the
// normalization equation S(p) = 1 has no solution: the q = 1 target fails.
FrustrationReport attempt_normalization_equation();

struct RhoPoint {
    double rho = 0.0;
    double p = 0.0;               // 1 - rho
    double q_tilde_series = 0.0;  // exact-rational partial sum plus closed-form tail
    double q_tilde_target = 0.0;  // 1 + ((1-rho)/rho) ln(1-rho)
    double difference = 0.0;
    double eq_p_residual = 0.0;   // |sum A_i p^{i+1} rho^i - 1| via closed form
};

RhoPoint rho_variant(double rho, int order);

// Closed-form residual of the p-equation at arbitrary rho (breaks for rho >= 1/2).
double rho_p_equation_residual(double rho);

// Exact rational expansion in rho of the thinned-walk exponent with p = 1 - rho,
// and of the target 1 + ((1-rho)/rho) ln(1-rho); equal term by term below 1/2.
PowerSeries q_tilde_series_in_rho(int order);
PowerSeries q_tilde_target_series_in_rho(int order);

// Ryser permanent with Gray-code subset updates; N <= 14.
double permanent_ryser(const HeatKernelMatrix& K);

}  // namespace permlab

#endif
