#ifndef PERMLAB_DIAGRAM_HPP
#define PERMLAB_DIAGRAM_HPP

#include <string>
#include <utility>
#include <vector>

#include "permlab/extension.hpp"
#include "permlab/lattice.hpp"

namespace permlab {

// Time-resolved diagram value with its large-L / large-t extrapolation.
struct DiagramEvaluation {
    int n = 0;
    std::string kind;  // "lower-limits" or "full"
    std::vector<std::pair<double, double>> curve;  // (t, value)
    double extrapolated_limit = 0.0;
    double uncertainty = 0.0;
    std::string method;
};

// a_i = -(-1)^i: the alternating tree-diagram limits.
inline int sign_constant(int i) { return (i % 2 == 0) ? -1 : 1; }

// Two-particle H diagram before the t_1 integration: the y-sum of
// d/dt (phi_1 phi_2) evaluated through the Laplacian identity.
double theorem1_contribution(const LatticeSpec& lattice, int z1, int z2, double t1);

// Lower-limits-only tree sum T_n(t), z_1 pinned at 0, the other initial
// vertices summed over ordered distinct tuples. The nested lower-limit
// evaluations collapse every interaction time onto t_1, so after the t_1
// integration the value reduces to heat-kernel products at time t.
double T_n_lower_limits_value(const LatticeSpec& lattice, int n, double t);

DiagramEvaluation T_n_lower_limits(const LatticeSpec& lattice, int n,
                                   const std::vector<double>& times);

// Summed-over-final-states time-ordered term of the perturbation series for a
// fixed interaction sequence, computed by the ODE hierarchy
//   u_0' = Delta u_0,  u_k' = Delta u_k + V_{p_k} u_{k-1},
// accumulating the final <1, V u> integral directly (the last free propagator
// drops since the heat kernel conserves mass). z_1 is pinned at vertex 0 and
// the other initial vertices are summed, distinct by default.
double dyson_oracle(const LatticeSpec& lattice, int n,
                    const std::vector<std::pair<int, int>>& pair_sequence, double t, double step,
                    bool distinct_z = true);

// Full tree sum including upper limits; n = 2 coincides with T_2, n = 3 sums
// the three spanning interaction orderings.
double T_tilde_n_value(const LatticeSpec& lattice, int n, double t, double step);

DiagramEvaluation T_tilde_n(const LatticeSpec& lattice, int n, const std::vector<double>& times,
                            double step);

// Both sides of the telescopic sum identity for fields phi_1..phi_n:
// first = the j-split S-symmetrized sum, second = the (n-1)!-factored form.
std::pair<double, double> telescopic_identity_check(const LatticeSpec& lattice,
                                                    const std::vector<SiteField>& fields);

// Neville extrapolation of (L, value) pairs, polynomial in 1/L^d, evaluated
// at 1/N = 0. Uncertainty = |extrapolation - finest point| of the last order drop.
struct Extrapolation {
    double limit = 0.0;
    double uncertainty = 0.0;
};
Extrapolation extrapolate_in_inverse_N(const std::vector<std::pair<double, double>>& n_and_value);

}  // namespace permlab

#endif
