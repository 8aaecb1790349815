#ifndef PERMLAB_SERIES_HPP
#define PERMLAB_SERIES_HPP

#include <vector>

#include "permlab/lattice.hpp"  // Rational, BigInt

namespace permlab {

// Truncated univariate formal power series with exact rational coefficients.
// All arithmetic truncates consistently at the stated order (highest kept power).
class PowerSeries {
  public:
    PowerSeries(int order) : order_(order), c_(order + 1, Rational(0)) {
        if (order < 0) throw PreconditionError("series order must be >= 0");
    }
    static PowerSeries constant(const Rational& v, int order) {
        PowerSeries s(order);
        s.c_[0] = v;
        return s;
    }

    int order() const { return order_; }
    const Rational& coef(int k) const {
        if (k < 0 || k > order_) throw PreconditionError("coefficient index out of range");
        return c_[k];
    }
    void set_coef(int k, const Rational& v) {
        if (k < 0 || k > order_) throw PreconditionError("coefficient index out of range");
        c_[k] = v;
    }

    PowerSeries operator+(const PowerSeries& o) const;
    PowerSeries operator-(const PowerSeries& o) const;
    PowerSeries operator*(const PowerSeries& o) const;
    PowerSeries pow(int e) const;
    // substitution o into this; o must have zero constant term
    PowerSeries compose(const PowerSeries& o) const;

    bool operator==(const PowerSeries& o) const { return order_ == o.order_ && c_ == o.c_; }

    double eval(double x) const;  // Horner on the truncated polynomial

  private:
    int order_;
    std::vector<Rational> c_;
};

// a_i = -(-1)^i
long long a_constant(int i);

// A_0..A_K from the coef(P^{2k+1}) recursion; exact integers.
std::vector<BigInt> catalan_by_recursion(int K);

// Closed form binomial(2i, i)/(i+1).
BigInt catalan_closed_form(int i);

struct GenFunValue {
    double series = 0.0;
    double closed = 0.0;
    double tail_bound = 0.0;
};

// f(z) = sum_{i>=1} A_i z^i, both as a truncated series and via the
// closed form (1 - sqrt(1-4z)) / (1 + sqrt(1-4z)). Throws past z = 1/4.
GenFunValue generating_function_value(double z, int order);

struct FunEqResult {
    bool ok = false;
    double residual = 0.0;
};

// residual of p + p f(rho p) = 1 at p = 1 - rho, via the closed form
FunEqResult verify_functional_equation(double rho, int order);

}  // namespace permlab

#endif
