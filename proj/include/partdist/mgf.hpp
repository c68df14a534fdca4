#pragma once

#include <map>
#include <vector>

#include "partdist/exactnum.hpp"

namespace partdist {

/// Coefficients (y_1, ..., y_n) of t_1..t_n in the exponent of one term e^{y.t}.
using ExponentVector = std::vector<int>;

/// Finite sum of weighted exponentials sum_y w_y e^{y.t} in n variables.
/// The joint MGF of Y is one of these; so are its partial derivatives.
struct SymbolicMGF {
    int n = 0;
    std::map<ExponentVector, Rational> terms;

    /// Value at t = 0, i.e. the sum of the weights.
    Rational at_zero() const;

    friend bool operator==(const SymbolicMGF&, const SymbolicMGF&) = default;
};

/// M^(n)_Y: one term per partition of n, exponent m(lambda), weight pmf(lambda).
/// n = 0 gives the single term with an empty exponent and weight 1.
SymbolicMGF build_mgf(int n);

/// d/dt_i: each term (y, w) becomes (y, w * y_i); vanishing terms are dropped.
/// Throws std::invalid_argument unless 1 <= i <= m.n; for n = 0 any i >= 1
/// gives the empty sum.
SymbolicMGF partial_derivative(const SymbolicMGF& m, int i);

/// (e^{t_i} / i) * M^(n-i), embedded in n variables: exponents of M^(n-i) are
/// zero-padded to length n, coordinate i is incremented, weights divided by i.
/// Empty when n - i < 0.
SymbolicMGF shifted_lower_mgf(int n, int i);

struct TermMismatch {
    ExponentVector exponent;
    Rational left;  // weight in dM^(n)/dt_i (0 if absent)
    Rational right; // weight in (e^{t_i}/i) M^(n-i) (0 if absent)
};

struct RecursionReport {
    int n = 0;
    int i = 0;
    bool ok = false;
    std::vector<TermMismatch> mismatches;
};

/// Term-by-term comparison of dM^(n)/dt_i against (e^{t_i}/i) M^(n-i).
/// Throws std::invalid_argument unless 1 <= i <= n.
RecursionReport verify_theorem1(int n, int i);

/// dM^(n)/dt_i at t = 0, i.e. E(Y_i). Throws unless 1 <= i <= n.
Rational expectation_via_mgf(int n, int i);

/// d^2 M^(n) / dt_i dt_j at t = 0, i.e. E(Y_i Y_j).
Rational mixed_second_moment_via_mgf(int n, int i, int j);

} // namespace partdist
