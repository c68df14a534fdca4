#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "partdist/exactnum.hpp"

namespace partdist {

/// Expectations of the padded part vector X for one n.
struct XExpectationTable {
    int n = 0;
    std::vector<Rational> values; // values[j-1] = E(X_j)
    std::vector<BigInt> scaled;   // scaled[j-1] = n! E(X_j), always an integer

    const Rational& value(int j) const { return values[static_cast<std::size_t>(j - 1)]; }
    const BigInt& scaled_value(int j) const { return scaled[static_cast<std::size_t>(j - 1)]; }
};

/// Exact E(X_j) for j = 1..n by enumerating the partitions of n.
XExpectationTable x_expectations(int n);

/// n! E(X_1) for n = 1..max_n (expected largest cycle length, scaled).
std::vector<BigInt> x1_sequence(int max_n);

/// n! E(X_2) for n = 2..max_n.
std::vector<BigInt> x2_sequence(int max_n);

/// Last n for which the printed n! E(X_1) / n! E(X_2) values exist.
inline constexpr int kPrintedX1MaxN = 10;
inline constexpr int kPrintedX2MaxN = 8;

/// True when the closed form for n! E(X_{n-j}) is stated, i.e. j in {1,2,3}
/// and n >= 2j + 1.
bool conjecture_applies(int n, int j);

/// Polynomial form, e.g. (n^2 - n + 2)/2 for j = 1.
BigInt conjecture_polynomial_form(int n, int j);

/// Binomial-basis form, e.g. C(n,2) + 1 for j = 1.
BigInt conjecture_binomial_form(int n, int j);

/// Evaluates both forms, throws std::logic_error if they disagree.
/// Throws std::invalid_argument outside the stated range (see conjecture_applies).
BigInt conjecture_closed_form(int n, int j);

struct CoefficientClaim {
    std::string name;  // "a_2j", "a_2j-1", "a_4", "a_3", "a_2"
    int index = 0;     // i in a_i
    BigInt expected;
    Rational actual;
    bool applicable = false;
    bool matches = false;
};

struct HoldoutCheck {
    int n = 0;
    Rational predicted;
    BigInt actual;
    bool ok = false;
};

/// n! E(X_{n-j}) = 1 + sum_{i=2}^{2j} a_i C(n, i), solved exactly.
struct BinomialFit {
    int j = 0;
    std::map<int, Rational> coefficients; // i -> a_i
    std::vector<int> solve_ns;            // n values used to solve
    std::vector<HoldoutCheck> holdout;    // n values not used to solve
    bool all_positive_integers = false;
    bool holdout_ok = false;
    std::vector<CoefficientClaim> claims;

    Rational predict(int n) const;
    /// Every applicable claim matches.
    bool claims_ok() const;
};

/// n! E(X_{n-j}) from enumeration.
BigInt scaled_tail_expectation(int n, int j);

/// Solves for a_2..a_2j using the smallest 2j-1 distinct values of sample_ns;
/// remaining sample values and extra_holdout (default: the two integers above
/// the largest sample) are checked against the fit.
/// Throws std::invalid_argument when fewer than 2j-1 distinct samples are
/// given or a sample is below 2j+1, SingularSystemError on a singular system.
BinomialFit fit_binomial_basis(int j, const std::vector<int>& sample_ns,
                               std::optional<std::vector<int>> extra_holdout = std::nullopt);

/// 2j+1, ..., 4j-1.
std::vector<int> default_fit_samples(int j);

/// Monomial coefficients (index = power of n) of 1 + sum a_i C(n, i).
std::vector<Rational> monomial_expansion(const BinomialFit& fit);

struct AsymptoticsReport {
    int j = 0;
    int degree = 0;
    Rational leading;
    Rational expected_leading;     // 1 / (j! 2^j)
    bool leading_matches = false;
    Rational next;                 // coefficient of n^{2j-1}
    Rational claimed_next;         // (2j+1) / (3 2^j (j-1)!)
    bool next_matches = false;
    bool next_matches_magnitude = false;
};

AsymptoticsReport leading_asymptotics_check(const BinomialFit& fit);
AsymptoticsReport leading_asymptotics_check(int j);

} // namespace partdist
