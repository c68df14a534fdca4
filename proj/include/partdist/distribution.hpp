#pragma once

#include <span>
#include <string>
#include <vector>

#include "partdist/exactnum.hpp"
#include "partdist/partitions.hpp"

namespace partdist {

// Probability that a uniformly random permutation of n letters has cycle
// type p: 1 / (prod_j j^{m_j} m_j!). X = Lambda(p) and Y = m(p) share it.
Rational pmf_of(const Partition& p);
Rational pmf_of(std::span<const int> parts);

struct PmfEntry {
    Partition partition;
    Rational probability;
};

/// Full pmf over the partitions of n, in enumeration order.
struct Pmf {
    int n = 0;
    std::vector<PmfEntry> entries;

    Rational total() const;
};

Pmf pmf_table(int n);

struct FineIdentityCheck {
    int n = 0;
    Rational sum;
    bool holds = false;
};

/// Sums pmf_of over every partition of n.
FineIdentityCheck verify_fine_identity(int n);

/// E(Y) = (1, 1/2, ..., 1/n).
std::vector<Rational> expectation_y(int n);

/// sum over partitions of m(lambda) * pmf(lambda).
std::vector<Rational> expectation_y_oracle(int n);

/// Which boundary the off-diagonal block of A uses.
enum class ABoundary {
    /// a_ij = 1/(ij) iff i + j <= n. Agrees with enumeration.
    inclusive,
    /// a_ij = 1/(ij) iff j < n - i (for i <= j). Fails enumeration at j = n - i.
    strict,
};

/// E(YY') = A + B with B = diag(1/i).
struct SecondMomentSplit {
    RationalMatrix a;
    RationalMatrix b;

    RationalMatrix sum() const { return a + b; }
};

SecondMomentSplit second_moment_decomposition(int n, ABoundary boundary = ABoundary::inclusive);

/// sum over partitions of m(lambda) m(lambda)' * pmf(lambda).
RationalMatrix second_moment_oracle(int n);

/// Closed-form covariance matrix of Y.
RationalMatrix covariance_y(int n);

/// E(YY') - E(Y)E(Y)' with both terms computed by enumeration.
RationalMatrix covariance_oracle(int n);

struct MomentReport {
    int n = 0;
    std::vector<Rational> expectation;
    RationalMatrix second_moment;
    RationalMatrix a_matrix;
    RationalMatrix b_matrix;
    RationalMatrix covariance;
};

/// Closed forms only.
MomentReport moment_report(int n);

struct OracleMismatch {
    std::string quantity; // "E(Y)", "E(YY')" or "Sigma"
    int i = 0;            // 1-based
    int j = 0;            // 1-based; 0 for vectors
    Rational closed_form;
    Rational oracle;
};

/// Compares every closed form in moment_report(n) with its enumeration oracle.
/// Empty on full agreement.
std::vector<OracleMismatch> verify_moments_against_oracle(int n);

} // namespace partdist
