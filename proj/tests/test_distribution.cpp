#include <doctest.h>

#include "oracles.hpp"
#include "partdist/distribution.hpp"

using namespace partdist;

namespace {

Rational R(long p, long q = 1)
{
    return Rational(p, q);
}

RationalMatrix from_rows(const std::vector<std::vector<Rational>>& rows)
{
    RationalMatrix m(rows.size(), rows.front().size());
    for (std::size_t r = 0; r < rows.size(); ++r) {
        for (std::size_t c = 0; c < rows[r].size(); ++c) {
            m(r, c) = rows[r][c];
        }
    }
    return m;
}

/// E(Y_i Y_j) by visiting every permutation of n letters.
RationalMatrix second_moment_by_census(int n)
{
    RationalMatrix out = RationalMatrix::square(static_cast<std::size_t>(n));
    const Rational total(testing::factorial_i64(n));
    for (const auto& [parts, count] : testing::cycle_type_census(n)) {
        std::vector<long> m(static_cast<std::size_t>(n), 0);
        for (int part : parts) {
            ++m[static_cast<std::size_t>(part - 1)];
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            for (std::size_t j = 0; j < m.size(); ++j) {
                out(i, j) += Rational(m[i] * m[j] * count) / total;
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("pmf examples")
{
    CHECK(pmf_of(Partition({2, 1})) == R(1, 2));
    CHECK(pmf_of(Partition({2, 2, 1})) == R(1, 8));
    CHECK(pmf_of(Partition({4})) == R(1, 4));
    CHECK(pmf_of(Partition()) == R(1));
}

TEST_CASE("pmf table for n = 5")
{
    const Pmf pmf = pmf_table(5);
    std::vector<Rational> probs;
    for (const auto& e : pmf.entries) {
        probs.push_back(e.probability);
    }
    // (5), (4,1), (3,2), (3,1,1), (2,2,1), (2,1,1,1), (1^5)
    CHECK(probs == std::vector<Rational>{R(1, 5), R(1, 4), R(1, 6), R(1, 6), R(1, 8), R(1, 12), R(1, 120)});
    CHECK(pmf.total() == R(1));
}

TEST_CASE("probabilities sum to one for 0 <= n <= 40")
{
    const auto three = verify_fine_identity(3);
    CHECK(three.holds);
    CHECK(three.sum == R(1));
    CHECK(verify_fine_identity(0).holds);
    for (int n = 0; n <= 40; ++n) {
        CHECK_MESSAGE(verify_fine_identity(n).holds, "n = " << n);
    }
}

TEST_CASE("pmf times n! is the cycle type count")
{
    for (int n = 0; n <= 15; ++n) {
        const Rational nf(factorial(static_cast<unsigned>(n)));
        for (const Partition& p : enumerate_partitions(n)) {
            CHECK(pmf_of(p) * nf == Rational(count_permutations_of_type(p)));
        }
    }
}

TEST_CASE("expectation of Y")
{
    CHECK(expectation_y(3) == std::vector<Rational>{R(1), R(1, 2), R(1, 3)});
    CHECK(expectation_y(5) == std::vector<Rational>{R(1), R(1, 2), R(1, 3), R(1, 4), R(1, 5)});
    for (int n = 1; n <= 15; ++n) {
        CHECK(expectation_y(n) == expectation_y_oracle(n));
    }
    CHECK_THROWS_AS(expectation_y(0), std::invalid_argument);
}

TEST_CASE("second moment splits into A + B")
{
    const auto split = second_moment_decomposition(3);
    const auto n3 = second_moment_oracle(3);
    CHECK(split.a(0, 1) == R(1, 2));
    CHECK(n3(0, 1) == R(1, 2));
    CHECK(split.sum() - outer(expectation_y(3), expectation_y(3)) ==
          from_rows({{R(1), R(0), R(-1, 3)}, {R(0), R(1, 4), R(-1, 6)}, {R(-1, 3), R(-1, 6), R(2, 9)}}));

    const auto n4 = second_moment_decomposition(4);
    CHECK(n4.a(1, 1) == R(1, 4));
    CHECK(second_moment_oracle(4)(1, 1) == R(3, 4));

    for (int n = 1; n <= 15; ++n) {
        const auto s = second_moment_decomposition(n);
        CHECK(s.a.is_symmetric());
        for (std::size_t i = 0; i < s.b.rows(); ++i) {
            for (std::size_t j = 0; j < s.b.cols(); ++j) {
                CHECK(s.b(i, j) == (i == j ? R(1, static_cast<long>(i + 1)) : R(0)));
            }
        }
        CHECK(s.sum() == second_moment_oracle(n));
    }
}

TEST_CASE("strict A boundary disagrees with enumeration at j = n - i")
{
    const auto strict = second_moment_decomposition(3, ABoundary::strict);
    CHECK(strict.a(0, 1) == R(0));
    CHECK(strict.sum()(0, 1) != second_moment_oracle(3)(0, 1));
}

TEST_CASE("second moment oracle agrees with a full permutation census")
{
    for (int n = 1; n <= 7; ++n) {
        CHECK(second_moment_oracle(n) == second_moment_by_census(n));
    }
}

TEST_CASE("covariance closed form")
{
    CHECK(covariance_y(3) ==
          from_rows({{R(1), R(0), R(-1, 3)}, {R(0), R(1, 4), R(-1, 6)}, {R(-1, 3), R(-1, 6), R(2, 9)}}));
    CHECK(covariance_y(1) == from_rows({{R(0)}}));
    CHECK(covariance_y(4)(1, 1) == R(1, 2));
    CHECK(covariance_y(5) == covariance_oracle(5));
    for (int n = 1; n <= 15; ++n) {
        const auto cov = covariance_y(n);
        CHECK(cov == covariance_oracle(n));
        CHECK(cov.is_symmetric());
        Rational weighted;
        for (int i = 1; i <= n; ++i) {
            CHECK(cov(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(i - 1)).sign() >= 0);
            for (int j = 1; j <= n; ++j) {
                weighted += Rational(static_cast<long>(i) * j) * cov(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
            }
        }
        CHECK(weighted.is_zero());
    }
}

TEST_CASE("moment report and oracle comparison")
{
    const auto report = moment_report(6);
    CHECK(report.second_moment == report.a_matrix + report.b_matrix);
    CHECK(report.covariance == report.second_moment - outer(report.expectation, report.expectation));
    for (int n = 1; n <= 12; ++n) {
        CHECK(verify_moments_against_oracle(n).empty());
    }
}
