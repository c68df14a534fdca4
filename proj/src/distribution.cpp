#include "partdist/distribution.hpp"

#include <stdexcept>
#include <utility>

namespace partdist {

namespace {

void require_positive(int n)
{
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
}

// (part, multiplicity) runs of a weakly decreasing part list.
std::vector<std::pair<int, int>> runs_of(std::span<const int> parts)
{
    std::vector<std::pair<int, int>> runs;
    for (int part : parts) {
        if (!runs.empty() && runs.back().first == part) {
            ++runs.back().second;
        } else {
            runs.emplace_back(part, 1);
        }
    }
    return runs;
}

std::size_t idx(int one_based) { return static_cast<std::size_t>(one_based - 1); }

} // namespace

Rational pmf_of(std::span<const int> parts)
{
    BigInt denominator = 1;
    for (const auto& [part, count] : runs_of(parts)) {
        denominator *= pow(BigInt(part), static_cast<unsigned>(count)) * factorial(static_cast<unsigned>(count));
    }
    return Rational(BigInt(1), denominator);
}

Rational pmf_of(const Partition& p)
{
    return pmf_of(std::span<const int>(p.parts()));
}

Rational Pmf::total() const
{
    Rational sum;
    for (const auto& e : entries) {
        sum += e.probability;
    }
    return sum;
}

Pmf pmf_table(int n)
{
    Pmf out;
    out.n = n;
    for (const Partition& p : enumerate_partitions(n)) {
        out.entries.push_back({p, pmf_of(p)});
    }
    return out;
}

FineIdentityCheck verify_fine_identity(int n)
{
    FineIdentityCheck out;
    out.n = n;
    for_each_partition(n, [&](std::span<const int> parts) { out.sum += pmf_of(parts); });
    out.holds = out.sum == Rational(1);
    return out;
}

std::vector<Rational> expectation_y(int n)
{
    require_positive(n);
    std::vector<Rational> out;
    out.reserve(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        out.emplace_back(1L, static_cast<long>(i));
    }
    return out;
}

std::vector<Rational> expectation_y_oracle(int n)
{
    require_positive(n);
    std::vector<Rational> out(static_cast<std::size_t>(n));
    for_each_partition(n, [&](std::span<const int> parts) {
        const Rational weight = pmf_of(parts);
        for (const auto& [part, count] : runs_of(parts)) {
            out[idx(part)] += weight * Rational(count);
        }
    });
    return out;
}

SecondMomentSplit second_moment_decomposition(int n, ABoundary boundary)
{
    require_positive(n);
    SecondMomentSplit out{RationalMatrix::square(static_cast<std::size_t>(n)),
                          RationalMatrix::square(static_cast<std::size_t>(n))};
    for (int i = 1; i <= n; ++i) {
        out.b(idx(i), idx(i)) = Rational(1L, static_cast<long>(i));
        for (int j = i; j <= n; ++j) {
            const bool nonzero = boundary == ABoundary::inclusive ? i + j <= n : j < n - i;
            const Rational a = nonzero ? Rational(1L, static_cast<long>(i) * j) : Rational(0);
            out.a(idx(i), idx(j)) = a;
            out.a(idx(j), idx(i)) = a;
        }
    }
    return out;
}

RationalMatrix second_moment_oracle(int n)
{
    require_positive(n);
    const auto dim = static_cast<std::size_t>(n);
    std::vector<BigInt> weighted(dim * dim);
    for_each_partition(n, [&](std::span<const int> parts) {
        const BigInt count = count_permutations_of_type(parts);
        const auto runs = runs_of(parts);
        for (const auto& [pi, mi] : runs) {
            for (const auto& [pj, mj] : runs) {
                weighted[idx(pi) * dim + idx(pj)] += count * (static_cast<long>(mi) * mj);
            }
        }
    });
    const BigInt total = factorial(static_cast<unsigned>(n));
    RationalMatrix out = RationalMatrix::square(dim);
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            out(r, c) = Rational(weighted[r * dim + c], total);
        }
    }
    return out;
}

RationalMatrix covariance_y(int n)
{
    require_positive(n);
    RationalMatrix out = RationalMatrix::square(static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const long li = i;
        out(idx(i), idx(i)) = 2 * i <= n ? Rational(1L, li) : Rational(li - 1, li * li);
        for (int j = i + 1; j <= n; ++j) {
            const Rational v = j <= n - i ? Rational(0) : Rational(-1L, li * j);
            out(idx(i), idx(j)) = v;
            out(idx(j), idx(i)) = v;
        }
    }
    return out;
}

RationalMatrix covariance_oracle(int n)
{
    const auto mean = expectation_y_oracle(n);
    return second_moment_oracle(n) - outer(mean, mean);
}

MomentReport moment_report(int n)
{
    MomentReport out;
    out.n = n;
    out.expectation = expectation_y(n);
    auto split = second_moment_decomposition(n);
    out.second_moment = split.sum();
    out.a_matrix = std::move(split.a);
    out.b_matrix = std::move(split.b);
    out.covariance = covariance_y(n);
    return out;
}

std::vector<OracleMismatch> verify_moments_against_oracle(int n)
{
    const MomentReport closed = moment_report(n);
    const auto mean = expectation_y_oracle(n);
    const auto second = second_moment_oracle(n);
    const auto cov = second - outer(mean, mean);

    std::vector<OracleMismatch> out;
    for (int i = 1; i <= n; ++i) {
        if (closed.expectation[idx(i)] != mean[idx(i)]) {
            out.push_back({"E(Y)", i, 0, closed.expectation[idx(i)], mean[idx(i)]});
        }
    }
    const auto compare = [&](const char* name, const RationalMatrix& lhs, const RationalMatrix& rhs) {
        for (int i = 1; i <= n; ++i) {
            for (int j = 1; j <= n; ++j) {
                if (lhs(idx(i), idx(j)) != rhs(idx(i), idx(j))) {
                    out.push_back({name, i, j, lhs(idx(i), idx(j)), rhs(idx(i), idx(j))});
                }
            }
        }
    };
    compare("E(YY')", closed.second_moment, second);
    compare("Sigma", closed.covariance, cov);
    return out;
}

} // namespace partdist
