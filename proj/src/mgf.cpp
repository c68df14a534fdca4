#include "partdist/mgf.hpp"

#include <stdexcept>
#include <string>

#include "partdist/distribution.hpp"
#include "partdist/partitions.hpp"

namespace partdist {

namespace {

void require_index(int n, int i)
{
    if (i < 1 || i > n) {
        throw std::invalid_argument("variable index " + std::to_string(i) + " outside [1, " +
                                    std::to_string(n) + "]");
    }
}

} // namespace

Rational SymbolicMGF::at_zero() const
{
    Rational sum;
    for (const auto& [exponent, weight] : terms) {
        sum += weight;
    }
    return sum;
}

SymbolicMGF build_mgf(int n)
{
    SymbolicMGF out;
    out.n = n;
    for (const Partition& p : enumerate_partitions(n)) {
        out.terms.emplace(to_multiplicity(p).counts(), pmf_of(p));
    }
    return out;
}

SymbolicMGF partial_derivative(const SymbolicMGF& m, int i)
{
    // M^(0) is the constant 1, so every derivative of it is the empty sum.
    if (m.n == 0 && i >= 1) {
        return SymbolicMGF{0, {}};
    }
    require_index(m.n, i);
    SymbolicMGF out;
    out.n = m.n;
    for (const auto& [exponent, weight] : m.terms) {
        const int power = exponent[static_cast<std::size_t>(i - 1)];
        if (power != 0) {
            out.terms.emplace(exponent, weight * Rational(power));
        }
    }
    return out;
}

SymbolicMGF shifted_lower_mgf(int n, int i)
{
    SymbolicMGF out;
    out.n = n;
    if (n - i < 0) {
        return out;
    }
    const Rational scale(1L, static_cast<long>(i));
    for (const auto& [exponent, weight] : build_mgf(n - i).terms) {
        ExponentVector lifted = exponent;
        lifted.resize(static_cast<std::size_t>(n), 0);
        ++lifted[static_cast<std::size_t>(i - 1)];
        out.terms.emplace(std::move(lifted), weight * scale);
    }
    return out;
}

RecursionReport verify_theorem1(int n, int i)
{
    require_index(n, i);
    const SymbolicMGF left = partial_derivative(build_mgf(n), i);
    const SymbolicMGF right = shifted_lower_mgf(n, i);

    RecursionReport report;
    report.n = n;
    report.i = i;
    for (const auto& [exponent, weight] : left.terms) {
        const auto it = right.terms.find(exponent);
        const Rational other = it == right.terms.end() ? Rational(0) : it->second;
        if (other != weight) {
            report.mismatches.push_back({exponent, weight, other});
        }
    }
    for (const auto& [exponent, weight] : right.terms) {
        if (!left.terms.contains(exponent)) {
            report.mismatches.push_back({exponent, Rational(0), weight});
        }
    }
    report.ok = report.mismatches.empty();
    return report;
}

Rational expectation_via_mgf(int n, int i)
{
    require_index(n, i);
    return partial_derivative(build_mgf(n), i).at_zero();
}

Rational mixed_second_moment_via_mgf(int n, int i, int j)
{
    require_index(n, i);
    require_index(n, j);
    return partial_derivative(partial_derivative(build_mgf(n), i), j).at_zero();
}

} // namespace partdist
