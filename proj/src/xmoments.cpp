#include "partdist/xmoments.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "partdist/partitions.hpp"

namespace partdist {

XExpectationTable x_expectations(int n)
{
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
    XExpectationTable out;
    out.n = n;
    out.scaled.assign(static_cast<std::size_t>(n), BigInt(0));
    for_each_partition(n, [&](std::span<const int> parts) {
        const BigInt count = count_permutations_of_type(parts);
        for (std::size_t k = 0; k < parts.size(); ++k) {
            out.scaled[k] += count * parts[k];
        }
    });
    const BigInt total = factorial(static_cast<unsigned>(n));
    out.values.reserve(out.scaled.size());
    for (const BigInt& s : out.scaled) {
        out.values.emplace_back(s, total);
    }
    return out;
}

std::vector<BigInt> x1_sequence(int max_n)
{
    if (max_n < 1) {
        throw std::invalid_argument("max_n must be at least 1");
    }
    std::vector<BigInt> out;
    for (int n = 1; n <= max_n; ++n) {
        out.push_back(x_expectations(n).scaled_value(1));
    }
    return out;
}

std::vector<BigInt> x2_sequence(int max_n)
{
    if (max_n < 2) {
        throw std::invalid_argument("max_n must be at least 2");
    }
    std::vector<BigInt> out;
    for (int n = 2; n <= max_n; ++n) {
        out.push_back(x_expectations(n).scaled_value(2));
    }
    return out;
}

bool conjecture_applies(int n, int j)
{
    return j >= 1 && j <= 3 && n >= 2 * j + 1;
}

namespace {

void require_conjecture_range(int n, int j)
{
    if (!conjecture_applies(n, j)) {
        throw std::invalid_argument("no closed form for n!E(X_{n-" + std::to_string(j) + "}) at n = " +
                                    std::to_string(n) + " (requires j in 1..3 and n >= 2j+1)");
    }
}

BigInt exact_quotient(const BigInt& numerator, long denominator)
{
    if (numerator % denominator != 0) {
        throw std::logic_error("polynomial form is not integral");
    }
    return numerator / denominator;
}

} // namespace

BigInt conjecture_polynomial_form(int n, int j)
{
    require_conjecture_range(n, j);
    const BigInt x = n;
    switch (j) {
    case 1:
        return exact_quotient(x * x - x + 2, 2);
    case 2:
        return exact_quotient(3 * pow(x, 4) - 10 * pow(x, 3) + 21 * x * x - 14 * x + 24, 24);
    default:
        return exact_quotient(pow(x, 6) - 7 * pow(x, 5) + 23 * pow(x, 4) - 37 * pow(x, 3) + 48 * x * x -
                                  28 * x + 48,
                              48);
    }
}

BigInt conjecture_binomial_form(int n, int j)
{
    require_conjecture_range(n, j);
    const auto c = [n](unsigned k) { return binomial(static_cast<unsigned>(n), k); };
    switch (j) {
    case 1:
        return c(2) + 1;
    case 2:
        return 3 * c(4) + 2 * c(3) + c(2) + 1;
    default:
        return 15 * c(6) + 20 * c(5) + 9 * c(4) + 2 * c(3) + c(2) + 1;
    }
}

BigInt conjecture_closed_form(int n, int j)
{
    const BigInt poly = conjecture_polynomial_form(n, j);
    const BigInt binom = conjecture_binomial_form(n, j);
    if (poly != binom) {
        throw std::logic_error("polynomial and binomial forms disagree at n = " + std::to_string(n));
    }
    return poly;
}

BigInt scaled_tail_expectation(int n, int j)
{
    if (j < 0 || j >= n) {
        throw std::invalid_argument("component n - j must lie in [1, n]");
    }
    return x_expectations(n).scaled_value(n - j);
}

Rational BinomialFit::predict(int n) const
{
    Rational out(1);
    for (const auto& [i, a] : coefficients) {
        out += a * Rational(binomial(static_cast<unsigned>(n), static_cast<unsigned>(i)));
    }
    return out;
}

bool BinomialFit::claims_ok() const
{
    return std::all_of(claims.begin(), claims.end(),
                       [](const CoefficientClaim& c) { return !c.applicable || c.matches; });
}

std::vector<int> default_fit_samples(int j)
{
    std::vector<int> out;
    for (int n = 2 * j + 1; n <= 4 * j - 1; ++n) {
        out.push_back(n);
    }
    return out;
}

BinomialFit fit_binomial_basis(int j, const std::vector<int>& sample_ns, std::optional<std::vector<int>> extra_holdout)
{
    if (j < 1) {
        throw std::invalid_argument("j must be at least 1");
    }
    const std::set<int> distinct(sample_ns.begin(), sample_ns.end());
    const auto unknowns = static_cast<std::size_t>(2 * j - 1);
    if (distinct.size() < unknowns) {
        throw std::invalid_argument("need at least " + std::to_string(unknowns) + " distinct sample values for j = " +
                                    std::to_string(j));
    }
    if (*distinct.begin() < 2 * j + 1) {
        throw std::invalid_argument("sample values must be at least 2j+1 = " + std::to_string(2 * j + 1));
    }

    BinomialFit fit;
    fit.j = j;
    fit.solve_ns.assign(distinct.begin(), std::next(distinct.begin(), static_cast<std::ptrdiff_t>(unknowns)));

    RationalMatrix system(unknowns, unknowns);
    std::vector<Rational> rhs(unknowns);
    for (std::size_t r = 0; r < unknowns; ++r) {
        const auto n = static_cast<unsigned>(fit.solve_ns[r]);
        for (std::size_t c = 0; c < unknowns; ++c) {
            system(r, c) = Rational(binomial(n, static_cast<unsigned>(c + 2)));
        }
        rhs[r] = Rational(scaled_tail_expectation(fit.solve_ns[r], j)) - Rational(1);
    }
    const auto solution = solve_exact(std::move(system), std::move(rhs));
    for (std::size_t c = 0; c < unknowns; ++c) {
        fit.coefficients.emplace(static_cast<int>(c + 2), solution[c]);
    }
    fit.all_positive_integers = std::all_of(solution.begin(), solution.end(),
                                            [](const Rational& a) { return a.is_integer() && a.sign() > 0; });

    std::set<int> check_ns(std::next(distinct.begin(), static_cast<std::ptrdiff_t>(unknowns)), distinct.end());
    if (extra_holdout) {
        check_ns.insert(extra_holdout->begin(), extra_holdout->end());
    } else {
        check_ns.insert(*distinct.rbegin() + 1);
        check_ns.insert(*distinct.rbegin() + 2);
    }
    fit.holdout_ok = true;
    for (int n : check_ns) {
        if (n < 2 * j + 1) {
            throw std::invalid_argument("holdout values must be at least 2j+1");
        }
        HoldoutCheck check{n, fit.predict(n), scaled_tail_expectation(n, j), false};
        check.ok = check.predicted == Rational(check.actual);
        fit.holdout_ok = fit.holdout_ok && check.ok;
        fit.holdout.push_back(std::move(check));
    }

    const auto coefficient = [&](int i) {
        const auto it = fit.coefficients.find(i);
        return it == fit.coefficients.end() ? Rational(0) : it->second;
    };
    const auto claim = [&](std::string name, int index, BigInt expected, bool applicable) {
        CoefficientClaim c{std::move(name), index, std::move(expected), coefficient(index), applicable, false};
        c.matches = c.applicable && c.actual == Rational(c.expected);
        fit.claims.push_back(std::move(c));
    };
    const auto ju = static_cast<unsigned>(j);
    claim("a_2j", 2 * j, double_factorial_odd(ju - 1), true);
    claim("a_2j-1", 2 * j - 1, double_factorial_odd(ju) / 3 - double_factorial_odd(ju - 1), 2 * j - 1 >= 2);
    claim("a_4", 4, 9, j >= 3);
    claim("a_3", 3, 2, 2 * j >= 3);
    claim("a_2", 2, 1, true);
    return fit;
}

std::vector<Rational> monomial_expansion(const BinomialFit& fit)
{
    const std::size_t degree = static_cast<std::size_t>(2 * fit.j);
    std::vector<Rational> out(degree + 1);
    out[0] = Rational(1);
    for (const auto& [i, a] : fit.coefficients) {
        // C(n, i) = n (n-1) ... (n-i+1) / i!
        std::vector<Rational> falling{Rational(1)};
        for (int k = 0; k < i; ++k) {
            std::vector<Rational> next(falling.size() + 1);
            for (std::size_t d = 0; d < falling.size(); ++d) {
                next[d + 1] += falling[d];
                next[d] -= falling[d] * Rational(k);
            }
            falling = std::move(next);
        }
        const Rational scale = a / Rational(factorial(static_cast<unsigned>(i)));
        for (std::size_t d = 0; d < falling.size(); ++d) {
            out[d] += falling[d] * scale;
        }
    }
    while (out.size() > 1 && out.back().is_zero()) {
        out.pop_back();
    }
    return out;
}

AsymptoticsReport leading_asymptotics_check(const BinomialFit& fit)
{
    const auto poly = monomial_expansion(fit);
    const int j = fit.j;
    const auto ju = static_cast<unsigned>(j);

    AsymptoticsReport r;
    r.j = j;
    r.degree = static_cast<int>(poly.size()) - 1;
    r.leading = poly.back();
    r.expected_leading = Rational(BigInt(1), factorial(ju) * pow(BigInt(2), ju));
    r.leading_matches = r.degree == 2 * j && r.leading == r.expected_leading;
    r.next = r.degree >= 1 ? poly[poly.size() - 2] : Rational(0);
    r.claimed_next = Rational(BigInt(2 * j + 1), 3 * pow(BigInt(2), ju) * factorial(ju - 1));
    r.next_matches = r.degree == 2 * j && r.next == r.claimed_next;
    r.next_matches_magnitude = r.degree == 2 * j && r.next.abs() == r.claimed_next;
    return r;
}

AsymptoticsReport leading_asymptotics_check(int j)
{
    return leading_asymptotics_check(fit_binomial_basis(j, default_fit_samples(j)));
}

} // namespace partdist
