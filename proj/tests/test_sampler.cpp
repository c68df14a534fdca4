#include <doctest.h>

#include <array>
#include <cmath>
#include <map>

#include "partdist/distribution.hpp"
#include "partdist/sampler.hpp"

using namespace partdist;

namespace {

// Fisher-Yates without its final swap (i = 1): half the permutations of n are
// unreachable, which distorts the cycle-type distribution.
void biased_shuffle(std::span<std::uint32_t> perm, Xoshiro256& rng)
{
    for (std::size_t i = perm.size(); i-- > 2;) {
        std::swap(perm[i], perm[rng.bounded(i + 1)]);
    }
}

double frequency_z(const SampleRun& run, const Partition& p)
{
    const auto it = run.counts.find(p);
    const double observed = it == run.counts.end() ? 0.0 : static_cast<double>(it->second);
    const double t = static_cast<double>(run.trials);
    const double prob = pmf_of(p).to_double();
    return (observed / t - prob) / std::sqrt(prob * (1 - prob) / t);
}

} // namespace

TEST_CASE("splitmix64 and xoshiro256** reference outputs")
{
    SplitMix64 sm(0);
    CHECK(sm.next() == 0xE220A8397B1DCDAFULL);

    auto rng = Xoshiro256::from_state({1, 2, 3, 4});
    CHECK(rng.next() == 11520ULL);
    CHECK(rng.next() == 0ULL);
    CHECK(rng.next() == 1509978240ULL);
    CHECK(rng.next() == 1215971899390074240ULL);

    // seed 42, stream 0, computed by an independent script
    Xoshiro256 seeded(42, 0);
    CHECK(seeded.next() == 6311691636652781876ULL);
    CHECK(seeded.next() == 9863815971427279807ULL);
    CHECK(seeded.next() == 18194784782511515241ULL);
    CHECK(seeded.next() == 16156633455352978205ULL);

    CHECK(Xoshiro256(42, 1).next() != Xoshiro256(42, 0).next());
}

TEST_CASE("bounded draws are in range and uniform")
{
    Xoshiro256 rng(5);
    constexpr int kBound = 7;
    constexpr int kDraws = 70000;
    std::array<int, kBound> counts{};
    for (int k = 0; k < kDraws; ++k) {
        const auto v = rng.bounded(kBound);
        REQUIRE(v < kBound);
        ++counts[v];
    }
    double stat = 0;
    for (int c : counts) {
        const double e = kDraws / static_cast<double>(kBound);
        stat += (c - e) * (c - e) / e;
    }
    CHECK(stat < chi_square_critical_999(kBound - 1));
}

TEST_CASE("cycle decomposition")
{
    const std::vector<std::uint32_t> perm = {1, 2, 0, 4, 3};
    CHECK(cycle_lengths(perm) == std::vector<int>{3, 2});
    const std::vector<std::uint32_t> identity = {0, 1, 2, 3};
    CHECK(cycle_lengths(identity) == std::vector<int>{1, 1, 1, 1});
}

TEST_CASE("n = 1 always gives (1)")
{
    Xoshiro256 rng(3);
    for (int k = 0; k < 10; ++k) {
        CHECK(random_cycle_type(1, rng) == Partition({1}));
    }
}

TEST_CASE("every permutation of 3 letters is equally likely")
{
    int excursions = 0;
    for (std::uint64_t seed = 1; seed <= 10; ++seed) {
        Xoshiro256 rng(seed);
        std::map<std::vector<std::uint32_t>, int> counts;
        constexpr int kTrials = 600000;
        std::vector<std::uint32_t> perm(3);
        for (int t = 0; t < kTrials; ++t) {
            perm = {0, 1, 2};
            fisher_yates_shuffle(perm, rng);
            ++counts[perm];
        }
        REQUIRE(counts.size() == 6);
        const double p = 1.0 / 6.0;
        const double se = std::sqrt(p * (1 - p) / kTrials);
        for (const auto& [perm_key, c] : counts) {
            if (std::abs(c / static_cast<double>(kTrials) - p) / se > 5) {
                ++excursions;
            }
        }
    }
    CHECK(excursions <= 1);
}

TEST_CASE("cycle type frequencies match the exact pmf")
{
    const auto n3 = empirical_moments({3, 600000, 101, 1});
    CHECK(std::abs(frequency_z(n3, Partition({2, 1}))) < 4);

    const auto n5 = empirical_moments({5, 1000000, 202, 1});
    CHECK(std::abs(frequency_z(n5, Partition({2, 2, 1}))) < 4);

    const auto n4 = empirical_moments({4, 1000000, 303, 1});
    CHECK(std::abs(frequency_z(n4, Partition({2, 1, 1}))) < 4);

    const auto n10 = empirical_moments({10, 1000000, 404, 1});
    REQUIRE(n10.mean_y[6].z);
    CHECK(n10.mean_y[6].exact == Rational(1, 7));
    CHECK(std::abs(*n10.mean_y[6].z) < 4);
    CHECK(n10.max_abs_moment_z() < 4);
}

TEST_CASE("a single trial is a point mass")
{
    const auto run = empirical_moments({6, 1, 9, 1});
    REQUIRE(run.counts.size() == 1);
    CHECK(run.counts.begin()->second == 1);
    const auto cells = run.pmf_cells();
    REQUIRE(cells.size() == 1);
    CHECK(cells[0].exact == pmf_of(cells[0].partition));
}

TEST_CASE("counts sum to trials and runs are reproducible")
{
    const SampleConfig cfg{7, 50000, 77, 1};
    const auto a = empirical_moments(cfg);
    const auto b = empirical_moments(cfg);
    std::uint64_t total = 0;
    for (const auto& [p, c] : a.counts) {
        total += c;
    }
    CHECK(total == cfg.trials);
    CHECK(a.counts == b.counts);
}

TEST_CASE("results do not depend on the worker count")
{
    const auto one = empirical_moments({8, 100000, 1234, 1});
    for (unsigned workers : {2U, 3U, 8U}) {
        const auto many = empirical_moments({8, 100000, 1234, workers});
        CHECK(many.counts == one.counts);
        for (std::size_t k = 0; k < one.mean_x.size(); ++k) {
            CHECK(many.mean_x[k].mean == one.mean_x[k].mean);
        }
    }
}

TEST_CASE("chi-square against the exact pmf")
{
    const auto healthy = chi_square_report(empirical_moments({5, 1000000, 555, 1}));
    CHECK(healthy.status == ChiSquareReport::Status::ok);
    CHECK(healthy.dof == 6);
    CHECK(healthy.critical_value == doctest::Approx(22.457744));
    CHECK(healthy.below_critical);

    const auto biased = chi_square_report(empirical_moments({5, 1000000, 555, 1}, biased_shuffle));
    CHECK(biased.status == ChiSquareReport::Status::ok);
    CHECK_FALSE(biased.below_critical);
}

TEST_CASE("chi-square edge cases")
{
    const auto single = chi_square_report(empirical_moments({1, 100, 1, 1}));
    CHECK(single.status == ChiSquareReport::Status::skipped);
    CHECK(single.dof == 0);
    CHECK_FALSE(single.notice.empty());

    const auto tiny = chi_square_report(empirical_moments({5, 3, 1, 1}));
    CHECK(tiny.status == ChiSquareReport::Status::insufficient_trials);

    // p(10) = 42 cells; the rarest ones must be pooled at 10^4 trials.
    const auto pooled = chi_square_report(empirical_moments({10, 10000, 8, 1}));
    CHECK(pooled.status == ChiSquareReport::Status::ok);
    CHECK(pooled.cells < 42);
}

TEST_CASE("critical values")
{
    CHECK(chi_square_critical_999(1) == doctest::Approx(10.827566));
    CHECK(chi_square_critical_999(200) == doctest::Approx(267.540528).epsilon(1e-6));
    // Wilson-Hilferty beyond the table; scipy gives 268.6948 at dof 201.
    CHECK(chi_square_critical_999(201) == doctest::Approx(268.6948).epsilon(1e-3));
    CHECK_THROWS_AS(chi_square_critical_999(0), std::invalid_argument);
}

TEST_CASE("sampler parameter validation")
{
    CHECK_THROWS_AS(empirical_moments({0, 10, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(empirical_moments({3, 0, 1, 1}), std::invalid_argument);
    CHECK_THROWS_AS(empirical_moments({3, 10, 1, 0}), std::invalid_argument);
}

TEST_CASE("large n skips references that need enumeration")
{
    const auto run = empirical_moments({100, 200, 3, 1});
    CHECK(run.mean_y.size() == 100);
    CHECK(run.mean_y[0].exact == Rational(1));
    CHECK_FALSE(run.mean_x[0].exact.has_value());
    CHECK(chi_square_report(run).status == ChiSquareReport::Status::no_reference);
}
