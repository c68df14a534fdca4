#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "partdist/exactnum.hpp"
#include "partdist/partitions.hpp"
#include "partdist/rng.hpp"

namespace partdist {

/// Rearranges perm in place. The sampler resets perm to the identity before
/// every call.
using ShuffleFn = std::function<void(std::span<std::uint32_t>, Xoshiro256&)>;

/// Standard Fisher-Yates: for i = n-1 down to 1 swap perm[i] with a uniform
/// perm[0..i].
void fisher_yates_shuffle(std::span<std::uint32_t> perm, Xoshiro256& rng);

/// Cycle lengths of a permutation of {0..n-1}, sorted decreasingly.
std::vector<int> cycle_lengths(std::span<const std::uint32_t> perm);

/// Reusable buffers for drawing cycle types of random permutations.
class CycleTypeSampler {
public:
    explicit CycleTypeSampler(int n, ShuffleFn shuffle = fisher_yates_shuffle);

    /// Cycle type of one random permutation, weakly decreasing. Valid until
    /// the next call.
    std::span<const int> draw(Xoshiro256& rng);

private:
    ShuffleFn shuffle_;
    std::vector<std::uint32_t> perm_;
    std::vector<char> visited_;
    std::vector<int> cycles_;
};

Partition random_cycle_type(int n, Xoshiro256& rng);

/// Largest n for which exact references that need enumeration (pmf over all
/// partitions, E(X_j)) are computed during sampling.
inline constexpr int kExactReferenceMaxN = 60;
inline constexpr int kSamplerMaxN = 1'000'000;
/// Trials per RNG stream. Block b of trials always uses stream b, so results
/// do not depend on how blocks are spread over workers.
inline constexpr std::uint64_t kTrialsPerStream = 1 << 14;

struct SampleConfig {
    int n = 1;
    std::uint64_t trials = 1;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct MomentEstimate {
    std::string quantity; // "Y" or "X"
    int index = 0;        // 1-based component
    double mean = 0;
    double standard_error = 0; // sample standard deviation / sqrt(trials)
    std::optional<Rational> exact;
    std::optional<double> z; // (mean - exact) / sqrt(exact variance / trials)
};

struct PmfCell {
    Partition partition;
    std::uint64_t count = 0;
    Rational exact;
    double z = 0; // binomial z-score of the observed frequency
};

struct SampleRun {
    int n = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::map<Partition, std::uint64_t, ReverseLexOrder> counts;
    std::vector<MomentEstimate> mean_y;
    std::vector<MomentEstimate> mean_x;

    std::vector<PmfCell> pmf_cells() const;
    /// Largest |z| over mean_y and mean_x(1).
    double max_abs_moment_z() const;
};

/// Draws cfg.trials cycle types and summarizes them against exact values.
/// Throws std::invalid_argument for n outside [1, kSamplerMaxN], zero trials
/// or zero workers.
SampleRun empirical_moments(const SampleConfig& cfg, const ShuffleFn& shuffle = fisher_yates_shuffle);

struct ChiSquareReport {
    enum class Status { ok, skipped, insufficient_trials, no_reference };

    Status status = Status::skipped;
    double statistic = 0;
    int dof = 0;
    int cells = 0; // after pooling
    double critical_value = 0;
    bool critical_from_table = true;
    bool below_critical = false;
    std::string notice;
};

std::string to_string(ChiSquareReport::Status status);

/// Pearson chi-square of the observed cycle types against the exact pmf.
/// Cells with expected count below 5 are pooled, smallest probability first.
ChiSquareReport chi_square_report(const SampleRun& run);

/// 99.9% quantile of the chi-square distribution. Tabulated for dof <= 200,
/// Wilson-Hilferty approximation above.
double chi_square_critical_999(int dof);

} // namespace partdist
