#include "partdist/sampler.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <stdexcept>
#include <thread>
#include <unordered_map>

#include "partdist/distribution.hpp"
#include "partdist/xmoments.hpp"

namespace partdist {

namespace {

// chi2.ppf(0.999, dof) for dof = 1..200.
constexpr std::array<double, 200> kChiSquare999 = {
    10.827566, 13.815511, 16.266236, 18.466827, 20.515006, 22.457744,
    24.321886, 26.124482, 27.877165, 29.588298, 31.264134, 32.909490,
    34.528179, 36.123274, 37.697298, 39.252355, 40.790217, 42.312396,
    43.820196, 45.314747, 46.797038, 48.267942, 49.728232, 51.178598,
    52.619656, 54.051962, 55.476020, 56.892285, 58.301173, 59.703064,
    61.098306, 62.487219, 63.870099, 65.247217, 66.618829, 67.985168,
    69.346452, 70.702887, 72.054663, 73.401958, 74.744938, 76.083763,
    77.418578, 78.749524, 80.076732, 81.400326, 82.720423, 84.037134,
    85.350565, 86.660815, 87.967980, 89.272151, 90.573412, 91.871847,
    93.167533, 94.460545, 95.750954, 97.038829, 98.324234, 99.607233,
    100.887885, 102.166248, 103.442377, 104.716325, 105.988143, 107.257880,
    108.525582, 109.791296, 111.055066, 112.316932, 113.576936, 114.835117,
    116.091513, 117.346161, 118.599095, 119.850350, 121.099959, 122.347954,
    123.594366, 124.839224, 126.082558, 127.324397, 128.564766, 129.803693,
    131.041204, 132.277323, 133.512074, 134.745481, 135.977567, 137.208354,
    138.437864, 139.666117, 140.893134, 142.118935, 143.343540, 144.566966,
    145.789233, 147.010358, 148.230359, 149.449253, 150.667056, 151.883784,
    153.099453, 154.314080, 155.527677, 156.740261, 157.951845, 159.162444,
    160.372071, 161.580740, 162.788463, 163.995253, 165.201123, 166.406085,
    167.610151, 168.813332, 170.015640, 171.217086, 172.417682, 173.617436,
    174.816361, 176.014467, 177.211763, 178.408259, 179.603965, 180.798891,
    181.993045, 183.186437, 184.379076, 185.570970, 186.762129, 187.952559,
    189.142271, 190.331271, 191.519567, 192.707169, 193.894082, 195.080315,
    196.265875, 197.450770, 198.635005, 199.818590, 201.001529, 202.183831,
    203.365501, 204.546546, 205.726973, 206.906787, 208.085996, 209.264605,
    210.442620, 211.620047, 212.796891, 213.973160, 215.148857, 216.323989,
    217.498561, 218.672578, 219.846046, 221.018970, 222.191355, 223.363205,
    224.534526, 225.705324, 226.875601, 228.045364, 229.214616, 230.383363,
    231.551609, 232.719359, 233.886616, 235.053385, 236.219670, 237.385476,
    238.550806, 239.715665, 240.880057, 242.043985, 243.207454, 244.370467,
    245.533029, 246.695142, 247.856811, 249.018039, 250.178830, 251.339187,
    252.499114, 253.658615, 254.817692, 255.976349, 257.134589, 258.292416,
    259.449833, 260.606843, 261.763449, 262.919654, 264.075461, 265.230874,
    266.385895, 267.540528
};

struct PartsHash {
    std::size_t operator()(const std::vector<int>& parts) const noexcept
    {
        std::uint64_t h = 0xCBF29CE484222325ULL;
        for (int p : parts) {
            h ^= static_cast<std::uint64_t>(p);
            h *= 0x100000001B3ULL;
        }
        return static_cast<std::size_t>(h);
    }
};

using Histogram = std::unordered_map<std::vector<int>, std::uint64_t, PartsHash>;

void sample_blocks(const SampleConfig& cfg, const ShuffleFn& shuffle, unsigned worker, Histogram& out)
{
    CycleTypeSampler sampler(cfg.n, shuffle);
    const std::uint64_t blocks = (cfg.trials + kTrialsPerStream - 1) / kTrialsPerStream;
    std::vector<int> key;
    for (std::uint64_t b = worker; b < blocks; b += cfg.workers) {
        Xoshiro256 rng(cfg.seed, b);
        const std::uint64_t end = std::min(cfg.trials, (b + 1) * kTrialsPerStream);
        for (std::uint64_t t = b * kTrialsPerStream; t < end; ++t) {
            const auto cycles = sampler.draw(rng);
            key.assign(cycles.begin(), cycles.end());
            ++out[key];
        }
    }
}

double z_score(double mean, const Rational& exact, const Rational& variance, std::uint64_t trials)
{
    const double diff = mean - exact.to_double();
    if (variance.is_zero()) {
        return diff == 0 ? 0.0 : std::copysign(INFINITY, diff);
    }
    return diff / std::sqrt(variance.to_double() / static_cast<double>(trials));
}

// Summarizes one component from its weighted first and second power sums.
MomentEstimate summarize(std::string quantity, int index, long double sum, long double sum_sq, std::uint64_t trials)
{
    MomentEstimate e;
    e.quantity = std::move(quantity);
    e.index = index;
    const long double t = static_cast<long double>(trials);
    const long double mean = sum / t;
    e.mean = static_cast<double>(mean);
    if (trials > 1) {
        const long double var = std::max(0.0L, (sum_sq - t * mean * mean) / (t - 1));
        e.standard_error = static_cast<double>(std::sqrt(var / t));
    }
    return e;
}

} // namespace

void fisher_yates_shuffle(std::span<std::uint32_t> perm, Xoshiro256& rng)
{
    for (std::size_t i = perm.size(); i-- > 1;) {
        std::swap(perm[i], perm[rng.bounded(i + 1)]);
    }
}

std::vector<int> cycle_lengths(std::span<const std::uint32_t> perm)
{
    std::vector<char> visited(perm.size(), 0);
    std::vector<int> out;
    for (std::size_t start = 0; start < perm.size(); ++start) {
        if (visited[start]) {
            continue;
        }
        int length = 0;
        for (std::size_t k = start; !visited[k]; k = perm[k]) {
            visited[k] = 1;
            ++length;
        }
        out.push_back(length);
    }
    std::sort(out.begin(), out.end(), std::greater<>());
    return out;
}

CycleTypeSampler::CycleTypeSampler(int n, ShuffleFn shuffle)
    : shuffle_(std::move(shuffle))
    , perm_(static_cast<std::size_t>(n))
    , visited_(static_cast<std::size_t>(n))
{
    if (n < 1) {
        throw std::invalid_argument("n must be at least 1");
    }
}

std::span<const int> CycleTypeSampler::draw(Xoshiro256& rng)
{
    for (std::size_t k = 0; k < perm_.size(); ++k) {
        perm_[k] = static_cast<std::uint32_t>(k);
    }
    shuffle_(perm_, rng);
    std::fill(visited_.begin(), visited_.end(), 0);
    cycles_.clear();
    for (std::size_t start = 0; start < perm_.size(); ++start) {
        if (visited_[start]) {
            continue;
        }
        int length = 0;
        for (std::size_t k = start; !visited_[k]; k = perm_[k]) {
            visited_[k] = 1;
            ++length;
        }
        cycles_.push_back(length);
    }
    std::sort(cycles_.begin(), cycles_.end(), std::greater<>());
    return cycles_;
}

Partition random_cycle_type(int n, Xoshiro256& rng)
{
    CycleTypeSampler sampler(n);
    const auto cycles = sampler.draw(rng);
    return Partition(std::vector<int>(cycles.begin(), cycles.end()));
}

std::vector<PmfCell> SampleRun::pmf_cells() const
{
    std::vector<PmfCell> out;
    out.reserve(counts.size());
    const double t = static_cast<double>(trials);
    for (const auto& [partition, count] : counts) {
        PmfCell cell{partition, count, pmf_of(partition), 0};
        const double p = cell.exact.to_double();
        const double se = std::sqrt(p * (1 - p) / t);
        const double diff = static_cast<double>(count) / t - p;
        cell.z = se > 0 ? diff / se : (diff == 0 ? 0.0 : std::copysign(INFINITY, diff));
        out.push_back(std::move(cell));
    }
    return out;
}

double SampleRun::max_abs_moment_z() const
{
    double worst = 0;
    for (const auto& e : mean_y) {
        if (e.z) {
            worst = std::max(worst, std::abs(*e.z));
        }
    }
    if (!mean_x.empty() && mean_x.front().z) {
        worst = std::max(worst, std::abs(*mean_x.front().z));
    }
    return worst;
}

SampleRun empirical_moments(const SampleConfig& cfg, const ShuffleFn& shuffle)
{
    if (cfg.n < 1 || cfg.n > kSamplerMaxN) {
        throw std::invalid_argument("sampler n must lie in [1, " + std::to_string(kSamplerMaxN) + "]");
    }
    if (cfg.trials < 1) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (cfg.workers < 1) {
        throw std::invalid_argument("workers must be at least 1");
    }

    std::vector<Histogram> partial(cfg.workers);
    if (cfg.workers == 1) {
        sample_blocks(cfg, shuffle, 0, partial[0]);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < cfg.workers; ++w) {
            threads.emplace_back([&, w] { sample_blocks(cfg, shuffle, w, partial[w]); });
        }
    }

    SampleRun run;
    run.n = cfg.n;
    run.trials = cfg.trials;
    run.seed = cfg.seed;
    for (const Histogram& h : partial) {
        for (const auto& [parts, count] : h) {
            run.counts[Partition(parts)] += count;
        }
    }

    const auto dim = static_cast<std::size_t>(cfg.n);
    std::vector<long double> y_sum(dim), y_sq(dim), x_sum(dim), x_sq(dim);
    for (const auto& [partition, count] : run.counts) {
        const auto c = static_cast<long double>(count);
        const auto& parts = partition.parts();
        for (std::size_t k = 0; k < parts.size(); ++k) {
            const long double part = parts[k];
            x_sum[k] += c * part;
            x_sq[k] += c * part * part;
        }
        for (std::size_t k = 0; k < parts.size();) {
            std::size_t run_end = k;
            while (run_end < parts.size() && parts[run_end] == parts[k]) {
                ++run_end;
            }
            const long double m = static_cast<long double>(run_end - k);
            const auto slot = static_cast<std::size_t>(parts[k] - 1);
            y_sum[slot] += c * m;
            y_sq[slot] += c * m * m;
            k = run_end;
        }
    }

    const RationalMatrix cov_diag_source = covariance_y(cfg.n);
    for (int i = 1; i <= cfg.n; ++i) {
        const auto k = static_cast<std::size_t>(i - 1);
        MomentEstimate e = summarize("Y", i, y_sum[k], y_sq[k], cfg.trials);
        e.exact = Rational(1L, static_cast<long>(i));
        e.z = z_score(e.mean, *e.exact, cov_diag_source(k, k), cfg.trials);
        run.mean_y.push_back(std::move(e));
    }

    std::optional<XExpectationTable> exact_x;
    std::vector<Rational> exact_x_sq;
    if (cfg.n <= kExactReferenceMaxN) {
        exact_x = x_expectations(cfg.n);
        exact_x_sq.assign(dim, Rational(0));
        std::vector<BigInt> weighted(dim);
        for_each_partition(cfg.n, [&](std::span<const int> parts) {
            const BigInt count = count_permutations_of_type(parts);
            for (std::size_t k = 0; k < parts.size(); ++k) {
                weighted[k] += count * (static_cast<long>(parts[k]) * parts[k]);
            }
        });
        const BigInt total = factorial(static_cast<unsigned>(cfg.n));
        for (std::size_t k = 0; k < dim; ++k) {
            exact_x_sq[k] = Rational(weighted[k], total);
        }
    }
    for (int j = 1; j <= cfg.n; ++j) {
        const auto k = static_cast<std::size_t>(j - 1);
        MomentEstimate e = summarize("X", j, x_sum[k], x_sq[k], cfg.trials);
        if (exact_x) {
            e.exact = exact_x->value(j);
            const Rational variance = exact_x_sq[k] - *e.exact * *e.exact;
            e.z = z_score(e.mean, *e.exact, variance, cfg.trials);
        }
        run.mean_x.push_back(std::move(e));
    }
    return run;
}

std::string to_string(ChiSquareReport::Status status)
{
    switch (status) {
    case ChiSquareReport::Status::ok:
        return "ok";
    case ChiSquareReport::Status::skipped:
        return "skipped";
    case ChiSquareReport::Status::insufficient_trials:
        return "insufficient_trials";
    case ChiSquareReport::Status::no_reference:
        return "no_reference";
    }
    return "unknown";
}

double chi_square_critical_999(int dof)
{
    if (dof < 1) {
        throw std::invalid_argument("chi-square dof must be positive");
    }
    if (dof <= static_cast<int>(kChiSquare999.size())) {
        return kChiSquare999[static_cast<std::size_t>(dof - 1)];
    }
    // Wilson-Hilferty with the standard normal 0.999 quantile.
    constexpr double z = 3.090232306167813;
    const double k = dof;
    const double h = 2.0 / (9.0 * k);
    return k * std::pow(1.0 - h + z * std::sqrt(h), 3);
}

ChiSquareReport chi_square_report(const SampleRun& run)
{
    ChiSquareReport report;
    if (run.n > kExactReferenceMaxN) {
        report.status = ChiSquareReport::Status::no_reference;
        report.notice = "exact pmf not enumerated for n > " + std::to_string(kExactReferenceMaxN);
        return report;
    }

    struct Cell {
        double probability;
        double observed;
    };
    std::vector<Cell> cells;
    for (const Partition& p : enumerate_partitions(run.n)) {
        const auto it = run.counts.find(p);
        cells.push_back({pmf_of(p).to_double(), it == run.counts.end() ? 0.0 : static_cast<double>(it->second)});
    }
    std::stable_sort(cells.begin(), cells.end(),
                     [](const Cell& a, const Cell& b) { return a.probability < b.probability; });

    const double trials = static_cast<double>(run.trials);
    constexpr double kMinExpected = 5.0;
    std::vector<Cell> pooled;
    Cell open{0, 0};
    for (const Cell& c : cells) {
        open.probability += c.probability;
        open.observed += c.observed;
        if (open.probability * trials >= kMinExpected) {
            pooled.push_back(open);
            open = {0, 0};
        }
    }
    if (open.probability > 0) {
        if (pooled.empty()) {
            report.status = ChiSquareReport::Status::insufficient_trials;
            report.notice = "expected count " + std::to_string(open.probability * trials) +
                            " is below 5 even with every cell pooled";
            return report;
        }
        pooled.back().probability += open.probability;
        pooled.back().observed += open.observed;
    }

    report.cells = static_cast<int>(pooled.size());
    report.dof = report.cells - 1;
    if (report.dof < 1) {
        report.status = ChiSquareReport::Status::skipped;
        report.notice = "a single cell leaves no degrees of freedom";
        return report;
    }
    for (const Cell& c : pooled) {
        const double expected = c.probability * trials;
        report.statistic += (c.observed - expected) * (c.observed - expected) / expected;
    }
    report.critical_value = chi_square_critical_999(report.dof);
    report.critical_from_table = report.dof <= static_cast<int>(kChiSquare999.size());
    report.below_critical = report.statistic < report.critical_value;
    report.status = ChiSquareReport::Status::ok;
    return report;
}

} // namespace partdist
