#include "partdist/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace partdist {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (parts_[k] < 1) {
            throw std::invalid_argument("partition parts must be positive");
        }
        if (k > 0 && parts_[k] > parts_[k - 1]) {
            throw std::invalid_argument("partition parts must be weakly decreasing");
        }
    }
    size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::multiplicity(int part) const
{
    // parts_ is sorted descending
    const auto range = std::equal_range(parts_.begin(), parts_.end(), part, std::greater<>());
    return static_cast<int>(range.second - range.first);
}

std::string Partition::to_string() const
{
    std::string out = "(";
    for (std::size_t k = 0; k < parts_.size(); ++k) {
        if (k > 0) {
            out += ',';
        }
        out += std::to_string(parts_[k]);
    }
    out += ')';
    return out;
}

MultiplicityVector::MultiplicityVector(std::vector<int> counts) : counts_(std::move(counts))
{
    long weighted = 0;
    for (std::size_t k = 0; k < counts_.size(); ++k) {
        if (counts_[k] < 0) {
            throw std::invalid_argument("multiplicities must be non-negative");
        }
        weighted += static_cast<long>(k + 1) * counts_[k];
    }
    if (weighted != static_cast<long>(counts_.size())) {
        throw std::invalid_argument("multiplicity vector of length " + std::to_string(counts_.size()) +
                                    " has weighted sum " + std::to_string(weighted));
    }
}

PartitionVector::PartitionVector(std::vector<int> entries) : entries_(std::move(entries))
{
    long total = 0;
    for (std::size_t k = 0; k < entries_.size(); ++k) {
        if (entries_[k] < 0 || (k > 0 && entries_[k] > entries_[k - 1])) {
            throw std::invalid_argument("partition vector must be non-negative and non-increasing");
        }
        total += entries_[k];
    }
    if (total != static_cast<long>(entries_.size())) {
        throw std::invalid_argument("partition vector entries must sum to its length");
    }
}

PartitionGenerator::PartitionGenerator(int n) : n_(n)
{
    if (n < 0) {
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }
    parts_.reserve(static_cast<std::size_t>(n));
}

bool PartitionGenerator::next()
{
    if (done_) {
        return false;
    }
    if (!started_) {
        started_ = true;
        if (n_ > 0) {
            parts_.push_back(n_);
        }
        return true;
    }
    int ones = 0;
    while (!parts_.empty() && parts_.back() == 1) {
        parts_.pop_back();
        ++ones;
    }
    if (parts_.empty()) {
        done_ = true;
        return false;
    }
    const int x = --parts_.back();
    int rest = ones + 1;
    while (rest >= x) {
        parts_.push_back(x);
        rest -= x;
    }
    if (rest > 0) {
        parts_.push_back(rest);
    }
    return true;
}

PartitionRange::iterator::iterator(int n) : gen_(n), at_end_(false)
{
    load();
}

PartitionRange::iterator& PartitionRange::iterator::operator++()
{
    load();
    return *this;
}

void PartitionRange::iterator::load()
{
    if (!gen_.next()) {
        at_end_ = true;
        return;
    }
    const auto parts = gen_.current();
    current_ = Partition(std::vector<int>(parts.begin(), parts.end()));
}

PartitionRange enumerate_partitions(int n)
{
    if (n < 0) {
        throw std::invalid_argument("cannot enumerate partitions of a negative integer");
    }
    return PartitionRange(n);
}

std::vector<Partition> all_partitions(int n)
{
    std::vector<Partition> out;
    for (const Partition& p : enumerate_partitions(n)) {
        out.push_back(p);
    }
    return out;
}

MultiplicityVector to_multiplicity(const Partition& p)
{
    std::vector<int> counts(static_cast<std::size_t>(p.size()), 0);
    for (int part : p.parts()) {
        ++counts[static_cast<std::size_t>(part - 1)];
    }
    return MultiplicityVector(std::move(counts));
}

Partition from_multiplicity(const MultiplicityVector& m)
{
    std::vector<int> parts;
    for (int j = m.size(); j >= 1; --j) {
        parts.insert(parts.end(), static_cast<std::size_t>(m(j)), j);
    }
    return Partition(std::move(parts));
}

PartitionVector to_partition_vector(const Partition& p)
{
    std::vector<int> entries = p.parts();
    entries.resize(static_cast<std::size_t>(p.size()), 0);
    return PartitionVector(std::move(entries));
}

Partition delete_part(const Partition& p, int i)
{
    std::vector<int> parts = p.parts();
    const auto it = std::find(parts.begin(), parts.end(), i);
    if (it == parts.end()) {
        throw std::invalid_argument(std::to_string(i) + " is not a part of " + p.to_string());
    }
    parts.erase(it);
    return Partition(std::move(parts));
}

Partition insert_part(const Partition& p, int i)
{
    if (i < 1) {
        throw std::invalid_argument("inserted part must be positive");
    }
    std::vector<int> parts = p.parts();
    const auto at = std::upper_bound(parts.begin(), parts.end(), i, std::greater<>());
    parts.insert(at, i);
    return Partition(std::move(parts));
}

BigInt count_permutations_of_type(std::span<const int> parts)
{
    int n = 0;
    BigInt denominator = 1;
    std::size_t k = 0;
    while (k < parts.size()) {
        const int part = parts[k];
        unsigned run = 0;
        while (k < parts.size() && parts[k] == part) {
            ++run;
            ++k;
        }
        n += part * static_cast<int>(run);
        denominator *= pow(BigInt(part), run) * factorial(run);
    }
    return factorial(static_cast<unsigned>(n)) / denominator;
}

BigInt count_permutations_of_type(const Partition& p)
{
    return count_permutations_of_type(std::span<const int>(p.parts()));
}

} // namespace partdist
