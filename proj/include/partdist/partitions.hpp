#pragma once

#include <compare>
#include <cstddef>
#include <iterator>
#include <span>
#include <string>
#include <vector>

#include "partdist/exactnum.hpp"

namespace partdist {

/// A partition of n held as its weakly decreasing list of positive parts.
/// The empty list is the unique partition of 0.
class Partition {
public:
    Partition() = default;

    /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    int size() const { return size_; }
    int length() const { return static_cast<int>(parts_.size()); }
    const std::vector<int>& parts() const { return parts_; }
    int largest() const { return parts_.empty() ? 0 : parts_.front(); }
    int multiplicity(int part) const;
    bool contains(int part) const { return multiplicity(part) > 0; }

    /// "(3,1,1)"; the empty partition prints as "()".
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition& a, const Partition& b)
    {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int size_ = 0;
};

/// Orders partitions by size, then reverse-lexicographically on parts, which
/// is the order in which enumerate_partitions yields them: (n) first.
struct ReverseLexOrder {
    bool operator()(const Partition& a, const Partition& b) const
    {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return b.parts() < a.parts();
    }
};

/// (m_1, ..., m_n) with sum of j * m_j equal to n, where n is the vector length.
class MultiplicityVector {
public:
    MultiplicityVector() = default;
    /// Throws std::invalid_argument on negative entries or weighted sum != length.
    explicit MultiplicityVector(std::vector<int> counts);

    int size() const { return static_cast<int>(counts_.size()); }
    /// 1-based: m(j) is the number of parts equal to j.
    int operator()(int j) const { return counts_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& counts() const { return counts_; }

    friend bool operator==(const MultiplicityVector&, const MultiplicityVector&) = default;

private:
    std::vector<int> counts_;
};

/// The parts padded with zeros to length n.
class PartitionVector {
public:
    PartitionVector() = default;
    /// Throws std::invalid_argument unless entries are non-increasing, non-negative
    /// and sum to the vector length.
    explicit PartitionVector(std::vector<int> entries);

    int size() const { return static_cast<int>(entries_.size()); }
    /// 1-based.
    int operator()(int j) const { return entries_[static_cast<std::size_t>(j - 1)]; }
    const std::vector<int>& entries() const { return entries_; }

    friend bool operator==(const PartitionVector&, const PartitionVector&) = default;

private:
    std::vector<int> entries_;
};

/// Steps through the partitions of n in reverse-lexicographic order while
/// reusing a single parts buffer.
class PartitionGenerator {
public:
    /// Throws std::invalid_argument for negative n.
    explicit PartitionGenerator(int n);

    /// Advances to the next partition; false once exhausted. The first call
    /// positions on (n).
    bool next();
    std::span<const int> current() const { return parts_; }
    int size() const { return n_; }

private:
    std::vector<int> parts_;
    int n_;
    bool started_ = false;
    bool done_ = false;
};

/// Lazy range over the partitions of n, (n) first and (1,...,1) last.
class PartitionRange {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = Partition;
        using difference_type = std::ptrdiff_t;
        using pointer = const Partition*;
        using reference = const Partition&;

        iterator() = default;
        explicit iterator(int n);

        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& it, std::default_sentinel_t) { return it.at_end_; }

    private:
        void load();

        PartitionGenerator gen_{0};
        Partition current_;
        bool at_end_ = true;
    };

    explicit PartitionRange(int n) : n_(n) {}
    iterator begin() const { return iterator(n_); }
    std::default_sentinel_t end() const { return {}; }

private:
    int n_;
};

PartitionRange enumerate_partitions(int n);

/// Calls fn(std::span<const int> parts) for every partition of n, in
/// enumeration order, without materializing Partition objects.
template <typename Fn>
void for_each_partition(int n, Fn&& fn)
{
    PartitionGenerator gen(n);
    while (gen.next()) {
        fn(gen.current());
    }
}

std::vector<Partition> all_partitions(int n);

MultiplicityVector to_multiplicity(const Partition& p);
Partition from_multiplicity(const MultiplicityVector& m);
PartitionVector to_partition_vector(const Partition& p);

/// Removes one copy of part i. Throws std::invalid_argument when i is not a part.
Partition delete_part(const Partition& p, int i);

/// Inverse of delete_part: adds one part equal to i (i >= 1).
Partition insert_part(const Partition& p, int i);

/// n! / (prod_j j^{m_j} m_j!), the number of permutations of n letters whose
/// cycle lengths are the parts of p.
BigInt count_permutations_of_type(const Partition& p);
BigInt count_permutations_of_type(std::span<const int> parts);

} // namespace partdist
