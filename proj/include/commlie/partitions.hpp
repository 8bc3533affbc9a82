#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

namespace commlie {

/// Integer partition stored as a weakly decreasing list of positive parts.
/// The empty list is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  /// Throws UsageError unless the parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  /// |λ|
  int size() const;

  /// λ′, with λ′_i = m_i(λ) + m_{i+1}(λ) + ...
  Partition conjugate() const;
  /// m_i(λ) for every i with m_i(λ) > 0.
  std::map<int, int> multiplicities() const;
  /// Σ_i (λ′_i)², the centralizer dimension of a nilpotent of type λ.
  long sum_sq_conjugate() const;
  /// Σ_{i,j} min(λ_i, λ_j) by a direct double loop.
  long min_sum() const;
  /// o(λ), the number of odd parts.
  int odd_part_count() const;
  /// Every odd part size occurs with even multiplicity.
  bool sp_admissible() const;

  std::string to_string() const;

  friend auto operator<=>(const Partition&, const Partition&) = default;
  friend bool operator==(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

std::ostream& operator<<(std::ostream& os, const Partition& p);

/// Input range over the partitions of n in decreasing lexicographic order:
/// (4), (3,1), (2,2), (2,1,1), (1,1,1,1).
class PartitionRange {
 public:
  explicit PartitionRange(int n);

  class iterator {
   public:
    using value_type = Partition;
    using difference_type = std::ptrdiff_t;

    iterator() = default;
    const Partition& operator*() const { return current_; }
    const Partition* operator->() const { return &current_; }
    iterator& operator++();
    void operator++(int) { ++*this; }
    bool operator==(std::default_sentinel_t) const { return done_; }

   private:
    friend class PartitionRange;
    explicit iterator(int n);
    std::vector<int> parts_;
    Partition current_;
    bool done_ = true;
  };

  iterator begin() const { return iterator(n_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  int n_;
};

PartitionRange iterate_partitions(int n);
std::vector<Partition> partitions_of(int n);

/// Partitions of n whose odd parts each have even multiplicity, same order as iterate_partitions.
std::vector<Partition> iterate_sp_admissible(int n);

}  // namespace commlie
