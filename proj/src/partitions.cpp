#include "commlie/partitions.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <sstream>

#include "commlie/error.hpp"

namespace commlie {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw UsageError("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw UsageError("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

Partition Partition::conjugate() const {
  if (parts_.empty()) return {};
  std::vector<int> conj(parts_.front(), 0);
  for (int part : parts_) {
    for (int c = 0; c < part; ++c) ++conj[c];
  }
  return Partition(std::move(conj));
}

std::map<int, int> Partition::multiplicities() const {
  std::map<int, int> m;
  for (int part : parts_) ++m[part];
  return m;
}

long Partition::sum_sq_conjugate() const {
  long total = 0;
  const Partition conj = conjugate();
  for (int c : conj.parts()) total += static_cast<long>(c) * c;
  return total;
}

long Partition::min_sum() const {
  long total = 0;
  for (int a : parts_) {
    for (int b : parts_) total += std::min(a, b);
  }
  return total;
}

int Partition::odd_part_count() const {
  return static_cast<int>(std::count_if(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; }));
}

bool Partition::sp_admissible() const {
  for (auto [part, mult] : multiplicities()) {
    if (part % 2 != 0 && mult % 2 != 0) return false;
  }
  return true;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i > 0) os << ',';
    os << parts_[i];
  }
  os << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const Partition& p) { return os << p.to_string(); }

PartitionRange::PartitionRange(int n) : n_(n) {
  if (n < 0) throw UsageError("cannot partition a negative integer");
}

PartitionRange::iterator::iterator(int n) : done_(false) {
  if (n > 0) parts_.push_back(n);
  current_ = Partition(parts_);
}

PartitionRange::iterator& PartitionRange::iterator::operator++() {
  // Rightmost part larger than 1; everything after it is a 1.
  int ones = 0;
  while (!parts_.empty() && parts_.back() == 1) {
    parts_.pop_back();
    ++ones;
  }
  if (parts_.empty()) {
    done_ = true;
    return *this;
  }
  int v = --parts_.back();
  int rest = ones + 1;
  while (rest > 0) {
    int take = std::min(v, rest);
    parts_.push_back(take);
    rest -= take;
  }
  current_ = Partition(parts_);
  return *this;
}

PartitionRange iterate_partitions(int n) { return PartitionRange(n); }

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for (const auto& p : iterate_partitions(n)) out.push_back(p);
  return out;
}

std::vector<Partition> iterate_sp_admissible(int n) {
  std::vector<Partition> out;
  for (const auto& p : iterate_partitions(n)) {
    if (p.sp_admissible()) out.push_back(p);
  }
  return out;
}

}  // namespace commlie
