#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace polaris {

/// Integer partition: weakly decreasing positive parts. The empty partition
/// is the unique partition of 0.
class Partition {
 public:
  Partition() = default;
  Partition(std::initializer_list<int> parts);
  explicit Partition(std::vector<int> parts);

  /// |lambda|
  int size() const { return size_; }
  /// Number of parts.
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  /// Part i (zero-based); 0 past the last part.
  int operator[](int i) const { return i < length() ? parts_[i] : 0; }
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on parts.
  friend auto operator<=>(const Partition& a, const Partition& b) {
    return a.parts_ <=> b.parts_;
  }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

/// Sorts the parts of a composition (zeros dropped) into a partition.
Partition sorted_partition(std::vector<int> parts);

/// "[2,1]"; "[]" for the empty partition.
std::string to_string(const Partition& p);

/// Display order: by size, then reverse lexicographic within a size, so
/// (d), (d-1,1), (d-2,2), (d-2,1,1), ... come out in that order.
struct DisplayOrder {
  bool operator()(const Partition& a, const Partition& b) const {
    if (a.size() != b.size()) return a.size() < b.size();
    return a > b;
  }
};

/// All partitions of d in reverse lexicographic order.
std::vector<Partition> partitions_of(int d);

std::uint64_t factorial(int n);

/// z_rho = prod_i i^{c_i} c_i!, where c_i counts the parts equal to i.
std::uint64_t z_value(const Partition& rho);

/// Size n!/z_rho of the conjugacy class of cycle type rho.
std::uint64_t class_size(const Partition& rho);

/// f^lambda, the number of standard tableaux (hook length formula).
std::uint64_t hook_dimension(const Partition& lambda);

}  // namespace polaris
