#include "polaris/partition.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "polaris/errors.hpp"

namespace polaris {

Partition::Partition(std::initializer_list<int> parts)
    : Partition(std::vector<int>(parts)) {}

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw DomainError("partition parts must be positive");
    if (i && parts_[i] > parts_[i - 1]) {
      throw DomainError("partition parts must be weakly decreasing");
    }
    size_ += parts_[i];
  }
}

Partition Partition::conjugate() const {
  std::vector<int> out;
  for (int k = 1; k <= (*this)[0]; ++k) {
    int count = 0;
    for (int p : parts_) count += p >= k;
    out.push_back(count);
  }
  return Partition(std::move(out));
}

Partition sorted_partition(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

std::string to_string(const Partition& p) {
  std::string out = "[";
  for (int i = 0; i < p.length(); ++i) {
    if (i) out += ",";
    out += std::to_string(p[i]);
  }
  return out + "]";
}

std::vector<Partition> partitions_of(int d) {
  if (d < 0) throw DomainError("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int max_part) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(d, d);
  return out;
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw DomainError("factorial argument out of range");
  std::uint64_t r = 1;
  for (int k = 2; k <= n; ++k) r *= k;
  return r;
}

std::uint64_t z_value(const Partition& rho) {
  std::map<int, int> counts;
  for (int p : rho.parts()) ++counts[p];
  std::uint64_t z = 1;
  for (auto [part, c] : counts) {
    for (int k = 0; k < c; ++k) z *= part;
    z *= factorial(c);
  }
  return z;
}

std::uint64_t class_size(const Partition& rho) {
  return factorial(rho.size()) / z_value(rho);
}

std::uint64_t hook_dimension(const Partition& lambda) {
  Partition conj = lambda.conjugate();
  std::uint64_t hooks = 1;
  for (int i = 0; i < lambda.length(); ++i) {
    for (int j = 0; j < lambda[i]; ++j) {
      hooks *= (lambda[i] - j - 1) + (conj[j] - i - 1) + 1;
    }
  }
  return factorial(lambda.size()) / hooks;
}

}  // namespace polaris
