#include "lrembed/partition.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

#include "lrembed/error.hpp"

namespace lrembed {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] < 1 || (i > 0 && parts_[i] > parts_[i - 1])) {
      std::ostringstream os;
      os << "parts must be positive and weakly decreasing (offending index " << i << ")";
      throw Error(Errc::malformed_partition, os.str());
    }
  }
}

Partition Partition::from_parts(std::vector<int> parts) {
  std::erase(parts, 0);
  if (std::any_of(parts.begin(), parts.end(), [](int x) { return x < 0; })) {
    throw Error(Errc::malformed_partition, "negative part");
  }
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::weight() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }

std::string Partition::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(parts_[i]);
  }
  return s + "]";
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out(static_cast<std::size_t>(lambda.largest()), 0);
  for (int part : lambda.parts())
    for (int j = 0; j < part; ++j) ++out[static_cast<std::size_t>(j)];
  return Partition(std::move(out));
}

Partition union_of(const Partition& lambda, const Partition& mu) {
  std::vector<int> parts;
  parts.reserve(lambda.length() + mu.length());
  std::merge(lambda.parts().begin(), lambda.parts().end(), mu.parts().begin(), mu.parts().end(),
             std::back_inserter(parts), std::greater<>());
  return Partition(std::move(parts));
}

bool contains(const Partition& outer, const Partition& inner) {
  if (inner.length() > outer.length()) return false;
  for (std::size_t i = 0; i < inner.length(); ++i)
    if (inner[i] > outer[i]) return false;
  return true;
}

bool is_horizontal_strip(const Partition& inner, const Partition& outer) {
  const std::size_t n = std::max(inner.length(), outer.length());
  for (std::size_t k = 0; k < n; ++k) {
    const int diff = outer[k] - inner[k];
    if (diff < 0 || diff > 1) return false;
  }
  return true;
}

std::vector<Partition> partitions_of(int n, int max_part) {
  if (max_part < 0 || max_part > n) max_part = n;
  std::vector<Partition> out;
  std::vector<int> current;
  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.emplace_back(current);
      return;
    }
    for (int part = std::min(cap, remaining); part >= 1; --part) {
      current.push_back(part);
      rec(remaining - part, part);
      current.pop_back();
    }
  };
  rec(n, max_part);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> partitions_up_to(int max_weight, int max_part) {
  std::vector<Partition> out;
  for (int n = 0; n <= max_weight; ++n) {
    auto layer = partitions_of(n, max_part);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace lrembed
