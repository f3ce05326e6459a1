#include "symf/partition.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace symf {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0)
      throw std::invalid_argument("partition parts must be positive: " + to_string());
    if (i > 0 && parts_[i] > parts_[i - 1])
      throw std::invalid_argument("partition must be weakly decreasing: " + to_string());
  }
}

Partition Partition::from_unsorted(std::vector<int> parts) {
  std::erase(parts, 0);
  std::sort(parts.begin(), parts.end(), std::greater<>());
  return Partition(std::move(parts));
}

int Partition::weight() const {
  int w = 0;
  for (int p : parts_) w += p;
  return w;
}

bool Partition::is_strict() const {
  for (std::size_t i = 1; i < parts_.size(); ++i)
    if (parts_[i] == parts_[i - 1]) return false;
  return true;
}

bool Partition::all_odd() const {
  return std::all_of(parts_.begin(), parts_.end(), [](int p) { return p % 2 != 0; });
}

Partition Partition::merged(const Partition& other) const {
  Partition out;
  out.parts_.resize(parts_.size() + other.parts_.size());
  std::merge(parts_.begin(), parts_.end(), other.parts_.begin(), other.parts_.end(),
             out.parts_.begin(), std::greater<>());
  return out;
}

std::vector<int> Partition::multiplicities() const {
  std::vector<int> m(parts_.empty() ? 1 : parts_.front() + 1, 0);
  for (int p : parts_) ++m[p];
  return m;
}

BigInt Partition::z() const {
  BigInt out = 1;
  auto m = multiplicities();
  for (std::size_t i = 1; i < m.size(); ++i) {
    for (int k = 0; k < m[i]; ++k) out *= static_cast<long>(i);
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m[i]));
    out *= f;
  }
  return out;
}

std::string Partition::to_string() const { return intvec_to_string(parts_); }

std::string intvec_to_string(const IntVec& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    const std::function<bool(int)>& allowed, bool strict,
                    std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    if (!allowed(p)) continue;
    cur.push_back(p);
    gen_partitions(remaining - p, strict ? p - 1 : p, cur, allowed, strict, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, [](int) { return true; }, false, out);
  return out;
}

std::vector<Partition> odd_partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, [](int p) { return p % 2 != 0; }, false, out);
  return out;
}

std::vector<Partition> strict_partitions_of(int n) {
  std::vector<Partition> out;
  if (n < 0) return out;
  std::vector<int> cur;
  gen_partitions(n, n, cur, [](int) { return true; }, true, out);
  return out;
}

}  // namespace symf
