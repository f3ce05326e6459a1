#ifndef SYMF_PARTITION_HPP
#define SYMF_PARTITION_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

#include "symf/rational.hpp"

namespace symf {

// Arbitrary finite integer vector (zeros and negatives allowed).
using IntVec = std::vector<int>;

// Weakly decreasing sequence of positive integers. The empty partition is the
// key of the constant term.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless `parts` is weakly decreasing and
  // positive.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}
  // Sorts and drops zeros; negative entries are rejected.
  static Partition from_unsorted(std::vector<int> parts);
  // Caller guarantees the invariant (hot paths only).
  static Partition unchecked(std::vector<int> parts) {
    Partition p;
    p.parts_ = std::move(parts);
    return p;
  }

  const std::vector<int>& parts() const { return parts_; }
  std::size_t length() const { return parts_.size(); }
  int weight() const;
  bool empty() const { return parts_.empty(); }
  bool is_strict() const;
  bool all_odd() const;
  int operator[](std::size_t i) const { return parts_[i]; }

  // Multiset union (product of power-sum monomials).
  Partition merged(const Partition& other) const;
  // m_k for k = 0..largest part (index 0 unused).
  std::vector<int> multiplicities() const;
  // z_lambda = prod_i i^{m_i} m_i!
  BigInt z() const;

  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

// All partitions of n, in reverse lexicographic order ((n) first).
std::vector<Partition> partitions_of(int n);
// Partitions of n into odd parts.
std::vector<Partition> odd_partitions_of(int n);
// Strict partitions of n.
std::vector<Partition> strict_partitions_of(int n);

std::string intvec_to_string(const IntVec& v);

}  // namespace symf

#endif
