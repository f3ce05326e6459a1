#ifndef SYMF_DET_HPP
#define SYMF_DET_HPP

#include <cstdint>
#include <stdexcept>
#include <unordered_map>
#include <vector>

#include "symf/rational.hpp"

namespace symf {

inline bool is_zero_entry(const Rat& r) { return r == 0; }

template <class T>
using Square = std::vector<std::vector<T>>;

// Determinant over a commutative ring by Laplace expansion along rows, with
// minors memoized on the set of remaining columns: O(2^n n) ring products.
template <class T>
T determinant(const Square<T>& m) {
  const std::size_t n = m.size();
  if (n == 0) return T(1);
  if (n > 20) throw std::invalid_argument("determinant: matrix too large");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  // memo[mask] = det of rows (n - popcount(mask))..n-1 restricted to columns in mask
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t mask, std::size_t row) -> T {
    if (row == n) return T(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    T acc{};
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(mask & (1u << c))) continue;
      const T& entry = m[row][c];
      if (!is_zero_entry(entry)) {
        T minor = self(self, mask & ~(1u << c), row + 1);
        if (!is_zero_entry(minor)) {
          if (sign > 0)
            acc += entry * minor;
          else
            acc -= entry * minor;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (1u << n) - 1u, 0);
}

// Pfaffian of a 2l x 2l skew-symmetric matrix, read from the strict upper
// triangle only; recursive expansion along the first remaining index,
// memoized on index subsets.
template <class T>
T pfaffian_upper(const Square<T>& m) {
  const std::size_t n = m.size();
  if (n % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (n == 0) return T(1);
  if (n > 24) throw std::invalid_argument("pfaffian: matrix too large");
  std::unordered_map<std::uint32_t, T> memo;
  auto rec = [&](auto&& self, std::uint32_t mask) -> T {
    if (mask == 0) return T(1);
    if (auto it = memo.find(mask); it != memo.end()) return it->second;
    std::size_t first = 0;
    while (!(mask & (1u << first))) ++first;
    std::uint32_t rest = mask & ~(1u << first);
    T acc{};
    int sign = 1;  // position 2 in the remaining list carries +
    for (std::size_t j = first + 1; j < n; ++j) {
      if (!(rest & (1u << j))) continue;
      const T& entry = m[first][j];
      if (!is_zero_entry(entry)) {
        T sub = self(self, rest & ~(1u << j));
        if (!is_zero_entry(sub)) {
          if (sign > 0)
            acc += entry * sub;
          else
            acc -= entry * sub;
        }
      }
      sign = -sign;
    }
    memo.emplace(mask, acc);
    return acc;
  };
  return rec(rec, (1u << n) - 1u);
}

}  // namespace symf

#endif
