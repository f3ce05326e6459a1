#ifndef SYMF_TESTS_HELPERS_HPP
#define SYMF_TESTS_HELPERS_HPP

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "symf/gallery.hpp"
#include "symf/oracles.hpp"
#include "symf/transform.hpp"

namespace symf::testing {

inline CoefPoly t_() { return CoefPoly::param(kParamT); }

// Rational parameters for the multiparameter matrix, enough for |i| <= 40.
inline std::vector<CoefPoly> multi_params() {
  std::vector<CoefPoly> a;
  for (int i = 0; i < 48; ++i) a.emplace_back(ratio((i * 7) % 11 - 5, i % 4 + 1));
  return a;
}

struct NamedMatrix {
  std::string name;
  RowFiniteMatrix a;
};

// The four gallery families used throughout the suites.
inline std::vector<NamedMatrix> gallery_matrices() {
  return {
      {"toeplitz", toeplitz_matrix({{0, CoefPoly(1)}, {1, CoefPoly(ratio(1, 2))}, {2, CoefPoly(-3)}})},
      {"cumulative", cumulative_matrix()},
      {"multiparameter", multiparameter_matrix(multi_params())},
      {"pascal", pascal_matrix()},
  };
}

inline std::vector<Partition> partitions_upto(int n) {
  std::vector<Partition> out;
  for (int d = 0; d <= n; ++d)
    for (auto& p : partitions_of(d)) out.push_back(p);
  return out;
}

inline std::vector<Partition> strict_upto(int n) {
  std::vector<Partition> out;
  for (int d = 0; d <= n; ++d)
    for (auto& p : strict_partitions_of(d)) out.push_back(p);
  return out;
}

// p-monomials of p-degree <= n.
inline std::vector<SymFun> pbasis(int n, bool odd = false) {
  std::vector<SymFun> out;
  for (int d = 0; d <= n; ++d)
    for (auto& p : odd ? odd_partitions_of(d) : partitions_of(d)) out.push_back(SymFun::p(p));
  return out;
}

// Random element of Lambda with small rational coefficients.
inline SymFun random_symfun(std::mt19937_64& rng, int degree, int terms, bool odd = false) {
  std::vector<Partition> keys;
  for (int d = 0; d <= degree; ++d)
    for (auto& p : odd ? odd_partitions_of(d) : partitions_of(d)) keys.push_back(p);
  std::uniform_int_distribution<std::size_t> pick(0, keys.size() - 1);
  SymFun f;
  for (int i = 0; i < terms; ++i) f.add_term(keys[pick(rng)], random_rat(rng));
  return f;
}

inline PolyFamily xpowers(int kmax) {
  PolyFamily f(kmax + 1);
  for (int k = 0; k <= kmax; ++k) {
    f[k].assign(k + 1, CoefPoly());
    f[k][k] = CoefPoly(1);
  }
  return f;
}

}  // namespace symf::testing

#endif
