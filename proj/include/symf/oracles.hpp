#ifndef SYMF_ORACLES_HPP
#define SYMF_ORACLES_HPP

#include <map>
#include <random>
#include <string>
#include <vector>

#include "symf/coefpoly.hpp"
#include "symf/partition.hpp"

namespace symf {

// Distinct nonzero rational variables plus parameter values.
struct EvalPoint {
  std::vector<Rat> xs;
  std::map<std::string, Rat> params;

  Rat param(const std::string& name) const;  // throws std::invalid_argument if absent
};

inline constexpr int kMaxSymmetrizeVars = 7;

// Sum over semistandard tableaux of shape lambda with entries <= n.
Rat schur_tableaux_eval(const Partition& lambda, const EvalPoint& pt);

// (1-t)^n / prod_{i<=n-l}(1-t^i) sum_sigma sigma(x^lambda prod_{i<j}(x_i - t x_j)/(x_i - x_j)).
// lambda: positive parts, implicitly padded with zeros to n = |xs|.
Rat hl_symmetrized_eval(const IntVec& lambda, const EvalPoint& pt);

// Univariate polynomials f_k (index = power of x) over the parameters of pt.
using PolyFamily = std::vector<std::vector<CoefPoly>>;

// Same symmetrization with x^{l_i} replaced by f_{l_i}(x_i). At t = 0 the
// bialternant det[f_{l_j}(x_i) x_i^{n-j}] / det[x_i^{n-j}] is used; at t = -1
// the form 2^l/(n-l)! sum_sigma sigma(prod f prod_{i<=l, i<j} (x_i+x_j)/(x_i-x_j)).
// With check_shape the f_0 = 1, f_k(0) = 0 hypotheses are enforced.
Rat transformed_symmetrized_eval(const PolyFamily& f, const IntVec& lambda, const EvalPoint& pt,
                                 bool check_shape = true);

// Pf[q_{l_i,l_j}] with numeric q_k; odd length padded by 0.
Rat schurq_pfaffian_eval(const Partition& lambda, const EvalPoint& pt);

// det[x_i^{l_j+n-j} (1+beta x_i)^{j-1}] / prod_{i<j}(x_i - x_j); zero if l > n.
Rat grothendieck_alternant_eval(const IntVec& lambda, const EvalPoint& pt);

// Seeded points: numerators and denominators bounded by 50, xs distinct and
// nonzero, parameters avoiding 0 and +-1.
EvalPoint random_point(std::mt19937_64& rng, int n, const std::vector<std::string>& params);
Rat random_rat(std::mt19937_64& rng, bool nonzero = true);

// Value of f_k at x.
Rat eval_poly(const std::vector<CoefPoly>& coeffs, const Rat& x, const std::map<std::string, Rat>& assign);

}  // namespace symf

#endif
