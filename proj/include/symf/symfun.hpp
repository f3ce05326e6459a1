#ifndef SYMF_SYMFUN_HPP
#define SYMF_SYMFUN_HPP

#include <map>
#include <string>
#include <vector>

#include "symf/coefpoly.hpp"
#include "symf/partition.hpp"

namespace symf {

// Element of Lambda[params] in the power-sum basis: key mu stands for
// p_{mu_1} p_{mu_2} ..., the empty key for the constant 1. Zero coefficients
// are never stored.
class SymFun {
 public:
  using TermMap = std::map<Partition, CoefPoly>;

  SymFun() = default;
  SymFun(const CoefPoly& c);  // NOLINT: scalars embed as constants
  SymFun(const Rat& c) : SymFun(CoefPoly(c)) {}
  SymFun(int c) : SymFun(CoefPoly(c)) {}

  static SymFun p(const Partition& mu, const CoefPoly& coef = CoefPoly(1));
  static SymFun p(int k);

  const TermMap& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Largest |mu| over stored keys; -1 for the zero function.
  int pdeg() const;
  CoefPoly coefficient(const Partition& mu) const;
  // True when every p-monomial uses only odd parts.
  bool in_odd_subring() const;
  // True when every stored coefficient is a rational constant.
  bool rational() const;

  // Accumulates coef * p_mu.
  void add_term(const Partition& mu, const CoefPoly& coef);
  void add_term(Partition&& mu, const CoefPoly& coef);
  // this += a * b.
  void add_product(const SymFun& a, const SymFun& b);
  // this += c * a.
  void add_scaled(const CoefPoly& c, const SymFun& a);

  SymFun& operator+=(const SymFun& other);
  SymFun& operator-=(const SymFun& other);
  SymFun& operator*=(const CoefPoly& c);
  friend SymFun operator+(SymFun a, const SymFun& b) { return a += b; }
  friend SymFun operator-(SymFun a, const SymFun& b) { return a -= b; }
  friend SymFun operator*(const SymFun& a, const SymFun& b);
  friend SymFun operator*(const CoefPoly& c, SymFun a) { return a *= c; }
  friend SymFun operator*(SymFun a, const CoefPoly& c) { return a *= c; }
  SymFun operator-() const;

  SymFun substitute(ParamId id, const Rat& value) const;
  SymFun substitute(const std::string& name, const Rat& value) const {
    return substitute(param_id(name), value);
  }
  SymFun truncate(ParamId id, std::uint32_t max_exponent) const;
  // Homogeneous component of p-degree d.
  SymFun component(int d) const;

  friend bool operator==(const SymFun& a, const SymFun& b) { return a.terms_ == b.terms_; }

  std::string to_string() const;

 private:
  TermMap terms_;
};

inline bool is_zero_entry(const SymFun& f) { return f.is_zero(); }

SymFun add(const SymFun& f, const SymFun& g);
SymFun mul(const SymFun& f, const SymFun& g);
SymFun scale(const CoefPoly& c, const SymFun& f);

// Complete, elementary and Schur-Q generators; zero for negative index.
// Computed by Newton-type recurrences and memoized (thread-safe).
const SymFun& gen_h(int k);
const SymFun& gen_e(int k);
const SymFun& gen_q(int k);

// Polynomial differential operator with constant coefficients: key nu stands
// for d/dp_{nu_1} d/dp_{nu_2} ... (plain partials, no factors of n).
class DiffOperator {
 public:
  std::map<Partition, CoefPoly> terms;
  bool is_zero() const { return terms.empty(); }
};

// f^perp: substitutes p_n -> n d/dp_n in the p-expansion of f.
DiffOperator adjoint(const SymFun& f);
SymFun apply_diff(const DiffOperator& d, const SymFun& f);

// Substitutes p_k -> sum_i x_i^k and the parameter values. Throws
// std::invalid_argument naming any unassigned parameter.
Rat evaluate(const SymFun& f, const std::vector<Rat>& xs,
             const std::map<std::string, Rat>& assign = {});
// Same, but leaves parameters symbolic.
CoefPoly evaluate_symbolic(const SymFun& f, const std::vector<Rat>& xs);

// Bilinear extension of <p_lambda, p_mu> = z_lambda delta_{lambda mu}.
CoefPoly hall_inner(const SymFun& f, const SymFun& g);

}  // namespace symf

#endif
