#ifndef SYMF_VERTEX_HPP
#define SYMF_VERTEX_HPP

#include <deque>
#include <functional>
#include <mutex>
#include <utility>
#include <vector>

#include "symf/symfun.hpp"

namespace symf {

struct FieldKind {
  enum class Tag { GammaPlus, GammaMinus, GammaPlusAt, Phi, PsiPlus, PsiMinus };
  Tag tag = Tag::GammaPlus;
  Rat t0;  // only meaningful for GammaPlusAt

  static FieldKind gamma_plus() { return {Tag::GammaPlus, Rat(0)}; }
  static FieldKind gamma_minus() { return {Tag::GammaMinus, Rat(0)}; }
  static FieldKind gamma_plus_at(const Rat& t0) { return {Tag::GammaPlusAt, t0}; }
  static FieldKind phi() { return {Tag::Phi, Rat(0)}; }
  static FieldKind psi_plus() { return {Tag::PsiPlus, Rat(0)}; }
  static FieldKind psi_minus() { return {Tag::PsiMinus, Rat(0)}; }

  std::string to_string() const;
};

// z^charge (x) body. All zero states compare equal regardless of charge.
struct ChargedState {
  int charge = 0;
  SymFun body;

  bool is_zero() const { return body.is_zero(); }
  friend bool operator==(const ChargedState& a, const ChargedState& b) {
    if (a.is_zero() || b.is_zero()) return a.is_zero() && b.is_zero();
    return a.charge == b.charge && a.body == b.body;
  }
};

// exp(sum_n alpha_n p_n u^n) exp(sum_n beta_n d/dp_n u^{-n}). The right factor
// is the shift p_n -> p_n + beta_n u^{-n}; the left one is multiplication by
// sum_a S_a u^a.
class VertexOperator {
 public:
  using Rate = std::function<CoefPoly(int)>;
  VertexOperator(Rate alpha, Rate beta);

  // Coefficient of u^a in the multiplicative factor; zero for a < 0.
  const SymFun& mult_coeff(int a) const;
  const CoefPoly& shift(int n) const;

  // T[c] = coefficient of u^{-c} of the shifted f, c = 0..pdeg(f).
  std::vector<SymFun> translate(const SymFun& f) const;
  // Coefficient of u^{-k} of the operator applied to f.
  SymFun coeff(int k, const SymFun& f) const;

 private:
  Rate alpha_fn_;
  Rate beta_fn_;
  mutable std::mutex mutex_;
  mutable std::deque<CoefPoly> alpha_;  // index n-1
  mutable std::deque<CoefPoly> beta_;
  mutable std::deque<SymFun> mult_;  // index a
  const CoefPoly& rate_locked(std::deque<CoefPoly>& cache, const Rate& fn, int n) const;
};

// Shift of f with cached translation, so many coefficients (or linear
// combinations of them) can be taken cheaply.
class FieldAction {
 public:
  FieldAction(const VertexOperator& op, const SymFun& f);
  SymFun coeff(int k) const;
  // sum_j w_j Gamma_j(f); coefficients with j > pdeg(f) vanish and are skipped.
  SymFun combine(const std::vector<std::pair<int, CoefPoly>>& weights) const;
  int top() const { return static_cast<int>(shifted_.size()) - 1; }

 private:
  const VertexOperator* op_;
  std::vector<SymFun> shifted_;
};

// Process-wide operator for a field kind (Gamma kinds and Phi; the fermion
// kinds return their H(u)E^perp(-u) / E(-u)H^perp(u) cores).
const VertexOperator& field_operator(const FieldKind& kind);

SymFun gamma_plus(int k, const SymFun& f);
SymFun gamma_minus(int k, const SymFun& f);
// Coefficient of the given Gamma-type kind.
SymFun field_coeff(const FieldKind& kind, int k, const SymFun& f);

// Gamma_{-l_1} ... Gamma_{-l_n}(1), innermost last entry first.
SymFun iterate_field(const FieldKind& kind, const IntVec& lambda);

// det[h_{l_i - i + j}] for any integer vector.
SymFun schur_jt(const IntVec& lambda);

// Integer r encodes the half-integer index r - 1/2.
ChargedState psi_plus(int r, const ChargedState& s);
ChargedState psi_minus(int r, const ChargedState& s);

// Neutral fermion; throws std::invalid_argument unless f lies in B_odd.
SymFun phi(int j, const SymFun& f);

bool check_gamma_gamma(int a, int b, const SymFun& f);
bool check_gamma_cross(int a, int b, const SymFun& f);
// {psi+_r, psi-_s} = delta_{r+s,1} and the like-sign anticommutators vanish.
bool check_charged_relations(int r, int s, const ChargedState& st);
// {phi_m, phi_n} = 2 (-1)^m delta_{m+n,0}.
bool check_neutral_relations(int m, int n, const SymFun& f);

}  // namespace symf

#endif
