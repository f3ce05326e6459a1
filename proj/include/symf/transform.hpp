#ifndef SYMF_TRANSFORM_HPP
#define SYMF_TRANSFORM_HPP

#include <string>
#include <vector>

#include "symf/matrix.hpp"
#include "symf/vertex.hpp"

namespace symf {

// Transformed coefficient sum_j A_{k,j} Gamma_j(f).
SymFun transformed_coeff(const RowFiniteMatrix& a, const FieldKind& kind, int k, const SymFun& f);
// Gamma~_{-l_1} ... Gamma~_{-l_n}(1).
SymFun transformed_family(const RowFiniteMatrix& a, const IntVec& lambda, const FieldKind& kind);

// h~_{k;m} = sum_r A_{-k,-r} h_{r-m}.
SymFun h_transformed(const RowFiniteMatrix& a, int k, int m);
// det[h~_{l_i; i-j}].
SymFun jt_transformed(const RowFiniteMatrix& a, const IntVec& lambda);

// q_a q_b + 2 sum_{i=1}^{b} (-1)^i q_{a+i} q_{b-i}.
SymFun q_pair(int a, int b);

class SkewMatrix {
 public:
  // Validates M_ij = -M_ji and M_ii = 0.
  explicit SkewMatrix(std::vector<std::vector<SymFun>> entries);
  // Lower triangle and diagonal are implied by the strict upper triangle.
  static SkewMatrix from_upper(std::vector<std::vector<SymFun>> upper);

  std::size_t size() const { return m_.size(); }
  const SymFun& operator()(std::size_t i, std::size_t j) const { return m_[i][j]; }
  const std::vector<std::vector<SymFun>>& rows() const { return m_; }

 private:
  SkewMatrix() = default;
  std::vector<std::vector<SymFun>> m_;
};

inline constexpr std::size_t kMaxPfaffianDim = 12;

// Throws std::invalid_argument on odd or oversized dimension.
SymFun pfaffian(const SkewMatrix& m);

// Pf[sum_{k,r} A_{-l_i,-k} A_{-l_j,-r} q_{k,r}]; odd length is padded by 0.
SymFun pf_transformed(const RowFiniteMatrix& a, const IntVec& lambda);

enum class Verdict { True, False, Inconclusive };

struct CheckResult {
  Verdict verdict = Verdict::True;
  std::string detail;  // first failing index or the reason for inconclusive

  bool passed() const { return verdict == Verdict::True; }
  static CheckResult fail(std::string why) { return {Verdict::False, std::move(why)}; }
  static CheckResult unknown(std::string why) { return {Verdict::Inconclusive, std::move(why)}; }
};

std::string to_string(Verdict v);

struct Window {
  int lo;
  int hi;
};

// sum_k B_ik A_kj = delta_ij on window^2.
CheckResult check_inverse(const RowFiniteMatrix& a, const RowFiniteMatrix& b, Window w);
CheckResult check_fermion_preservation(const RowFiniteMatrix& a, const RowFiniteMatrix& b, Window w);
CheckResult check_neutral_preservation(const RowFiniteMatrix& a, Window w);
CheckResult check_heisenberg_preservation(const RowFiniteMatrix& a, Window w);
// sum_k g_k(1/x) f_k(y) = x delta(x, y) coefficientwise, plus the split sums
// when A has the three-block shape.
CheckResult delta_reexpansion_check(const RowFiniteMatrix& a, Window w);

// True when A_{ij} = 0 for ij < 0 (off-diagonal blocks) and row/column 0 are
// delta, as far as the window can tell.
bool has_block_shape(const RowFiniteMatrix& a, Window w);

// Transformed fermions and bosons applied to basis states.
ChargedState psi_plus_transformed(const RowFiniteMatrix& a, int k, const ChargedState& s);
ChargedState psi_minus_transformed(const RowFiniteMatrix& b, int k, const ChargedState& s);
SymFun phi_transformed(const RowFiniteMatrix& a, int k, const SymFun& f);
// alpha_k = k d/dp_k (k > 0), p_{-k} (k < 0), 0 (k = 0) on charge zero.
SymFun heisenberg(int k, const SymFun& f);
SymFun heisenberg_transformed(const RowFiniteMatrix& a, int k, const SymFun& f);

}  // namespace symf

#endif
