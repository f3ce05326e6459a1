#ifndef SYMF_GALLERY_HPP
#define SYMF_GALLERY_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "symf/matrix.hpp"
#include "symf/symfun.hpp"

namespace symf {

// A_{ij} = a_{j-i} for a finitely supported sequence a. When the lowest
// coefficient is a nonzero rational the inverse Toeplitz matrix (series
// inverse of sum a_k u^k) is attached.
RowFiniteMatrix toeplitz_matrix(const std::map<int, CoefPoly>& a);

// Blocks (A-)_{ij} = 1 for i <= j < 0 and A+ = 1 on the diagonal, -1 on the
// superdiagonal; f_k(x) = x + ... + x^k. Inverse is A^vee.
RowFiniteMatrix cumulative_matrix();

// A_{-i,-j} = (-1)^{i-j} e_{i-j}(a_1..a_{i-1}), A_{ij} = h_{j-i}(a_1..a_i).
// Rows needing more parameters than supplied throw std::out_of_range.
RowFiniteMatrix multiparameter_matrix(const std::vector<CoefPoly>& a);

// Multiparameter matrix with every a_i = 1 (binomial entries, unbounded).
RowFiniteMatrix pascal_matrix();

// B_{k,i} = A_{k-1,i-1}: the partner of A for transformed psi-.
RowFiniteMatrix fermion_partner(const RowFiniteMatrix& a);

// A_{-i,j} = rows[i][j] for the listed i >= 1, delta rows elsewhere.
RowFiniteMatrix laurent_rows_matrix(const std::map<int, std::map<int, CoefPoly>>& rows);

// Laurent rows A_{-i,j} = C(1-i, j+l_i) beta^{j+l_i}, i = 1..len(l); the
// family at (1, 2, ..., len) with t = 0 is the dual stable Grothendieck g_l.
RowFiniteMatrix grothendieck_dual_matrix(const IntVec& lambda);

// f_k for k >= 0 as coefficient lists (index = power of x).
struct PolySeq {
  std::vector<std::vector<CoefPoly>> f;
  // Some f_k has negative powers of x (within the probed columns).
  bool laurent = false;
  // f_0 = 1, f_k(0) = 0 for k >= 1, and no negative powers.
  bool satisfies_shape() const;
};

// f_k(x) = sum_s A_{-k,-s} x^s for k = 0..kmax; columns above 0 are probed up
// to `probe` to detect negative powers.
PolySeq poly_seq(const RowFiniteMatrix& a, int kmax, int probe = 16);

// Coefficients of g_k(x) = sum_s (A^{-1})_{-s,-k} x^s for s in [smin, smax].
std::map<int, CoefPoly> g_coeffs(const RowFiniteMatrix& a, int k, int smin, int smax);

// E(beta) = sum_{i <= order} e_i beta^i.
SymFun e_series(int order);

// B+_k(f) = Gamma+_k|_{t=0}(E(beta) f), E truncated at `order`.
SymFun grothendieck_b_plus(int k, const SymFun& f, int order);

// Stable Grothendieck G_l truncated to beta^{<= order}. Computed at order and
// order + 1 and compared; a mismatch throws std::runtime_error.
SymFun grothendieck_stable(const IntVec& lambda, int order);

// G_m from G(u) = (1 + beta/u)^{-1} E(beta) H(u), truncated to beta^{<= order}.
SymFun grothendieck_g_single(int m, int order);
// det[sum_m C(i-l, m) beta^m G_{l_i - i + j + m}] truncated to beta^{<= order}.
SymFun grothendieck_stable_jt(const IntVec& lambda, int order);

// Dual stable Grothendieck g_l = det[sum_m C(1-i, m) beta^m h_{l_i-i+j-m}].
SymFun grothendieck_dual(const IntVec& lambda);
// J+_k(f) = Gamma+_k|_{t=0}(H^perp(-1/beta) f).
SymFun grothendieck_j_plus(int k, const SymFun& f);
// J+_{-l_1} ... J+_{-l_n}(1).
SymFun grothendieck_dual_vertex(const IntVec& lambda);

// f(p_n -> p_n + (-beta)^n).
SymFun shift_by_minus_beta(const SymFun& f);

// Sign s with s~_l(1 + beta y) / e_n(1 + beta y) = s beta^{|mu|} G_mu(y) for the
// Pascal family at t = 0, n = len(l), mu_{n-k+1} = l_k - k. Entries of l must be
// positive. Found by exact evaluation at seeded points; 0 if neither sign fits.
int grothendieck_shift_sign(const IntVec& lambda, std::uint64_t seed = 1);

}  // namespace symf

#endif
