#include "symf/transform.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "symf/det.hpp"

namespace symf {

namespace {

void require_gamma_plus(const FieldKind& kind, const char* where) {
  if (kind.tag != FieldKind::Tag::GammaPlus && kind.tag != FieldKind::Tag::GammaPlusAt)
    throw std::invalid_argument(std::string(where) + ": kind must be GammaPlus or GammaPlusAt");
}

std::vector<std::pair<int, CoefPoly>> as_weights(std::vector<MatrixEntry> row, int offset = 0) {
  std::vector<std::pair<int, CoefPoly>> w;
  w.reserve(row.size());
  for (auto& e : row) w.emplace_back(e.j + offset, std::move(e.value));
  return w;
}

std::string idx(int i, int j) { return "(" + std::to_string(i) + "," + std::to_string(j) + ")"; }

}  // namespace

SymFun transformed_coeff(const RowFiniteMatrix& a, const FieldKind& kind, int k, const SymFun& f) {
  require_gamma_plus(kind, "transformed_coeff");
  if (f.is_zero()) return {};
  auto weights = as_weights(a.row(k, f.pdeg()));
  if (weights.empty()) return {};
  return FieldAction(field_operator(kind), f).combine(weights);
}

SymFun transformed_family(const RowFiniteMatrix& a, const IntVec& lambda, const FieldKind& kind) {
  require_gamma_plus(kind, "transformed_family");
  SymFun f(1);
  for (auto it = lambda.rbegin(); it != lambda.rend() && !f.is_zero(); ++it)
    f = transformed_coeff(a, kind, -*it, f);
  return f;
}

SymFun h_transformed(const RowFiniteMatrix& a, int k, int m) {
  // column c = -r contributes while r - m >= 0
  SymFun out;
  for (const auto& e : a.row(-k, -m)) out.add_scaled(e.value, gen_h(-e.j - m));
  return out;
}

SymFun jt_transformed(const RowFiniteMatrix& a, const IntVec& lambda) {
  const int l = static_cast<int>(lambda.size());
  Square<SymFun> m(l, std::vector<SymFun>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m[i][j] = h_transformed(a, lambda[i], i - j);
  return determinant(m);
}

SymFun q_pair(int a, int b) {
  SymFun out = gen_q(a) * gen_q(b);
  for (int i = 1; i <= b; ++i) {
    const SymFun& x = gen_q(a + i);
    const SymFun& y = gen_q(b - i);
    if (x.is_zero() || y.is_zero()) continue;
    out.add_scaled(CoefPoly(i % 2 == 0 ? 2 : -2), x * y);
  }
  return out;
}

SkewMatrix::SkewMatrix(std::vector<std::vector<SymFun>> entries) : m_(std::move(entries)) {
  const std::size_t n = m_.size();
  for (std::size_t i = 0; i < n; ++i) {
    if (m_[i].size() != n) throw std::invalid_argument("SkewMatrix: not square");
    if (!m_[i][i].is_zero()) throw std::invalid_argument("SkewMatrix: nonzero diagonal");
    for (std::size_t j = i + 1; j < n; ++j)
      if (!(m_[i][j] + m_[j][i]).is_zero())
        throw std::invalid_argument("SkewMatrix: not skew at " + idx(int(i), int(j)));
  }
}

SkewMatrix SkewMatrix::from_upper(std::vector<std::vector<SymFun>> upper) {
  const std::size_t n = upper.size();
  SkewMatrix s;
  s.m_.assign(n, std::vector<SymFun>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (upper[i].size() != n) throw std::invalid_argument("SkewMatrix: not square");
    for (std::size_t j = i + 1; j < n; ++j) {
      s.m_[i][j] = upper[i][j];
      s.m_[j][i] = -upper[i][j];
    }
  }
  return s;
}

SymFun pfaffian(const SkewMatrix& m) {
  if (m.size() % 2 != 0) throw std::invalid_argument("pfaffian: odd dimension");
  if (m.size() > kMaxPfaffianDim) throw std::invalid_argument("pfaffian: dimension above 12");
  return pfaffian_upper(m.rows());
}

SymFun pf_transformed(const RowFiniteMatrix& a, const IntVec& lambda) {
  IntVec lam = lambda;
  if (lam.size() % 2 != 0) lam.push_back(0);
  const std::size_t n = lam.size();
  if (n > kMaxPfaffianDim) throw std::invalid_argument("pf_transformed: length above 12");
  std::map<std::pair<int, int>, SymFun> qcache;
  auto q = [&](int k, int r) -> const SymFun& {
    auto [it, fresh] = qcache.try_emplace({k, r});
    if (fresh) it->second = q_pair(k, r);
    return it->second;
  };
  // q_{k,r} vanishes unless r >= 0 and k + r >= 0, i.e. columns -r <= 0 and -k <= r
  std::vector<std::vector<SymFun>> upper(n, std::vector<SymFun>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      SymFun entry;
      for (const auto& ej : a.row(-lam[j], 0)) {
        const int r = -ej.j;
        for (const auto& ei : a.row(-lam[i], r)) {
          const int k = -ei.j;
          const SymFun& qkr = q(k, r);
          if (qkr.is_zero()) continue;
          entry.add_scaled(ei.value * ej.value, qkr);
        }
      }
      upper[i][j] = std::move(entry);
    }
  }
  return pfaffian(SkewMatrix::from_upper(std::move(upper)));
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::True: return "true";
    case Verdict::False: return "false";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// matrix identities

namespace {

// (B A)_{ij}, or nullopt when the k-range cannot be bounded.
std::optional<CoefPoly> product_entry(const RowFiniteMatrix& b, const RowFiniteMatrix& a, int i,
                                      int j, std::optional<int> k_min = {},
                                      std::optional<int> k_max = {}) {
  auto last = a.last_row_in_column(j);
  if (!last) return std::nullopt;
  int hi = *last;
  if (k_max) hi = std::min(hi, *k_max);
  CoefPoly sum;
  if (hi == kEmptyColumn) return sum;
  for (const auto& e : b.row(i, hi)) {
    if (k_min && e.j < *k_min) continue;
    CoefPoly v = a.entry(e.j, j);
    if (!v.is_zero()) sum.add_product(e.value, v);
  }
  return sum;
}

CheckResult combine(CheckResult a, const CheckResult& b) {
  if (a.verdict == Verdict::False) return a;
  if (b.verdict == Verdict::False) return b;
  if (a.verdict == Verdict::Inconclusive) return a;
  return b;
}

Window clip(Window w, int lo, int hi) { return {std::max(w.lo, lo), std::min(w.hi, hi)}; }

std::vector<SymFun> basis_up_to(int degree, bool odd_only) {
  std::vector<SymFun> out;
  for (int d = 0; d <= degree; ++d)
    for (const auto& mu : odd_only ? odd_partitions_of(d) : partitions_of(d))
      out.push_back(SymFun::p(mu));
  return out;
}

}  // namespace

CheckResult check_inverse(const RowFiniteMatrix& a, const RowFiniteMatrix& b, Window w) {
  for (int i = w.lo; i <= w.hi; ++i)
    for (int j = w.lo; j <= w.hi; ++j) {
      auto v = product_entry(b, a, i, j);
      if (!v) return CheckResult::unknown("column bound of " + a.name() + " unknown at " + std::to_string(j));
      if (!(*v == CoefPoly(i == j ? 1 : 0))) return CheckResult::fail("(BA)" + idx(i, j) + " = " + v->to_string());
    }
  return {};
}

ChargedState psi_plus_transformed(const RowFiniteMatrix& a, int k, const ChargedState& s) {
  if (s.is_zero()) return {};
  // psi+_[i](z^c f) = z^{c+1} core+_{i+c}(f); vanishes for i + c > pdeg
  auto weights = as_weights(a.row(k, s.body.pdeg() - s.charge), s.charge);
  if (weights.empty()) return {};
  return {s.charge + 1,
          FieldAction(field_operator(FieldKind::psi_plus()), s.body).combine(weights)};
}

ChargedState psi_minus_transformed(const RowFiniteMatrix& b, int k, const ChargedState& s) {
  if (s.is_zero()) return {};
  auto weights = as_weights(b.row(k, s.body.pdeg() + s.charge), -s.charge);
  if (weights.empty()) return {};
  return {s.charge - 1,
          FieldAction(field_operator(FieldKind::psi_minus()), s.body).combine(weights)};
}

SymFun phi_transformed(const RowFiniteMatrix& a, int k, const SymFun& f) {
  if (!f.in_odd_subring()) throw std::invalid_argument("phi: argument not in B_odd");
  if (f.is_zero()) return {};
  auto weights = as_weights(a.row(k, f.pdeg()));
  if (weights.empty()) return {};
  return FieldAction(field_operator(FieldKind::phi()), f).combine(weights);
}

SymFun heisenberg(int k, const SymFun& f) {
  if (k == 0) return {};
  if (k < 0) return SymFun::p(-k) * f;
  DiffOperator d;
  d.terms.emplace(Partition{k}, CoefPoly(k));
  return apply_diff(d, f);
}

SymFun heisenberg_transformed(const RowFiniteMatrix& a, int k, const SymFun& f) {
  SymFun out;
  if (f.is_zero()) return out;
  for (const auto& e : a.row(k, f.pdeg())) out.add_scaled(e.value, heisenberg(e.j, f));
  return out;
}

CheckResult check_fermion_preservation(const RowFiniteMatrix& a, const RowFiniteMatrix& b, Window w) {
  // sum_i A_{k,i} B_{m,1-i} = delta_{k+m,1}
  for (int k = w.lo; k <= w.hi; ++k)
    for (int m = w.lo; m <= w.hi; ++m) {
      CoefPoly sum;
      const int hi = 1 - b.cutoff(m);
      if (b.cutoff(m) != kEmptyRow)
        for (const auto& e : a.row(k, hi)) sum.add_product(e.value, b.entry(m, 1 - e.j));
      if (!(sum == CoefPoly(k + m == 1 ? 1 : 0)))
        return CheckResult::fail("coefficient condition at " + idx(k, m) + ": " + sum.to_string());
    }
  // anticommutators on basis states
  Window ow = clip(w, -3, 3);
  for (const auto& f : basis_up_to(2, false))
    for (int c = -1; c <= 1; ++c) {
      ChargedState s{c, f};
      for (int k = ow.lo; k <= ow.hi; ++k)
        for (int m = ow.lo; m <= ow.hi; ++m) {
          ChargedState x = psi_plus_transformed(a, k, psi_minus_transformed(b, m, s));
          ChargedState y = psi_minus_transformed(b, m, psi_plus_transformed(a, k, s));
          SymFun sum = x.body + y.body;
          if (k + m == 1) sum -= f;
          if (!sum.is_zero())
            return CheckResult::fail("[psi+~, psi-~] at " + idx(k, m) + " on z^" + std::to_string(c) +
                                     " " + f.to_string());
          ChargedState pp1 = psi_plus_transformed(a, k, psi_plus_transformed(a, m, s));
          ChargedState pp2 = psi_plus_transformed(a, m, psi_plus_transformed(a, k, s));
          if (!(pp1.body + pp2.body).is_zero())
            return CheckResult::fail("[psi+~, psi+~] at " + idx(k, m));
          ChargedState mm1 = psi_minus_transformed(b, k, psi_minus_transformed(b, m, s));
          ChargedState mm2 = psi_minus_transformed(b, m, psi_minus_transformed(b, k, s));
          if (!(mm1.body + mm2.body).is_zero())
            return CheckResult::fail("[psi-~, psi-~] at " + idx(k, m));
        }
    }
  return {};
}

CheckResult check_neutral_preservation(const RowFiniteMatrix& a, Window w) {
  // sum_i A_{k,i} (-1)^i A_{m,-i} = (-1)^m delta_{k+m,0}
  for (int k = w.lo; k <= w.hi; ++k)
    for (int m = w.lo; m <= w.hi; ++m) {
      CoefPoly sum;
      if (a.cutoff(m) != kEmptyRow)
        for (const auto& e : a.row(k, -a.cutoff(m))) {
          CoefPoly v = a.entry(m, -e.j);
          if (v.is_zero()) continue;
          sum.add_product(e.value, e.j % 2 == 0 ? v : -v);
        }
      CoefPoly expect = k + m == 0 ? CoefPoly(m % 2 == 0 ? 1 : -1) : CoefPoly();
      if (!(sum == expect))
        return CheckResult::fail("coefficient condition at " + idx(k, m) + ": " + sum.to_string());
    }
  Window ow = clip(w, -3, 3);
  for (const auto& f : basis_up_to(3, true))
    for (int k = ow.lo; k <= ow.hi; ++k)
      for (int m = ow.lo; m <= ow.hi; ++m) {
        SymFun sum = phi_transformed(a, k, phi_transformed(a, m, f)) +
                     phi_transformed(a, m, phi_transformed(a, k, f));
        if (k + m == 0) sum -= CoefPoly(m % 2 == 0 ? 2 : -2) * f;
        if (!sum.is_zero())
          return CheckResult::fail("[phi~, phi~] at " + idx(k, m) + " on " + f.to_string());
      }
  return {};
}

CheckResult check_heisenberg_preservation(const RowFiniteMatrix& a, Window w) {
  // sum_i A_{k,i} i A_{m,-i} = k delta_{k,-m}
  for (int k = w.lo; k <= w.hi; ++k)
    for (int m = w.lo; m <= w.hi; ++m) {
      CoefPoly sum;
      if (a.cutoff(m) != kEmptyRow)
        for (const auto& e : a.row(k, -a.cutoff(m))) {
          CoefPoly v = a.entry(m, -e.j);
          if (v.is_zero() || e.j == 0) continue;
          sum.add_product(e.value * Rat(e.j), v);
        }
      if (!(sum == CoefPoly(k + m == 0 ? k : 0)))
        return CheckResult::fail("coefficient condition at " + idx(k, m) + ": " + sum.to_string());
    }
  Window ow = clip(w, -3, 3);
  for (const auto& f : basis_up_to(2, false))
    for (int k = ow.lo; k <= ow.hi; ++k)
      for (int m = ow.lo; m <= ow.hi; ++m) {
        SymFun comm = heisenberg_transformed(a, k, heisenberg_transformed(a, m, f)) -
                      heisenberg_transformed(a, m, heisenberg_transformed(a, k, f));
        if (k + m == 0) comm -= CoefPoly(k) * f;
        if (!comm.is_zero())
          return CheckResult::fail("[alpha~, alpha~] at " + idx(k, m) + " on " + f.to_string());
      }
  return {};
}

bool has_block_shape(const RowFiniteMatrix& a, Window w) {
  for (int i = w.lo; i <= w.hi; ++i) {
    if (i > 0 && !a.row(i, -1).empty()) return false;
    if (i < 0)
      for (const auto& e : a.row(i, w.hi))
        if (e.j >= 0) return false;
  }
  auto r0 = a.row(0, w.hi);
  if (r0.size() != 1 || r0[0].j != 0 || !(r0[0].value == CoefPoly(1))) return false;
  for (int i = w.lo; i <= w.hi; ++i)
    if (i != 0 && !a.entry(i, 0).is_zero()) return false;
  return true;
}

CheckResult delta_reexpansion_check(const RowFiniteMatrix& a, Window w) {
  const RowFiniteMatrix* inv = a.inverse();
  if (!inv) return CheckResult::unknown("no inverse supplied for " + a.name());
  // coefficient of x^{-r} y^p is sum_k Ainv_{-r,-k} A_{-k,-p}
  CheckResult res;
  for (int r = w.lo; r <= w.hi; ++r)
    for (int p = w.lo; p <= w.hi; ++p) {
      auto v = product_entry(*inv, a, -r, -p);
      if (!v) return CheckResult::unknown("column bound unknown at " + std::to_string(-p));
      if (!(*v == CoefPoly(r == p ? 1 : 0)))
        return CheckResult::fail("full sum at x^" + std::to_string(-r) + " y^" + std::to_string(p));
    }
  if (!(has_block_shape(a, w) && has_block_shape(*inv, w))) return res;
  // k >= 0 gives sum_{k>=0} y^k/x^k, k < 0 gives sum_{k>=1} x^k/y^k
  for (int r = w.lo; r <= w.hi; ++r)
    for (int p = w.lo; p <= w.hi; ++p) {
      auto nonneg = product_entry(*inv, a, -r, -p, std::nullopt, 0);
      auto neg = product_entry(*inv, a, -r, -p, 1, std::nullopt);
      if (!nonneg || !neg) return CheckResult::unknown("column bound unknown");
      if (!(*nonneg == CoefPoly(r == p && r >= 0 ? 1 : 0)))
        res = combine(res, CheckResult::fail("k>=0 split at " + idx(r, p)));
      if (!(*neg == CoefPoly(r == p && r < 0 ? 1 : 0)))
        res = combine(res, CheckResult::fail("k<0 split at " + idx(r, p)));
    }
  return res;
}

}  // namespace symf
