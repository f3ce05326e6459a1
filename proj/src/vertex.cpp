#include "symf/vertex.hpp"

#include <map>
#include <memory>
#include <stdexcept>

#include "symf/det.hpp"

namespace symf {

std::string FieldKind::to_string() const {
  switch (tag) {
    case Tag::GammaPlus: return "GammaPlus";
    case Tag::GammaMinus: return "GammaMinus";
    case Tag::GammaPlusAt: return "GammaPlusAt(" + rat_to_string(t0) + ")";
    case Tag::Phi: return "Phi";
    case Tag::PsiPlus: return "PsiPlus";
    case Tag::PsiMinus: return "PsiMinus";
  }
  return "?";
}

VertexOperator::VertexOperator(Rate alpha, Rate beta)
    : alpha_fn_(std::move(alpha)), beta_fn_(std::move(beta)) {}

const CoefPoly& VertexOperator::rate_locked(std::deque<CoefPoly>& cache, const Rate& fn,
                                            int n) const {
  while (static_cast<int>(cache.size()) < n) cache.push_back(fn(static_cast<int>(cache.size()) + 1));
  return cache[n - 1];
}

const CoefPoly& VertexOperator::shift(int n) const {
  std::lock_guard lock(mutex_);
  return rate_locked(beta_, beta_fn_, n);
}

const SymFun& VertexOperator::mult_coeff(int a) const {
  static const SymFun zero;
  if (a < 0) return zero;
  std::lock_guard lock(mutex_);
  if (mult_.empty()) mult_.emplace_back(1);
  // a S_a = sum_{i=1}^a i alpha_i p_i S_{a-i}
  while (static_cast<int>(mult_.size()) <= a) {
    int n = static_cast<int>(mult_.size());
    SymFun next;
    for (int i = 1; i <= n; ++i) {
      CoefPoly w = rate_locked(alpha_, alpha_fn_, i) * ratio(i, n);
      if (w.is_zero()) continue;
      next.add_product(SymFun::p(Partition::unchecked({i}), w), mult_[n - i]);
    }
    mult_.push_back(std::move(next));
  }
  return mult_[a];
}

std::vector<SymFun> VertexOperator::translate(const SymFun& f) const {
  int top = f.pdeg();
  std::vector<SymFun> out(static_cast<std::size_t>(std::max(top, -1) + 1));
  if (top < 0) return out;
  std::vector<CoefPoly> beta(static_cast<std::size_t>(top) + 1);
  for (int n = 1; n <= top; ++n) beta[n] = shift(n);

  std::vector<int> keep;
  for (const auto& [mu, coef] : f.terms()) {
    auto mm = mu.multiplicities();
    const int kmax = static_cast<int>(mm.size()) - 1;
    keep.assign(mm.begin(), mm.end());
    // walk distinct parts from the largest down, choosing how many to shift
    auto rec = [&](auto&& self, int k, int c, const CoefPoly& weight) -> void {
      if (k == 0) {
        std::vector<int> rest;
        for (int q = kmax; q >= 1; --q)
          for (int j = 0; j < keep[q]; ++j) rest.push_back(q);
        out[c].add_term(Partition::unchecked(std::move(rest)), weight);
        return;
      }
      const int m = mm[k];
      if (m == 0 || beta[k].is_zero()) {
        self(self, k - 1, c, weight);
        return;
      }
      CoefPoly w = weight;
      for (int j = 0; j <= m; ++j) {
        keep[k] = m - j;
        self(self, k - 1, c + j * k, w * Rat(binomial(m, j)));
        w *= beta[k];
      }
      keep[k] = m;
    };
    rec(rec, kmax, 0, coef);
  }
  return out;
}

SymFun VertexOperator::coeff(int k, const SymFun& f) const {
  return FieldAction(*this, f).coeff(k);
}

FieldAction::FieldAction(const VertexOperator& op, const SymFun& f)
    : op_(&op), shifted_(op.translate(f)) {}

SymFun FieldAction::coeff(int k) const {
  SymFun out;
  for (int c = std::max(0, k); c <= top(); ++c) {
    if (shifted_[c].is_zero()) continue;
    out.add_product(op_->mult_coeff(c - k), shifted_[c]);
  }
  return out;
}

SymFun FieldAction::combine(const std::vector<std::pair<int, CoefPoly>>& weights) const {
  SymFun out;
  for (int c = 0; c <= top(); ++c) {
    if (shifted_[c].is_zero()) continue;
    SymFun mult;
    for (const auto& [j, w] : weights)
      if (j <= c) mult.add_scaled(w, op_->mult_coeff(c - j));
    if (!mult.is_zero()) out.add_product(mult, shifted_[c]);
  }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

CoefPoly t_power(int n) { return CoefPoly::param(kParamT, static_cast<std::uint32_t>(n)); }

const VertexOperator& gamma_plus_op() {
  static const VertexOperator op([](int n) { return (CoefPoly(1) - t_power(n)) * ratio(1, n); },
                                 [](int) { return CoefPoly(-1); });
  return op;
}

const VertexOperator& gamma_minus_op() {
  static const VertexOperator op([](int n) { return (t_power(n) - CoefPoly(1)) * ratio(1, n); },
                                 [](int) { return CoefPoly(1); });
  return op;
}

const VertexOperator& gamma_plus_at_op(const Rat& t0) {
  static std::mutex mutex;
  static std::map<Rat, std::unique_ptr<VertexOperator>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[t0];
  if (!slot) {
    Rat t = t0;
    slot = std::make_unique<VertexOperator>(
        [t](int n) {
          Rat tn = 1;
          for (int i = 0; i < n; ++i) tn *= t;
          return CoefPoly((Rat(1) - tn) / n);
        },
        [](int) { return CoefPoly(-1); });
  }
  return *slot;
}

const VertexOperator& psi_minus_core() {
  static const VertexOperator op([](int n) { return CoefPoly(ratio(-1, n)); },
                                 [](int) { return CoefPoly(1); });
  return op;
}

}  // namespace

const VertexOperator& field_operator(const FieldKind& kind) {
  switch (kind.tag) {
    case FieldKind::Tag::GammaPlus: return gamma_plus_op();
    case FieldKind::Tag::GammaMinus: return gamma_minus_op();
    case FieldKind::Tag::GammaPlusAt: return gamma_plus_at_op(kind.t0);
    case FieldKind::Tag::Phi: return gamma_plus_at_op(Rat(-1));
    case FieldKind::Tag::PsiPlus: return gamma_plus_at_op(Rat(0));
    case FieldKind::Tag::PsiMinus: return psi_minus_core();
  }
  throw std::invalid_argument("unknown field kind");
}

SymFun gamma_plus(int k, const SymFun& f) { return gamma_plus_op().coeff(k, f); }
SymFun gamma_minus(int k, const SymFun& f) { return gamma_minus_op().coeff(k, f); }

SymFun field_coeff(const FieldKind& kind, int k, const SymFun& f) {
  return field_operator(kind).coeff(k, f);
}

SymFun iterate_field(const FieldKind& kind, const IntVec& lambda) {
  if (kind.tag != FieldKind::Tag::GammaPlus && kind.tag != FieldKind::Tag::GammaPlusAt)
    throw std::invalid_argument("iterate_field: kind must be GammaPlus or GammaPlusAt");
  const VertexOperator& op = field_operator(kind);
  SymFun f(1);
  for (auto it = lambda.rbegin(); it != lambda.rend() && !f.is_zero(); ++it) f = op.coeff(-*it, f);
  return f;
}

SymFun schur_jt(const IntVec& lambda) {
  const int l = static_cast<int>(lambda.size());
  Square<SymFun> m(l, std::vector<SymFun>(l));
  for (int i = 0; i < l; ++i)
    for (int j = 0; j < l; ++j) m[i][j] = gen_h(lambda[i] - i + j);
  return determinant(m);
}

ChargedState psi_plus(int r, const ChargedState& s) {
  if (s.is_zero()) return {};
  return {s.charge + 1, field_operator(FieldKind::psi_plus()).coeff(r + s.charge, s.body)};
}

ChargedState psi_minus(int r, const ChargedState& s) {
  if (s.is_zero()) return {};
  return {s.charge - 1, psi_minus_core().coeff(r - s.charge, s.body)};
}

SymFun phi(int j, const SymFun& f) {
  if (!f.in_odd_subring()) throw std::invalid_argument("phi: argument not in B_odd");
  return gamma_plus_at_op(Rat(-1)).coeff(j, f);
}

bool check_gamma_gamma(int a, int b, const SymFun& f) {
  const CoefPoly t = t_power(1);
  SymFun lhs = gamma_plus(a + 1, gamma_plus(b, f));
  lhs -= t * gamma_plus(a, gamma_plus(b + 1, f));
  lhs += gamma_plus(b + 1, gamma_plus(a, f));
  lhs -= t * gamma_plus(b, gamma_plus(a + 1, f));
  return lhs.is_zero();
}

bool check_gamma_cross(int a, int b, const SymFun& f) {
  const CoefPoly t = t_power(1);
  SymFun lhs = gamma_plus(a, gamma_minus(b + 1, f));
  lhs -= t * gamma_plus(a + 1, gamma_minus(b, f));
  lhs += gamma_minus(b, gamma_plus(a + 1, f));
  lhs -= t * gamma_minus(b + 1, gamma_plus(a, f));
  if (a + b == -1) {
    CoefPoly one_minus_t = CoefPoly(1) - t;
    lhs -= (one_minus_t * one_minus_t) * f;
  }
  return lhs.is_zero();
}

namespace {

// Sum of two states that must share a charge unless one is zero.
ChargedState plus_state(const ChargedState& x, const ChargedState& y) {
  if (x.is_zero()) return y;
  if (y.is_zero()) return x;
  if (x.charge != y.charge) throw std::logic_error("adding states of different charge");
  return {x.charge, x.body + y.body};
}

}  // namespace

bool check_charged_relations(int r, int s, const ChargedState& st) {
  ChargedState mixed = plus_state(psi_plus(r, psi_minus(s, st)), psi_minus(s, psi_plus(r, st)));
  ChargedState want = (r + s == 1) ? st : ChargedState{};
  if (!(mixed == want)) return false;
  if (!plus_state(psi_plus(r, psi_plus(s, st)), psi_plus(s, psi_plus(r, st))).is_zero()) return false;
  return plus_state(psi_minus(r, psi_minus(s, st)), psi_minus(s, psi_minus(r, st))).is_zero();
}

bool check_neutral_relations(int m, int n, const SymFun& f) {
  SymFun lhs = phi(m, phi(n, f)) + phi(n, phi(m, f));
  if (m + n == 0) lhs -= CoefPoly(m % 2 == 0 ? 2 : -2) * f;
  return lhs.is_zero();
}

}  // namespace symf
