#include "symf/tau.hpp"

#include <stdexcept>

namespace symf {

TensorElt::TensorElt(Map terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
}

std::optional<std::pair<TensorElt::Pair, CoefPoly>> TensorElt::first() const {
  if (terms_.empty()) return std::nullopt;
  return *terms_.begin();
}

int TensorBuilder::intern(const TensorElt::Key& key) {
  auto [it, fresh] = index_.try_emplace(key, static_cast<int>(keys_.size()));
  if (fresh) keys_.push_back(key);
  return it->second;
}

void TensorBuilder::add_outer(const ChargedState& a, const ChargedState& b, const CoefPoly& scale) {
  if (a.is_zero() || b.is_zero() || scale.is_zero()) return;
  std::vector<std::pair<int, const CoefPoly*>> right;
  right.reserve(b.body.size());
  for (const auto& [mu, c] : b.body.terms()) right.emplace_back(intern({b.charge, mu}), &c);
  for (const auto& [mu, ca] : a.body.terms()) {
    const int left = intern({a.charge, mu});
    CoefPoly lead = ca * scale;
    for (const auto& [r, cb] : right) {
      auto [it, fresh] = acc_.try_emplace({left, r});
      it->second.add_product(lead, *cb);
      if (it->second.is_zero()) acc_.erase(it);
    }
  }
}

TensorElt TensorBuilder::finish() const {
  TensorElt::Map out;
  for (const auto& [ij, c] : acc_) out.emplace(TensorElt::Pair{keys_[ij.first], keys_[ij.second]}, c);
  return TensorElt(std::move(out));
}

TensorElt kp_residue(const ChargedState& tau, int pad) {
  if (tau.is_zero()) return {};
  const int d = tau.body.pdeg();
  const int m = tau.charge;
  const FieldAction plus(field_operator(FieldKind::psi_plus()), tau.body);
  const FieldAction minus(field_operator(FieldKind::psi_minus()), tau.body);
  TensorBuilder acc;
  for (int r = 1 - m - d - pad; r <= d - m + pad; ++r) {
    ChargedState left{m + 1, plus.coeff(r + m)};
    if (left.is_zero()) continue;
    ChargedState right{m - 1, minus.coeff(1 - r - m)};
    acc.add_outer(left, right);
  }
  return acc.finish();
}

bool is_kp_tau(const ChargedState& tau) { return kp_residue(tau).is_zero(); }

TensorElt bkp_residue(const SymFun& tau, int pad) {
  if (!tau.in_odd_subring()) throw std::invalid_argument("bkp_residue: tau not in B_odd");
  if (tau.is_zero()) return {};
  const int d = tau.pdeg();
  const FieldAction phi_act(field_operator(FieldKind::phi()), tau);
  TensorBuilder acc;
  for (int n = -d - pad; n <= d + pad; ++n) {
    ChargedState left{0, phi_act.coeff(n)};
    if (left.is_zero()) continue;
    acc.add_outer(left, {0, phi_act.coeff(-n)}, CoefPoly(n % 2 == 0 ? 1 : -1));
  }
  acc.add_outer({0, tau}, {0, tau}, CoefPoly(-1));
  return acc.finish();
}

bool is_bkp_tau(const SymFun& tau) { return bkp_residue(tau).is_zero(); }

}  // namespace symf
