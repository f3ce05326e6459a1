#ifndef SYMF_TAU_HPP
#define SYMF_TAU_HPP

#include <map>
#include <optional>
#include <utility>

#include "symf/vertex.hpp"

namespace symf {

// Finite sum of c * (z^m p_mu) (x) (z^m' p_nu). BKP residues use charge 0.
class TensorElt {
 public:
  struct Key {
    int charge = 0;
    Partition mu;
    friend bool operator==(const Key&, const Key&) = default;
    friend auto operator<=>(const Key&, const Key&) = default;
  };
  using Pair = std::pair<Key, Key>;
  using Map = std::map<Pair, CoefPoly>;

  TensorElt() = default;
  explicit TensorElt(Map terms);

  const Map& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  // Smallest offending pair, if any.
  std::optional<std::pair<Pair, CoefPoly>> first() const;

 private:
  Map terms_;
};

// Accumulates sum_i c_i a_i (x) b_i with interned keys.
class TensorBuilder {
 public:
  void add_outer(const ChargedState& a, const ChargedState& b, const CoefPoly& scale = CoefPoly(1));
  TensorElt finish() const;

 private:
  int intern(const TensorElt::Key& key);
  std::map<TensorElt::Key, int> index_;
  std::vector<TensorElt::Key> keys_;
  std::map<std::pair<int, int>, CoefPoly> acc_;
};

// sum_r psi+_[r](tau) (x) psi-_[1-r](tau) over r in [1-m-d-pad, d-m+pad].
TensorElt kp_residue(const ChargedState& tau, int pad = 0);
bool is_kp_tau(const ChargedState& tau);

// sum_n (-1)^n phi_n(tau) (x) phi_{-n}(tau) - tau (x) tau over n in [-d-pad, d+pad].
// Throws std::invalid_argument unless tau lies in B_odd.
TensorElt bkp_residue(const SymFun& tau, int pad = 0);
bool is_bkp_tau(const SymFun& tau);

}  // namespace symf

#endif
