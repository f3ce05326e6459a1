#include "symf/symfun.hpp"

#include <deque>
#include <functional>
#include <mutex>
#include <sstream>

namespace symf {

SymFun::SymFun(const CoefPoly& c) {
  if (!c.is_zero()) terms_.emplace(Partition(), c);
}

SymFun SymFun::p(const Partition& mu, const CoefPoly& coef) {
  SymFun f;
  if (!coef.is_zero()) f.terms_.emplace(mu, coef);
  return f;
}

SymFun SymFun::p(int k) {
  if (k < 0) return SymFun();
  if (k == 0) return SymFun(1);
  return p(Partition{k});
}

int SymFun::pdeg() const {
  int d = -1;
  for (const auto& [mu, c] : terms_) d = std::max(d, mu.weight());
  return d;
}

CoefPoly SymFun::coefficient(const Partition& mu) const {
  auto it = terms_.find(mu);
  return it == terms_.end() ? CoefPoly() : it->second;
}

bool SymFun::in_odd_subring() const {
  for (const auto& [mu, c] : terms_)
    if (!mu.all_odd()) return false;
  return true;
}

bool SymFun::rational() const {
  for (const auto& [mu, c] : terms_)
    if (!c.is_constant()) return false;
  return true;
}

void SymFun::add_term(const Partition& mu, const CoefPoly& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mu, coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymFun::add_term(Partition&& mu, const CoefPoly& coef) {
  if (coef.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(std::move(mu), coef);
  if (!inserted) {
    it->second += coef;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void SymFun::add_product(const SymFun& a, const SymFun& b) {
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) {
      Partition key = ma.empty() ? mb : (mb.empty() ? ma : ma.merged(mb));
      auto [it, inserted] = terms_.try_emplace(std::move(key));
      it->second.add_product(ca, cb);
      if (it->second.is_zero()) terms_.erase(it);
    }
  }
}

void SymFun::add_scaled(const CoefPoly& c, const SymFun& a) {
  if (c.is_zero()) return;
  for (const auto& [m, ca] : a.terms_) {
    auto [it, inserted] = terms_.try_emplace(m);
    it->second.add_product(c, ca);
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFun& SymFun::operator+=(const SymFun& other) {
  for (const auto& [mu, c] : other.terms_) add_term(mu, c);
  return *this;
}

SymFun& SymFun::operator-=(const SymFun& other) {
  for (const auto& [mu, c] : other.terms_) add_term(mu, -c);
  return *this;
}

SymFun& SymFun::operator*=(const CoefPoly& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto it = terms_.begin(); it != terms_.end();) {
    it->second *= c;
    if (it->second.is_zero())
      it = terms_.erase(it);
    else
      ++it;
  }
  return *this;
}

SymFun operator*(const SymFun& a, const SymFun& b) {
  SymFun out;
  out.add_product(a, b);
  return out;
}

SymFun SymFun::operator-() const {
  SymFun out = *this;
  for (auto& [mu, c] : out.terms_) c = -c;
  return out;
}

SymFun SymFun::substitute(ParamId id, const Rat& value) const {
  SymFun out;
  for (const auto& [mu, c] : terms_) out.add_term(mu, c.substitute(id, value));
  return out;
}

SymFun SymFun::truncate(ParamId id, std::uint32_t max_exponent) const {
  SymFun out;
  for (const auto& [mu, c] : terms_) out.add_term(mu, c.truncate(id, max_exponent));
  return out;
}

SymFun SymFun::component(int d) const {
  SymFun out;
  for (const auto& [mu, c] : terms_)
    if (mu.weight() == d) out.terms_.emplace(mu, c);
  return out;
}

std::string SymFun::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    if (!first) os << " + ";
    first = false;
    os << "(" << it->second.to_string() << ")";
    for (int part : it->first.parts()) os << "*p" << part;
  }
  return os.str();
}

SymFun add(const SymFun& f, const SymFun& g) { return f + g; }
SymFun mul(const SymFun& f, const SymFun& g) { return f * g; }
SymFun scale(const CoefPoly& c, const SymFun& f) { return c * f; }

// ---------------------------------------------------------------------------
// generators

namespace {

// Memo for a sequence defined by k*g_k = sum_{i=1}^k w(i) p_i g_{k-i}.
class NewtonSequence {
 public:
  explicit NewtonSequence(std::function<Rat(int)> weight) : weight_(std::move(weight)) {
    values_.emplace_back(1);
  }

  const SymFun& get(int k) {
    static const SymFun zero;
    if (k < 0) return zero;
    std::lock_guard lock(mutex_);
    while (static_cast<int>(values_.size()) <= k) {
      int n = static_cast<int>(values_.size());
      SymFun next;
      for (int i = 1; i <= n; ++i) {
        Rat w = weight_(i);
        if (w == 0) continue;
        next.add_product(SymFun::p(Partition::unchecked({i}), CoefPoly(w / n)),
                         values_[n - i]);
      }
      values_.push_back(std::move(next));
    }
    return values_[k];
  }

 private:
  std::function<Rat(int)> weight_;
  std::mutex mutex_;
  std::deque<SymFun> values_;  // append-only; references stay valid
};

}  // namespace

const SymFun& gen_h(int k) {
  static NewtonSequence seq([](int) { return Rat(1); });
  return seq.get(k);
}

const SymFun& gen_e(int k) {
  static NewtonSequence seq([](int i) { return Rat(i % 2 == 1 ? 1 : -1); });
  return seq.get(k);
}

const SymFun& gen_q(int k) {
  static NewtonSequence seq([](int i) { return Rat(i % 2 == 1 ? 2 : 0); });
  return seq.get(k);
}

// ---------------------------------------------------------------------------
// adjoints

DiffOperator adjoint(const SymFun& f) {
  DiffOperator d;
  for (const auto& [mu, c] : f.terms()) {
    Rat factor = 1;
    for (int part : mu.parts()) factor *= part;
    d.terms.emplace(mu, c * factor);
  }
  return d;
}

SymFun apply_diff(const DiffOperator& d, const SymFun& f) {
  SymFun out;
  for (const auto& [nu, dc] : d.terms) {
    auto nm = nu.multiplicities();
    for (const auto& [mu, fc] : f.terms()) {
      if (nu.weight() > mu.weight()) continue;
      auto mm = mu.multiplicities();
      if (mm.size() < nm.size()) continue;
      bool fits = true;
      BigInt falling = 1;
      for (std::size_t k = 1; k < nm.size() && fits; ++k) {
        if (nm[k] > mm[k]) {
          fits = false;
          break;
        }
        for (int j = 0; j < nm[k]; ++j) falling *= (mm[k] - j);
      }
      if (!fits) continue;
      std::vector<int> rest;
      for (std::size_t k = mm.size() - 1; k >= 1; --k) {
        int keep = mm[k] - (k < nm.size() ? nm[k] : 0);
        for (int j = 0; j < keep; ++j) rest.push_back(static_cast<int>(k));
      }
      out.add_term(Partition::unchecked(std::move(rest)), dc * fc * Rat(falling));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// evaluation and inner product

namespace {

std::vector<Rat> power_sums(const std::vector<Rat>& xs, int max_k) {
  std::vector<Rat> sums(static_cast<std::size_t>(std::max(max_k, 0)) + 1, Rat(0));
  sums[0] = 1;
  for (const auto& x : xs) {
    Rat pw = 1;
    for (int k = 1; k <= max_k; ++k) {
      pw *= x;
      sums[k] += pw;
    }
  }
  return sums;
}

int max_part(const SymFun& f) {
  int m = 0;
  for (const auto& [mu, c] : f.terms())
    if (!mu.empty()) m = std::max(m, mu[0]);
  return m;
}

}  // namespace

Rat evaluate(const SymFun& f, const std::vector<Rat>& xs,
             const std::map<std::string, Rat>& assign) {
  auto sums = power_sums(xs, max_part(f));
  Rat total = 0;
  for (const auto& [mu, c] : f.terms()) {
    Rat v = c.evaluate(assign);
    if (v == 0) continue;
    for (int part : mu.parts()) v *= sums[part];
    total += v;
  }
  return total;
}

CoefPoly evaluate_symbolic(const SymFun& f, const std::vector<Rat>& xs) {
  auto sums = power_sums(xs, max_part(f));
  CoefPoly total;
  for (const auto& [mu, c] : f.terms()) {
    Rat v = 1;
    for (int part : mu.parts()) v *= sums[part];
    total += c * v;
  }
  return total;
}

CoefPoly hall_inner(const SymFun& f, const SymFun& g) {
  CoefPoly out;
  for (const auto& [mu, c] : f.terms()) {
    auto it = g.terms().find(mu);
    if (it == g.terms().end()) continue;
    out += c * it->second * Rat(mu.z());
  }
  return out;
}

}  // namespace symf
