#include "symf/coefpoly.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <shared_mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace symf {

// ---------------------------------------------------------------------------
// rationals

Rat parse_rat(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw ParseError("empty rational");
  std::size_t pos = 0;
  if (s[0] == '+' || s[0] == '-') pos = 1;
  bool seen_slash = false;
  bool digit_before = false;
  bool digit_after = false;
  for (std::size_t i = pos; i < s.size(); ++i) {
    char c = s[i];
    if (c == '/') {
      if (seen_slash) throw ParseError("malformed rational '" + s + "'");
      seen_slash = true;
    } else if (c >= '0' && c <= '9') {
      (seen_slash ? digit_after : digit_before) = true;
    } else {
      throw ParseError("malformed rational '" + s + "'");
    }
  }
  if (!digit_before || (seen_slash && !digit_after))
    throw ParseError("malformed rational '" + s + "'");
  if (s[0] == '+') s.erase(0, 1);
  Rat r;
  if (r.set_str(s, 10) != 0) throw ParseError("malformed rational '" + s + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

std::string rat_to_string(const Rat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

BigInt binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n),
                 static_cast<unsigned long>(k));
    return out;
  }
  // C(n, k) = (-1)^k C(k - n - 1, k) for n < 0.
  BigInt out = binomial(k - n - 1, k);
  return (k % 2 == 0) ? out : BigInt(-out);
}

// ---------------------------------------------------------------------------
// parameter table

namespace {

struct ParamTable {
  std::shared_mutex mutex;
  std::unordered_map<std::string, ParamId> ids;
  std::deque<std::string> names;
};

ParamTable& table() {
  static ParamTable t;
  return t;
}

}  // namespace

ParamId param_id(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("empty parameter name");
  auto& t = table();
  {
    std::shared_lock lock(t.mutex);
    auto it = t.ids.find(name);
    if (it != t.ids.end()) return it->second;
  }
  std::unique_lock lock(t.mutex);
  auto it = t.ids.find(name);
  if (it != t.ids.end()) return it->second;
  if (t.names.size() >= 0xFFFF) throw std::length_error("too many parameters");
  auto id = static_cast<ParamId>(t.names.size());
  t.names.push_back(name);
  t.ids.emplace(name, id);
  return id;
}

const std::string& param_name(ParamId id) {
  auto& t = table();
  std::shared_lock lock(t.mutex);
  if (id >= t.names.size()) throw std::out_of_range("unknown parameter id");
  return t.names[id];
}

// ---------------------------------------------------------------------------
// Monomial

Monomial Monomial::of(ParamId id, std::uint32_t exponent) {
  Monomial m;
  if (exponent > 0) m.factors_.emplace_back(id, exponent);
  return m;
}

std::uint32_t Monomial::exponent(ParamId id) const {
  for (const auto& [p, e] : factors_)
    if (p == id) return e;
  return 0;
}

std::uint32_t Monomial::degree() const {
  std::uint32_t d = 0;
  for (const auto& f : factors_) d += f.second;
  return d;
}

Monomial Monomial::operator*(const Monomial& other) const {
  if (other.factors_.empty()) return *this;
  if (factors_.empty()) return other;
  Monomial out;
  out.factors_.reserve(factors_.size() + other.factors_.size());
  auto a = factors_.begin();
  auto b = other.factors_.begin();
  while (a != factors_.end() && b != other.factors_.end()) {
    if (a->first < b->first) {
      out.factors_.push_back(*a++);
    } else if (b->first < a->first) {
      out.factors_.push_back(*b++);
    } else {
      out.factors_.emplace_back(a->first, a->second + b->second);
      ++a;
      ++b;
    }
  }
  out.factors_.insert(out.factors_.end(), a, factors_.end());
  out.factors_.insert(out.factors_.end(), b, other.factors_.end());
  return out;
}

std::pair<Monomial, std::uint32_t> Monomial::split(ParamId id) const {
  Monomial rest;
  std::uint32_t e = 0;
  for (const auto& f : factors_) {
    if (f.first == id)
      e = f.second;
    else
      rest.factors_.push_back(f);
  }
  return {rest, e};
}

// ---------------------------------------------------------------------------
// CoefPoly

CoefPoly::CoefPoly(const Rat& c) {
  if (c != 0) terms_.push_back({Monomial(), c});
}

CoefPoly CoefPoly::param(const std::string& name, std::uint32_t exponent) {
  CoefPoly p;
  p.terms_.push_back({Monomial::of(param_id(name), exponent), Rat(1)});
  return p;
}

CoefPoly CoefPoly::from_terms(std::vector<Term> terms) {
  CoefPoly p;
  p.terms_ = std::move(terms);
  p.normalize();
  return p;
}

void CoefPoly::normalize() {
  std::sort(terms_.begin(), terms_.end(),
            [](const Term& a, const Term& b) { return a.mono < b.mono; });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono)
      out.back().coef += t.coef;
    else
      out.push_back(std::move(t));
  }
  std::erase_if(out, [](const Term& t) { return t.coef == 0; });
  terms_ = std::move(out);
}

bool CoefPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
}

Rat CoefPoly::constant() const {
  if (!terms_.empty() && terms_[0].mono.is_one()) return terms_[0].coef;
  return Rat(0);
}

std::vector<ParamId> CoefPoly::params() const {
  std::vector<ParamId> out;
  for (const auto& t : terms_)
    for (const auto& f : t.mono.factors()) out.push_back(f.first);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::uint32_t CoefPoly::degree_in(ParamId id) const {
  std::uint32_t d = 0;
  for (const auto& t : terms_) d = std::max(d, t.mono.exponent(id));
  return d;
}

namespace {

// Merge `b` (scaled by sign) into sorted `a`.
void merge_into(std::vector<CoefPoly::Term>& a,
                const std::vector<CoefPoly::Term>& b, bool negate) {
  if (b.empty()) return;
  if (a.empty()) {
    a = b;
    if (negate)
      for (auto& t : a) t.coef = -t.coef;
    return;
  }
  // Fast path for the very common constant + constant case.
  if (a.size() == 1 && b.size() == 1 && a[0].mono == b[0].mono) {
    if (negate)
      a[0].coef -= b[0].coef;
    else
      a[0].coef += b[0].coef;
    if (a[0].coef == 0) a.clear();
    return;
  }
  std::vector<CoefPoly::Term> out;
  out.reserve(a.size() + b.size());
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (i->mono < j->mono) {
      out.push_back(std::move(*i++));
    } else if (j->mono < i->mono) {
      out.push_back(*j++);
      if (negate) out.back().coef = -out.back().coef;
    } else {
      Rat c = negate ? Rat(i->coef - j->coef) : Rat(i->coef + j->coef);
      if (c != 0) out.push_back({std::move(i->mono), std::move(c)});
      ++i;
      ++j;
    }
  }
  for (; i != a.end(); ++i) out.push_back(std::move(*i));
  for (; j != b.end(); ++j) {
    out.push_back(*j);
    if (negate) out.back().coef = -out.back().coef;
  }
  a = std::move(out);
}

}  // namespace

CoefPoly& CoefPoly::operator+=(const CoefPoly& other) {
  merge_into(terms_, other.terms_, false);
  return *this;
}

CoefPoly& CoefPoly::operator-=(const CoefPoly& other) {
  merge_into(terms_, other.terms_, true);
  return *this;
}

CoefPoly operator*(const CoefPoly& a, const CoefPoly& b) {
  CoefPoly out;
  if (a.terms_.empty() || b.terms_.empty()) return out;
  if (a.terms_.size() == 1 && b.terms_.size() == 1) {
    out.terms_.push_back({a.terms_[0].mono * b.terms_[0].mono,
                          a.terms_[0].coef * b.terms_[0].coef});
    return out;
  }
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& x : a.terms_)
    for (const auto& y : b.terms_) out.terms_.push_back({x.mono * y.mono, x.coef * y.coef});
  out.normalize();
  return out;
}

CoefPoly& CoefPoly::operator*=(const CoefPoly& other) {
  *this = *this * other;
  return *this;
}

CoefPoly& CoefPoly::operator*=(const Rat& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& t : terms_) t.coef *= c;
  return *this;
}

void CoefPoly::add_product(const CoefPoly& a, const CoefPoly& b) {
  if (a.terms_.empty() || b.terms_.empty()) return;
  if (a.terms_.size() == 1 && b.terms_.size() == 1 && terms_.size() <= 1) {
    Monomial m = a.terms_[0].mono * b.terms_[0].mono;
    if (terms_.empty()) {
      terms_.push_back({std::move(m), a.terms_[0].coef * b.terms_[0].coef});
      return;
    }
    if (terms_[0].mono == m) {
      terms_[0].coef += a.terms_[0].coef * b.terms_[0].coef;
      if (terms_[0].coef == 0) terms_.clear();
      return;
    }
  }
  *this += a * b;
}

CoefPoly CoefPoly::operator-() const {
  CoefPoly out = *this;
  for (auto& t : out.terms_) t.coef = -t.coef;
  return out;
}

CoefPoly CoefPoly::pow(unsigned e) const {
  CoefPoly result(Rat(1));
  CoefPoly base = *this;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

CoefPoly CoefPoly::substitute(ParamId id, const Rat& value) const {
  CoefPoly out;
  out.terms_.reserve(terms_.size());
  for (const auto& t : terms_) {
    auto [rest, e] = t.mono.split(id);
    Rat c = t.coef;
    if (e > 0) {
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), value.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), value.get_den_mpz_t(), e);
      p.canonicalize();
      c *= p;
    }
    out.terms_.push_back({std::move(rest), std::move(c)});
  }
  out.normalize();
  return out;
}

CoefPoly CoefPoly::truncate(ParamId id, std::uint32_t max_exponent) const {
  CoefPoly out;
  for (const auto& t : terms_)
    if (t.mono.exponent(id) <= max_exponent) out.terms_.push_back(t);
  return out;
}

Rat CoefPoly::evaluate(const std::map<std::string, Rat>& assign) const {
  Rat total = 0;
  for (const auto& t : terms_) {
    Rat v = t.coef;
    for (const auto& [id, e] : t.mono.factors()) {
      const std::string& name = param_name(id);
      auto it = assign.find(name);
      if (it == assign.end())
        throw std::invalid_argument("unassigned parameter '" + name + "'");
      Rat p;
      mpz_pow_ui(p.get_num_mpz_t(), it->second.get_num_mpz_t(), e);
      mpz_pow_ui(p.get_den_mpz_t(), it->second.get_den_mpz_t(), e);
      p.canonicalize();
      v *= p;
    }
    total += v;
  }
  return total;
}

bool operator==(const CoefPoly& a, const CoefPoly& b) {
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coef != b.terms_[i].coef)
      return false;
  return true;
}

std::string CoefPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << " + ";
    first = false;
    os << rat_to_string(t.coef);
    for (const auto& [id, e] : t.mono.factors()) {
      os << "*" << param_name(id);
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

}  // namespace symf
