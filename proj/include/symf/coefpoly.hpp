#ifndef SYMF_COEFPOLY_HPP
#define SYMF_COEFPOLY_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symf/rational.hpp"

namespace symf {

// Parameter names (t, beta, a1, ...) are interned process-wide; ids are stable
// for the lifetime of the process. Serialization always goes through names.
using ParamId = std::uint16_t;

ParamId param_id(const std::string& name);
const std::string& param_name(ParamId id);

inline const std::string kParamT = "t";
inline const std::string kParamBeta = "beta";

// Product of parameter powers, factors sorted by id, exponents positive.
class Monomial {
 public:
  using Factor = std::pair<ParamId, std::uint32_t>;

  Monomial() = default;
  static Monomial of(ParamId id, std::uint32_t exponent = 1);

  const std::vector<Factor>& factors() const { return factors_; }
  bool is_one() const { return factors_.empty(); }
  std::uint32_t exponent(ParamId id) const;
  std::uint32_t degree() const;

  Monomial operator*(const Monomial& other) const;
  // Removes the factor for `id`, returning its exponent.
  std::pair<Monomial, std::uint32_t> split(ParamId id) const;

  friend bool operator==(const Monomial&, const Monomial&) = default;
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<Factor> factors_;
};

// Sparse polynomial over Q in finitely many named parameters. Terms are kept
// sorted by monomial with no stored zeros, so equality is structural.
class CoefPoly {
 public:
  struct Term {
    Monomial mono;
    Rat coef;
  };

  CoefPoly() = default;
  CoefPoly(const Rat& c);  // NOLINT: constants convert implicitly
  CoefPoly(long c) : CoefPoly(Rat(c)) {}
  CoefPoly(int c) : CoefPoly(Rat(c)) {}
  static CoefPoly param(const std::string& name, std::uint32_t exponent = 1);
  static CoefPoly from_terms(std::vector<Term> terms);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  // Constant term (zero if absent).
  Rat constant() const;
  std::vector<ParamId> params() const;
  std::uint32_t degree_in(ParamId id) const;

  CoefPoly& operator+=(const CoefPoly& other);
  CoefPoly& operator-=(const CoefPoly& other);
  CoefPoly& operator*=(const CoefPoly& other);
  CoefPoly& operator*=(const Rat& c);
  // this += a * b without a temporary for the product.
  void add_product(const CoefPoly& a, const CoefPoly& b);

  friend CoefPoly operator+(CoefPoly a, const CoefPoly& b) { return a += b; }
  friend CoefPoly operator-(CoefPoly a, const CoefPoly& b) { return a -= b; }
  friend CoefPoly operator*(const CoefPoly& a, const CoefPoly& b);
  friend CoefPoly operator*(CoefPoly a, const Rat& c) { return a *= c; }
  CoefPoly operator-() const;
  CoefPoly pow(unsigned e) const;

  // Replaces a parameter by a rational value.
  CoefPoly substitute(ParamId id, const Rat& value) const;
  // Keeps only terms whose exponent of `id` is at most `max_exponent`.
  CoefPoly truncate(ParamId id, std::uint32_t max_exponent) const;
  // Full evaluation; throws std::invalid_argument naming the first missing
  // parameter.
  Rat evaluate(const std::map<std::string, Rat>& assign) const;

  friend bool operator==(const CoefPoly& a, const CoefPoly& b);

  std::string to_string() const;

 private:
  void normalize();
  std::vector<Term> terms_;
};

inline bool is_zero_entry(const CoefPoly& c) { return c.is_zero(); }

}  // namespace symf

#endif
