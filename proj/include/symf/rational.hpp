#ifndef SYMF_RATIONAL_HPP
#define SYMF_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <string_view>

namespace symf {

// Exact rational, always canonical (positive denominator, reduced).
using Rat = mpq_class;
using BigInt = mpz_class;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Accepts "p", "-p", "+p", "p/q", "-p/q". No decimals.
Rat parse_rat(std::string_view text);

// "p" or "-p/q"; denominators are omitted when equal to one.
std::string rat_to_string(const Rat& r);

// p/q in canonical form (q != 0).
inline Rat ratio(long p, long q) {
  Rat r(p);
  r /= q;
  return r;
}

// Binomial C(n, k) for any integer n (negative n via the usual series).
BigInt binomial(long n, long k);

}  // namespace symf

#endif
