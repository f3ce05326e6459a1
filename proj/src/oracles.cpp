#include "symf/oracles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "symf/det.hpp"

namespace symf {

Rat EvalPoint::param(const std::string& name) const {
  auto it = params.find(name);
  if (it == params.end()) throw std::invalid_argument("unassigned parameter '" + name + "'");
  return it->second;
}

namespace {

void require_distinct(const std::vector<Rat>& xs) {
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = i + 1; j < xs.size(); ++j)
      if (xs[i] == xs[j]) throw std::invalid_argument("evaluation point has coincident variables");
}

Rat power(const Rat& x, int e) {
  Rat r = 1;
  for (int i = 0; i < e; ++i) r *= x;
  return r;
}

int positive_length(const IntVec& lambda) {
  int l = 0;
  for (int part : lambda)
    if (part != 0) ++l;
  return l;
}

IntVec padded(const IntVec& lambda, std::size_t n) {
  if (lambda.size() > n) {
    for (std::size_t i = n; i < lambda.size(); ++i)
      if (lambda[i] != 0) throw std::invalid_argument("more nonzero parts than variables");
  }
  IntVec out(lambda.begin(), lambda.begin() + std::min(lambda.size(), n));
  out.resize(n, 0);
  return out;
}

// sum_sigma sigma(prod_i value(i, x_i) * prod_{i<j, i<pairs_upto} ratio(x_i, x_j))
template <class Value, class Pair>
Rat symmetrize(const std::vector<Rat>& xs, Value value, Pair pair, std::size_t pairs_upto) {
  const std::size_t n = xs.size();
  if (n > static_cast<std::size_t>(kMaxSymmetrizeVars))
    throw std::invalid_argument("symmetrization limited to 7 variables");
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Rat total = 0;
  do {
    Rat term = 1;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= value(i, xs[perm[i]]);
    for (std::size_t i = 0; i < std::min(n, pairs_upto) && term != 0; ++i)
      for (std::size_t j = i + 1; j < n; ++j) term *= pair(xs[perm[i]], xs[perm[j]]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

Rat factorial(int n) {
  Rat r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return r;
}

}  // namespace

Rat eval_poly(const std::vector<CoefPoly>& coeffs, const Rat& x, const std::map<std::string, Rat>& assign) {
  Rat acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * x + it->evaluate(assign);
  return acc;
}

Rat schur_tableaux_eval(const Partition& lambda, const EvalPoint& pt) {
  const int n = static_cast<int>(pt.xs.size());
  const auto& rows = lambda.parts();
  if (static_cast<int>(rows.size()) > n) return 0;
  std::vector<std::vector<int>> tab(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) tab[r].assign(rows[r], 0);
  // fill row-major; each cell >= left neighbour and > upper neighbour
  std::vector<std::pair<int, int>> cells;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int c = 0; c < rows[r]; ++c) cells.emplace_back(static_cast<int>(r), c);
  Rat total = 0;
  auto rec = [&](auto&& self, std::size_t idx, const Rat& weight) -> void {
    if (idx == cells.size()) {
      total += weight;
      return;
    }
    auto [r, c] = cells[idx];
    int lo = 1;
    if (c > 0) lo = std::max(lo, tab[r][c - 1]);
    if (r > 0) lo = std::max(lo, tab[r - 1][c] + 1);
    // rows below need room: entry at row r is at most n - (rows below in this column)
    int below = 0;
    for (std::size_t q = r + 1; q < rows.size() && rows[q] > c; ++q) ++below;
    for (int v = lo; v <= n - below; ++v) {
      tab[r][c] = v;
      self(self, idx + 1, weight * pt.xs[v - 1]);
    }
  };
  rec(rec, 0, Rat(1));
  return total;
}

Rat hl_symmetrized_eval(const IntVec& lambda, const EvalPoint& pt) {
  const std::size_t n = pt.xs.size();
  require_distinct(pt.xs);
  for (int part : lambda)
    if (part < 0) throw std::invalid_argument("hl_symmetrized_eval: negative part");
  const IntVec lam = padded(lambda, n);
  const int l = positive_length(lam);
  const Rat t = pt.param(kParamT);
  Rat pre = power(1 - t, static_cast<int>(n));
  for (int i = 1; i <= static_cast<int>(n) - l; ++i) {
    Rat d = 1 - power(t, i);
    if (d == 0) throw std::invalid_argument("t is a root of unity dividing the prefactor");
    pre /= d;
  }
  Rat sum = symmetrize(
      pt.xs, [&](std::size_t i, const Rat& x) -> Rat { return power(x, lam[i]); },
      [&](const Rat& xi, const Rat& xj) -> Rat { return (xi - t * xj) / (xi - xj); }, n);
  return pre * sum;
}

Rat transformed_symmetrized_eval(const PolyFamily& f, const IntVec& lambda, const EvalPoint& pt,
                                 bool check_shape) {
  const std::size_t n = pt.xs.size();
  require_distinct(pt.xs);
  if (f.empty()) throw std::invalid_argument("transformed_symmetrized_eval: empty family");
  if (check_shape && !(f[0].size() == 1 && f[0][0] == CoefPoly(1)))
    throw std::invalid_argument("transformed_symmetrized_eval: f_0 must be 1");
  for (std::size_t k = 1; check_shape && k < f.size(); ++k)
    if (!f[k].empty() && !f[k][0].is_zero())
      throw std::invalid_argument("transformed_symmetrized_eval: f_k(0) must vanish for k >= 1");
  const IntVec lam = padded(lambda, n);
  for (int part : lam)
    if (part < 0 || part >= static_cast<int>(f.size()))
      throw std::invalid_argument("transformed_symmetrized_eval: no polynomial for part " +
                                  std::to_string(part));
  const int l = positive_length(lam);
  const Rat t = pt.param(kParamT);
  auto value = [&](std::size_t i, const Rat& x) -> Rat { return eval_poly(f[lam[i]], x, pt.params); };

  if (t == 0) {
    Square<Rat> num(n, std::vector<Rat>(n)), den(n, std::vector<Rat>(n));
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        num[i][j] = eval_poly(f[lam[j]], pt.xs[i], pt.params) * power(pt.xs[i], int(n - 1 - j));
        den[i][j] = power(pt.xs[i], int(n - 1 - j));
      }
    return determinant(num) / determinant(den);
  }
  if (t == -1) {
    // parts must be positive in the first l slots
    for (int i = 0; i < l; ++i)
      if (lam[i] == 0) throw std::invalid_argument("t = -1 form needs zeros after nonzero parts");
    Rat sum = symmetrize(
        pt.xs, value, [](const Rat& xi, const Rat& xj) -> Rat { return (xi + xj) / (xi - xj); },
        static_cast<std::size_t>(l));
    return power(Rat(2), l) * sum / factorial(static_cast<int>(n) - l);
  }
  Rat pre = power(1 - t, static_cast<int>(n));
  for (int i = 1; i <= static_cast<int>(n) - l; ++i) {
    Rat d = 1 - power(t, i);
    if (d == 0) throw std::invalid_argument("t is a root of unity dividing the prefactor");
    pre /= d;
  }
  Rat sum = symmetrize(
      pt.xs, value, [&](const Rat& xi, const Rat& xj) -> Rat { return (xi - t * xj) / (xi - xj); }, n);
  return pre * sum;
}

Rat schurq_pfaffian_eval(const Partition& lambda, const EvalPoint& pt) {
  if (!lambda.is_strict()) throw std::invalid_argument("schurq_pfaffian_eval: partition not strict");
  IntVec lam = lambda.parts();
  if (lam.size() % 2 != 0) lam.push_back(0);
  const int top = lam.empty() ? 0 : 2 * lam[0] + 1;
  // q_k from prod (1 + x u)/(1 - x u)
  std::vector<Rat> q(static_cast<std::size_t>(top) + 1, Rat(0));
  q[0] = 1;
  for (const auto& x : pt.xs) {
    // multiply by (1 + x u) / (1 - x u) = 1 + 2 sum_{k>=1} x^k u^k
    std::vector<Rat> next(q.size(), Rat(0));
    std::vector<Rat> xpow(q.size(), Rat(1));
    for (std::size_t k = 1; k < q.size(); ++k) xpow[k] = xpow[k - 1] * x;
    for (std::size_t a = 0; a < q.size(); ++a) {
      if (q[a] == 0) continue;
      next[a] += q[a];
      for (std::size_t k = 1; a + k < q.size(); ++k) next[a + k] += 2 * q[a] * xpow[k];
    }
    q = std::move(next);
  }
  auto qk = [&](int k) { return (k < 0 || k >= static_cast<int>(q.size())) ? Rat(0) : q[k]; };
  auto qab = [&](int a, int b) {
    Rat v = qk(a) * qk(b);
    for (int i = 1; i <= b; ++i) v += (i % 2 == 0 ? 2 : -2) * qk(a + i) * qk(b - i);
    return v;
  };
  const std::size_t n = lam.size();
  Square<Rat> m(n, std::vector<Rat>(n, Rat(0)));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) m[i][j] = qab(lam[i], lam[j]);
  return pfaffian_upper(m);
}

Rat grothendieck_alternant_eval(const IntVec& lambda, const EvalPoint& pt) {
  const std::size_t n = pt.xs.size();
  require_distinct(pt.xs);
  if (positive_length(lambda) > static_cast<int>(n)) return 0;
  const IntVec lam = padded(lambda, n);
  const Rat beta = pt.param(kParamBeta);
  Square<Rat> num(n, std::vector<Rat>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      num[i][j] = power(pt.xs[i], lam[j] + int(n - 1 - j)) * power(1 + beta * pt.xs[i], int(j));
  Rat vdm = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) vdm *= pt.xs[i] - pt.xs[j];
  return determinant(num) / vdm;
}

Rat random_rat(std::mt19937_64& rng, bool nonzero) {
  std::uniform_int_distribution<int> num(-50, 50), den(1, 50);
  for (;;) {
    Rat r = ratio(num(rng), den(rng));
    if (!nonzero || r != 0) return r;
  }
}

EvalPoint random_point(std::mt19937_64& rng, int n, const std::vector<std::string>& params) {
  EvalPoint pt;
  while (static_cast<int>(pt.xs.size()) < n) {
    Rat x = random_rat(rng);
    if (std::find(pt.xs.begin(), pt.xs.end(), x) == pt.xs.end()) pt.xs.push_back(x);
  }
  for (const auto& name : params) {
    Rat v;
    do v = random_rat(rng);
    while (v == 1 || v == -1);
    pt.params[name] = v;
  }
  return pt;
}

}  // namespace symf
