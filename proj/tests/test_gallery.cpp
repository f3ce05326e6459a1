#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "helpers.hpp"

using namespace symf;
using namespace symf::testing;

namespace {

using Poly = std::vector<Rat>;

CoefPoly beta_() { return CoefPoly::param(kParamBeta); }

Poly mul(const Poly& a, const Poly& b) {
  Poly out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// (x - a_1) ... (x - a_n)
Poly falling(const std::vector<Rat>& a, int n) {
  Poly p{Rat(1)};
  for (int i = 0; i < n; ++i) p = mul(p, {-a[i], Rat(1)});
  return p;
}

Rat coeff(const Poly& p, int i) { return i >= 0 && i < static_cast<int>(p.size()) ? p[i] : Rat(0); }

bool same_poly(const std::vector<CoefPoly>& got, const Poly& want) {
  const std::size_t n = std::max(got.size(), want.size());
  for (std::size_t i = 0; i < n; ++i) {
    CoefPoly g = i < got.size() ? got[i] : CoefPoly();
    if (!(g == CoefPoly(coeff(want, static_cast<int>(i))))) return false;
  }
  return true;
}

// h_r(a_1..a_s) and e_r(a_1..a_s) numerically.
Rat h_num(const std::vector<Rat>& a, int r, int s) {
  if (r < 0) return 0;
  std::vector<Rat> h(r + 1, Rat(0));
  h[0] = 1;
  for (int i = 0; i < s; ++i)
    for (int k = 1; k <= r; ++k) h[k] += a[i] * h[k - 1];
  return h[r];
}

std::vector<Rat> rand_params(std::mt19937_64& rng, int n) {
  std::vector<Rat> a;
  for (int i = 0; i < n; ++i) a.push_back(random_rat(rng, false));
  return a;
}

std::vector<CoefPoly> as_coef(const std::vector<Rat>& a) { return {a.begin(), a.end()}; }

Rat eval_beta(const SymFun& f, const std::vector<Rat>& xs, const Rat& beta) {
  return evaluate_symbolic(f, xs).evaluate({{kParamBeta, beta}});
}

bool same_on_window(const RowFiniteMatrix& a, const RowFiniteMatrix& b, int lo, int hi) {
  for (int i = lo; i <= hi; ++i)
    for (int j = lo; j <= hi; ++j)
      if (!(a.entry(i, j) == b.entry(i, j))) return false;
  return true;
}

}  // namespace

TEST_CASE("Toeplitz builder") {
  CHECK(same_on_window(toeplitz_matrix({{0, CoefPoly(1)}}), identity_matrix(), -8, 8));
  const CoefPoly c(ratio(-2, 3));
  RowFiniteMatrix a = toeplitz_matrix({{0, CoefPoly(1)}, {1, c}});
  CHECK(a.cutoff(3) == 3);
  for (const auto& f : pbasis(3))
    for (int i = -4; i <= 3; ++i)
      CHECK(transformed_coeff(a, FieldKind::gamma_plus(), i, f) ==
            gamma_plus(i, f) + gamma_plus(i + 1, f) * c);
}

TEST_CASE("polynomial sequences of the gallery") {
  CHECK(same_poly(poly_seq(cumulative_matrix(), 3).f[3], {0, 1, 1, 1}));
  for (const auto& [name, a] : gallery_matrices()) {
    INFO(name);
    PolySeq s = poly_seq(a, 6);
    // a Toeplitz matrix with a_1 != 0 puts x^{-1} into f_0
    const bool block = name != "toeplitz";
    CHECK(s.satisfies_shape() == block);
    CHECK(s.laurent == !block);
  }
  for (int k = 1; k <= 6; ++k) {
    Poly want = mul({0, 1}, falling(std::vector<Rat>(k, Rat(1)), k - 1));
    CHECK(same_poly(poly_seq(pascal_matrix(), 6).f[k], want));
  }
  // g_k(x) = f_{-k}(1/x) = 1/(x - 1)^k read in powers x^{-s}: C(s-1, k-1)
  for (int k = 1; k <= 4; ++k) {
    auto g = g_coeffs(pascal_matrix(), k, 1, 8);
    for (int s = 1; s <= 8; ++s) CHECK(g[s] == CoefPoly(Rat(binomial(s - 1, k - 1))));
  }
}

TEST_CASE("multiparameter matrix") {
  CHECK(same_on_window(multiparameter_matrix(std::vector<CoefPoly>(20, CoefPoly())), identity_matrix(), -8, 8));
  CHECK(same_on_window(multiparameter_matrix(std::vector<CoefPoly>(20, CoefPoly(1))), pascal_matrix(), -8, 8));
  CHECK_THROWS_AS(multiparameter_matrix(std::vector<CoefPoly>(2, CoefPoly(1))).row(-6, 0), std::out_of_range);

  std::mt19937_64 rng(31);
  std::vector<Rat> a = rand_params(rng, 20);
  PolySeq s = poly_seq(multiparameter_matrix(as_coef(a)), 6);
  for (int k = 1; k <= 6; ++k) CHECK(same_poly(s.f[k], mul({0, 1}, falling(a, k - 1))));
}

TEST_CASE("transitions between x^n and (x|a)_k") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 5; ++trial) {
    std::vector<Rat> a = rand_params(rng, 10);
    Rat x = random_rat(rng);
    for (int n = 0; n <= 6; ++n) {
      Rat sum = 0;
      for (int k = 0; k <= n; ++k) {
        Rat fk = 1;
        for (int i = 0; i < k; ++i) fk *= x - a[i];
        sum += h_num(a, n - k, k + 1) * fk;
      }
      Rat xn = 1;
      for (int i = 0; i < n; ++i) xn *= x;
      CHECK(sum == xn);
    }
  }
}

TEST_CASE("sum_k (x|a)_{k-1} / (y|a)_k = 1/(y - x)") {
  // 1/(y|a)_k = sum_{m >= k} h_{m-k}(a_1..a_k) y^{-m}
  std::mt19937_64 rng(41);
  std::vector<Rat> a = rand_params(rng, 12);
  for (int i = 0; i <= 8; ++i)
    for (int j = 1; j <= 8; ++j) {
      Rat c = 0;
      for (int k = 1; k <= j; ++k) c += coeff(falling(a, k - 1), i) * h_num(a, j - k, k);
      CHECK(c == (j == i + 1 ? 1 : 0));
    }
}

TEST_CASE("Laurent rows builder") {
  std::map<int, std::map<int, CoefPoly>> rows{{1, {{-2, CoefPoly(3)}, {0, CoefPoly(1)}, {2, beta_()}}},
                                             {3, {{-3, CoefPoly(1)}}}};
  RowFiniteMatrix a = laurent_rows_matrix(rows);
  for (int i = -6; i <= 6; ++i)
    for (int j = -6; j <= 6; ++j) {
      CoefPoly want = i == j ? CoefPoly(1) : CoefPoly();
      if (i < 0 && rows.count(-i)) {
        auto it = rows.at(-i).find(j);
        want = it == rows.at(-i).end() ? CoefPoly() : it->second;
      }
      CHECK(a.entry(i, j) == want);
    }
}

TEST_CASE("uniform shift change of variable") {
  // coefficient of v^l in S(v_i/(1+v_i)) for l_i >= 1
  for (const auto& mu : partitions_upto(6)) {
    const IntVec l = mu.parts();
    SymFun want;
    IntVec alpha(l.size(), 1);
    for (;;) {
      Rat c = 1;
      for (std::size_t i = 0; i < l.size(); ++i)
        c *= Rat(binomial(l[i] - 1, alpha[i] - 1)) * ((l[i] - alpha[i]) % 2 == 0 ? 1 : -1);
      want += schur_jt(alpha) * CoefPoly(c);
      std::size_t i = 0;
      while (i < l.size() && alpha[i] == l[i]) alpha[i++] = 1;
      if (i == l.size()) break;
      ++alpha[i];
    }
    CHECK(transformed_family(pascal_matrix(), l, FieldKind::gamma_plus_at(0)) == want);
  }
}

TEST_CASE("stable Grothendieck examples") {
  CHECK(grothendieck_stable({}, 3) == SymFun(1));
  SymFun g1 = grothendieck_stable({1}, 3);
  CHECK(evaluate_symbolic(g1, {Rat(5)}) == CoefPoly(5));
  const Rat x1 = ratio(2, 3), x2 = ratio(-1, 4);
  CHECK(evaluate_symbolic(g1, {x1, x2}) == CoefPoly(x1 + x2) + beta_() * (x1 * x2));
  CHECK(e_series(2) == SymFun(1) + gen_e(1) * beta_() + gen_e(2) * beta_().pow(2));
  CHECK(grothendieck_g_single(-2, 3).is_zero() == false);
}

TEST_CASE("stable Grothendieck: vertex operators vs Jacobi-Trudi") {
  for (const auto& mu : partitions_upto(4)) {
    INFO(mu.to_string());
    CHECK(grothendieck_stable(mu.parts(), 4) == grothendieck_stable_jt(mu.parts(), 4));
  }
}

TEST_CASE("stable Grothendieck vs alternant") {
  std::mt19937_64 rng(43);
  for (int n = 1; n <= 3; ++n) {
    const int order = n * (n - 1) / 2;
    for (const auto& mu : partitions_upto(4)) {
      SymFun g = grothendieck_stable(mu.parts(), std::max(order, 1));
      for (int trial = 0; trial < 2; ++trial) {
        EvalPoint pt = random_point(rng, n, {kParamBeta});
        CHECK(eval_beta(g, pt.xs, pt.param(kParamBeta)) == grothendieck_alternant_eval(mu.parts(), pt));
      }
    }
  }
}

TEST_CASE("dual stable Grothendieck") {
  CHECK(grothendieck_dual({}) == SymFun(1));
  for (int k = 0; k <= 5; ++k) CHECK(grothendieck_dual({k}) == gen_h(k));
  SymFun want = gen_h(2) * (gen_h(1) - beta_() * SymFun(1)) - gen_h(3);
  CHECK(grothendieck_dual({2, 1}) == want);
  for (const auto& mu : partitions_upto(5)) {
    INFO(mu.to_string());
    SymFun g = grothendieck_dual(mu.parts());
    CHECK(grothendieck_dual_vertex(mu.parts()) == g);
    IntVec idx;
    for (int i = 1; i <= static_cast<int>(mu.length()); ++i) idx.push_back(i);
    CHECK(transformed_family(grothendieck_dual_matrix(mu.parts()), idx, FieldKind::gamma_plus_at(0)) == g);
  }
  CHECK(shift_by_minus_beta(SymFun::p(2)) == SymFun::p(2) + SymFun(beta_().pow(2)));
}

TEST_CASE("Grothendieck change of variable sign") {
  // determined per (l, n); increasing l gives partitions mu, l inside (4,4,4) included
  for (int n = 1; n <= 3; ++n) {
    const int expected = (n * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    IntVec l(n, 1);
    for (;;) {
      INFO(intvec_to_string(l));
      CHECK(grothendieck_shift_sign(l) == expected);
      int i = 0;
      while (i < n && l[i] == 4) l[i++] = 1;
      if (i == n) break;
      ++l[i];
    }
  }
  CHECK_THROWS_AS(grothendieck_shift_sign({0, 2}), std::invalid_argument);
}
