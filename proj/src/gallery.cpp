#include "symf/gallery.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <memory>
#include <mutex>
#include <random>
#include <stdexcept>

#include "symf/det.hpp"
#include "symf/oracles.hpp"
#include "symf/vertex.hpp"

namespace symf {

namespace {

CoefPoly beta_power(int n) { return CoefPoly::param(kParamBeta, static_cast<std::uint32_t>(n)); }

// Lazily extended coefficients of 1/(c + a_1 u + a_2 u^2 + ...).
class SeriesInverse {
 public:
  explicit SeriesInverse(std::vector<CoefPoly> tail, Rat lead) : tail_(std::move(tail)), inv_lead_(1 / lead) {}

  CoefPoly get(int n) {
    if (n < 0) return {};
    std::lock_guard lock(mutex_);
    while (static_cast<int>(coef_.size()) <= n) {
      int m = static_cast<int>(coef_.size());
      if (m == 0) {
        coef_.emplace_back(inv_lead_);
        continue;
      }
      CoefPoly acc;
      for (int k = 1; k <= m && k <= static_cast<int>(tail_.size()); ++k)
        acc.add_product(tail_[k - 1], coef_[m - k]);
      coef_.push_back(acc * (-inv_lead_));
    }
    return coef_[n];
  }

 private:
  std::vector<CoefPoly> tail_;  // a_1, a_2, ...
  Rat inv_lead_;
  std::mutex mutex_;
  std::deque<CoefPoly> coef_;
};

RowFiniteMatrix toeplitz_from(std::function<CoefPoly(int)> coef, int low, int high,
                              std::string name) {
  // entries a_d for low <= d (<= high when high is finite)
  auto row = [coef, low, high](int i, int J) {
    std::vector<MatrixEntry> out;
    for (int j = i + low; j <= J && j - i <= high; ++j) {
      CoefPoly v = coef(j - i);
      if (!v.is_zero()) out.push_back({j, std::move(v)});
    }
    return out;
  };
  auto cutoff = [low](int i) { return i + low; };
  auto last_row = [low](int j) -> std::optional<int> { return j - low; };
  return RowFiniteMatrix(std::move(name), row, cutoff, last_row);
}

// e_r and h_r of a_1..a_s over CoefPoly.
CoefPoly elem(const std::vector<CoefPoly>& a, int r, int s) {
  if (r < 0 || r > s) return {};
  std::vector<CoefPoly> e(static_cast<std::size_t>(r) + 1);
  e[0] = CoefPoly(1);
  for (int q = 1; q <= s; ++q)
    for (int k = std::min(r, q); k >= 1; --k) e[k].add_product(a[q - 1], e[k - 1]);
  return e[r];
}

CoefPoly complete(const std::vector<CoefPoly>& a, int r, int s) {
  if (r < 0) return {};
  if (s == 0) return CoefPoly(r == 0 ? 1 : 0);
  std::vector<CoefPoly> h(static_cast<std::size_t>(r) + 1);
  h[0] = CoefPoly(1);
  for (int q = 1; q <= s; ++q)
    for (int k = 1; k <= r; ++k) h[k].add_product(a[q - 1], h[k - 1]);
  return h[r];
}

void need_params(const std::vector<CoefPoly>& a, int count) {
  if (static_cast<int>(a.size()) < count)
    throw std::out_of_range("multiparameter matrix: needs a_1..a_" + std::to_string(count) +
                            ", only " + std::to_string(a.size()) + " supplied");
}

}  // namespace

RowFiniteMatrix toeplitz_matrix(const std::map<int, CoefPoly>& a) {
  std::map<int, CoefPoly> support;
  for (const auto& [k, v] : a)
    if (!v.is_zero()) support.emplace(k, v);
  if (support.empty()) {
    return explicit_matrix({}, MatrixDefault::Zero, "toeplitz");
  }
  const int low = support.begin()->first;
  const int high = support.rbegin()->first;
  auto data = std::make_shared<std::map<int, CoefPoly>>(support);
  RowFiniteMatrix m = toeplitz_from(
      [data](int d) {
        auto it = data->find(d);
        return it == data->end() ? CoefPoly() : it->second;
      },
      low, high, "toeplitz");
  const CoefPoly& lead = support.begin()->second;
  if (lead.is_constant()) {
    std::vector<CoefPoly> tail;
    for (int d = low + 1; d <= high; ++d) {
      auto it = support.find(d);
      tail.push_back(it == support.end() ? CoefPoly() : it->second);
    }
    auto inv = std::make_shared<SeriesInverse>(std::move(tail), lead.constant());
    // inverse sequence b_d = coefficient d + low of the series, support d >= -low
    m.set_inverse(std::make_shared<RowFiniteMatrix>(toeplitz_from(
        [inv, low](int d) { return inv->get(d + low); }, -low, std::numeric_limits<int>::max() / 4,
        "toeplitz^-1")));
  }
  return m;
}

RowFiniteMatrix cumulative_matrix() {
  auto row = [](int i, int J) {
    std::vector<MatrixEntry> out;
    if (i < 0) {
      for (int j = i; j <= std::min(J, -1); ++j) out.push_back({j, CoefPoly(1)});
    } else if (i == 0) {
      if (J >= 0) out.push_back({0, CoefPoly(1)});
    } else {
      if (J >= i) out.push_back({i, CoefPoly(1)});
      if (J >= i + 1) out.push_back({i + 1, CoefPoly(-1)});
    }
    return out;
  };
  auto cutoff = [](int i) { return i; };
  auto last_row = [](int j) -> std::optional<int> { return j; };
  RowFiniteMatrix m("cumulative", row, cutoff, last_row);
  m.set_inverse(std::make_shared<RowFiniteMatrix>(m.vee()));
  return m;
}

RowFiniteMatrix multiparameter_matrix(const std::vector<CoefPoly>& a) {
  auto params = std::make_shared<std::vector<CoefPoly>>(a);
  auto row = [params](int i, int J) {
    std::vector<MatrixEntry> out;
    if (i < 0) {
      const int n = -i;
      need_params(*params, n - 1);
      // columns -n..-1: A_{-n,-m} = (-1)^{n-m} e_{n-m}(a_1..a_{n-1})
      for (int m = n; m >= 1 && -m <= J; --m) {
        CoefPoly v = elem(*params, n - m, n - 1);
        if ((n - m) % 2 != 0) v = -v;
        if (!v.is_zero()) out.push_back({-m, std::move(v)});
      }
    } else if (i == 0) {
      if (J >= 0) out.push_back({0, CoefPoly(1)});
    } else {
      need_params(*params, i);
      for (int j = i; j <= J; ++j) {
        CoefPoly v = complete(*params, j - i, i);
        if (!v.is_zero()) out.push_back({j, std::move(v)});
      }
    }
    return out;
  };
  auto cutoff = [](int i) { return i; };
  auto last_row = [](int j) -> std::optional<int> { return j; };
  RowFiniteMatrix m("multiparameter", row, cutoff, last_row);
  m.set_inverse(std::make_shared<RowFiniteMatrix>(m.vee()));
  return m;
}

RowFiniteMatrix pascal_matrix() {
  auto row = [](int i, int J) {
    std::vector<MatrixEntry> out;
    if (i < 0) {
      const int n = -i;
      for (int m = n; m >= 1 && -m <= J; --m) {
        Rat v(binomial(n - 1, m - 1));
        if ((n - m) % 2 != 0) v = -v;
        out.push_back({-m, CoefPoly(v)});
      }
    } else if (i == 0) {
      if (J >= 0) out.push_back({0, CoefPoly(1)});
    } else {
      for (int j = i; j <= J; ++j) out.push_back({j, CoefPoly(Rat(binomial(j - 1, i - 1)))});
    }
    return out;
  };
  auto cutoff = [](int i) { return i; };
  auto last_row = [](int j) -> std::optional<int> { return j; };
  RowFiniteMatrix m("pascal", row, cutoff, last_row);
  m.set_inverse(std::make_shared<RowFiniteMatrix>(m.vee()));
  return m;
}

RowFiniteMatrix fermion_partner(const RowFiniteMatrix& a) {
  auto self = std::make_shared<RowFiniteMatrix>(a);
  auto row = [self](int k, int J) {
    auto out = self->row(k - 1, J - 1);
    for (auto& e : out) ++e.j;
    return out;
  };
  auto cutoff = [self](int k) {
    int c = self->cutoff(k - 1);
    return c == kEmptyRow ? c : c + 1;
  };
  auto last_row = [self](int j) -> std::optional<int> {
    auto b = self->last_row_in_column(j - 1);
    if (!b || *b == kEmptyColumn) return b;
    return *b + 1;
  };
  return RowFiniteMatrix(a.name() + "^partner", row, cutoff, last_row);
}

RowFiniteMatrix laurent_rows_matrix(const std::map<int, std::map<int, CoefPoly>>& rows) {
  std::map<int, std::map<int, CoefPoly>> listed;
  for (const auto& [i, r] : rows) {
    if (i < 1) throw std::invalid_argument("laurent rows are indexed by i >= 1");
    listed[-i] = r;
  }
  return explicit_matrix(listed, MatrixDefault::Identity, "laurent-rows");
}

RowFiniteMatrix grothendieck_dual_matrix(const IntVec& lambda) {
  auto lam = std::make_shared<IntVec>(lambda);
  const int l = static_cast<int>(lambda.size());
  // row -i (1 <= i <= l) holds C(1-i, m) beta^m at column m - l_i, m >= 0
  auto row = [lam, l](int i, int J) {
    std::vector<MatrixEntry> out;
    if (i >= 0 || -i > l) {
      if (i <= J) out.push_back({i, CoefPoly(1)});
      return out;
    }
    const int n = -i;
    const int li = (*lam)[n - 1];
    for (int m = 0; m - li <= J; ++m) {
      Rat c(binomial(1 - n, m));
      if (c == 0) break;
      out.push_back({m - li, CoefPoly(c) * beta_power(m)});
    }
    return out;
  };
  auto cutoff = [lam, l](int i) { return (i >= 0 || -i > l) ? i : -(*lam)[-i - 1]; };
  return RowFiniteMatrix("grothendieck-dual", row, cutoff);
}

bool PolySeq::satisfies_shape() const {
  if (laurent || f.empty()) return false;
  if (!(f[0].size() == 1 && f[0][0] == CoefPoly(1))) return false;
  for (std::size_t k = 1; k < f.size(); ++k)
    if (!f[k].empty() && !f[k][0].is_zero()) return false;
  return true;
}

PolySeq poly_seq(const RowFiniteMatrix& a, int kmax, int probe) {
  PolySeq seq;
  for (int k = 0; k <= kmax; ++k) {
    std::vector<CoefPoly> coeffs;
    for (const auto& e : a.row(-k, probe)) {
      if (e.j > 0) {
        seq.laurent = true;
        continue;
      }
      const std::size_t s = static_cast<std::size_t>(-e.j);
      if (coeffs.size() <= s) coeffs.resize(s + 1);
      coeffs[s] = e.value;
    }
    seq.f.push_back(std::move(coeffs));
  }
  return seq;
}

std::map<int, CoefPoly> g_coeffs(const RowFiniteMatrix& a, int k, int smin, int smax) {
  const RowFiniteMatrix* inv = a.inverse();
  if (!inv) throw std::invalid_argument("g_coeffs: no inverse supplied for " + a.name());
  std::map<int, CoefPoly> out;
  for (int s = smin; s <= smax; ++s) {
    CoefPoly v = inv->entry(-s, -k);
    if (!v.is_zero()) out.emplace(s, std::move(v));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Grothendieck

SymFun e_series(int order) {
  SymFun out;
  for (int i = 0; i <= order; ++i) out.add_scaled(beta_power(i), gen_e(i));
  return out;
}

SymFun grothendieck_b_plus(int k, const SymFun& f, int order) {
  SymFun lifted = (e_series(order) * f).truncate(param_id(kParamBeta), static_cast<std::uint32_t>(order));
  return field_coeff(FieldKind::gamma_plus_at(0), k, lifted)
      .truncate(param_id(kParamBeta), static_cast<std::uint32_t>(order));
}

namespace {

SymFun b_plus_family(const IntVec& lambda, int order) {
  SymFun f(1);
  for (auto it = lambda.rbegin(); it != lambda.rend() && !f.is_zero(); ++it)
    f = grothendieck_b_plus(-*it, f, order);
  return f;
}

}  // namespace

SymFun grothendieck_stable(const IntVec& lambda, int order) {
  if (order < 0) throw std::invalid_argument("grothendieck_stable: negative order");
  SymFun value = b_plus_family(lambda, order);
  SymFun check = b_plus_family(lambda, order + 1).truncate(param_id(kParamBeta), static_cast<std::uint32_t>(order));
  if (!(value == check))
    throw std::runtime_error("grothendieck_stable: truncation did not stabilize at order " +
                             std::to_string(order));
  return value;
}

SymFun grothendieck_g_single(int m, int order) {
  // G_m = sum_{n >= 0} (-beta)^n E(beta) h_{m+n}; h_{m+n} = 0 below -m
  SymFun inner;
  for (int n = std::max(0, -m); n <= order; ++n) {
    CoefPoly c = beta_power(n);
    if (n % 2 != 0) c = -c;
    inner.add_scaled(c, gen_h(m + n));
  }
  return (e_series(order) * inner).truncate(param_id(kParamBeta), static_cast<std::uint32_t>(order));
}

SymFun grothendieck_stable_jt(const IntVec& lambda, int order) {
  const int l = static_cast<int>(lambda.size());
  const auto beta = param_id(kParamBeta);
  Square<SymFun> mat(l, std::vector<SymFun>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      SymFun entry;
      for (int m = 0; m <= order; ++m) {
        Rat c(binomial(i - l, m));
        if (c == 0) continue;
        entry.add_scaled(CoefPoly(c) * beta_power(m),
                         grothendieck_g_single(lambda[i - 1] - i + j + m, order - m));
      }
      mat[i - 1][j - 1] = entry.truncate(beta, static_cast<std::uint32_t>(order));
    }
  // products of truncated entries are truncated again at the end
  SymFun det = determinant(mat);
  return det.truncate(beta, static_cast<std::uint32_t>(order));
}

SymFun grothendieck_dual(const IntVec& lambda) {
  const int l = static_cast<int>(lambda.size());
  Square<SymFun> mat(l, std::vector<SymFun>(l));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      SymFun entry;
      const int top = lambda[i - 1] - i + j;
      for (int m = 0; m <= top; ++m) {
        Rat c(binomial(1 - i, m));
        if (c == 0) continue;
        entry.add_scaled(CoefPoly(c) * beta_power(m), gen_h(top - m));
      }
      mat[i - 1][j - 1] = std::move(entry);
    }
  return determinant(mat);
}

SymFun shift_by_minus_beta(const SymFun& f) {
  static const VertexOperator shift([](int) { return CoefPoly(); },
                                    [](int n) {
                                      CoefPoly c = beta_power(n);
                                      return n % 2 == 0 ? c : -c;
                                    });
  SymFun out;
  for (auto& part : shift.translate(f)) out += part;
  return out;
}

SymFun grothendieck_j_plus(int k, const SymFun& f) {
  return field_coeff(FieldKind::gamma_plus_at(0), k, shift_by_minus_beta(f));
}

SymFun grothendieck_dual_vertex(const IntVec& lambda) {
  SymFun f(1);
  for (auto it = lambda.rbegin(); it != lambda.rend() && !f.is_zero(); ++it)
    f = grothendieck_j_plus(-*it, f);
  return f;
}

int grothendieck_shift_sign(const IntVec& lambda, std::uint64_t seed) {
  const int n = static_cast<int>(lambda.size());
  int top = 0, weight = 0;
  for (int k = 1; k <= n; ++k) {
    if (lambda[k - 1] < 1) throw std::invalid_argument("grothendieck_shift_sign: entries must be positive");
    top = std::max(top, lambda[k - 1]);
    weight += lambda[k - 1] - k;
  }
  IntVec mu(static_cast<std::size_t>(n));
  for (int k = 1; k <= n; ++k) mu[n - k] = lambda[k - 1] - k;
  const PolySeq f = poly_seq(pascal_matrix(), top);

  std::mt19937_64 rng(seed);
  int sign = 0;
  for (int trial = 0; trial < 3; ++trial) {
    EvalPoint ys = random_point(rng, n, {kParamBeta});
    const Rat beta = ys.params.at(kParamBeta);
    EvalPoint xs{{}, {{kParamT, Rat(0)}}};
    Rat en = 1;
    for (const auto& y : ys.xs) {
      xs.xs.push_back(1 + beta * y);
      en *= xs.xs.back();
    }
    if (en == 0) continue;
    Rat lhs = transformed_symmetrized_eval(f.f, lambda, xs) / en;
    Rat rhs = grothendieck_alternant_eval(mu, ys);
    for (int i = 0; i < std::abs(weight); ++i) {
      if (weight > 0) rhs *= beta;
      else rhs /= beta;
    }
    int s = lhs == rhs ? 1 : lhs == -rhs ? -1 : 0;
    if (s == 0 || (sign != 0 && s != sign)) return 0;
    if (lhs != 0) sign = s;
  }
  return sign;
}

}  // namespace symf
