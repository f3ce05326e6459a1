#include "symf/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace symf {

RowFiniteMatrix::RowFiniteMatrix(std::string name, RowFn row, CutoffFn cutoff, ColumnFn last_row)
    : name_(std::move(name)),
      row_(std::move(row)),
      cutoff_(std::move(cutoff)),
      last_row_(std::move(last_row)) {}

CoefPoly RowFiniteMatrix::entry(int i, int j) const {
  if (j < cutoff(i)) return {};
  auto r = row(i, j);
  if (!r.empty() && r.back().j == j) return r.back().value;
  return {};
}

RowFiniteMatrix RowFiniteMatrix::vee() const {
  if (!last_row_) throw std::invalid_argument("vee: column bounds unknown for " + name_);
  auto self = std::make_shared<RowFiniteMatrix>(*this);
  // row i of A^vee is column -i of A read backwards
  auto cutoff = [self](int i) -> int {
    auto b = *self->last_row_in_column(-i);
    return b == kEmptyColumn ? kEmptyRow : -b;
  };
  auto row = [self, cutoff](int i, int J) {
    std::vector<MatrixEntry> out;
    for (int j = cutoff(i); j <= J; ++j) {
      CoefPoly v = self->entry(-j, -i);
      if (!v.is_zero()) out.push_back({j, std::move(v)});
    }
    return out;
  };
  auto last_row = [self](int j) -> std::optional<int> {
    int m = self->cutoff(-j);
    return m == kEmptyRow ? kEmptyColumn : -m;
  };
  return RowFiniteMatrix(name_ + "^vee", row, cutoff, last_row);
}

RowFiniteMatrix explicit_matrix(const std::map<int, std::map<int, CoefPoly>>& rows,
                                MatrixDefault background, std::string name) {
  auto data = std::make_shared<std::map<int, std::map<int, CoefPoly>>>();
  for (const auto& [i, r] : rows) {
    auto& dst = (*data)[i];
    for (const auto& [j, v] : r)
      if (!v.is_zero()) dst.emplace(j, v);
  }
  const bool ident = background == MatrixDefault::Identity;
  auto row = [data, ident](int i, int J) {
    std::vector<MatrixEntry> out;
    auto it = data->find(i);
    if (it == data->end()) {
      if (ident && i <= J) out.push_back({i, CoefPoly(1)});
      return out;
    }
    for (const auto& [j, v] : it->second) {
      if (j > J) break;
      out.push_back({j, v});
    }
    return out;
  };
  auto cutoff = [data, ident](int i) {
    auto it = data->find(i);
    if (it == data->end()) return ident ? i : kEmptyRow;
    return it->second.empty() ? kEmptyRow : it->second.begin()->first;
  };
  auto last_row = [data, ident](int j) -> std::optional<int> {
    int best = kEmptyColumn;
    if (ident && !data->count(j)) best = j;
    for (const auto& [i, r] : *data)
      if (r.count(j)) best = std::max(best, i);
    return best;
  };
  return RowFiniteMatrix(std::move(name), row, cutoff, last_row);
}

RowFiniteMatrix identity_matrix() {
  auto m = std::make_shared<RowFiniteMatrix>(explicit_matrix({}, MatrixDefault::Identity, "identity"));
  RowFiniteMatrix out = *m;
  out.set_inverse(m);
  return out;
}

}  // namespace symf
