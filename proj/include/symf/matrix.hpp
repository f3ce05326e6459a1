#ifndef SYMF_MATRIX_HPP
#define SYMF_MATRIX_HPP

#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "symf/coefpoly.hpp"

namespace symf {

struct MatrixEntry {
  int j;
  CoefPoly value;
};

// Cutoff of a zero row, and column bound of a zero column.
inline constexpr int kEmptyRow = std::numeric_limits<int>::max() / 4;
inline constexpr int kEmptyColumn = std::numeric_limits<int>::min() / 4;

// Z x Z matrix with A_{ij} = 0 for j < M(i), accessed row-wise with an upper
// column bound. Rows may be infinite to the right.
class RowFiniteMatrix {
 public:
  // Nonzero entries (j, A_ij) with j <= J, ascending in j.
  using RowFn = std::function<std::vector<MatrixEntry>(int i, int J)>;
  using CutoffFn = std::function<int(int i)>;
  // Largest i with A_ij != 0 (kEmptyColumn if none); nullopt when unknown.
  using ColumnFn = std::function<std::optional<int>(int j)>;

  RowFiniteMatrix() = default;
  RowFiniteMatrix(std::string name, RowFn row, CutoffFn cutoff, ColumnFn last_row = {});

  const std::string& name() const { return name_; }
  std::vector<MatrixEntry> row(int i, int J) const { return row_(i, J); }
  int cutoff(int i) const { return cutoff_(i); }
  std::optional<int> last_row_in_column(int j) const {
    return last_row_ ? last_row_(j) : std::nullopt;
  }
  CoefPoly entry(int i, int j) const;

  const RowFiniteMatrix* inverse() const { return inverse_.get(); }
  void set_inverse(std::shared_ptr<const RowFiniteMatrix> inv) { inverse_ = std::move(inv); }
  std::shared_ptr<const RowFiniteMatrix> inverse_ptr() const { return inverse_; }

  // A^vee_{ij} = A_{-j,-i}; requires column bounds of A.
  RowFiniteMatrix vee() const;

 private:
  std::string name_;
  RowFn row_;
  CutoffFn cutoff_;
  ColumnFn last_row_;
  std::shared_ptr<const RowFiniteMatrix> inverse_;
};

enum class MatrixDefault { Identity, Zero };

// Finitely many listed rows over an identity or zero background. A listed row
// replaces the default row entirely.
RowFiniteMatrix explicit_matrix(const std::map<int, std::map<int, CoefPoly>>& rows,
                                MatrixDefault background, std::string name = "explicit");

RowFiniteMatrix identity_matrix();

}  // namespace symf

#endif
