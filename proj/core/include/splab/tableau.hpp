#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include "splab/shape.hpp"

namespace splab {

/// A filling of a shifted skew shape by letters of the doubled alphabet.
/// Row r of `rows()` lists the skew cells of row r + 1 from west to east.
class ShiftedTableau {
 public:
  ShiftedTableau() = default;
  /// Throws ShapeError if the row lengths disagree with `shape`.
  ShiftedTableau(SkewShape shape, std::vector<std::vector<Letter>> rows);
  /// Straight shape read off the row lengths.
  static ShiftedTableau straight(std::vector<std::vector<Letter>> rows);

  const SkewShape& shape() const noexcept { return shape_; }
  const std::vector<std::vector<Letter>>& rows() const noexcept { return rows_; }
  int size() const noexcept { return shape_.size(); }
  bool empty() const noexcept { return shape_.size() == 0; }

  /// Precondition: shape().contains(c).
  const Letter& at(Cell c) const {
    return rows_[c.row - 1][c.col - shape_.first_col(c.row)];
  }
  void set(Cell c, Letter l) { rows_[c.row - 1][c.col - shape_.first_col(c.row)] = l; }

  bool operator==(const ShiftedTableau&) const = default;

 private:
  SkewShape shape_;
  std::vector<std::vector<Letter>> rows_;
};

/// Canonical total order used as a map key.
bool operator<(const ShiftedTableau& a, const ShiftedTableau& b);

/// Rows and columns weakly increase, no low letter on the diagonal, at most
/// one high letter of a value per column and one low letter per row.
bool is_semistandard(const ShiftedTableau& t);
/// Semistandard after raising every diagonal entry.
bool is_q_tableau(const ShiftedTableau& t);

enum class FillMode { semistandard, qtableau };

/// Calls `visit` on every tableau of the given kind with values <= n, in
/// lexicographic order of the row-major entry sequence.
void for_each_tableau(const SkewShape& shape, int n, FillMode mode,
                      const std::function<void(const ShiftedTableau&)>& visit);
std::vector<ShiftedTableau> enumerate_tableaux(const SkewShape& shape, int n, FillMode mode);

/// counts[i] is the number of entries of value i + 1; trailing zeros trimmed.
using ContentVector = std::vector<int>;
ContentVector content(const ShiftedTableau& t);

/// Order-preserving relabeling onto 1 < 2 < ... < N (all high). Equal low
/// letters are ordered north to south, equal high letters west to east.
ShiftedTableau standardize(const ShiftedTableau& t);

/// One line per row, cells separated by single spaces, `.` for boxes of the
/// inner shape. Each line ends with '\n'.
std::string print_tableau(const ShiftedTableau& t);
/// Inverse of print_tableau. Throws ParseError with a 1-based position.
ShiftedTableau parse_tableau(std::string_view text);
/// Single-line form `[[.,1,2'],[3]]`.
std::string to_inline(const ShiftedTableau& t);

}  // namespace splab
