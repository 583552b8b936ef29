#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace splab {

bool is_strict_partition(std::span<const int> parts);

/// A strictly decreasing sequence of positive integers. Indexes shifted
/// diagrams: row i occupies columns i .. i + part(i) - 1.
class StrictPartition {
 public:
  StrictPartition() = default;
  /// Throws std::invalid_argument unless `parts` is strictly decreasing and
  /// positive.
  explicit StrictPartition(std::vector<int> parts);
  StrictPartition(std::initializer_list<int> parts)
      : StrictPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const noexcept { return parts_; }
  int length() const noexcept { return static_cast<int>(parts_.size()); }
  int size() const noexcept;
  bool empty() const noexcept { return parts_.empty(); }
  /// 1-based; rows past the end have zero boxes.
  int part(int row) const noexcept {
    return row >= 1 && row <= length() ? parts_[row - 1] : 0;
  }

  auto operator<=>(const StrictPartition&) const = default;

 private:
  std::vector<int> parts_;
};

/// Every strict partition of `size`, in decreasing lexicographic order.
std::vector<StrictPartition> strict_partitions_of(int size);
/// Every strict partition contained in `outer`, including empty and `outer`.
std::vector<StrictPartition> strict_partitions_inside(const StrictPartition& outer);

/// 1-based, English convention.
struct Cell {
  int row = 0;
  int col = 0;

  bool diagonal() const noexcept { return row == col; }
  Cell up() const noexcept { return {row - 1, col}; }
  Cell down() const noexcept { return {row + 1, col}; }
  Cell left() const noexcept { return {row, col - 1}; }
  Cell right() const noexcept { return {row, col + 1}; }

  auto operator<=>(const Cell&) const = default;
};

class SkewShape {
 public:
  SkewShape() = default;
  /// Straight shape outer / empty.
  explicit SkewShape(StrictPartition outer) : outer_(std::move(outer)) {}

  const StrictPartition& outer() const noexcept { return outer_; }
  const StrictPartition& inner() const noexcept { return inner_; }

  int rows() const noexcept { return outer_.length(); }
  int size() const noexcept { return outer_.size() - inner_.size(); }
  bool straight() const noexcept { return inner_.empty(); }

  /// First and last column of the skew cells of `row`; first > last when the
  /// row has no skew cells.
  int first_col(int row) const noexcept { return row + inner_.part(row); }
  int last_col(int row) const noexcept { return row + outer_.part(row) - 1; }
  int row_width(int row) const noexcept { return outer_.part(row) - inner_.part(row); }

  bool contains(Cell c) const noexcept {
    return c.row >= 1 && c.row <= rows() && c.col >= first_col(c.row) &&
           c.col <= last_col(c.row);
  }
  bool in_inner(Cell c) const noexcept {
    return c.row >= 1 && c.col >= c.row && c.col < first_col(c.row);
  }

  /// Row-major.
  std::vector<Cell> cells() const;

  auto operator<=>(const SkewShape&) const = default;

 private:
  friend SkewShape make_skew(StrictPartition outer, StrictPartition inner);
  StrictPartition outer_;
  StrictPartition inner_;
};

/// Throws ContainmentError unless inner_i <= outer_i for every row.
SkewShape make_skew(StrictPartition outer, StrictPartition inner);

/// The cells (i, i) of the skew shape; their count is l(outer) - l(inner).
std::vector<Cell> diagonal_cells(const SkewShape& shape);
int diagonal_count(const SkewShape& shape);

enum class Marker : std::uint8_t { low, high };

/// An element of the doubled alphabet 1' < 1 < 2' < 2 < ... where the primed
/// copy is the low letter.
struct Letter {
  int value = 1;
  Marker marker = Marker::high;

  static constexpr Letter low(int v) noexcept { return {v, Marker::low}; }
  static constexpr Letter high(int v) noexcept { return {v, Marker::high}; }

  constexpr bool is_low() const noexcept { return marker == Marker::low; }
  constexpr bool is_high() const noexcept { return marker == Marker::high; }
  constexpr Letter raised() const noexcept { return {value, Marker::high}; }
  constexpr Letter lowered() const noexcept { return {value, Marker::low}; }
  /// Position in the total order.
  constexpr int rank() const noexcept { return 2 * value - (is_low() ? 1 : 0); }

  constexpr bool operator==(const Letter&) const = default;
  constexpr std::strong_ordering operator<=>(const Letter& o) const noexcept {
    return rank() <=> o.rank();
  }
};

std::strong_ordering compare_letters(Letter a, Letter b) noexcept;

/// `5` for high, `5'` for low.
std::string to_string(Letter l);
std::string to_string(const StrictPartition& p);
std::string to_string(const SkewShape& s);

/// Throws ParseError.
Letter parse_letter(std::string_view text);
/// `5,4,1`; the empty string and `0` denote the empty partition.
StrictPartition parse_partition(std::string_view text);
/// `5,4,1/1` or a straight `5,4,1`.
SkewShape parse_skew(std::string_view text);

}  // namespace splab
