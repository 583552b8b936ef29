#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "splab/insertion.hpp"
#include "splab/tableau.hpp"

namespace splab {

enum class SlotKind : std::uint8_t { off, gap, bullet, letter };

struct Slot {
  SlotKind kind = SlotKind::off;
  Letter letter{};
  /// Identity of a letter instance, stable across moves; -1 otherwise.
  int id = -1;
};

/// A skew filling extended with bullets. Cells outside the current outer
/// shape are `off`; cells of the inner shape are `gap`.
class HoleTableau {
 public:
  HoleTableau() = default;
  /// Inner cells become gaps; letters get ids in row-major order.
  explicit HoleTableau(const ShiftedTableau& t);

  int rows() const noexcept { return rows_; }
  int cols() const noexcept { return cols_; }

  /// `off` outside the grid.
  const Slot& at(Cell c) const noexcept;
  /// Precondition: c lies in the grid and c.col >= c.row.
  Slot& slot(Cell c) { return slots_[index(c)]; }

  SlotKind kind(Cell c) const noexcept { return at(c).kind; }
  bool is_letter(Cell c) const noexcept { return kind(c) == SlotKind::letter; }
  bool is_bullet(Cell c) const noexcept { return kind(c) == SlotKind::bullet; }
  bool is_gap(Cell c) const noexcept { return kind(c) == SlotKind::gap; }

  /// Row-major.
  std::vector<Cell> cells_of(SlotKind kind) const;
  int count(SlotKind kind) const;
  int next_id() const;

  /// Letters and gaps read back as a skew tableau. Throws ShapeError when
  /// bullets remain or the cells do not form a shifted skew shape.
  ShiftedTableau to_tableau() const;

  /// Compares kinds and letters; ids are ignored.
  bool operator==(const HoleTableau& o) const;

 private:
  friend HoleTableau oplus(const HoleTableau& t, Letter y);
  friend HoleTableau parse_holes(std::string_view text);
  HoleTableau(int rows, int cols);
  std::size_t index(Cell c) const noexcept {
    return static_cast<std::size_t>((c.row - 1) * cols_ + (c.col - 1));
  }

  int rows_ = 0;
  int cols_ = 0;
  std::vector<Slot> slots_;
};

/// One row per line starting at the diagonal: `.` gap, `*` bullet, `_` an
/// off cell inside a row, letters as in the tableau format.
std::string print_holes(const HoleTableau& u);
HoleTableau parse_holes(std::string_view text);

/// Prepends a row whose last box holds `y`, one column past the rightmost
/// column of the shifted-down copy of `t`; the rest of the new row is gaps.
HoleTableau oplus(const HoleTableau& t, Letter y);
HoleTableau oplus(const ShiftedTableau& t, Letter y);
/// Left-to-right fold of oplus over the word, as high letters.
HoleTableau staircase(const Word& w);

/// Every gap of the lowest row containing gaps becomes a bullet. Throws
/// NoInnerShape when there are no gaps.
HoleTableau place_bullets(const HoleTableau& u);
/// A bullet goes away once no letter lies weakly southeast of it.
HoleTableau delete_exhausted_bullets(const HoleTableau& u);

struct AvailableEntry {
  Letter letter;
  Cell cell;
};
/// Letters with a bullet directly above or directly left, least first. Equal
/// low letters: northmost first; equal high letters: westmost first.
std::vector<AvailableEntry> available_entries(const HoleTableau& u);

struct SlideEvent {
  struct Move {
    int id = -1;
    Letter before;
    Letter after;
    Cell from;
    Cell to;
  };
  int pass = 0;
  int collection = 0;  ///< 1..6, in precedence order
  int rule = 0;        ///< position of the pattern inside its collection
  Move primary;
  /// Collection 4 also lifts the diagonal letter below into `primary.from`.
  std::optional<Move> companion;
};
using SlideTrace = std::vector<SlideEvent>;

/// `pass=k coll=c rule=r letter=L from=(r,c) to=(r,c)`
std::string format_event(const SlideEvent& e);

/// Moves the least available entry by the first matching slide collection,
/// then deletes exhausted bullets. Throws StuckError when nothing is
/// available or no pattern matches.
std::pair<HoleTableau, SlideEvent> apply_slide_step(const HoleTableau& u);

struct MixedObserver {
  /// Every configuration: after bullet placement, after each slide, and
  /// after each pass.
  std::function<void(const HoleTableau&)> on_state;
  std::function<void(const SlideEvent&, const HoleTableau& after)> on_slide;
  std::function<void(int pass)> on_pass_begin;
};

/// Slides until nothing is available; leftover bullets become gaps.
HoleTableau run_pass(const HoleTableau& u, int pass = 1, const MixedObserver* observer = nullptr);

/// Requires a semistandard tableau. Propagates StuckError.
ShiftedTableau mixed_rectify(const ShiftedTableau& t, const MixedObserver* observer = nullptr);
ShiftedTableau mixed_rectify(const HoleTableau& u, const MixedObserver* observer = nullptr);

struct MixedRun {
  ShiftedTableau result;
  SlideTrace trace;
  std::vector<HoleTableau> states;
};
MixedRun mixed_rectify_traced(const HoleTableau& u);

/// mixed_rectify(staircase(w)) == mixed_insert_word(w).
bool check_rect_equals_insertion(const Word& w);

/// Letters other than bullets and gaps satisfy the semistandard conditions
/// along each row and column, ignoring the cells in between.
bool semistandard_with_holes(const HoleTableau& u);
bool no_low_on_diagonal(const HoleTableau& u);

/// Final (cell, letter) pairs obtained by moving letter instances along the
/// trace from `start`, row-major.
std::vector<std::pair<Cell, Letter>> replay_letters(const HoleTableau& start, const SlideTrace& trace);
std::vector<std::pair<Cell, Letter>> letters_of(const HoleTableau& u);

struct MixedAudit {
  int states = 0;
  int slides = 0;
  std::vector<std::string> violations;
  bool ok() const noexcept { return violations.empty(); }
};
/// Rectifies `u` and checks at every step: no low letter on the diagonal,
/// semistandardness with holes, weakly increasing least-available letters
/// within a pass, and that each letter's slides within a pass are
/// contiguous in the trace.
MixedAudit audit_mixed_rectification(const HoleTableau& u);

}  // namespace splab
