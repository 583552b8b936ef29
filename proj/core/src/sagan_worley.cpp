#include "splab/sagan_worley.hpp"

#include "splab/errors.hpp"

namespace splab {

namespace {

Cell the_bullet(const HoleTableau& u) {
  auto bullets = u.cells_of(SlotKind::bullet);
  if (bullets.size() != 1) throw std::invalid_argument("a Sagan-Worley state has exactly one hole");
  return bullets.front();
}

// Moves the letter at `from` into the hole at `to`, optionally re-marked.
void shift(HoleTableau& u, Cell from, Cell to, std::optional<Letter> as = std::nullopt) {
  Slot s = u.at(from);
  if (as) s.letter = *as;
  u.slot(to) = s;
  u.slot(from) = {SlotKind::bullet, {}, -1};
}

bool slide_once(HoleTableau& u, Cell& h) {
  const Cell r = h.right(), d = h.down();
  const bool has_r = u.is_letter(r), has_d = u.is_letter(d);
  if (h.diagonal()) {
    if (!has_r) return false;
    const Letter x = u.at(r).letter;
    const Cell dr = r.down();
    if (x.is_low() && u.is_letter(dr) && u.at(dr).letter.value == x.value) {
      const Slot right = u.at(r), below = u.at(dr);
      const bool both_low = below.letter.is_low();
      u.slot(h) = {SlotKind::letter, both_low ? x : x.raised(), right.id};
      u.slot(r) = {SlotKind::letter, below.letter.raised(), below.id};
      u.slot(dr) = {SlotKind::bullet, {}, -1};
      h = dr;
      return true;
    }
    shift(u, r, h);
    h = r;
    return true;
  }
  if (!has_r && !has_d) return false;
  bool take_right;
  if (has_r && has_d) {
    const Letter x = u.at(r).letter, y = u.at(d).letter;
    take_right = x == y ? x.is_low() : x < y;
  } else {
    take_right = has_r;
  }
  const Cell from = take_right ? r : d;
  shift(u, from, h);
  h = from;
  return true;
}

std::optional<Cell> next_corner(const HoleTableau& u, CornerOrder order) {
  std::optional<Cell> pick;
  for (int row = 1; row <= u.rows(); ++row) {
    int last = 0;
    for (int c = row; c <= u.cols(); ++c)
      if (u.is_gap({row, c})) last = c;
    if (last == 0 || u.is_gap({row + 1, last})) continue;
    pick = Cell{row, last};
    if (order == CornerOrder::highest_row_first) break;
  }
  return pick;
}

}  // namespace

HoleTableau sw_slide(const HoleTableau& u) {
  HoleTableau v = u;
  Cell h = the_bullet(u);
  if (!slide_once(v, h))
    throw NoNeighbor("hole at (" + std::to_string(h.row) + "," + std::to_string(h.col) +
                     ") is at an outer corner");
  return v;
}

ShiftedTableau sw_rectify(const ShiftedTableau& t, CornerOrder order, const SWObserver& on_state) {
  HoleTableau u(t);
  while (auto corner = next_corner(u, order)) {
    Cell h = *corner;
    u.slot(h).kind = SlotKind::bullet;
    if (on_state) on_state(u);
    while (slide_once(u, h)) {
      if (on_state) on_state(u);
    }
    u.slot(h) = Slot{};
  }
  return u.to_tableau();
}

ShiftedTableau raise_diagonals(const ShiftedTableau& t) {
  ShiftedTableau out = t;
  for (Cell c : diagonal_cells(t.shape())) out.set(c, t.at(c).raised());
  return out;
}

std::optional<Marker> southwestmost_marker(const ShiftedTableau& t, int x) {
  std::optional<Marker> out;
  int best_row = 0;
  for (Cell c : t.shape().cells()) {
    const Letter l = t.at(c);
    // Row-major order: the first hit in a deeper row is the westmost there.
    if (l.value == x && c.row > best_row) {
      best_row = c.row;
      out = l.marker;
    }
  }
  return out;
}

std::optional<Marker> southwestmost_marker(const HoleTableau& u, int x) {
  std::optional<Marker> out;
  int best_row = 0;
  for (Cell c : u.cells_of(SlotKind::letter)) {
    const Letter l = u.at(c).letter;
    if (l.value == x && c.row > best_row) {
      best_row = c.row;
      out = l.marker;
    }
  }
  return out;
}

std::map<ShiftedTableau, long> rectification_counts(const SkewShape& shape, int n) {
  std::map<ShiftedTableau, long> counts;
  for_each_tableau(shape, n, FillMode::qtableau,
                   [&](const ShiftedTableau& s) { ++counts[sw_rectify(s)]; });
  return counts;
}

long preimage_count(const ShiftedTableau& t, const SkewShape& shape, int n) {
  const auto counts = rectification_counts(shape, n);
  auto it = counts.find(t);
  return it == counts.end() ? 0 : it->second;
}

FormalPlacticSum skew_plactic_schur_P(const SkewShape& shape, int n) {
  std::map<ShiftedTableau, long> counts;
  for_each_tableau(shape, n, FillMode::qtableau,
                   [&](const ShiftedTableau& s) { ++counts[raise_diagonals(sw_rectify(s))]; });
  FormalPlacticSum out;
  const int diag = diagonal_count(shape);
  for (const auto& [t, k] : counts) out.emplace(t, Dyadic(BigInt(k), diag));
  return out;
}

}  // namespace splab
