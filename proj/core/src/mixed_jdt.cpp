#include "splab/mixed_jdt.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "splab/errors.hpp"

namespace splab {

namespace {

const Slot kOff{};

}  // namespace

HoleTableau::HoleTableau(int rows, int cols)
    : rows_(rows), cols_(cols), slots_(static_cast<std::size_t>(rows * cols)) {}

HoleTableau::HoleTableau(const ShiftedTableau& t)
    : HoleTableau(t.shape().rows(), t.shape().outer().part(1)) {
  const SkewShape& s = t.shape();
  int id = 0;
  for (int r = 1; r <= s.rows(); ++r) {
    for (int c = r; c <= s.last_col(r); ++c) {
      Slot& sl = slot({r, c});
      if (c < s.first_col(r)) {
        sl.kind = SlotKind::gap;
      } else {
        sl = {SlotKind::letter, t.at({r, c}), id++};
      }
    }
  }
}

const Slot& HoleTableau::at(Cell c) const noexcept {
  if (c.row < 1 || c.row > rows_ || c.col < c.row || c.col > cols_) return kOff;
  return slots_[index(c)];
}

std::vector<Cell> HoleTableau::cells_of(SlotKind k) const {
  std::vector<Cell> out;
  for (int r = 1; r <= rows_; ++r)
    for (int c = r; c <= cols_; ++c)
      if (at({r, c}).kind == k) out.push_back({r, c});
  return out;
}

int HoleTableau::count(SlotKind k) const {
  return static_cast<int>(std::count_if(slots_.begin(), slots_.end(),
                                        [k](const Slot& s) { return s.kind == k; }));
}

int HoleTableau::next_id() const {
  int id = -1;
  for (const Slot& s : slots_) id = std::max(id, s.id);
  return id + 1;
}

bool HoleTableau::operator==(const HoleTableau& o) const {
  const int r = std::max(rows_, o.rows_), c = std::max(cols_, o.cols_);
  for (int i = 1; i <= r; ++i) {
    for (int j = i; j <= c; ++j) {
      const Slot& a = at({i, j});
      const Slot& b = o.at({i, j});
      if (a.kind != b.kind) return false;
      if (a.kind == SlotKind::letter && a.letter != b.letter) return false;
    }
  }
  return true;
}

ShiftedTableau HoleTableau::to_tableau() const {
  std::vector<int> outer, inner;
  std::vector<std::vector<Letter>> rows;
  bool ended = false;
  for (int r = 1; r <= rows_; ++r) {
    int gaps = 0;
    std::vector<Letter> row;
    int c = r;
    for (; c <= cols_ && kind({r, c}) == SlotKind::gap; ++c) ++gaps;
    for (; c <= cols_ && kind({r, c}) == SlotKind::letter; ++c) row.push_back(at({r, c}).letter);
    for (; c <= cols_; ++c) {
      if (kind({r, c}) != SlotKind::off)
        throw ShapeError("row " + std::to_string(r) + " is not gaps followed by letters");
    }
    const int width = gaps + static_cast<int>(row.size());
    if (width == 0) {
      ended = true;
      continue;
    }
    if (ended) throw ShapeError("empty row inside the configuration");
    outer.push_back(width);
    inner.push_back(gaps);
    rows.push_back(std::move(row));
  }
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  if (!is_strict_partition(outer) || !is_strict_partition(inner))
    throw ShapeError("configuration is not a shifted skew shape");
  return ShiftedTableau(make_skew(StrictPartition(outer), StrictPartition(inner)), std::move(rows));
}

std::string print_holes(const HoleTableau& u) {
  std::string out;
  std::vector<std::string> lines;
  for (int r = 1; r <= u.rows(); ++r) {
    int last = r - 1;
    for (int c = r; c <= u.cols(); ++c)
      if (u.kind({r, c}) != SlotKind::off) last = c;
    std::string line;
    for (int c = r; c <= last; ++c) {
      if (c > r) line += ' ';
      const Slot& s = u.at({r, c});
      switch (s.kind) {
        case SlotKind::off: line += '_'; break;
        case SlotKind::gap: line += '.'; break;
        case SlotKind::bullet: line += '*'; break;
        case SlotKind::letter: line += to_string(s.letter); break;
      }
    }
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (const auto& l : lines) out += l + '\n';
  return out;
}

HoleTableau parse_holes(std::string_view text) {
  std::vector<std::vector<std::string>> rows;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    std::string_view line = text.substr(pos, nl - pos);
    std::vector<std::string> toks;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t end = line.find_first_of(" \t\r", i);
      if (end == std::string_view::npos) end = line.size();
      toks.emplace_back(line.substr(i, end - i));
      i = end;
    }
    rows.push_back(std::move(toks));
    pos = nl + 1;
  }
  while (!rows.empty() && rows.back().empty()) rows.pop_back();
  int cols = 0;
  for (std::size_t r = 0; r < rows.size(); ++r)
    cols = std::max(cols, static_cast<int>(r + rows[r].size()));
  HoleTableau u(static_cast<int>(rows.size()), cols);
  int id = 0;
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t k = 0; k < rows[r].size(); ++k) {
      const std::string& tok = rows[r][k];
      Cell c{static_cast<int>(r) + 1, static_cast<int>(r + k) + 1};
      Slot& s = u.slot(c);
      if (tok == ".") {
        s.kind = SlotKind::gap;
      } else if (tok == "*") {
        s.kind = SlotKind::bullet;
      } else if (tok == "_") {
        s.kind = SlotKind::off;
      } else {
        try {
          s = {SlotKind::letter, parse_letter(tok), id++};
        } catch (const ParseError&) {
          throw ParseError("bad cell '" + tok + "'", static_cast<int>(r) + 1, static_cast<int>(k) + 1);
        }
      }
    }
  }
  return u;
}

HoleTableau oplus(const HoleTableau& t, Letter y) {
  int rightmost = 0;
  for (int r = 1; r <= t.rows(); ++r)
    for (int c = r; c <= t.cols(); ++c)
      if (t.kind({r, c}) != SlotKind::off) rightmost = std::max(rightmost, c);
  const int top = rightmost == 0 ? 1 : rightmost + 2;
  HoleTableau u(t.rows() + 1, std::max(top, t.cols() + 1));
  for (int c = 1; c < top; ++c) u.slot({1, c}).kind = SlotKind::gap;
  u.slot({1, top}) = {SlotKind::letter, y, t.next_id()};
  for (int r = 1; r <= t.rows(); ++r)
    for (int c = r; c <= t.cols(); ++c) u.slot({r + 1, c + 1}) = t.at({r, c});
  return u;
}

HoleTableau oplus(const ShiftedTableau& t, Letter y) { return oplus(HoleTableau(t), y); }

HoleTableau staircase(const Word& w) {
  HoleTableau u;
  for (int v : w) u = oplus(u, Letter::high(v));
  return u;
}

HoleTableau place_bullets(const HoleTableau& u) {
  auto gaps = u.cells_of(SlotKind::gap);
  if (gaps.empty()) throw NoInnerShape("tableau already has straight shape");
  const int bottom = gaps.back().row;
  HoleTableau v = u;
  for (Cell c : gaps)
    if (c.row == bottom) v.slot(c).kind = SlotKind::bullet;
  return v;
}

HoleTableau delete_exhausted_bullets(const HoleTableau& u) {
  const int R = u.rows(), C = u.cols();
  // below[r][c]: some letter lies weakly southeast of (r, c).
  std::vector<std::vector<char>> below(static_cast<std::size_t>(R + 2),
                                       std::vector<char>(static_cast<std::size_t>(C + 2), 0));
  for (int r = R; r >= 1; --r) {
    for (int c = C; c >= 1; --c) {
      below[r][c] = u.is_letter({r, c}) || below[r + 1][c] || below[r][c + 1];
    }
  }
  HoleTableau v = u;
  for (Cell c : u.cells_of(SlotKind::bullet))
    if (!below[c.row][c.col]) v.slot(c) = Slot{};
  return v;
}

std::vector<AvailableEntry> available_entries(const HoleTableau& u) {
  std::vector<AvailableEntry> out;
  for (Cell c : u.cells_of(SlotKind::letter)) {
    if (u.is_bullet(c.up()) || u.is_bullet(c.left())) out.push_back({u.at(c).letter, c});
  }
  std::sort(out.begin(), out.end(), [](const AvailableEntry& a, const AvailableEntry& b) {
    if (a.letter != b.letter) return a.letter < b.letter;
    return a.letter.is_low() ? a.cell.row < b.cell.row : a.cell.col < b.cell.col;
  });
  return out;
}

std::string format_event(const SlideEvent& e) {
  auto cell = [](Cell c) { return "(" + std::to_string(c.row) + "," + std::to_string(c.col) + ")"; };
  return "pass=" + std::to_string(e.pass) + " coll=" + std::to_string(e.collection) +
         " rule=" + std::to_string(e.rule) + " letter=" + to_string(e.primary.before) +
         " from=" + cell(e.primary.from) + " to=" + cell(e.primary.to);
}

std::pair<HoleTableau, SlideEvent> apply_slide_step(const HoleTableau& u) {
  const auto avail = available_entries(u);
  if (avail.empty()) throw StuckError("no available entry");
  const Letter y = avail.front().letter;
  const Cell b = avail.front().cell;
  const Cell up = b.up(), left = b.left(), corner = b.up().left();
  auto bullet = [&](Cell c) { return u.is_bullet(c); };
  auto letter = [&](Cell c) { return u.is_letter(c); };

  HoleTableau v = u;
  SlideEvent e;
  e.primary.id = u.at(b).id;
  e.primary.before = y;
  e.primary.from = b;
  auto move = [&](int collection, int rule, Cell to, Letter after) {
    e.collection = collection;
    e.rule = rule;
    e.primary.to = to;
    e.primary.after = after;
    v.slot(to) = {SlotKind::letter, after, e.primary.id};
    v.slot(b) = {SlotKind::bullet, {}, -1};
  };

  const bool blocked_corner = letter(corner) && bullet(up) && bullet(left);
  if (bullet(up) && bullet(corner) && (bullet(left) || b.diagonal())) {
    // Diagonal slides.
    move(1, bullet(left) ? 1 : 2, corner, y);
  } else if (blocked_corner && u.at(corner).letter != y) {
    // Singular slides: low letters go up, high letters go left.
    if (y.is_low())
      move(2, 1, up, y);
    else
      move(2, 2, left, y);
  } else if (blocked_corner && y.is_low() && left.diagonal() && letter(corner.left())) {
    move(3, 1, left, y.raised());
  } else if (blocked_corner) {
    if (y.is_low())
      move(3, 2, left, y);
    else
      move(3, 3, up, y);
  } else if (y.is_low() && bullet(left) && left.diagonal() && letter(b.down()) &&
             u.at(b.down()).letter == y.raised()) {
    // Two-cell rewrite: both copies end high in the row, the bullet drops to
    // the diagonal below.
    const Cell below = b.down();
    const Slot lower = u.at(below);
    move(4, 1, left, y.raised());
    v.slot(b) = {SlotKind::letter, lower.letter, lower.id};
    v.slot(below) = {SlotKind::bullet, {}, -1};
    e.companion = SlideEvent::Move{lower.id, lower.letter, lower.letter, below, b};
  } else if (bullet(left) && left.diagonal()) {
    move(5, 1, left, y.raised());
  } else if (b.diagonal() && y.is_high() && letter(corner) && bullet(up)) {
    move(5, 2, up, y.lowered());
  } else if (bullet(left) && bullet(up)) {
    throw StuckError("two fallback slides apply to " + to_string(y) + " at (" +
                     std::to_string(b.row) + "," + std::to_string(b.col) + ")\n" + print_holes(u));
  } else if (bullet(left)) {
    move(6, 1, left, y);
  } else if (bullet(up)) {
    move(6, 2, up, y);
  } else {
    throw StuckError("no mixed slide matches " + to_string(y) + "\n" + print_holes(u));
  }
  return {delete_exhausted_bullets(v), e};
}

HoleTableau run_pass(const HoleTableau& u, int pass, const MixedObserver* observer) {
  HoleTableau cur = delete_exhausted_bullets(u);
  if (observer && observer->on_state && !(cur == u)) observer->on_state(cur);
  const int limit = 4 * (cur.rows() * cur.cols() + 1) * (cur.rows() + cur.cols() + 1);
  int steps = 0;
  while (!available_entries(cur).empty()) {
    if (++steps > limit) throw StuckError("pass does not terminate");
    auto [next, event] = apply_slide_step(cur);
    event.pass = pass;
    if (observer && observer->on_slide) observer->on_slide(event, next);
    if (observer && observer->on_state) observer->on_state(next);
    cur = std::move(next);
  }
  if (cur.count(SlotKind::bullet) > 0) {
    for (Cell c : cur.cells_of(SlotKind::bullet)) cur.slot(c).kind = SlotKind::gap;
    if (observer && observer->on_state) observer->on_state(cur);
  }
  return cur;
}

ShiftedTableau mixed_rectify(const HoleTableau& u, const MixedObserver* observer) {
  HoleTableau cur = u;
  if (observer && observer->on_state) observer->on_state(cur);
  int pass = 0;
  while (cur.count(SlotKind::gap) > 0) {
    const int before = cur.count(SlotKind::gap);
    cur = place_bullets(cur);
    ++pass;
    if (observer && observer->on_pass_begin) observer->on_pass_begin(pass);
    if (observer && observer->on_state) observer->on_state(cur);
    cur = run_pass(cur, pass, observer);
    if (cur.count(SlotKind::gap) >= before) throw StuckError("pass did not shrink the inner shape");
  }
  ShiftedTableau out = cur.to_tableau();
  if (!out.shape().straight()) throw StuckError("rectification ended on a skew shape");
  return out;
}

ShiftedTableau mixed_rectify(const ShiftedTableau& t, const MixedObserver* observer) {
  if (!is_semistandard(t))
    throw std::invalid_argument("mixed rectification needs a semistandard tableau");
  return mixed_rectify(HoleTableau(t), observer);
}

MixedRun mixed_rectify_traced(const HoleTableau& u) {
  MixedRun run;
  MixedObserver obs;
  obs.on_state = [&](const HoleTableau& s) { run.states.push_back(s); };
  obs.on_slide = [&](const SlideEvent& e, const HoleTableau&) { run.trace.push_back(e); };
  run.result = mixed_rectify(u, &obs);
  return run;
}

bool check_rect_equals_insertion(const Word& w) {
  return mixed_rectify(staircase(w)) == mixed_insert_word(w);
}

bool no_low_on_diagonal(const HoleTableau& u) {
  for (int r = 1; r <= u.rows(); ++r)
    if (u.is_letter({r, r}) && u.at({r, r}).letter.is_low()) return false;
  return true;
}

bool semistandard_with_holes(const HoleTableau& u) {
  if (!no_low_on_diagonal(u)) return false;
  auto line_ok = [&](Cell start, Cell step, Marker no_repeat) {
    std::optional<Letter> prev;
    for (Cell c = start; c.row <= u.rows() && c.col <= u.cols();
         c = {c.row + step.row, c.col + step.col}) {
      if (!u.is_letter(c)) continue;
      Letter l = u.at(c).letter;
      if (prev && (*prev > l || (*prev == l && l.marker == no_repeat))) return false;
      prev = l;
    }
    return true;
  };
  for (int r = 1; r <= u.rows(); ++r)
    if (!line_ok({r, r}, {0, 1}, Marker::low)) return false;
  for (int c = 1; c <= u.cols(); ++c)
    if (!line_ok({1, c}, {1, 0}, Marker::high)) return false;
  return true;
}

std::vector<std::pair<Cell, Letter>> letters_of(const HoleTableau& u) {
  std::vector<std::pair<Cell, Letter>> out;
  for (Cell c : u.cells_of(SlotKind::letter)) out.emplace_back(c, u.at(c).letter);
  return out;
}

std::vector<std::pair<Cell, Letter>> replay_letters(const HoleTableau& start, const SlideTrace& trace) {
  std::map<int, std::pair<Cell, Letter>> where;
  for (Cell c : start.cells_of(SlotKind::letter)) where[start.at(c).id] = {c, start.at(c).letter};
  auto apply = [&](const SlideEvent::Move& m) {
    auto it = where.find(m.id);
    if (it == where.end() || it->second.first != m.from || it->second.second != m.before)
      throw MismatchError("trace does not match the letters it moves");
    it->second = {m.to, m.after};
  };
  for (const SlideEvent& e : trace) {
    apply(e.primary);
    if (e.companion) apply(*e.companion);
  }
  std::vector<std::pair<Cell, Letter>> out;
  for (const auto& [id, pl] : where) out.push_back(pl);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

MixedAudit audit_mixed_rectification(const HoleTableau& u) {
  MixedAudit audit;
  int pass = 0;
  int current = -1;
  std::optional<Letter> last_least;
  std::set<int> finished;

  MixedObserver obs;
  obs.on_pass_begin = [&](int p) {
    pass = p;
    current = -1;
    last_least.reset();
    finished.clear();
  };
  obs.on_state = [&](const HoleTableau& s) {
    ++audit.states;
    if (!no_low_on_diagonal(s))
      audit.violations.push_back("low letter on a diagonal cell:\n" + print_holes(s));
    else if (!semistandard_with_holes(s))
      audit.violations.push_back("not semistandard with holes:\n" + print_holes(s));
  };
  obs.on_slide = [&](const SlideEvent& e, const HoleTableau&) {
    ++audit.slides;
    const int id = e.primary.id;
    if (id != current) {
      if (current >= 0) finished.insert(current);
      if (finished.count(id))
        audit.violations.push_back("letter slid again after stopping: " + format_event(e));
      if (last_least && e.primary.before < *last_least)
        audit.violations.push_back("least available letter decreased: " + format_event(e));
      last_least = e.primary.before;
      current = id;
    }
    if (e.companion && finished.count(e.companion->id))
      audit.violations.push_back("companion letter moved after stopping: " + format_event(e));
  };
  try {
    (void)mixed_rectify(u, &obs);
  } catch (const std::exception& ex) {
    audit.violations.push_back(std::string("rectification failed: ") + ex.what());
  }
  return audit;
}

}  // namespace splab
