#include "splab/tableau.hpp"

#include <algorithm>
#include <numeric>

#include "splab/errors.hpp"

namespace splab {

ShiftedTableau::ShiftedTableau(SkewShape shape, std::vector<std::vector<Letter>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.rows())
    throw ShapeError("tableau has " + std::to_string(rows_.size()) + " rows, shape " +
                     to_string(shape_) + " has " + std::to_string(shape_.rows()));
  for (int r = 1; r <= shape_.rows(); ++r) {
    if (static_cast<int>(rows_[r - 1].size()) != shape_.row_width(r))
      throw ShapeError("row " + std::to_string(r) + " has the wrong number of entries for shape " +
                       to_string(shape_));
  }
}

ShiftedTableau ShiftedTableau::straight(std::vector<std::vector<Letter>> rows) {
  std::vector<int> parts;
  for (const auto& row : rows) parts.push_back(static_cast<int>(row.size()));
  if (!is_strict_partition(parts)) throw ShapeError("row lengths are not a strict partition");
  return ShiftedTableau(SkewShape(StrictPartition(std::move(parts))), std::move(rows));
}

bool operator<(const ShiftedTableau& a, const ShiftedTableau& b) {
  if (a.shape() != b.shape()) return a.shape() < b.shape();
  return a.rows() < b.rows();
}

namespace {

bool semistandard_with(const ShiftedTableau& t, bool raise_diagonal) {
  const SkewShape& s = t.shape();
  auto entry = [&](Cell c) {
    Letter l = t.at(c);
    return raise_diagonal && c.diagonal() ? l.raised() : l;
  };
  for (Cell c : s.cells()) {
    Letter here = entry(c);
    if (c.diagonal() && here.is_low()) return false;
    if (s.contains(c.left())) {
      Letter w = entry(c.left());
      if (w > here || (w == here && here.is_low())) return false;
    }
    if (s.contains(c.up())) {
      Letter n = entry(c.up());
      if (n > here || (n == here && here.is_high())) return false;
    }
  }
  return true;
}

struct Filler {
  const SkewShape& shape;
  int n;
  FillMode mode;
  const std::function<void(const ShiftedTableau&)>& visit;
  std::vector<Cell> cells;
  ShiftedTableau work;

  // Comparisons see diagonal entries raised in Q-tableau mode.
  Letter effective(Cell c) const {
    Letter l = work.at(c);
    return mode == FillMode::qtableau && c.diagonal() ? l.raised() : l;
  }

  bool admissible(Cell c, Letter l) const {
    Letter eff = mode == FillMode::qtableau && c.diagonal() ? l.raised() : l;
    if (c.diagonal() && mode == FillMode::semistandard && l.is_low()) return false;
    if (shape.contains(c.left())) {
      Letter w = effective(c.left());
      if (w > eff || (w == eff && eff.is_low())) return false;
    }
    if (shape.contains(c.up())) {
      Letter nn = effective(c.up());
      if (nn > eff || (nn == eff && eff.is_high())) return false;
    }
    return true;
  }

  void run(std::size_t i) {
    if (i == cells.size()) {
      visit(work);
      return;
    }
    Cell c = cells[i];
    for (int v = 1; v <= n; ++v) {
      for (Marker m : {Marker::low, Marker::high}) {
        Letter l{v, m};
        if (!admissible(c, l)) continue;
        work.set(c, l);
        run(i + 1);
      }
    }
  }
};

}  // namespace

bool is_semistandard(const ShiftedTableau& t) { return semistandard_with(t, false); }
bool is_q_tableau(const ShiftedTableau& t) { return semistandard_with(t, true); }

void for_each_tableau(const SkewShape& shape, int n, FillMode mode,
                      const std::function<void(const ShiftedTableau&)>& visit) {
  if (n < 1) throw std::invalid_argument("letter bound must be positive");
  std::vector<std::vector<Letter>> rows;
  for (int r = 1; r <= shape.rows(); ++r)
    rows.emplace_back(static_cast<std::size_t>(shape.row_width(r)), Letter::high(1));
  Filler f{shape, n, mode, visit, shape.cells(), ShiftedTableau(shape, std::move(rows))};
  f.run(0);
}

std::vector<ShiftedTableau> enumerate_tableaux(const SkewShape& shape, int n, FillMode mode) {
  std::vector<ShiftedTableau> out;
  for_each_tableau(shape, n, mode, [&](const ShiftedTableau& t) { out.push_back(t); });
  return out;
}

ContentVector content(const ShiftedTableau& t) {
  ContentVector counts;
  for (const auto& row : t.rows()) {
    for (Letter l : row) {
      if (static_cast<int>(counts.size()) < l.value) counts.resize(static_cast<std::size_t>(l.value), 0);
      ++counts[static_cast<std::size_t>(l.value - 1)];
    }
  }
  return counts;
}

ShiftedTableau standardize(const ShiftedTableau& t) {
  std::vector<Cell> cells = t.shape().cells();
  std::sort(cells.begin(), cells.end(), [&](Cell a, Cell b) {
    Letter la = t.at(a), lb = t.at(b);
    if (la != lb) return la < lb;
    return la.is_low() ? a.row < b.row : a.col < b.col;
  });
  ShiftedTableau out = t;
  int next = 1;
  for (Cell c : cells) out.set(c, Letter::high(next++));
  return out;
}

std::string print_tableau(const ShiftedTableau& t) {
  std::string out;
  const SkewShape& s = t.shape();
  for (int r = 1; r <= s.rows(); ++r) {
    bool first = true;
    for (int c = r; c <= s.last_col(r); ++c) {
      if (!first) out += ' ';
      first = false;
      out += c < s.first_col(r) ? std::string(".") : to_string(t.at({r, c}));
    }
    out += '\n';
  }
  return out;
}

std::string to_inline(const ShiftedTableau& t) {
  std::string out = "[";
  const SkewShape& s = t.shape();
  for (int r = 1; r <= s.rows(); ++r) {
    if (r > 1) out += ',';
    out += '[';
    for (int c = r; c <= s.last_col(r); ++c) {
      if (c > r) out += ',';
      out += c < s.first_col(r) ? std::string(".") : to_string(t.at({r, c}));
    }
    out += ']';
  }
  return out + "]";
}

ShiftedTableau parse_tableau(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    if (nl == std::string_view::npos) nl = text.size();
    lines.push_back(text.substr(pos, nl - pos));
    pos = nl + 1;
  }
  auto blank = [](std::string_view l) {
    return l.find_first_not_of(" \t\r") == std::string_view::npos;
  };
  while (!lines.empty() && blank(lines.back())) lines.pop_back();

  std::vector<int> outer, inner;
  std::vector<std::vector<Letter>> rows;
  for (std::size_t li = 0; li < lines.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    std::string_view line = lines[li];
    if (blank(line)) throw ParseError("empty row inside tableau", line_no, 1);
    int dots = 0, cells = 0;
    std::vector<Letter> row;
    std::size_t i = 0;
    while (i < line.size()) {
      if (line[i] == ' ' || line[i] == '\t' || line[i] == '\r') {
        ++i;
        continue;
      }
      std::size_t end = line.find_first_of(" \t\r", i);
      if (end == std::string_view::npos) end = line.size();
      std::string_view tok = line.substr(i, end - i);
      const int col_no = static_cast<int>(i) + 1;
      if (tok == ".") {
        if (!row.empty()) throw ParseError("'.' after a filled cell", line_no, col_no);
        ++dots;
      } else {
        try {
          row.push_back(parse_letter(tok));
        } catch (const ParseError& e) {
          throw ParseError("bad cell '" + std::string(tok) + "'", line_no, col_no + e.column() - 1);
        }
      }
      ++cells;
      i = end;
    }
    outer.push_back(cells);
    inner.push_back(dots);
    rows.push_back(std::move(row));
  }
  if (!is_strict_partition(outer))
    throw ParseError("row lengths are not strictly decreasing", static_cast<int>(lines.size()), 1);
  while (!inner.empty() && inner.back() == 0) inner.pop_back();
  if (!is_strict_partition(inner))
    throw ParseError("inner boxes do not form a strict partition", 1, 1);
  try {
    return ShiftedTableau(make_skew(StrictPartition(outer), StrictPartition(inner)),
                          std::move(rows));
  } catch (const ContainmentError& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

}  // namespace splab
