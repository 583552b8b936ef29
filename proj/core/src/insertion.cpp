#include "splab/insertion.hpp"

#include <algorithm>
#include <charconv>
#include <deque>
#include <stdexcept>

#include "splab/errors.hpp"

namespace splab {

Word parse_word(std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    char ch = text[i];
    if (ch == ' ' || ch == ',' || ch == '\t' || ch == '\n' || ch == '\r') {
      ++i;
      continue;
    }
    int v = 0;
    auto [ptr, ec] = std::from_chars(text.data() + i, text.data() + text.size(), v);
    if (ec != std::errc() || v <= 0)
      throw ParseError("expected a positive integer", 1, static_cast<int>(i) + 1);
    std::size_t end = static_cast<std::size_t>(ptr - text.data());
    if (end < text.size() && std::string_view(" ,\t\n\r").find(text[end]) == std::string_view::npos)
      throw ParseError("unexpected character '" + std::string(1, text[end]) + "'", 1,
                       static_cast<int>(end) + 1);
    w.push_back(v);
    i = end;
  }
  return w;
}

std::string to_string(const Word& w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(w[i]);
  }
  return out;
}

ShiftedTableau mixed_insert_letter(const ShiftedTableau& t, Letter x) {
  if (x.is_low()) throw MarkerError("mixed insertion is only defined for high letters");
  if (!t.shape().straight()) throw ShapeError("mixed insertion needs a straight-shape tableau");

  // rows[r] holds row r + 1, which starts on the diagonal at column r + 1.
  std::vector<std::vector<Letter>> rows = t.rows();
  auto row_len = [&](std::size_t r) { return r < rows.size() ? rows[r].size() : 0; };

  enum class Into { row, column } into = Into::row;
  std::size_t index = 0;  // 0-based row or column
  Letter cur = x;
  while (true) {
    if (into == Into::row) {
      if (index == rows.size()) {
        rows.push_back({cur});
        break;
      }
      auto& row = rows[index];
      auto it = std::upper_bound(row.begin(), row.end(), cur);
      if (it == row.end()) {
        row.push_back(cur);
        break;
      }
      Letter bumped = *it;
      bool from_diagonal = it == row.begin();
      *it = cur;
      if (bumped.is_high() && !from_diagonal) {
        ++index;
        cur = bumped;
      } else {
        index = index + static_cast<std::size_t>(it - row.begin()) + 1;
        into = Into::column;
        cur = bumped.lowered();
      }
    } else {
      // Column `index` meets rows 0 .. depth - 1.
      std::size_t depth = 0;
      while (depth < rows.size() && depth <= index && depth + row_len(depth) > index) ++depth;
      std::size_t r = 0;
      while (r < depth && !(rows[r][index - r] > cur)) ++r;
      if (r == depth) {
        if (depth == rows.size()) {
          if (depth != index)
            throw std::logic_error("column insertion left the shifted shape");
          rows.push_back({cur});
        } else {
          if (depth + row_len(depth) != index)
            throw std::logic_error("column insertion left the shifted shape");
          rows[depth].push_back(cur);
        }
        break;
      }
      Letter& slot = rows[r][index - r];
      Letter bumped = slot;
      bool from_diagonal = r == index;
      slot = cur;
      if (bumped.is_high() && !from_diagonal) {
        index = r + 1;
        into = Into::row;
        cur = bumped;
      } else {
        ++index;
        cur = bumped.lowered();
      }
    }
  }

  ShiftedTableau out = ShiftedTableau::straight(std::move(rows));
  if (out.size() != t.size() + 1 || !is_semistandard(out))
    throw std::logic_error("mixed insertion produced an invalid tableau");
  return out;
}

ShiftedTableau mixed_insert_word(const Word& w) {
  ShiftedTableau t;
  for (int v : w) t = mixed_insert_letter(t, Letter::high(v));
  return t;
}

bool is_hook_word(const Word& w) {
  std::size_t k = 0;
  while (k + 1 < w.size() && w[k] > w[k + 1]) ++k;
  // w[0..k] is the longest strictly decreasing prefix; the rest may start at
  // k or k + 1.
  auto weakly_increasing_from = [&](std::size_t s) {
    for (std::size_t i = s; i + 1 < w.size(); ++i)
      if (w[i] > w[i + 1]) return false;
    return true;
  };
  return w.empty() || weakly_increasing_from(k) || weakly_increasing_from(k + 1);
}

int longest_hook_subword_length(const Word& w) {
  const std::size_t n = w.size();
  std::vector<int> dec_end(n, 1), inc_start(n, 1);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j)
      if (w[j] > w[i]) dec_end[i] = std::max(dec_end[i], dec_end[j] + 1);
  for (std::size_t i = n; i-- > 0;)
    for (std::size_t j = i + 1; j < n; ++j)
      if (w[i] <= w[j]) inc_start[i] = std::max(inc_start[i], inc_start[j] + 1);

  // best_dec[k]: longest decreasing subword inside w[0..k).
  std::vector<int> best_dec(n + 1, 0), best_inc(n + 1, 0);
  for (std::size_t k = 1; k <= n; ++k) best_dec[k] = std::max(best_dec[k - 1], dec_end[k - 1]);
  for (std::size_t k = n; k-- > 0;) best_inc[k] = std::max(best_inc[k + 1], inc_start[k]);
  int best = 0;
  for (std::size_t k = 0; k <= n; ++k) best = std::max(best, best_dec[k] + best_inc[k]);
  return best;
}

namespace {

std::vector<std::size_t> block_lengths(const StrictPartition& shape) {
  std::vector<std::size_t> out;
  for (int i = shape.length(); i >= 1; --i) out.push_back(static_cast<std::size_t>(shape.part(i)));
  return out;
}

bool joins(const Word& prev, const Word& block) {
  Word both = prev;
  both.insert(both.end(), block.begin(), block.end());
  return longest_hook_subword_length(both) == static_cast<int>(block.size());
}

void hook_words_of_length(std::size_t len, int n, Word& cur, std::vector<Word>& out) {
  if (cur.size() == len) {
    if (is_hook_word(cur)) out.push_back(cur);
    return;
  }
  for (int v = 1; v <= n; ++v) {
    cur.push_back(v);
    hook_words_of_length(len, n, cur, out);
    cur.pop_back();
  }
}

}  // namespace

bool in_hook_set(const Word& w, const StrictPartition& shape) {
  if (static_cast<int>(w.size()) != shape.size())
    throw LengthError("word length " + std::to_string(w.size()) + " differs from |shape| = " +
                      std::to_string(shape.size()));
  Word prev;
  std::size_t pos = 0;
  bool first = true;
  for (std::size_t len : block_lengths(shape)) {
    Word block(w.begin() + static_cast<std::ptrdiff_t>(pos),
               w.begin() + static_cast<std::ptrdiff_t>(pos + len));
    pos += len;
    if (!is_hook_word(block)) return false;
    if (!first && !joins(prev, block)) return false;
    first = false;
    prev = std::move(block);
  }
  return true;
}

std::vector<Word> enumerate_hook_set(const StrictPartition& shape, int n) {
  if (n < 1) throw std::invalid_argument("letter bound must be positive");
  const auto lengths = block_lengths(shape);
  std::vector<std::vector<Word>> candidates;
  for (std::size_t len : lengths) {
    std::vector<Word> words;
    Word cur;
    hook_words_of_length(len, n, cur, words);
    candidates.push_back(std::move(words));
  }
  std::vector<Word> out;
  Word acc;
  auto rec = [&](auto&& self, std::size_t i, const Word* prev) -> void {
    if (i == candidates.size()) {
      out.push_back(acc);
      return;
    }
    for (const Word& block : candidates[i]) {
      if (prev && !joins(*prev, block)) continue;
      acc.insert(acc.end(), block.begin(), block.end());
      self(self, i + 1, &block);
      acc.resize(acc.size() - block.size());
    }
  };
  rec(rec, 0, nullptr);
  return out;
}

const std::vector<PlacticRelation>& plactic_relations() {
  static const std::vector<PlacticRelation> relations = {
      {"abdc", "adbc", [](int a, int b, int c, int d) { return a <= b && b <= c && c < d; }},
      {"acdb", "acbd", [](int a, int b, int c, int d) { return a <= b && b < c && c <= d; }},
      {"dacb", "adcb", [](int a, int b, int c, int d) { return a <= b && b < c && c < d; }},
      {"badc", "bdac", [](int a, int b, int c, int d) { return a < b && b <= c && c < d; }},
      {"cbda", "cdba", [](int a, int b, int c, int d) { return a < b && b < c && c <= d; }},
      {"dbca", "bdca", [](int a, int b, int c, int d) { return a < b && b <= c && c < d; }},
      {"bcda", "bcad", [](int a, int b, int c, int d) { return a < b && b <= c && c <= d; }},
      {"cadb", "cdab", [](int a, int b, int c, int d) { return a <= b && b < c && c <= d; }},
  };
  return relations;
}

namespace {

// Binds the window to `from`, checks the family's inequalities and spells the
// window according to `to`.
bool rewrite(const int* window, std::string_view from, std::string_view to,
             const PlacticRelation& rel, int* out) {
  int val[4] = {0, 0, 0, 0};
  for (std::size_t i = 0; i < 4; ++i) val[from[i] - 'a'] = window[i];
  if (!rel.admits(val[0], val[1], val[2], val[3])) return false;
  for (std::size_t i = 0; i < 4; ++i) out[i] = val[to[i] - 'a'];
  return true;
}

}  // namespace

std::set<Word> relation_neighbors(const Word& w) {
  std::set<Word> out;
  if (w.size() < 4) return out;
  for (std::size_t p = 0; p + 4 <= w.size(); ++p) {
    for (const auto& rel : plactic_relations()) {
      for (auto [from, to] : {std::pair{rel.lhs, rel.rhs}, std::pair{rel.rhs, rel.lhs}}) {
        Word v = w;
        if (rewrite(w.data() + p, from, to, rel, v.data() + p) && v != w) out.insert(std::move(v));
      }
    }
  }
  return out;
}

std::set<Word> relation_class(const Word& w) {
  std::set<Word> seen{w};
  std::deque<Word> queue{w};
  while (!queue.empty()) {
    Word cur = std::move(queue.front());
    queue.pop_front();
    for (Word v : relation_neighbors(cur)) {
      if (seen.insert(v).second) queue.push_back(std::move(v));
    }
  }
  return seen;
}

bool plactic_equivalent(const Word& u, const Word& v) {
  return u == v || mixed_insert_word(u) == mixed_insert_word(v);
}

}  // namespace splab
