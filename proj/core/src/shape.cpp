#include "splab/shape.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <stdexcept>

#include "splab/errors.hpp"

namespace splab {

bool is_strict_partition(std::span<const int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) return false;
    if (i > 0 && parts[i - 1] <= parts[i]) return false;
  }
  return true;
}

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  if (!is_strict_partition(parts_))
    throw std::invalid_argument("not a strict partition: " + to_string(*this));
}

int StrictPartition::size() const noexcept {
  return std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

void strict_partitions_rec(int remaining, int max_part, std::vector<int>& cur,
                           std::vector<StrictPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(cur);
    return;
  }
  for (int p = std::min(remaining, max_part); p >= 1; --p) {
    cur.push_back(p);
    strict_partitions_rec(remaining - p, p - 1, cur, out);
    cur.pop_back();
  }
}

void inside_rec(const StrictPartition& outer, int row, int bound, std::vector<int>& cur,
                std::vector<StrictPartition>& out) {
  out.emplace_back(cur);
  if (row > outer.length()) return;
  for (int p = std::min(bound, outer.part(row)); p >= 1; --p) {
    cur.push_back(p);
    inside_rec(outer, row + 1, p - 1, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<StrictPartition> strict_partitions_of(int size) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  if (size >= 0) strict_partitions_rec(size, size, cur, out);
  return out;
}

std::vector<StrictPartition> strict_partitions_inside(const StrictPartition& outer) {
  std::vector<StrictPartition> out;
  std::vector<int> cur;
  inside_rec(outer, 1, outer.part(1), cur, out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return a.size() != b.size() ? a.size() < b.size() : a.parts() > b.parts();
  });
  return out;
}

std::vector<Cell> SkewShape::cells() const {
  std::vector<Cell> out;
  out.reserve(static_cast<std::size_t>(size()));
  for (int r = 1; r <= rows(); ++r)
    for (int c = first_col(r); c <= last_col(r); ++c) out.push_back({r, c});
  return out;
}

SkewShape make_skew(StrictPartition outer, StrictPartition inner) {
  for (int r = 1; r <= std::max(outer.length(), inner.length()); ++r) {
    if (inner.part(r) > outer.part(r))
      throw ContainmentError("inner shape " + to_string(inner) + " is not contained in " +
                             to_string(outer));
  }
  SkewShape s;
  s.outer_ = std::move(outer);
  s.inner_ = std::move(inner);
  return s;
}

std::vector<Cell> diagonal_cells(const SkewShape& shape) {
  std::vector<Cell> out;
  for (int r = shape.inner().length() + 1; r <= shape.rows(); ++r) out.push_back({r, r});
  return out;
}

int diagonal_count(const SkewShape& shape) {
  return shape.outer().length() - shape.inner().length();
}

std::strong_ordering compare_letters(Letter a, Letter b) noexcept { return a <=> b; }

std::string to_string(Letter l) {
  return std::to_string(l.value) + (l.is_low() ? "'" : "");
}

std::string to_string(const StrictPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.parts().size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p.parts()[i]);
  }
  return out;
}

std::string to_string(const SkewShape& s) {
  std::string out = to_string(s.outer());
  if (!s.inner().empty()) out += "/" + to_string(s.inner());
  return out;
}

Letter parse_letter(std::string_view text) {
  if (text.empty()) throw ParseError("empty letter", 1, 1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr == text.data() || value <= 0)
    throw ParseError("expected a positive integer in '" + std::string(text) + "'", 1, 1);
  std::size_t consumed = static_cast<std::size_t>(ptr - text.data());
  Marker marker = Marker::high;
  if (consumed < text.size() && text[consumed] == '\'') {
    marker = Marker::low;
    ++consumed;
  }
  if (consumed != text.size())
    throw ParseError("unexpected trailing characters in letter '" + std::string(text) + "'", 1,
                     static_cast<int>(consumed) + 1);
  return {value, marker};
}

StrictPartition parse_partition(std::string_view text) {
  if (text.empty() || text == "0") return {};
  std::vector<int> parts;
  std::size_t pos = 0;
  while (true) {
    std::size_t comma = text.find(',', pos);
    std::string_view tok = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
    int v = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), v);
    if (tok.empty() || ec != std::errc() || ptr != tok.data() + tok.size() || v <= 0)
      throw ParseError("expected a positive part, got '" + std::string(tok) + "'", 1,
                       static_cast<int>(pos) + 1);
    parts.push_back(v);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  if (!is_strict_partition(parts))
    throw ParseError("parts must be strictly decreasing: '" + std::string(text) + "'", 1, 1);
  return StrictPartition(std::move(parts));
}

SkewShape parse_skew(std::string_view text) {
  std::size_t slash = text.find('/');
  if (slash == std::string_view::npos) return SkewShape(parse_partition(text));
  return make_skew(parse_partition(text.substr(0, slash)),
                   parse_partition(text.substr(slash + 1)));
}

}  // namespace splab
