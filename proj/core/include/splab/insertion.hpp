#pragma once

#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "splab/tableau.hpp"

namespace splab {

/// Positive integers; inserted as high letters.
using Word = std::vector<int>;

/// Space- or comma-separated positive integers. Throws ParseError.
Word parse_word(std::string_view text);
std::string to_string(const Word& w);

/// Haiman mixed insertion of a high letter into a straight semistandard
/// tableau. High letters bump along rows; low letters, and letters bumped off
/// the diagonal (which become low), bump along columns.
/// Throws MarkerError for low `x` and ShapeError for skew `t`.
ShiftedTableau mixed_insert_letter(const ShiftedTableau& t, Letter x);
ShiftedTableau mixed_insert_word(const Word& w);

bool is_hook_word(const Word& w);
/// Longest subword that is a strictly decreasing run followed by a weakly
/// increasing run. O(n^2).
int longest_hook_subword_length(const Word& w);

/// Blocks of lengths parts[l], ..., parts[1]; each block is a hook word and
/// is a longest hook subword of itself concatenated after its predecessor.
/// Throws LengthError if |w| != |shape|.
bool in_hook_set(const Word& w, const StrictPartition& shape);
std::vector<Word> enumerate_hook_set(const StrictPartition& shape, int n);

/// One of the eight quartic families abdc~adbc, acdb~acbd, ...
struct PlacticRelation {
  std::string_view lhs;
  std::string_view rhs;
  /// Holds for the values bound to a, b, c, d.
  bool (*admits)(int a, int b, int c, int d);
};
const std::vector<PlacticRelation>& plactic_relations();

/// Every word reachable by rewriting one window of four consecutive letters
/// with one relation, in either direction.
std::set<Word> relation_neighbors(const Word& w);
/// Breadth-first closure of relation_neighbors.
std::set<Word> relation_class(const Word& w);

/// Equal mixed insertion tableaux.
bool plactic_equivalent(const Word& u, const Word& v);

}  // namespace splab
