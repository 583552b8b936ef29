#pragma once

#include <functional>
#include <map>
#include <optional>

#include "splab/mixed_jdt.hpp"
#include "splab/numeric.hpp"

namespace splab {

/// Which inner corner starts the next slide path.
enum class CornerOrder { lowest_row_first, highest_row_first };

/// One local move of the single bullet in `u`. Throws NoNeighbor when the
/// bullet has no letter to its right or below.
HoleTableau sw_slide(const HoleTableau& u);

/// Called on the configuration after every local move.
using SWObserver = std::function<void(const HoleTableau&)>;

/// Empties one inner corner at a time and walks the hole to the outer rim.
ShiftedTableau sw_rectify(const ShiftedTableau& t, CornerOrder order = CornerOrder::lowest_row_first,
                          const SWObserver& on_state = {});

/// Every diagonal entry becomes high.
ShiftedTableau raise_diagonals(const ShiftedTableau& t);

/// Marker of the southwestmost letter of value x (greatest row, then least
/// column), or nullopt if x does not occur.
std::optional<Marker> southwestmost_marker(const ShiftedTableau& t, int x);
std::optional<Marker> southwestmost_marker(const HoleTableau& u, int x);

/// sw_rectify image counts over every Q-tableau of `shape` with values <= n.
std::map<ShiftedTableau, long> rectification_counts(const SkewShape& shape, int n);
long preimage_count(const ShiftedTableau& t, const SkewShape& shape, int n);

/// Straight semistandard tableaux with dyadic coefficients; no zero entries.
using FormalPlacticSum = std::map<ShiftedTableau, Dyadic>;
FormalPlacticSum skew_plactic_schur_P(const SkewShape& shape, int n);

}  // namespace splab
