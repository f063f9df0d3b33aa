#pragma once

#include <optional>

#include "invariants/band_operator.hpp"
#include "invariants/winding.hpp"

namespace invariants {

/// The answer record for a band operator: Fredholm or not, per-end winding
/// numbers of the symbol determinant, and the index when defined.
struct IndexReport {
  bool fredholm = false;
  std::optional<int> wn_neg;
  std::optional<int> wn_pos;
  /// wn_pos - wn_neg, present exactly when fredholm.
  std::optional<int> index;
  double min_modulus_neg = 0.0;
  double min_modulus_pos = 0.0;
  bool method_agreement = true;
};

/// Fredholm test and index from the asymptotic symbols: the operator is
/// Fredholm iff det of the symbol is nowhere vanishing on the circle at
/// both ends, and then the index is the winding difference.
IndexReport fredholm_index(const BandOperator& a);

}  // namespace invariants
