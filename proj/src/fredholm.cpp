#include "invariants/fredholm.hpp"

namespace invariants {

IndexReport fredholm_index(const BandOperator& a) {
  IndexReport report;
  bool fredholm = true;
  for (End end : {End::neg, End::pos}) {
    const LaurentPoly d = det(symbol_at(a, end));
    double min_modulus = 0.0;
    std::optional<int> wn;
    if (d.is_zero()) {
      fredholm = false;
    } else {
      const WindingResult w = winding(d);
      min_modulus = w.min_modulus;
      report.method_agreement = report.method_agreement && w.method_agreement;
      if (w.nowhere_vanishing)
        wn = w.winding;
      else
        fredholm = false;
    }
    if (end == End::neg) {
      report.wn_neg = wn;
      report.min_modulus_neg = min_modulus;
    } else {
      report.wn_pos = wn;
      report.min_modulus_pos = min_modulus;
    }
  }
  report.fredholm = fredholm;
  if (fredholm) report.index = *report.wn_pos - *report.wn_neg;
  return report;
}

}  // namespace invariants
