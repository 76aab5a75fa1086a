#pragma once

#include <vector>

#include "brauerlab/brauer_sc.hpp"
#include "brauerlab/subgroups.hpp"

namespace brauerlab {

/// Shared read-only data for testing the subgroups of Q_{2w}.
struct FilterContext {
  const ElementTable* table = nullptr;
  int n = 0;
  int w = 0;
  ElementSet q2w_center;
};

struct FilterVerdict {
  bool keep = false;
  ScClassification data;
  WeightMultiplicity weight;
};

/// Containment, support and self-centralizing tests plus weight data, one
/// verdict per subgroup. The serial loop is the reference implementation.
FilterVerdict filter_candidate(const FilterContext& ctx, const ElementSet& q);
std::vector<FilterVerdict> filter_candidates_serial(const FilterContext& ctx, const std::vector<ElementSet>& subgroups);
/// Same result as the serial loop; runs the loop with OpenMP when available.
std::vector<FilterVerdict> filter_candidates_omp(const FilterContext& ctx, const std::vector<ElementSet>& subgroups);

}  // namespace brauerlab
