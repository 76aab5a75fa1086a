#include "brauerlab/sc_kernels.hpp"

#include <bit>
#include <exception>
#include <numeric>

namespace brauerlab {

FilterVerdict filter_candidate(const FilterContext& ctx, const ElementSet& q) {
  FilterVerdict v;
  const ElementTable& table = *ctx.table;
  if ((ctx.q2w_center & ~q).any()) return v;

  const std::vector<std::size_t> gens = table.greedy_generators(q);
  for (std::size_t g = 0; g < table.size(); ++g) {
    if (q.test(g)) continue;
    bool commutes = true;
    for (std::size_t s : gens)
      if (table.product(g, s) != table.product(s, g)) {
        commutes = false;
        break;
      }
    if (commutes) return v;  // C_{Q_2w}(Q) not inside Q
  }

  std::uint32_t moved = 0;
  for (std::size_t g = 0; g < table.size(); ++g) {
    if (!q.test(g)) continue;
    for (int pt = 0; pt < table.degree(); ++pt)
      if (table.element(g)(pt) != pt) moved |= 1u << pt;
  }
  const int support = std::popcount(moved);
  if (support % 2 != 0 || moved != (1u << support) - 1) return v;

  const PermGroup group = table.group(q);
  std::vector<int> omega_hat(static_cast<std::size_t>(2 * ctx.w));
  std::iota(omega_hat.begin(), omega_hat.end(), 0);
  if (!sc_condition(group, omega_hat)) return v;
  v.data = classification_data(group);
  const auto weight = weight_and_multiplicity(v.data, ctx.n, ctx.w);
  if (!weight) return v;
  v.keep = true;
  v.weight = *weight;
  return v;
}

std::vector<FilterVerdict> filter_candidates_serial(const FilterContext& ctx, const std::vector<ElementSet>& subgroups) {
  std::vector<FilterVerdict> out;
  out.reserve(subgroups.size());
  for (const auto& q : subgroups) out.push_back(filter_candidate(ctx, q));
  return out;
}

std::vector<FilterVerdict> filter_candidates_omp(const FilterContext& ctx, const std::vector<ElementSet>& subgroups) {
  std::vector<FilterVerdict> out(subgroups.size());
  std::exception_ptr failure;
  const long long count = static_cast<long long>(subgroups.size());
#if defined(BRAUERLAB_HAVE_OPENMP)
#pragma omp parallel for schedule(dynamic, 8)
#endif
  for (long long i = 0; i < count; ++i) {
    try {
      out[static_cast<std::size_t>(i)] = filter_candidate(ctx, subgroups[static_cast<std::size_t>(i)]);
    } catch (...) {
#if defined(BRAUERLAB_HAVE_OPENMP)
#pragma omp critical
#endif
      if (!failure) failure = std::current_exception();
    }
  }
  if (failure) std::rethrow_exception(failure);
  return out;
}

}  // namespace brauerlab
