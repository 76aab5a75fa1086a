#pragma once

#include <deque>
#include <unordered_map>
#include <vector>

#include "brauerlab/error.hpp"

namespace brauerlab::detail {

/// Extends generator images along the Cayley graph of <gens>; every edge
/// e -> s*e is checked against image(s) * image(e).
template <class T, class Mul>
std::unordered_map<Permutation, T, PermutationHash> extend_along_cayley_graph(const std::vector<Permutation>& gens,
                                                                              const std::vector<T>& images,
                                                                              const Permutation& one, const T& one_image,
                                                                              Mul mul) {
  std::unordered_map<Permutation, T, PermutationHash> out;
  out.emplace(one, one_image);
  std::deque<Permutation> queue{one};
  while (!queue.empty()) {
    const Permutation e = queue.front();
    queue.pop_front();
    for (std::size_t i = 0; i < gens.size(); ++i) {
      const Permutation t = gens[i] * e;
      T value = mul(images[i], out.at(e));
      auto it = out.find(t);
      if (it == out.end()) {
        out.emplace(t, std::move(value));
        queue.push_back(t);
      } else if (!(it->second == value)) {
        throw HomomorphismError("generator images do not extend to a homomorphism: image of " + gens[i].to_string() +
                                    " * " + e.to_string() + " is inconsistent",
                                gens[i], e);
      }
    }
  }
  return out;
}

}  // namespace brauerlab::detail
