#pragma once

// Literal rim-hook and p-bar removal over every removal order. Shares no
// code with the library's abacus / deterministic remover.

#include <algorithm>
#include <map>
#include <set>
#include <vector>

namespace oracle {

using Parts = std::vector<int>;

inline Parts trim(Parts v) {
  while (!v.empty() && v.back() == 0) v.pop_back();
  return v;
}

inline int column_length(const Parts& lambda, int j) {
  int c = 0;
  for (int part : lambda) c += part >= j ? 1 : 0;
  return c;
}

/// Every partition obtained by removing one rim hook of length p.
inline std::vector<Parts> remove_one_rim_hook(const Parts& lambda, int p) {
  std::vector<Parts> out;
  const int rows = static_cast<int>(lambda.size());
  for (int i = 1; i <= rows; ++i)
    for (int j = 1; j <= lambda[static_cast<std::size_t>(i - 1)]; ++j) {
      const int arm = lambda[static_cast<std::size_t>(i - 1)] - j;
      const int leg = column_length(lambda, j) - i;
      if (arm + leg + 1 != p) continue;
      Parts mu = lambda;
      for (int r = i; r < i + leg; ++r) mu[static_cast<std::size_t>(r - 1)] = lambda[static_cast<std::size_t>(r)] - 1;
      mu[static_cast<std::size_t>(i + leg - 1)] = j - 1;
      out.push_back(trim(mu));
    }
  return out;
}

/// All terminal partitions reachable by repeated rim-hook removal.
inline std::set<Parts> all_p_cores_reachable(const Parts& lambda, int p) {
  std::set<Parts> terminal;
  std::set<Parts> visited;
  std::vector<Parts> stack{lambda};
  while (!stack.empty()) {
    Parts cur = stack.back();
    stack.pop_back();
    if (!visited.insert(cur).second) continue;
    auto next = remove_one_rim_hook(cur, p);
    if (next.empty()) terminal.insert(cur);
    for (auto& m : next) stack.push_back(std::move(m));
  }
  return terminal;
}

inline std::vector<Parts> bar_moves(const Parts& lambda, int p) {
  std::vector<Parts> out;
  auto normal = [](Parts v) {
    std::sort(v.rbegin(), v.rend());
    return trim(v);
  };
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const int x = lambda[i];
    if (x == p) {
      Parts v = lambda;
      v.erase(v.begin() + static_cast<std::ptrdiff_t>(i));
      out.push_back(normal(v));
    }
    if (x > p && std::find(lambda.begin(), lambda.end(), x - p) == lambda.end()) {
      Parts v = lambda;
      v[i] = x - p;
      out.push_back(normal(v));
    }
    for (std::size_t j = i + 1; j < lambda.size(); ++j)
      if (x + lambda[j] == p) {
        Parts v;
        for (std::size_t k = 0; k < lambda.size(); ++k)
          if (k != i && k != j) v.push_back(lambda[k]);
        out.push_back(normal(v));
      }
  }
  return out;
}

/// Terminal (core, number of moves) pairs over every bar-removal order.
inline std::set<std::pair<Parts, int>> all_bar_cores_reachable(const Parts& lambda, int p) {
  std::set<std::pair<Parts, int>> terminal;
  std::set<Parts> visited;
  std::vector<std::pair<Parts, int>> stack{{lambda, 0}};
  while (!stack.empty()) {
    auto [cur, moves] = stack.back();
    stack.pop_back();
    if (!visited.insert(cur).second) continue;
    auto next = bar_moves(cur, p);
    if (next.empty()) terminal.insert({cur, moves});
    for (auto& m : next) stack.push_back({std::move(m), moves + 1});
  }
  return terminal;
}

/// Partitions of m, generated independently of the library.
inline std::vector<Parts> partitions(int m, int max_part = -1) {
  if (max_part < 0) max_part = m;
  if (m == 0) return {Parts{}};
  std::vector<Parts> out;
  for (int first = std::min(m, max_part); first >= 1; --first)
    for (auto& rest : partitions(m - first, first)) {
      Parts v{first};
      v.insert(v.end(), rest.begin(), rest.end());
      out.push_back(std::move(v));
    }
  return out;
}

}  // namespace oracle
