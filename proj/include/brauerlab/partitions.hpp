#pragma once

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace brauerlab {

/// Integer partition: weakly decreasing positive parts.
class Partition {
 public:
  Partition() = default;
  /// Throws std::invalid_argument unless parts are positive and weakly decreasing.
  explicit Partition(std::vector<int> parts);
  Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  std::size_t length() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }
  int operator[](std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
  /// "[3,2,1]", empty partition "[]".
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
  /// Lexicographic on the parts.
  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Partition with strictly decreasing parts (labels of spin blocks).
class BarPartition {
 public:
  BarPartition() = default;
  explicit BarPartition(std::vector<int> parts);
  BarPartition(std::initializer_list<int> parts) : BarPartition(std::vector<int>(parts)) {}

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  bool empty() const { return parts_.empty(); }
  std::string to_string() const;
  Partition as_partition() const { return Partition(parts_); }

  friend bool operator==(const BarPartition&, const BarPartition&) = default;
  friend auto operator<=>(const BarPartition& a, const BarPartition& b) { return a.parts_ <=> b.parts_; }

 private:
  std::vector<int> parts_;
};

/// Parses "[3,2,1]" or "3,2,1"; "[]" is the empty partition.
Partition parse_partition(const std::string& text);

Partition conjugate(const Partition& lambda);
/// No part occurs p or more times.
bool is_p_regular(const Partition& lambda, int p);

/// p-core via the abacus: beads of the beta-set slid up their runners.
Partition p_core(const Partition& lambda, int p);
int p_weight(const Partition& lambda, int p);
bool is_p_core(const Partition& lambda, int p);
/// Staircase (k, k-1, ..., 1), including the empty partition.
bool is_two_core(const Partition& lambda);

/// All partitions of m in lexicographic order.
std::vector<Partition> partitions_of(int m);
/// All p-cores of size m in lexicographic order.
std::vector<Partition> enumerate_p_cores(int m, int p);
/// All strict partitions of m in lexicographic order.
std::vector<BarPartition> strict_partitions_of(int m);

struct BarCore {
  BarPartition core;
  int weight = 0;
};

/// Removes p-bars until none is left, trying the moves in a fixed order:
/// delete a part equal to p; lower a part by p when the result is positive
/// and not already a part; delete two parts summing to p. p must be odd.
BarCore p_bar_core(const BarPartition& lambda, int p);
bool is_p_bar_core(const BarPartition& lambda, int p);

}  // namespace brauerlab
