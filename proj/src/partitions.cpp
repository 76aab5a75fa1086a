#include "brauerlab/partitions.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <stdexcept>

namespace brauerlab {

namespace {

std::string bracketed(const std::vector<int>& parts) {
  std::string out = "[";
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += ',';
    out += std::to_string(parts[i]);
  }
  return out + "]";
}

void require_prime(int p) {
  bool prime = p >= 2;
  for (int d = 2; prime && d * d <= p; ++d) prime = p % d != 0;
  if (!prime) throw std::invalid_argument(std::to_string(p) + " is not prime");
}

void partitions_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<Partition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, prefix, out);
    prefix.pop_back();
  }
}

void strict_rec(int remaining, int max_part, std::vector<int>& prefix, std::vector<BarPartition>& out) {
  if (remaining == 0) {
    out.emplace_back(prefix);
    return;
  }
  for (int part = 1; part <= std::min(remaining, max_part); ++part) {
    prefix.push_back(part);
    strict_rec(remaining - part, part - 1, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
  }
}

int Partition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
std::string Partition::to_string() const { return bracketed(parts_); }

BarPartition::BarPartition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (parts_[i] <= 0) throw std::invalid_argument("bar partition parts must be positive");
    if (i > 0 && parts_[i] >= parts_[i - 1]) throw std::invalid_argument("bar partition parts must be strictly decreasing");
  }
}

int BarPartition::size() const { return std::accumulate(parts_.begin(), parts_.end(), 0); }
std::string BarPartition::to_string() const { return bracketed(parts_); }

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  std::string digits;
  auto flush = [&] {
    if (!digits.empty()) parts.push_back(std::stoi(digits));
    digits.clear();
  };
  for (char c : text) {
    if (std::isdigit(static_cast<unsigned char>(c)))
      digits += c;
    else if (c == ',' || c == ']' || c == '[' || std::isspace(static_cast<unsigned char>(c)))
      flush();
    else
      throw std::invalid_argument("bad partition text: " + text);
  }
  flush();
  return Partition(parts);
}

Partition conjugate(const Partition& lambda) {
  std::vector<int> out;
  for (int j = 1; j <= lambda[0]; ++j) {
    int count = 0;
    for (int part : lambda.parts()) count += part >= j ? 1 : 0;
    out.push_back(count);
  }
  return Partition(out);
}

bool is_p_regular(const Partition& lambda, int p) {
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size();) {
    std::size_t j = i;
    while (j < parts.size() && parts[j] == parts[i]) ++j;
    if (static_cast<int>(j - i) >= p) return false;
    i = j;
  }
  return true;
}

Partition p_core(const Partition& lambda, int p) {
  require_prime(p);
  const int k = static_cast<int>(lambda.length());
  std::vector<int> beads(static_cast<std::size_t>(p), 0);
  for (int i = 0; i < k; ++i) ++beads[static_cast<std::size_t>((lambda[static_cast<std::size_t>(i)] + k - 1 - i) % p)];
  std::vector<int> beta;
  for (int r = 0; r < p; ++r)
    for (int c = 0; c < beads[static_cast<std::size_t>(r)]; ++c) beta.push_back(r + c * p);
  std::sort(beta.rbegin(), beta.rend());
  std::vector<int> parts;
  for (int i = 0; i < k; ++i) {
    const int part = beta[static_cast<std::size_t>(i)] - (k - 1 - i);
    if (part > 0) parts.push_back(part);
  }
  return Partition(parts);
}

int p_weight(const Partition& lambda, int p) { return (lambda.size() - p_core(lambda, p).size()) / p; }
bool is_p_core(const Partition& lambda, int p) { return p_core(lambda, p) == lambda; }

bool is_two_core(const Partition& lambda) {
  const auto& parts = lambda.parts();
  for (std::size_t i = 0; i < parts.size(); ++i)
    if (parts[i] != static_cast<int>(parts.size() - i)) return false;
  return true;
}

std::vector<Partition> partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("partitions_of: negative size");
  std::vector<Partition> out;
  std::vector<int> prefix;
  partitions_rec(m, m, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Partition> enumerate_p_cores(int m, int p) {
  std::vector<Partition> out;
  for (auto& lambda : partitions_of(m))
    if (is_p_core(lambda, p)) out.push_back(std::move(lambda));
  return out;
}

std::vector<BarPartition> strict_partitions_of(int m) {
  if (m < 0) throw std::invalid_argument("strict_partitions_of: negative size");
  std::vector<BarPartition> out;
  std::vector<int> prefix;
  strict_rec(m, m, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

BarCore p_bar_core(const BarPartition& lambda, int p) {
  require_prime(p);
  if (p == 2) throw std::invalid_argument("p-bar cores need an odd prime");
  std::vector<int> parts = lambda.parts();
  int weight = 0;
  auto has = [&](int x) { return std::find(parts.begin(), parts.end(), x) != parts.end(); };
  for (;;) {
    bool moved = false;
    if (auto it = std::find(parts.begin(), parts.end(), p); it != parts.end()) {
      parts.erase(it);
      moved = true;
    }
    for (std::size_t i = 0; !moved && i < parts.size(); ++i)
      if (parts[i] > p && !has(parts[i] - p)) {
        parts[i] -= p;
        moved = true;
      }
    for (std::size_t i = 0; !moved && i < parts.size(); ++i)
      for (std::size_t j = i + 1; !moved && j < parts.size(); ++j)
        if (parts[i] + parts[j] == p) {
          parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(j));
          parts.erase(parts.begin() + static_cast<std::ptrdiff_t>(i));
          moved = true;
        }
    if (!moved) break;
    ++weight;
    std::sort(parts.rbegin(), parts.rend());
  }
  return {BarPartition(parts), weight};
}

bool is_p_bar_core(const BarPartition& lambda, int p) { return p_bar_core(lambda, p).weight == 0; }

}  // namespace brauerlab
