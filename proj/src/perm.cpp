#include "brauerlab/perm.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <cstring>
#include <numeric>
#include <stdexcept>

#include "brauerlab/error.hpp"

namespace brauerlab {

namespace {

void check_degree(int degree) {
  if (degree < 1 || degree > kMaxDegree)
    throw std::invalid_argument("permutation degree must lie in [1, " + std::to_string(kMaxDegree) +
                                "], got " + std::to_string(degree));
}

}  // namespace

std::size_t budget_from_environment() {
  const char* raw = std::getenv("BRAUERLAB_BUDGET");
  if (raw == nullptr || *raw == '\0') return kDefaultSubgroupBudget;
  char* end = nullptr;
  const unsigned long long value = std::strtoull(raw, &end, 10);
  if (end == raw || *end != '\0' || value == 0)
    throw std::invalid_argument(std::string("BRAUERLAB_BUDGET is not a positive integer: ") + raw);
  return static_cast<std::size_t>(value);
}

Permutation::Permutation(int degree) {
  check_degree(degree);
  degree_ = static_cast<std::uint8_t>(degree);
  for (int i = 0; i < kMaxDegree; ++i) images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
}

Permutation Permutation::from_images(std::span<const int> images) {
  const int n = static_cast<int>(images.size());
  Permutation p(n);
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < n; ++i) {
    const int x = images[static_cast<std::size_t>(i)];
    if (x < 0 || x >= n || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("image array is not a bijection");
    seen[static_cast<std::size_t>(x)] = true;
    p.images_[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(x);
  }
  return p;
}

Permutation Permutation::cycle(int degree, std::initializer_list<int> points) {
  Permutation p(degree);
  std::vector<int> pts(points);
  std::array<bool, kMaxDegree> seen{};
  for (int x : pts) {
    if (x < 0 || x >= degree || seen[static_cast<std::size_t>(x)])
      throw std::invalid_argument("invalid cycle");
    seen[static_cast<std::size_t>(x)] = true;
  }
  for (std::size_t i = 0; i < pts.size(); ++i)
    p.images_[static_cast<std::size_t>(pts[i])] = static_cast<std::uint8_t>(pts[(i + 1) % pts.size()]);
  return p;
}

Permutation Permutation::parse(std::string_view text, int degree) {
  Permutation result(degree);
  std::size_t pos = 0;
  auto skip_space = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  std::vector<Permutation> cycles;
  skip_space();
  if (pos == text.size()) throw std::invalid_argument("empty permutation text");
  while (pos < text.size()) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in \"" + std::string(text) + "\"");
    ++pos;
    std::vector<int> pts;
    skip_space();
    while (pos < text.size() && text[pos] != ')') {
      skip_space();
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (start == pos) throw std::invalid_argument("expected a point in \"" + std::string(text) + "\"");
      const int point = std::atoi(std::string(text.substr(start, pos - start)).c_str());
      if (point < 1 || point > degree)
        throw std::invalid_argument("point " + std::to_string(point) + " outside 1.." + std::to_string(degree));
      pts.push_back(point - 1);
      skip_space();
      if (pos < text.size() && text[pos] == ',') ++pos;
    }
    if (pos == text.size()) throw std::invalid_argument("unterminated cycle in \"" + std::string(text) + "\"");
    ++pos;
    Permutation c(degree);
    std::array<bool, kMaxDegree> seen{};
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (seen[static_cast<std::size_t>(pts[i])])
        throw std::invalid_argument("repeated point in cycle of \"" + std::string(text) + "\"");
      seen[static_cast<std::size_t>(pts[i])] = true;
      c.images_[static_cast<std::size_t>(pts[i])] = static_cast<std::uint8_t>(pts[(i + 1) % pts.size()]);
    }
    cycles.push_back(c);
    skip_space();
  }
  for (const auto& c : cycles) result = result * c;
  return result;
}

Permutation Permutation::inverse() const {
  Permutation r = *this;
  for (int i = 0; i < degree_; ++i) r.images_[images_[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
  return r;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < degree_; ++i)
    if (images_[static_cast<std::size_t>(i)] != i) return false;
  return true;
}

Parity Permutation::parity() const {
  int transpositions = 0;
  for (int len : cycle_type()) transpositions += len - 1;
  return transpositions % 2 == 0 ? Parity::even : Parity::odd;
}

int Permutation::order() const {
  int result = 1;
  for (int len : cycle_type()) result = std::lcm(result, len);
  return result;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)]) continue;
    int len = 0;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  std::sort(lengths.rbegin(), lengths.rend());
  return lengths;
}

std::vector<int> Permutation::support() const {
  std::vector<int> s;
  for (int i = 0; i < degree_; ++i)
    if (images_[static_cast<std::size_t>(i)] != i) s.push_back(i);
  return s;
}

std::vector<int> Permutation::images() const {
  return std::vector<int>(images_.begin(), images_.begin() + degree_);
}

Permutation Permutation::extended(int degree) const {
  if (degree < degree_) throw std::invalid_argument("cannot shrink a permutation");
  Permutation r(degree);
  r.images_ = images_;
  return r;
}

Permutation Permutation::conjugated_by(const Permutation& g) const { return g * *this * g.inverse(); }

std::string Permutation::to_string() const {
  std::string out;
  std::array<bool, kMaxDegree> seen{};
  for (int i = 0; i < degree_; ++i) {
    if (seen[static_cast<std::size_t>(i)] || images_[static_cast<std::size_t>(i)] == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[static_cast<std::size_t>(j)]; j = images_[static_cast<std::size_t>(j)]) {
      seen[static_cast<std::size_t>(j)] = true;
      if (!first) out += ',';
      out += std::to_string(j + 1);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::uint64_t Permutation::hash() const {
  std::uint64_t lo = 0;
  std::uint64_t hi = 0;
  std::memcpy(&lo, images_.data(), 8);
  std::memcpy(&hi, images_.data() + 8, 8);
  std::uint64_t h = lo * 0x9E3779B97F4A7C15ull;
  h ^= (hi + 0x632BE59BD9B4E019ull + (h << 6) + (h >> 2)) * 0xBF58476D1CE4E5B9ull;
  return h ^ degree_;
}

Permutation compose(const Permutation& a, const Permutation& b) {
  if (a.degree() != b.degree())
    throw std::invalid_argument("degree mismatch: " + std::to_string(a.degree()) + " vs " +
                                std::to_string(b.degree()));
  return a * b;
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.degree_ != b.degree_) return compose(a, b);
  Permutation r = b;
  for (std::size_t i = 0; i < kMaxDegree; ++i) r.images_[i] = a.images_[b.images_[i]];
  return r;
}

Parity parity(const Permutation& p) { return p.parity(); }

std::vector<Permutation> parse_permutation_list(std::string_view text, int degree) {
  std::vector<Permutation> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view piece = text.substr(start, end - start);
    bool blank = std::all_of(piece.begin(), piece.end(), [](char c) { return std::isspace(static_cast<unsigned char>(c)); });
    if (!blank) out.push_back(Permutation::parse(piece, degree));
    start = end + 1;
  }
  return out;
}

int max_point(std::string_view text) {
  int best = 0;
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::size_t start = pos;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      best = std::max(best, std::atoi(std::string(text.substr(start, pos - start)).c_str()));
    } else {
      ++pos;
    }
  }
  return best;
}

}  // namespace brauerlab
