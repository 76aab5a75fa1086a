#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace brauerlab {

/// Largest number of points a permutation may act on.
inline constexpr int kMaxDegree = 16;

enum class Parity { even, odd };

/// A permutation of {0, ..., degree-1}.
///
/// Points are 0-based internally; every text form (parsing, printing) is
/// 1-based cycle notation such as "(1,5)(2,6)". Products follow the left
/// action convention: (a * b)(x) = a(b(x)), so b is applied first.
class Permutation {
 public:
  Permutation() : Permutation(1) {}
  explicit Permutation(int degree);

  static Permutation identity(int degree) { return Permutation(degree); }
  /// Builds from 0-based images; throws std::invalid_argument unless bijective.
  static Permutation from_images(std::span<const int> images);
  /// Parses 1-based cycle notation. Juxtaposed cycles are multiplied with the
  /// same convention as operator*, so the rightmost cycle acts first.
  static Permutation parse(std::string_view text, int degree);
  /// Single cycle through the given 0-based points.
  static Permutation cycle(int degree, std::initializer_list<int> points);

  int degree() const { return degree_; }
  int operator()(int point) const { return images_[static_cast<std::size_t>(point)]; }
  int image(int point) const { return images_[static_cast<std::size_t>(point)]; }

  Permutation inverse() const;
  bool is_identity() const;
  Parity parity() const;
  bool is_even() const { return parity() == Parity::even; }
  int order() const;
  /// Lengths of all cycles (fixed points included), sorted descending.
  std::vector<int> cycle_type() const;
  /// Points moved by this permutation, ascending.
  std::vector<int> support() const;
  std::vector<int> images() const;
  /// Same permutation viewed on a larger point set (extra points fixed).
  Permutation extended(int degree) const;
  /// Conjugate by g: g * this * g^-1.
  Permutation conjugated_by(const Permutation& g) const;

  /// Disjoint cycle notation, 1-based, cycles ordered by smallest point and
  /// each cycle starting at its smallest point; identity prints as "()".
  std::string to_string() const;

  std::uint64_t hash() const;

  friend Permutation operator*(const Permutation& a, const Permutation& b);

  friend bool operator==(const Permutation&, const Permutation&) = default;
  /// Lexicographic on the image array (the canonical element order).
  friend std::strong_ordering operator<=>(const Permutation& a, const Permutation& b) {
    if (auto c = a.images_ <=> b.images_; c != 0) return c;
    return a.degree_ <=> b.degree_;
  }

 private:
  std::array<std::uint8_t, kMaxDegree> images_{};
  std::uint8_t degree_ = 0;
};

/// Returns a * b (apply b, then a). Throws std::invalid_argument on degree mismatch.
Permutation compose(const Permutation& a, const Permutation& b);
Parity parity(const Permutation& p);

/// Parses a list of permutations separated by ';' (e.g. "(1,2);(1,2,3)").
std::vector<Permutation> parse_permutation_list(std::string_view text, int degree);
/// Largest point mentioned in a cycle-notation string (1-based), 0 if none.
int max_point(std::string_view text);

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const { return static_cast<std::size_t>(p.hash()); }
};

}  // namespace brauerlab
