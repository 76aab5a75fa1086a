#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "brauerlab/error.hpp"
#include "brauerlab/perm_group.hpp"

namespace brauerlab {

/// Dense matrix over F_p, p prime and below 2^15.
class PrimeFieldMatrix {
 public:
  PrimeFieldMatrix(int p, int rows, int cols);
  static PrimeFieldMatrix identity(int p, int n);
  /// Entries are reduced mod p (negative values allowed).
  static PrimeFieldMatrix from_rows(int p, const std::vector<std::vector<int>>& rows);

  int p() const { return p_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }
  int at(int r, int c) const { return data_[static_cast<std::size_t>(r * cols_ + c)]; }
  void set(int r, int c, int v);
  std::vector<std::vector<int>> to_rows() const;

  int rank() const;
  bool is_invertible() const { return rows_ == cols_ && rank() == rows_; }
  std::optional<PrimeFieldMatrix> inverse() const;
  /// Basis of {v : M v = 0}, one vector per free column of the reduced
  /// echelon form, with a 1 in that column.
  std::vector<std::vector<int>> nullspace() const;

  friend PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
  friend PrimeFieldMatrix operator+(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
  friend PrimeFieldMatrix operator-(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b);
  friend bool operator==(const PrimeFieldMatrix&, const PrimeFieldMatrix&) = default;

  /// Rows on separate lines, zero entries printed as '.'.
  std::string to_string() const;

 private:
  int p_;
  int rows_;
  int cols_;
  std::vector<int> data_;
};

/// Automorphism of a permutation group, stored on all elements.
class GroupAutomorphism {
 public:
  /// Throws HomomorphismError, or std::invalid_argument if the images do not
  /// generate the group again or the generators do not generate it.
  static GroupAutomorphism from_generators(const PermGroup& g,
                                           const std::vector<std::pair<Permutation, Permutation>>& assignment);
  static GroupAutomorphism identity(const PermGroup& g);

  const PermGroup& group() const { return group_; }
  const Permutation& operator()(const Permutation& x) const;
  /// x -> (*this)(psi(x)).
  GroupAutomorphism after(const GroupAutomorphism& psi) const;
  bool is_identity() const;

 private:
  explicit GroupAutomorphism(PermGroup g) : group_(std::move(g)) {}
  PermGroup group_;
  std::unordered_map<Permutation, Permutation, PermutationHash> map_;
};

/// Every automorphism of g, found by trying generator images of matching
/// orders on a shortest generating tuple. Requires |g| <= 64; throws
/// BudgetExceeded after budget candidate tuples.
std::vector<GroupAutomorphism> automorphisms(const PermGroup& g, std::size_t budget = budget_from_environment());

/// Matrix representation of a permutation group over F_p.
class MatRep {
 public:
  const PermGroup& group() const { return group_; }
  int p() const { return p_; }
  int dim() const { return dim_; }
  const std::vector<Permutation>& generators() const { return generators_; }
  const std::vector<PrimeFieldMatrix>& generator_images() const { return images_; }
  /// Image of any group element. Throws std::out_of_range outside the group.
  const PrimeFieldMatrix& image(const Permutation& g) const;

 private:
  friend MatRep build_rep(const PermGroup&, int, const std::vector<std::pair<Permutation, PrimeFieldMatrix>>&);
  MatRep(PermGroup g, int p, int dim) : group_(std::move(g)), p_(p), dim_(dim) {}
  PermGroup group_;
  int p_;
  int dim_;
  std::vector<Permutation> generators_;
  std::vector<PrimeFieldMatrix> images_;
  std::unordered_map<Permutation, PrimeFieldMatrix, PermutationHash> all_;
};

/// Validates the assignment (square invertible images of one size, the
/// listed elements generate `group`, homomorphism on every Cayley edge) and
/// stores the image of every element. Throws HomomorphismError with a
/// witness pair, or std::invalid_argument for the other failures.
MatRep build_rep(const PermGroup& group, int p, const std::vector<std::pair<Permutation, PrimeFieldMatrix>>& images);
MatRep trivial_rep(const PermGroup& group, int p);

/// g -> rep(phi(g)). phi must be an automorphism of rep.group().
MatRep twist(const MatRep& rep, const GroupAutomorphism& phi);

/// Cap on the number of coefficient vectors tried in the intertwiner sweep.
inline constexpr std::uint64_t kMaxIntertwinerCandidates = std::uint64_t{1} << 24;

/// Invertible X with X a(g) = b(g) X for all g: the identity if a and b agree
/// on the generators, otherwise the first invertible element of the
/// intertwiner space in a lexicographic sweep over nullspace coefficients.
/// Throws BudgetExceeded if the sweep would exceed kMaxIntertwinerCandidates.
std::optional<PrimeFieldMatrix> find_intertwiner(const MatRep& a, const MatRep& b);
bool module_isomorphic(const MatRep& a, const MatRep& b);

/// Some automorphism phi with twist(a, phi) isomorphic to b, trying
/// automorphisms(group) in order.
std::optional<GroupAutomorphism> find_pair_equivalence(const MatRep& a, const MatRep& b);
bool pair_equivalent(const MatRep& a, const MatRep& b);

/// The 2-modular example on P_6 = <(1,2),(1,3)(2,4)> x <(5,6)>: S has P_4
/// acting by permutation matrices on the basis indexed by 1,3,2,4 and (5,6)
/// acting by J - I; phi fixes P_4 and sends (5,6) to (1,2)(3,4)(5,6).
struct S6TwistExample {
  PermGroup p6;
  MatRep s;
  GroupAutomorphism phi;
  MatRep twisted;
};
S6TwistExample s6_twist_example();

// Group algebra F_p C_3 in the basis 1, z, z^2.
using CyclicAlgebraElement = std::array<int, 3>;
CyclicAlgebraElement cyclic_multiply(int p, const CyclicAlgebraElement& a, const CyclicAlgebraElement& b);

/// Matrix (columns are images) of the unital endomorphism z -> u of F_p C_3
/// in the basis 1, y, y^2 with y = 1 - z. Requires u^3 = 1.
PrimeFieldMatrix cyclic_endomorphism_matrix(int p, const CyclicAlgebraElement& u);
/// [[1,0,0],[0,a,0],[0,b,a^2]] over F_p.
PrimeFieldMatrix phi_ab(int p, int a, int b);

/// All unital algebra automorphisms of F_3 C_3 in the basis 1, y, y^2,
/// sorted by (a, b) of their Phi_{a,b} shape. Only p = 3 is supported.
std::vector<PrimeFieldMatrix> group_algebra_autos_cyclic(int p);

struct EndoCheck {
  CyclicAlgebraElement image_of_z{};
  int unit_order = 0;
  bool unital = false;
  bool multiplicative = false;
  PrimeFieldMatrix matrix{3, 3, 3};
  int rank = 0;
  bool matches_phi_0_1 = false;
  bool passed() const { return unit_order == 3 && unital && multiplicative && rank == 2 && matches_phi_0_1; }
};
/// z -> -z - z^2 over F_3: a unital endomorphism that is not bijective.
EndoCheck endo_but_not_auto_check();

}  // namespace brauerlab
