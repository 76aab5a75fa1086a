#include "brauerlab/modrep.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "brauerlab/subgroups.hpp"
#include "cayley.hpp"

namespace brauerlab {

namespace {

int mod(long long v, int p) {
  const long long r = v % p;
  return static_cast<int>(r < 0 ? r + p : r);
}

int inverse_mod(int a, int p) {
  // a^(p-2) by square-and-multiply
  long long result = 1, base = a, e = p - 2;
  while (e > 0) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<int>(result);
}

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

/// In-place reduced row echelon form; returns the pivot columns.
std::vector<int> rref(std::vector<int>& a, int rows, int cols, int p) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int found = -1;
    for (int i = r; i < rows; ++i)
      if (a[static_cast<std::size_t>(i * cols + c)] != 0) {
        found = i;
        break;
      }
    if (found < 0) continue;
    if (found != r)
      for (int j = 0; j < cols; ++j)
        std::swap(a[static_cast<std::size_t>(found * cols + j)], a[static_cast<std::size_t>(r * cols + j)]);
    const int inv = inverse_mod(a[static_cast<std::size_t>(r * cols + c)], p);
    for (int j = 0; j < cols; ++j) {
      auto& x = a[static_cast<std::size_t>(r * cols + j)];
      x = static_cast<int>(static_cast<long long>(x) * inv % p);
    }
    for (int i = 0; i < rows; ++i) {
      if (i == r) continue;
      const int f = a[static_cast<std::size_t>(i * cols + c)];
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) {
        auto& x = a[static_cast<std::size_t>(i * cols + j)];
        x = mod(x - static_cast<long long>(f) * a[static_cast<std::size_t>(r * cols + j)], p);
      }
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

void require_generates(const PermGroup& group, const std::vector<Permutation>& gens, std::size_t reached) {
  for (const auto& s : gens)
    if (s.degree() != group.degree() || !group.contains(s))
      throw std::invalid_argument(s.to_string() + " is not an element of " + describe(group));
  if (reached != group.order())
    throw std::invalid_argument("the assigned elements generate a proper subgroup of " + describe(group));
}

}  // namespace

PrimeFieldMatrix::PrimeFieldMatrix(int p, int rows, int cols) : p_(p), rows_(rows), cols_(cols) {
  if (!is_prime(p) || p >= (1 << 15)) throw std::invalid_argument("modulus must be a prime below 32768");
  if (rows < 0 || cols < 0) throw std::invalid_argument("negative matrix size");
  data_.assign(static_cast<std::size_t>(rows * cols), 0);
}

PrimeFieldMatrix PrimeFieldMatrix::identity(int p, int n) {
  PrimeFieldMatrix m(p, n, n);
  for (int i = 0; i < n; ++i) m.set(i, i, 1);
  return m;
}

PrimeFieldMatrix PrimeFieldMatrix::from_rows(int p, const std::vector<std::vector<int>>& rows) {
  const int r = static_cast<int>(rows.size());
  const int c = rows.empty() ? 0 : static_cast<int>(rows.front().size());
  PrimeFieldMatrix m(p, r, c);
  for (int i = 0; i < r; ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != c) throw std::invalid_argument("ragged matrix rows");
    for (int j = 0; j < c; ++j) m.set(i, j, rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]);
  }
  return m;
}

void PrimeFieldMatrix::set(int r, int c, int v) {
  if (r < 0 || r >= rows_ || c < 0 || c >= cols_) throw std::out_of_range("matrix index");
  data_[static_cast<std::size_t>(r * cols_ + c)] = mod(v, p_);
}

std::vector<std::vector<int>> PrimeFieldMatrix::to_rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
  for (int i = 0; i < rows_; ++i)
    out[static_cast<std::size_t>(i)].assign(data_.begin() + i * cols_, data_.begin() + (i + 1) * cols_);
  return out;
}

int PrimeFieldMatrix::rank() const {
  std::vector<int> a = data_;
  return static_cast<int>(rref(a, rows_, cols_, p_).size());
}

std::optional<PrimeFieldMatrix> PrimeFieldMatrix::inverse() const {
  if (rows_ != cols_) throw std::invalid_argument("inverse of a non-square matrix");
  const int n = rows_;
  std::vector<int> a(static_cast<std::size_t>(n * 2 * n), 0);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i * 2 * n + j)] = at(i, j);
    a[static_cast<std::size_t>(i * 2 * n + n + i)] = 1;
  }
  const auto pivots = rref(a, n, 2 * n, p_);
  if (static_cast<int>(pivots.size()) < n || pivots[static_cast<std::size_t>(n - 1)] >= n) return std::nullopt;
  PrimeFieldMatrix out(p_, n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out.set(i, j, a[static_cast<std::size_t>(i * 2 * n + n + j)]);
  return out;
}

std::vector<std::vector<int>> PrimeFieldMatrix::nullspace() const {
  std::vector<int> a = data_;
  const auto pivots = rref(a, rows_, cols_, p_);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_));
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<std::vector<int>> basis;
  for (int f = 0; f < cols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::vector<int> v(static_cast<std::size_t>(cols_), 0);
    v[static_cast<std::size_t>(f)] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r)
      v[static_cast<std::size_t>(pivots[r])] = mod(-a[r * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(f)], p_);
    basis.push_back(std::move(v));
  }
  return basis;
}

PrimeFieldMatrix operator*(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.p_ != b.p_ || a.cols_ != b.rows_) throw std::invalid_argument("matrix product: shape or field mismatch");
  PrimeFieldMatrix out(a.p_, a.rows_, b.cols_);
  for (int i = 0; i < a.rows_; ++i)
    for (int j = 0; j < b.cols_; ++j) {
      long long s = 0;
      for (int k = 0; k < a.cols_; ++k) s += static_cast<long long>(a.at(i, k)) * b.at(k, j);
      out.data_[static_cast<std::size_t>(i * out.cols_ + j)] = mod(s, a.p_);
    }
  return out;
}

PrimeFieldMatrix operator+(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix sum: shape mismatch");
  PrimeFieldMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = mod(a.data_[i] + b.data_[i], a.p_);
  return out;
}

PrimeFieldMatrix operator-(const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) {
  if (a.p_ != b.p_ || a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix difference: shape mismatch");
  PrimeFieldMatrix out = a;
  for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] = mod(a.data_[i] - b.data_[i], a.p_);
  return out;
}

std::string PrimeFieldMatrix::to_string() const {
  std::ostringstream out;
  for (int i = 0; i < rows_; ++i) {
    for (int j = 0; j < cols_; ++j) {
      if (j) out << ' ';
      if (at(i, j) == 0)
        out << '.';
      else
        out << at(i, j);
    }
    if (i + 1 < rows_) out << '\n';
  }
  return out.str();
}

// --- group automorphisms -------------------------------------------------

GroupAutomorphism GroupAutomorphism::from_generators(const PermGroup& g,
                                                     const std::vector<std::pair<Permutation, Permutation>>& assignment) {
  std::vector<Permutation> gens, images;
  for (const auto& [s, t] : assignment) {
    if (t.degree() != g.degree() || !g.contains(t))
      throw std::invalid_argument(t.to_string() + " is not an element of " + describe(g));
    gens.push_back(s);
    images.push_back(t);
  }
  const Permutation one(g.degree());
  GroupAutomorphism phi(g);
  phi.map_ = detail::extend_along_cayley_graph(gens, images, one, one, [](const Permutation& a, const Permutation& b) { return a * b; });
  require_generates(g, gens, phi.map_.size());
  std::unordered_map<Permutation, int, PermutationHash> hit;
  for (const auto& [x, y] : phi.map_)
    if (++hit[y] > 1) throw std::invalid_argument("the assignment is not injective, so it is no automorphism");
  return phi;
}

GroupAutomorphism GroupAutomorphism::identity(const PermGroup& g) {
  GroupAutomorphism phi(g);
  for (const auto& x : g.elements()) phi.map_.emplace(x, x);
  return phi;
}

const Permutation& GroupAutomorphism::operator()(const Permutation& x) const { return map_.at(x); }

GroupAutomorphism GroupAutomorphism::after(const GroupAutomorphism& psi) const {
  if (!(psi.group_ == group_)) throw std::invalid_argument("automorphisms of different groups");
  GroupAutomorphism out(group_);
  for (const auto& [x, y] : psi.map_) out.map_.emplace(x, map_.at(y));
  return out;
}

bool GroupAutomorphism::is_identity() const {
  return std::all_of(map_.begin(), map_.end(), [](const auto& kv) { return kv.first == kv.second; });
}

std::vector<GroupAutomorphism> automorphisms(const PermGroup& g, std::size_t budget) {
  if (g.order() > 64) throw std::invalid_argument("automorphism enumeration supports groups of order <= 64");
  const ElementTable table(g);
  const std::size_t n = table.size();
  const std::vector<std::size_t> gens = *table.shortest_generators(6);

  std::vector<int> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = table.element(i).order();
  std::vector<std::vector<std::size_t>> choices;
  for (std::size_t s : gens) {
    std::vector<std::size_t> c;
    for (std::size_t i = 0; i < n; ++i)
      if (order[i] == order[s]) c.push_back(i);
    choices.push_back(std::move(c));
  }

  // Index-level extension: image[] over the table, -1 where unset.
  auto try_tuple = [&](const std::vector<std::size_t>& tuple) -> std::optional<std::vector<std::size_t>> {
    std::vector<long> image(n, -1);
    image[0] = 0;
    std::vector<std::size_t> queue{0};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const std::size_t e = queue[head];
      for (std::size_t i = 0; i < gens.size(); ++i) {
        const std::size_t t = table.product(gens[i], e);
        const auto v = static_cast<long>(table.product(tuple[i], static_cast<std::size_t>(image[e])));
        if (image[t] < 0) {
          image[t] = v;
          queue.push_back(t);
        } else if (image[t] != v) {
          return std::nullopt;
        }
      }
    }
    std::vector<bool> hit(n);
    for (long v : image) {
      if (hit[static_cast<std::size_t>(v)]) return std::nullopt;
      hit[static_cast<std::size_t>(v)] = true;
    }
    std::vector<std::size_t> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = static_cast<std::size_t>(image[i]);
    return out;
  };

  std::vector<GroupAutomorphism> out;
  std::vector<std::size_t> tuple(gens.size());
  std::size_t tried = 0;
  std::function<void(std::size_t)> recurse = [&](std::size_t depth) {
    if (depth == gens.size()) {
      if (++tried > budget) throw BudgetExceeded("automorphism search over " + describe(g), budget);
      if (auto images = try_tuple(tuple)) {
        std::vector<std::pair<Permutation, Permutation>> assignment;
        for (std::size_t i = 0; i < gens.size(); ++i) assignment.push_back({table.element(gens[i]), table.element(tuple[i])});
        out.push_back(GroupAutomorphism::from_generators(g, assignment));
      }
      return;
    }
    for (std::size_t c : choices[depth]) {
      tuple[depth] = c;
      recurse(depth + 1);
    }
  };
  if (gens.empty()) return {GroupAutomorphism::identity(g)};
  recurse(0);
  // The identity first, so that isomorphic modules are recognized at once.
  std::stable_partition(out.begin(), out.end(), [](const GroupAutomorphism& phi) { return phi.is_identity(); });
  return out;
}

// --- matrix representations ---------------------------------------------

const PrimeFieldMatrix& MatRep::image(const Permutation& g) const { return all_.at(g); }

MatRep build_rep(const PermGroup& group, int p, const std::vector<std::pair<Permutation, PrimeFieldMatrix>>& images) {
  if (images.empty()) throw std::invalid_argument("a representation needs at least one generator image");
  const int dim = images.front().second.rows();
  std::vector<Permutation> gens;
  std::vector<PrimeFieldMatrix> mats;
  for (const auto& [s, m] : images) {
    if (m.p() != p || m.rows() != dim || m.cols() != dim)
      throw std::invalid_argument("image of " + s.to_string() + " is not a " + std::to_string(dim) + "x" +
                                  std::to_string(dim) + " matrix over F_" + std::to_string(p));
    if (!m.is_invertible()) throw std::invalid_argument("image of " + s.to_string() + " is not invertible");
    gens.push_back(s);
    mats.push_back(m);
  }
  for (const auto& s : gens)
    if (s.degree() != group.degree() || !group.contains(s))
      throw std::invalid_argument(s.to_string() + " is not an element of " + describe(group));
  MatRep rep(group, p, dim);
  rep.all_ = detail::extend_along_cayley_graph(gens, mats, Permutation(group.degree()), PrimeFieldMatrix::identity(p, dim),
                                       [](const PrimeFieldMatrix& a, const PrimeFieldMatrix& b) { return a * b; });
  require_generates(group, gens, rep.all_.size());
  rep.generators_ = std::move(gens);
  rep.images_ = std::move(mats);
  return rep;
}

MatRep trivial_rep(const PermGroup& group, int p) {
  std::vector<std::pair<Permutation, PrimeFieldMatrix>> images;
  for (const auto& s : group.generators()) images.push_back({s, PrimeFieldMatrix::identity(p, 1)});
  if (images.empty()) images.push_back({Permutation(group.degree()), PrimeFieldMatrix::identity(p, 1)});
  return build_rep(group, p, images);
}

MatRep twist(const MatRep& rep, const GroupAutomorphism& phi) {
  if (!(phi.group() == rep.group())) throw std::invalid_argument("twist: automorphism of a different group");
  std::vector<std::pair<Permutation, PrimeFieldMatrix>> images;
  for (const auto& s : rep.generators()) images.push_back({s, rep.image(phi(s))});
  return build_rep(rep.group(), rep.p(), images);
}

std::optional<PrimeFieldMatrix> find_intertwiner(const MatRep& a, const MatRep& b) {
  if (!(a.group() == b.group()) || a.p() != b.p() || a.dim() != b.dim())
    throw std::invalid_argument("intertwiners need the same group, field and dimension");
  const int p = a.p(), d = a.dim();
  const auto& gens = a.generators();
  if (std::all_of(gens.begin(), gens.end(), [&](const Permutation& s) { return a.image(s) == b.image(s); }))
    return PrimeFieldMatrix::identity(p, d);

  // Unknown X[i][j] sits in column i*d + j; one row per (generator, i, j) of
  // X a(s) - b(s) X = 0.
  const int unknowns = d * d;
  PrimeFieldMatrix system(p, static_cast<int>(gens.size()) * unknowns, unknowns);
  int row = 0;
  for (const auto& s : gens) {
    const PrimeFieldMatrix& as = a.image(s);
    const PrimeFieldMatrix& bs = b.image(s);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j, ++row)
        for (int k = 0; k < d; ++k) {
          system.set(row, i * d + k, system.at(row, i * d + k) + as.at(k, j));
          system.set(row, k * d + j, system.at(row, k * d + j) - bs.at(i, k));
        }
  }
  const auto basis = system.nullspace();
  if (basis.empty()) return std::nullopt;

  std::uint64_t total = 1;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    total *= static_cast<std::uint64_t>(p);
    if (total > kMaxIntertwinerCandidates)
      throw BudgetExceeded("intertwiner space of dimension " + std::to_string(basis.size()) + " over F_" +
                               std::to_string(p),
                           kMaxIntertwinerCandidates);
  }
  std::vector<int> coeff(basis.size(), 0);
  for (std::uint64_t step = 1; step < total; ++step) {
    for (std::size_t i = coeff.size(); i-- > 0;) {
      if (++coeff[i] < p) break;
      coeff[i] = 0;
    }
    PrimeFieldMatrix x(p, d, d);
    for (int u = 0; u < unknowns; ++u) {
      long long v = 0;
      for (std::size_t i = 0; i < basis.size(); ++i) v += static_cast<long long>(coeff[i]) * basis[i][static_cast<std::size_t>(u)];
      x.set(u / d, u % d, static_cast<int>(v % p));
    }
    if (x.is_invertible()) return x;
  }
  return std::nullopt;
}

bool module_isomorphic(const MatRep& a, const MatRep& b) { return find_intertwiner(a, b).has_value(); }

std::optional<GroupAutomorphism> find_pair_equivalence(const MatRep& a, const MatRep& b) {
  if (!(a.group() == b.group())) throw std::invalid_argument("pair equivalence is tested for one group only");
  for (const auto& phi : automorphisms(a.group()))
    if (module_isomorphic(twist(a, phi), b)) return phi;
  return std::nullopt;
}

bool pair_equivalent(const MatRep& a, const MatRep& b) { return find_pair_equivalence(a, b).has_value(); }

S6TwistExample s6_twist_example() {
  const int n = 6;
  const Permutation t12 = Permutation::parse("(1,2)", n);
  const Permutation d = Permutation::parse("(1,3)(2,4)", n);
  const Permutation t56 = Permutation::parse("(5,6)", n);
  const PermGroup p6(n, {t12, d, t56});

  const std::array<int, 4> basis{0, 2, 1, 3};
  auto permutation_matrix = [&](const Permutation& g) {
    PrimeFieldMatrix m(2, 4, 4);
    for (int k = 0; k < 4; ++k) {
      const int target = g(basis[static_cast<std::size_t>(k)]);
      const auto pos = std::find(basis.begin(), basis.end(), target) - basis.begin();
      m.set(static_cast<int>(pos), k, 1);
    }
    return m;
  };
  const PrimeFieldMatrix j_minus_i = PrimeFieldMatrix::from_rows(2, {{0, 1, 1, 1}, {1, 0, 1, 1}, {1, 1, 0, 1}, {1, 1, 1, 0}});

  MatRep s = build_rep(p6, 2, {{t12, permutation_matrix(t12)}, {d, permutation_matrix(d)}, {t56, j_minus_i}});
  GroupAutomorphism phi =
      GroupAutomorphism::from_generators(p6, {{t12, t12}, {d, d}, {t56, Permutation::parse("(1,2)(3,4)(5,6)", n)}});
  MatRep twisted = twist(s, phi);
  return S6TwistExample{p6, std::move(s), std::move(phi), std::move(twisted)};
}

// --- F_p C_3 -------------------------------------------------------------

CyclicAlgebraElement cyclic_multiply(int p, const CyclicAlgebraElement& a, const CyclicAlgebraElement& b) {
  CyclicAlgebraElement out{};
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out[(i + j) % 3] = mod(out[(i + j) % 3] + static_cast<long long>(a[i]) * b[j], p);
  return out;
}

PrimeFieldMatrix cyclic_endomorphism_matrix(int p, const CyclicAlgebraElement& u) {
  CyclicAlgebraElement v{};
  for (std::size_t i = 0; i < 3; ++i) v[i] = mod(u[i], p);
  const CyclicAlgebraElement v2 = cyclic_multiply(p, v, v);
  if (cyclic_multiply(p, v2, v) != CyclicAlgebraElement{1, 0, 0})
    throw std::invalid_argument("z -> u extends to an algebra map only if u^3 = 1");
  // Columns: images of 1, z, z^2 in the basis 1, z, z^2.
  PrimeFieldMatrix in_z(p, 3, 3);
  in_z.set(0, 0, 1);
  for (int r = 0; r < 3; ++r) {
    in_z.set(r, 1, v[static_cast<std::size_t>(r)]);
    in_z.set(r, 2, v2[static_cast<std::size_t>(r)]);
  }
  // Columns: 1, y = 1 - z, y^2 = 1 - 2z + z^2.
  const PrimeFieldMatrix to_z = PrimeFieldMatrix::from_rows(p, {{1, 1, 1}, {0, -1, -2}, {0, 0, 1}});
  return *to_z.inverse() * in_z * to_z;
}

PrimeFieldMatrix phi_ab(int p, int a, int b) {
  return PrimeFieldMatrix::from_rows(p, {{1, 0, 0}, {0, a, 0}, {0, b, a * a}});
}

std::vector<PrimeFieldMatrix> group_algebra_autos_cyclic(int p) {
  if (p != 3) throw std::invalid_argument("group_algebra_autos_cyclic is implemented for p = 3 only");
  std::vector<PrimeFieldMatrix> out;
  for (int c0 = 0; c0 < p; ++c0)
    for (int c1 = 0; c1 < p; ++c1)
      for (int c2 = 0; c2 < p; ++c2) {
        const CyclicAlgebraElement u{c0, c1, c2};
        if (cyclic_multiply(p, cyclic_multiply(p, u, u), u) != CyclicAlgebraElement{1, 0, 0}) continue;
        PrimeFieldMatrix m = cyclic_endomorphism_matrix(p, u);
        if (m.is_invertible()) out.push_back(std::move(m));
      }
  std::sort(out.begin(), out.end(), [](const PrimeFieldMatrix& x, const PrimeFieldMatrix& y) {
    return std::pair{x.at(1, 1), x.at(2, 1)} < std::pair{y.at(1, 1), y.at(2, 1)};
  });
  return out;
}

EndoCheck endo_but_not_auto_check() {
  const int p = 3;
  EndoCheck check;
  check.image_of_z = {0, p - 1, p - 1};
  const CyclicAlgebraElement one{1, 0, 0};
  CyclicAlgebraElement power = check.image_of_z;
  for (int k = 1; k <= 27; ++k) {
    if (power == one) {
      check.unit_order = k;
      break;
    }
    power = cyclic_multiply(p, power, check.image_of_z);
  }

  // The map as a linear map on coordinates in 1, z, z^2.
  const CyclicAlgebraElement u2 = cyclic_multiply(p, check.image_of_z, check.image_of_z);
  const std::array<CyclicAlgebraElement, 3> column{one, check.image_of_z, u2};
  auto apply = [&](const CyclicAlgebraElement& x) {
    CyclicAlgebraElement out{};
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t r = 0; r < 3; ++r) out[r] = mod(out[r] + static_cast<long long>(x[i]) * column[i][r], p);
    return out;
  };
  check.unital = apply(one) == one;
  check.multiplicative = true;
  for (int a = 0; a < 27; ++a)
    for (int b = 0; b < 27; ++b) {
      const CyclicAlgebraElement x{a % 3, a / 3 % 3, a / 9}, y{b % 3, b / 3 % 3, b / 9};
      if (apply(cyclic_multiply(p, x, y)) != cyclic_multiply(p, apply(x), apply(y))) check.multiplicative = false;
    }
  check.matrix = cyclic_endomorphism_matrix(p, check.image_of_z);
  check.rank = check.matrix.rank();
  check.matches_phi_0_1 = check.matrix == phi_ab(p, 0, 1);
  return check;
}

}  // namespace brauerlab
