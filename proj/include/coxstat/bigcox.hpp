#pragma once

// Generic finite Coxeter groups through the reflection representation with
// exact coefficients in Q(sqrt 5).
//
// A generator s acts on the root space by s(alpha_t) = alpha_t - c(s,t) alpha_s
// where c(s,s) = 2 and c(s,t) c(t,s) = 4 cos^2(pi / m(s,t)). Choosing the
// (possibly asymmetric) off-diagonal entries from {0, -1, -2, -3, -phi,
// -(2+phi)} keeps every coefficient in Q(sqrt 5) for m in {2,3,4,5,6,10}; for
// the tree-shaped diagrams of the finite irreducible types this is equivalent
// to the symmetric form B(alpha_s, alpha_t) = -cos(pi / m).
//
// Coxeter matrix file format: {"size":k,"m":[[...], ...]}.
// Presets: I2:<m>, H3, F4, E6, E7, E8 with generators s1..sk:
//   H3  s1 -3- s2 -5- s3
//   F4  s1 -3- s2 -4- s3 -3- s4
//   En  s1-s3-s4-s5-s6(-s7(-s8)) with s2 attached to s4

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <limits>
#include <memory>
#include <numeric>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_set>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coxstat/analysis.hpp"
#include "coxstat/enumerate.hpp"
#include "coxstat/error.hpp"
#include "coxstat/polynomial.hpp"
#include "coxstat/signed_permutation.hpp"
#include "coxstat/statistics.hpp"

namespace coxstat {

namespace detail {
__extension__ using int128 = __int128;
}  // namespace detail

/// (a + b sqrt5) / d in lowest terms with d > 0.
class ExactScalar {
 public:
  constexpr ExactScalar() = default;
  constexpr ExactScalar(std::int64_t integer) : a_(integer) {}  // NOLINT(google-explicit-constructor)
  ExactScalar(std::int64_t a, std::int64_t b, std::int64_t d) { assign(a, b, d); }

  /// The golden ratio (1 + sqrt5) / 2.
  static ExactScalar phi() { return ExactScalar(1, 1, 2); }

  std::int64_t rational_part() const { return a_; }
  std::int64_t sqrt5_part() const { return b_; }
  std::int64_t denominator() const { return d_; }

  bool is_zero() const { return a_ == 0 && b_ == 0; }

  int sign() const {
    auto s = [](std::int64_t v) { return (v > 0) - (v < 0); };
    if (b_ == 0) return s(a_);
    if (a_ == 0 || s(a_) == s(b_)) return s(b_);
    detail::int128 a2 = static_cast<detail::int128>(a_) * a_;
    detail::int128 b2 = static_cast<detail::int128>(b_) * b_ * 5;
    if (a2 == b2) return 0;
    return a2 > b2 ? s(a_) : s(b_);
  }

  friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
    ExactScalar r;
    r.assign128(static_cast<detail::int128>(x.a_) * y.d_ + static_cast<detail::int128>(y.a_) * x.d_,
                static_cast<detail::int128>(x.b_) * y.d_ + static_cast<detail::int128>(y.b_) * x.d_,
                static_cast<detail::int128>(x.d_) * y.d_);
    return r;
  }
  friend ExactScalar operator-(const ExactScalar& x) {
    ExactScalar r = x;
    r.a_ = -r.a_;
    r.b_ = -r.b_;
    return r;
  }
  friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) { return x + (-y); }
  friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
    ExactScalar r;
    r.assign128(static_cast<detail::int128>(x.a_) * y.a_ + static_cast<detail::int128>(x.b_) * y.b_ * 5,
                static_cast<detail::int128>(x.a_) * y.b_ + static_cast<detail::int128>(x.b_) * y.a_,
                static_cast<detail::int128>(x.d_) * y.d_);
    return r;
  }
  ExactScalar& operator+=(const ExactScalar& y) { return *this = *this + y; }
  ExactScalar& operator-=(const ExactScalar& y) { return *this = *this - y; }

  friend bool operator==(const ExactScalar&, const ExactScalar&) = default;

  std::string to_string() const {
    std::string s;
    if (b_ == 0) s = std::to_string(a_);
    else s = "(" + std::to_string(a_) + (b_ < 0 ? "-" : "+") + std::to_string(b_ < 0 ? -b_ : b_) + "*sqrt5)";
    if (d_ != 1) s += "/" + std::to_string(d_);
    return s;
  }

  std::size_t hash() const {
    std::uint64_t h = static_cast<std::uint64_t>(a_) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(b_) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    h ^= static_cast<std::uint64_t>(d_) + 0x94D049BB133111EBULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }

 private:
  void assign(std::int64_t a, std::int64_t b, std::int64_t d) { assign128(a, b, d); }

  void assign128(detail::int128 a, detail::int128 b, detail::int128 d) {
    if (d == 0) throw InvalidArgument("zero denominator");
    if (d < 0) {
      a = -a;
      b = -b;
      d = -d;
    }
    auto abs128 = [](detail::int128 v) { return v < 0 ? -v : v; };
    auto gcd128 = [](detail::int128 x, detail::int128 y) {
      while (y != 0) {
        detail::int128 t = x % y;
        x = y;
        y = t;
      }
      return x;
    };
    detail::int128 g = gcd128(gcd128(abs128(a), abs128(b)), d);
    if (g > 1) {
      a /= g;
      b /= g;
      d /= g;
    }
    if (a == 0 && b == 0) d = 1;
    constexpr detail::int128 lim = std::numeric_limits<std::int64_t>::max();
    if (abs128(a) > lim || abs128(b) > lim || d > lim) throw Error("ExactScalar overflow");
    a_ = static_cast<std::int64_t>(a);
    b_ = static_cast<std::int64_t>(b);
    d_ = static_cast<std::int64_t>(d);
  }

  std::int64_t a_ = 0;
  std::int64_t b_ = 0;
  std::int64_t d_ = 1;
};

/// Symmetric matrix of orders m(s,t), 1 on the diagonal.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;

  explicit CoxeterMatrix(std::vector<std::vector<int>> m) : m_(std::move(m)) {
    const auto k = m_.size();
    if (k == 0) throw InvalidArgument("a Coxeter matrix needs at least one generator");
    for (std::size_t i = 0; i < k; ++i) {
      if (m_[i].size() != k) throw InvalidArgument("Coxeter matrix must be square");
      for (std::size_t j = 0; j < k; ++j) {
        int v = m_[i][j];
        if (i == j && v != 1) throw InvalidArgument("Coxeter matrix diagonal must be 1");
        if (i != j && v < 2) throw InvalidArgument("off-diagonal Coxeter matrix entries must be >= 2");
      }
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j)
        if (m_[i][j] != m_[j][i]) throw InvalidArgument("Coxeter matrix must be symmetric");
  }

  /// Matrix of a string diagram given by its bond labels.
  static CoxeterMatrix from_bonds(int size, const std::vector<std::tuple<int, int, int>>& bonds) {
    std::vector<std::vector<int>> m(static_cast<std::size_t>(size), std::vector<int>(static_cast<std::size_t>(size), 2));
    for (int i = 0; i < size; ++i) m[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (auto [i, j, order] : bonds) {
      m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = order;
      m[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = order;
    }
    return CoxeterMatrix(std::move(m));
  }

  static CoxeterMatrix dihedral(int m) {
    if (m < 2) throw InvalidArgument("I2(m) needs m >= 2");
    return from_bonds(2, {{0, 1, m}});
  }

  /// Exceptional types E6, E7, E8 (Bourbaki labelling).
  static CoxeterMatrix type_e(int rank) {
    if (rank < 6 || rank > 8) throw InvalidArgument("type E exists for ranks 6, 7, 8");
    std::vector<std::tuple<int, int, int>> bonds{{0, 2, 3}, {1, 3, 3}, {2, 3, 3}};
    for (int i = 3; i + 1 < rank; ++i) bonds.emplace_back(i, i + 1, 3);
    return from_bonds(rank, bonds);
  }

  /// Named presets: I2:<m>, H3, F4, E6, E7, E8.
  static CoxeterMatrix preset(std::string_view name) {
    name = detail::trim(name);
    if (name.starts_with("I2:")) return dihedral(static_cast<int>(detail::parse_integer(name.substr(3))));
    if (name == "H3") return from_bonds(3, {{0, 1, 3}, {1, 2, 5}});
    if (name == "F4") return from_bonds(4, {{0, 1, 3}, {1, 2, 4}, {2, 3, 3}});
    if (name == "E6") return type_e(6);
    if (name == "E7") return type_e(7);
    if (name == "E8") return type_e(8);
    throw InvalidArgument("unknown Coxeter preset '" + std::string(name) + "'");
  }

  static bool is_preset_name(std::string_view name) {
    name = detail::trim(name);
    return name.starts_with("I2:") || name == "H3" || name == "F4" || name == "E6" || name == "E7" || name == "E8";
  }

  /// The matrix of a classical group with generators ordered s_1..s_{n-1}
  /// (type A) or s_0..s_{n-1} (types B, D).
  static CoxeterMatrix classical(const GroupDescriptor& d) {
    const int k = d.generator_count();
    if (k == 0) throw InvalidArgument(d.to_string() + " has no generators");
    std::vector<std::tuple<int, int, int>> bonds;
    for (int i = 0; i + 1 < k; ++i) bonds.emplace_back(i, i + 1, 3);
    if (d.family == Family::B && k >= 2) std::get<2>(bonds.front()) = 4;
    if (d.family == Family::D && k >= 2) {
      bonds.erase(bonds.begin());
      if (k >= 3) bonds.emplace_back(0, 2, 3);
    }
    return from_bonds(k, bonds);
  }

  int size() const { return static_cast<int>(m_.size()); }
  int operator()(int i, int j) const { return m_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)]; }
  const std::vector<std::vector<int>>& rows() const { return m_; }

  /// The submatrix on an ordered list of generators.
  CoxeterMatrix restricted(const std::vector<int>& gens) const {
    std::vector<std::vector<int>> m;
    for (int i : gens) {
      if (i < 0 || i >= size()) throw InvalidArgument("generator index out of range");
      std::vector<int> row;
      for (int j : gens) row.push_back((*this)(i, j));
      m.push_back(std::move(row));
    }
    return CoxeterMatrix(std::move(m));
  }

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

  nlohmann::json to_json() const { return {{"size", size()}, {"m", m_}}; }

  static CoxeterMatrix from_json(const nlohmann::json& j) {
    try {
      auto m = j.at("m").get<std::vector<std::vector<int>>>();
      if (j.contains("size") && j.at("size").get<std::size_t>() != m.size())
        throw InvalidArgument("\"size\" does not match the matrix");
      return CoxeterMatrix(std::move(m));
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("malformed Coxeter matrix JSON: ") + e.what());
    }
  }

 private:
  std::vector<std::vector<int>> m_;
};

namespace detail {

// Off-diagonal entries c(i,j), c(j,i) for an edge of order m, i < j.
inline std::pair<ExactScalar, ExactScalar> cartan_pair(int m) {
  switch (m) {
    case 2: return {0, 0};
    case 3: return {-1, -1};
    case 4: return {-1, -2};
    case 5: return {-ExactScalar::phi(), -ExactScalar::phi()};
    case 6: return {-1, -3};
    case 10: return {-1, ExactScalar(-5, -1, 2)};
    default:
      throw InvalidArgument("m = " + std::to_string(m) + " has no reflection representation over Q(sqrt5)");
  }
}

}  // namespace detail

/// The root-space action data shared by all elements of one group.
class ReflectionRepresentation {
 public:
  explicit ReflectionRepresentation(CoxeterMatrix m) : matrix_(std::move(m)) {
    const auto k = static_cast<std::size_t>(matrix_.size());
    cartan_.assign(k * k, ExactScalar(0));
    for (std::size_t i = 0; i < k; ++i) {
      cartan_[i * k + i] = 2;
      for (std::size_t j = i + 1; j < k; ++j) {
        auto [cij, cji] = detail::cartan_pair(matrix_(static_cast<int>(i), static_cast<int>(j)));
        cartan_[i * k + j] = cij;
        cartan_[j * k + i] = cji;
      }
    }
  }

  const CoxeterMatrix& matrix() const { return matrix_; }
  int rank() const { return matrix_.size(); }
  const ExactScalar& cartan(int s, int t) const {
    return cartan_[static_cast<std::size_t>(s) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(t)];
  }

 private:
  CoxeterMatrix matrix_;
  std::vector<ExactScalar> cartan_;
};

/// A group element as its matrix on the root basis (row-major, rank x rank).
class GenericElement {
 public:
  explicit GenericElement(std::shared_ptr<const ReflectionRepresentation> rep) : rep_(std::move(rep)) {
    const auto k = static_cast<std::size_t>(rep_->rank());
    entries_.assign(k * k, ExactScalar(0));
    for (std::size_t i = 0; i < k; ++i) entries_[i * k + i] = 1;
  }

  static GenericElement from_word(std::shared_ptr<const ReflectionRepresentation> rep, std::span<const int> word) {
    GenericElement w(std::move(rep));
    for (int s : word) w = w.times_generator(s);
    return w;
  }

  const ReflectionRepresentation& representation() const { return *rep_; }
  const std::shared_ptr<const ReflectionRepresentation>& representation_ptr() const { return rep_; }
  int rank() const { return rep_->rank(); }
  const ExactScalar& entry(int r, int c) const {
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(c)];
  }
  const std::vector<ExactScalar>& entries() const { return entries_; }

  /// w s: column t <- column t - c(s,t) column s, then column s negated.
  GenericElement times_generator(int s) const {
    check_generator(s);
    GenericElement out = *this;
    const int k = rank();
    for (int t = 0; t < k; ++t) {
      if (t == s) continue;
      const auto& c = rep_->cartan(s, t);
      if (c.is_zero()) continue;
      for (int r = 0; r < k; ++r) out.at(r, t) -= c * entry(r, s);
    }
    for (int r = 0; r < k; ++r) out.at(r, s) = -entry(r, s);
    return out;
  }

  /// s w: row s <- row s - sum_t c(s,t) row t.
  GenericElement generator_times(int s) const {
    check_generator(s);
    GenericElement out = *this;
    const int k = rank();
    for (int col = 0; col < k; ++col) {
      ExactScalar v = entry(s, col);
      for (int t = 0; t < k; ++t) {
        const auto& c = rep_->cartan(s, t);
        if (!c.is_zero()) v -= c * entry(t, col);
      }
      out.at(s, col) = v;
    }
    return out;
  }

  friend GenericElement operator*(const GenericElement& x, const GenericElement& y) {
    if (x.rep_ != y.rep_ && !(x.rep_->matrix() == y.rep_->matrix()))
      throw DescriptorMismatch("elements of different Coxeter groups");
    GenericElement out(x.rep_);
    const int k = x.rank();
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c) {
        ExactScalar v = 0;
        for (int t = 0; t < k; ++t) v += x.entry(r, t) * y.entry(t, c);
        out.at(r, c) = v;
      }
    return out;
  }

  bool is_identity() const {
    const int k = rank();
    for (int r = 0; r < k; ++r)
      for (int c = 0; c < k; ++c)
        if (entry(r, c) != ExactScalar(r == c ? 1 : 0)) return false;
    return true;
  }

  /// l(ws) < l(w) iff w(alpha_s), the column s, is a negative root.
  bool has_right_descent(int s) const {
    check_generator(s);
    for (int r = 0; r < rank(); ++r) {
      int sg = entry(r, s).sign();
      if (sg != 0) return sg < 0;
    }
    return false;
  }

  /// Length by stripping right descents; needs no enumeration.
  std::int64_t length() const {
    GenericElement w = *this;
    std::int64_t steps = 0;
    while (true) {
      int s = 0;
      while (s < rank() && !w.has_right_descent(s)) ++s;
      if (s == rank()) return steps;
      w = w.times_generator(s);
      ++steps;
    }
  }

  friend bool operator==(const GenericElement& x, const GenericElement& y) { return x.entries_ == y.entries_; }

  std::size_t hash() const {
    std::size_t h = 0xcbf29ce484222325ULL;
    for (const auto& e : entries_) h = (h ^ e.hash()) * 0x100000001b3ULL;
    return h;
  }

 private:
  ExactScalar& at(int r, int c) {
    return entries_[static_cast<std::size_t>(r) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(c)];
  }
  void check_generator(int s) const {
    if (s < 0 || s >= rank()) throw InvalidArgument("generator index out of range: " + std::to_string(s));
  }

  std::shared_ptr<const ReflectionRepresentation> rep_;
  std::vector<ExactScalar> entries_;
};

/// (w^J, w_J) of a generic element, with a reduced word of w_J in generators of J.
struct GenericElementFactorization {
  GenericElement w_quotient;
  GenericElement w_parabolic;
  std::vector<int> parabolic_word;
};

/// Strips right descents in J (root-sign test); J lists generator indices.
inline GenericElementFactorization generic_parabolic_decompose(const GenericElement& w, const std::vector<int>& J) {
  GenericElement u = w;
  std::vector<int> stripped;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int s : J) {
      if (u.has_right_descent(s)) {
        u = u.times_generator(s);
        stripped.push_back(s);
        progress = true;
      }
    }
  }
  std::reverse(stripped.begin(), stripped.end());
  auto parabolic = GenericElement::from_word(w.representation_ptr(), stripped);
  return {u, parabolic, stripped};
}

/// Index-based factorization inside an enumerated group.
struct GenericFactorization {
  std::uint32_t w_quotient = 0;
  std::uint32_t w_parabolic = 0;
  std::vector<int> parabolic_word;  // reduced word of w_J, left to right
};

/// A finite Coxeter group enumerated breadth-first; element 0 is e and every
/// element carries its length (BFS depth) and its right/left multiplication
/// tables.
class CoxeterGroup {
 public:
  static constexpr std::uint64_t kDefaultCap = 100'000;

  static CoxeterGroup enumerate(const CoxeterMatrix& m, std::uint64_t cap = kDefaultCap) {
    CoxeterGroup g;
    g.rep_ = std::make_shared<const ReflectionRepresentation>(m);
    const int k = m.size();
    auto& elems = g.elements_;
    elems.emplace_back(g.rep_);
    auto hasher = [&elems](std::uint32_t i) { return elems[i].hash(); };
    auto equal = [&elems](std::uint32_t i, std::uint32_t j) { return elems[i] == elems[j]; };
    std::unordered_set<std::uint32_t, decltype(hasher), decltype(equal)> index(1024, hasher, equal);
    index.insert(0);
    g.length_.push_back(0);
    g.right_.assign(static_cast<std::size_t>(k), kUnset);
    for (std::size_t head = 0; head < elems.size(); ++head) {
      for (int s = 0; s < k; ++s) {
        if (g.right_[head * static_cast<std::size_t>(k) + static_cast<std::size_t>(s)] != kUnset) continue;
        elems.push_back(elems[head].times_generator(s));
        const auto candidate = static_cast<std::uint32_t>(elems.size() - 1);
        auto [it, inserted] = index.insert(candidate);
        std::uint32_t target = *it;
        if (!inserted) {
          elems.pop_back();
        } else {
          if (elems.size() > cap)
            throw CapExceeded("Coxeter group enumeration exceeded the cap of " + std::to_string(cap) + " elements");
          g.length_.push_back(g.length_[head] + 1);
          g.right_.resize(g.right_.size() + static_cast<std::size_t>(k), kUnset);
        }
        g.right_[head * static_cast<std::size_t>(k) + static_cast<std::size_t>(s)] = target;
        g.right_[static_cast<std::size_t>(target) * static_cast<std::size_t>(k) + static_cast<std::size_t>(s)] =
            static_cast<std::uint32_t>(head);
      }
    }
    const std::size_t n = elems.size();
    g.left_.assign(n * static_cast<std::size_t>(k), kUnset);
    for (std::size_t w = 0; w < n; ++w)
      for (int s = 0; s < k; ++s) {
        elems.push_back(elems[w].generator_times(s));
        auto it = index.find(static_cast<std::uint32_t>(elems.size() - 1));
        if (it == index.end()) throw Error("left multiplication left the enumerated set");
        g.left_[w * static_cast<std::size_t>(k) + static_cast<std::size_t>(s)] = *it;
        elems.pop_back();
      }
    g.inverse_.assign(n, kUnset);
    g.inverse_[0] = 0;
    for (std::size_t w = 0; w < n; ++w)
      for (int s = 0; s < k; ++s) {
        auto ws = g.right(static_cast<std::uint32_t>(w), s);
        if (g.inverse_[ws] == kUnset) g.inverse_[ws] = g.left(g.inverse_[w], s);
      }
    g.longest_ = static_cast<std::uint32_t>(std::max_element(g.length_.begin(), g.length_.end()) - g.length_.begin());
    return g;
  }

  const CoxeterMatrix& matrix() const { return rep_->matrix(); }
  const std::shared_ptr<const ReflectionRepresentation>& representation() const { return rep_; }
  int rank() const { return rep_->rank(); }
  std::uint64_t size() const { return elements_.size(); }
  std::uint32_t identity() const { return 0; }
  std::uint32_t longest() const { return longest_; }

  std::int64_t length(std::uint32_t w) const { return length_[w]; }
  std::uint32_t right(std::uint32_t w, int s) const {
    return right_[static_cast<std::size_t>(w) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(s)];
  }
  std::uint32_t left(std::uint32_t w, int s) const {
    return left_[static_cast<std::size_t>(w) * static_cast<std::size_t>(rank()) + static_cast<std::size_t>(s)];
  }
  std::uint32_t inverse(std::uint32_t w) const { return inverse_[w]; }
  const GenericElement& element(std::uint32_t w) const { return elements_[w]; }

  bool has_right_descent(std::uint32_t w, int s) const { return length(right(w, s)) < length(w); }

  std::uint32_t from_word(std::span<const int> word) const {
    std::uint32_t w = 0;
    for (int s : word) w = right(w, s);
    return w;
  }

  /// Lengths of all elements, aligned with element indices.
  PosetFunction lengths() const { return {length_.begin(), length_.end()}; }

  /// sum_w q^l(w).
  LaurentPoly poincare_polynomial() const { return distribution(lengths()); }

  GenericFactorization parabolic_decompose(std::uint32_t w, const std::vector<int>& J) const {
    for (int s : J)
      if (s < 0 || s >= rank()) throw InvalidArgument("generator index out of range: " + std::to_string(s));
    GenericFactorization f;
    std::uint32_t u = w;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int s : J) {
        if (has_right_descent(u, s)) {
          u = right(u, s);
          f.parabolic_word.push_back(s);
          progress = true;
        }
      }
    }
    std::reverse(f.parabolic_word.begin(), f.parabolic_word.end());
    f.w_quotient = u;
    f.w_parabolic = from_word(f.parabolic_word);
    return f;
  }

 private:
  static constexpr std::uint32_t kUnset = static_cast<std::uint32_t>(-1);

  std::shared_ptr<const ReflectionRepresentation> rep_;
  std::vector<GenericElement> elements_;
  std::vector<std::int64_t> length_;
  std::vector<std::uint32_t> right_, left_, inverse_;
  std::uint32_t longest_ = 0;
};

/// A preset name or the path of a Coxeter matrix JSON file.
inline CoxeterMatrix load_coxeter_matrix(std::string_view text) {
  if (CoxeterMatrix::is_preset_name(text)) return CoxeterMatrix::preset(text);
  std::ifstream in{std::string(detail::trim(text))};
  if (!in) throw InvalidArgument("'" + std::string(text) + "' is neither a group preset nor a readable file");
  try {
    return CoxeterMatrix::from_json(nlohmann::json::parse(in));
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("cannot parse Coxeter matrix file: ") + e.what());
  }
}

/// An identification of W_J (J given as an ordered list of generator indices
/// of W) with a classical group: J[a] corresponds to the a-th generator of
/// the model (s_1.. for type A, s_0.. for B and D).
struct ParabolicModel {
  std::vector<int> J;
  GroupDescriptor model;
};

inline bool relabeling_matches(const CoxeterMatrix& w, const ParabolicModel& pm) {
  if (static_cast<int>(pm.J.size()) != pm.model.generator_count()) return false;
  return w.restricted(pm.J) == CoxeterMatrix::classical(pm.model);
}

/// Finds a classical model (A, then B, then D) whose diagram matches J in order.
inline std::optional<ParabolicModel> find_parabolic_model(const CoxeterMatrix& w, const std::vector<int>& J) {
  const int k = static_cast<int>(J.size());
  if (k == 0) return std::nullopt;
  std::vector<GroupDescriptor> candidates{GroupDescriptor(Family::A, k + 1), GroupDescriptor(Family::B, k)};
  if (k >= 2) candidates.emplace_back(Family::D, k);
  for (const auto& d : candidates) {
    ParabolicModel pm{J, d};
    if (relabeling_matches(w, pm)) return pm;
  }
  return std::nullopt;
}

/// f(w) = l(w^J) + g(w_J) on an enumerated group, g read on the classical
/// model of W_J. The left variant is star(induce(star(g))).
inline PosetFunction generic_induce(const CoxeterGroup& group, const Statistic& g, const ParabolicModel& pm,
                                    Side side = Side::right, Validation validation = Validation::on,
                                    const FoldOptions& options = {}) {
  if (!(g.universe() == pm.model))
    throw DescriptorMismatch("base statistic lives on " + g.universe().to_string() + ", model is " +
                             pm.model.to_string());
  if (!relabeling_matches(group.matrix(), pm))
    throw InvalidArgument("the relabeling does not identify W_J with " + pm.model.to_string());
  if (validation == Validation::on && !check_length_class(g).passed())
    throw NotInLengthClass("'" + g.name() + "' is not in the class of the length on " + pm.model.to_string());
  const Statistic base = side == Side::right ? g : star(g);
  const int first = pm.model.first_generator();
  PosetFunction right(static_cast<std::size_t>(group.size()));
  parallel_for_indices(
      group.size(),
      [&](std::uint64_t i) {
        auto f = group.parabolic_decompose(static_cast<std::uint32_t>(i), pm.J);
        auto u = SignedPermutation::identity(pm.model);
        for (int s : f.parabolic_word) {
          auto pos = std::find(pm.J.begin(), pm.J.end(), s) - pm.J.begin();
          u = u.times_generator(first + static_cast<int>(pos));
        }
        right[i] = group.length(f.w_quotient) + base(u);
      },
      options);
  if (side == Side::right) return right;
  PosetFunction left(right.size());
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = right[group.inverse(static_cast<std::uint32_t>(i))];
  return left;
}

/// Statistic names on an enumerated group: "len" and
/// "induced:<base>:<J>:<side>" with J written in the group's s1..sk names.
inline PosetFunction make_generic_statistic(const CoxeterGroup& group, std::string_view name,
                                            Validation validation = Validation::on,
                                            const FoldOptions& options = {}) {
  name = detail::trim(name);
  if (name == "len") return group.lengths();
  if (!name.starts_with("induced:"))
    throw InvalidArgument("statistic '" + std::string(name) + "' is not available on a generic Coxeter group");
  auto last = name.rfind(':');
  auto middle = name.rfind(':', last - 1);
  if (last == std::string_view::npos || middle == std::string_view::npos || middle <= 8)
    throw InvalidArgument("induced statistic must be induced:<base>:<J>:<side>, got '" + std::string(name) + "'");
  auto base_name = name.substr(8, middle - 8);
  auto listed = GeneratorSet::parse_list(name.substr(middle + 1, last - middle - 1));
  auto side = parse_side(name.substr(last + 1));
  std::vector<int> J;
  for (int s : listed) {
    if (s < 1 || s > group.rank())
      throw InvalidArgument("generator s" + std::to_string(s) + " does not exist in this group");
    J.push_back(s - 1);
  }
  auto pm = find_parabolic_model(group.matrix(), J);
  if (!pm) throw InvalidArgument("the generators " + std::string(name.substr(middle + 1, last - middle - 1)) +
                                 " do not span a classical parabolic subgroup in the listed order");
  return generic_induce(group, make_statistic(base_name, pm->model, validation), *pm, side, validation, options);
}

}  // namespace coxstat

template <>
struct std::hash<coxstat::GenericElement> {
  std::size_t operator()(const coxstat::GenericElement& w) const noexcept { return w.hash(); }
};
