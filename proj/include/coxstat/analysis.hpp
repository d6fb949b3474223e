#pragma once

// Distributions, image sets and the k+/k- deficiencies, symmetric pairs,
// involutions, ratio sums and descent classes.
//
// Every operation comes in two flavours: on tabulated functions (spans aligned
// with an element index, used for posets and the generic engine) and on
// classical-group statistics, streamed through parallel_fold. All arithmetic
// is exact.

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "coxstat/enumerate.hpp"
#include "coxstat/error.hpp"
#include "coxstat/polynomial.hpp"
#include "coxstat/posets.hpp"
#include "coxstat/signed_permutation.hpp"
#include "coxstat/statistics.hpp"

namespace coxstat {

/// Histogram over a dense window of integers that grows on demand.
class DenseCounter {
 public:
  void add(std::int64_t v, std::uint64_t count = 1) {
    if (counts_.empty()) {
      offset_ = v;
      counts_.assign(1, 0);
    } else if (v < offset_) {
      auto grow = static_cast<std::size_t>(offset_ - v) + counts_.size() / 2;
      counts_.insert(counts_.begin(), grow, 0);
      offset_ -= static_cast<std::int64_t>(grow);
    } else if (v >= offset_ + static_cast<std::int64_t>(counts_.size())) {
      counts_.resize(static_cast<std::size_t>(v - offset_) + 1 + counts_.size() / 2, 0);
    }
    counts_[static_cast<std::size_t>(v - offset_)] += count;
  }

  void merge(const DenseCounter& other) {
    for (std::size_t i = 0; i < other.counts_.size(); ++i)
      if (other.counts_[i]) add(other.offset_ + static_cast<std::int64_t>(i), other.counts_[i]);
  }

  /// Sorted support.
  std::vector<std::int64_t> support() const {
    std::vector<std::int64_t> out;
    for (std::size_t i = 0; i < counts_.size(); ++i)
      if (counts_[i]) out.push_back(offset_ + static_cast<std::int64_t>(i));
    return out;
  }

  LaurentPoly to_poly() const {
    LaurentPoly p;
    for (std::size_t i = 0; i < counts_.size(); ++i)
      if (counts_[i]) p.add_term(offset_ + static_cast<std::int64_t>(i), BigInt(counts_[i]));
    return p;
  }

 private:
  std::int64_t offset_ = 0;
  std::vector<std::uint64_t> counts_;
};

/// Values of a statistic on every element, in enumeration order.
inline PosetFunction tabulate(const Statistic& f) {
  PosetFunction out;
  out.reserve(static_cast<std::size_t>(group_order_u64(f.universe())));
  for_each_element(f.universe(), [&](const SignedPermutation& w) { out.push_back(f(w)); });
  return out;
}

namespace detail {
inline void require_same_universe(const Statistic& f, const Statistic& g) {
  if (!(f.universe() == g.universe()))
    throw DescriptorMismatch("'" + f.name() + "' and '" + g.name() + "' live on different groups");
}
inline void require_same_size(std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  if (f.size() != g.size()) throw DescriptorMismatch("functions live on universes of different size");
}
inline auto merge_counters = [](DenseCounter& into, DenseCounter&& from) { into.merge(from); };
}  // namespace detail

// ---------------------------------------------------------------------------
// Distributions

/// sum_x q^f(x).
inline LaurentPoly distribution(std::span<const std::int64_t> f) {
  DenseCounter c;
  for (auto v : f) c.add(v);
  return c.to_poly();
}

inline LaurentPoly distribution(const Statistic& f, const FoldOptions& options = {}) {
  return parallel_fold(
             EnumerationRange::whole(f.universe()), DenseCounter{},
             [&](DenseCounter& acc, const SignedPermutation& w) { acc.add(f(w)); }, detail::merge_counters, options)
      .to_poly();
}

/// sum_x q^f(x) t^g(x).
inline BivariatePoly joint_distribution(std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  detail::require_same_size(f, g);
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> counts;
  for (std::size_t i = 0; i < f.size(); ++i) ++counts[{f[i], g[i]}];
  BivariatePoly p;
  for (const auto& [e, c] : counts) p.add_term(e.first, e.second, BigInt(c));
  return p;
}

inline BivariatePoly joint_distribution(const Statistic& f, const Statistic& g, const FoldOptions& options = {}) {
  detail::require_same_universe(f, g);
  using Counts = std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t>;
  auto counts = parallel_fold(
      EnumerationRange::whole(f.universe()), Counts{},
      [&](Counts& acc, const SignedPermutation& w) { ++acc[{f(w), g(w)}]; },
      [](Counts& into, Counts&& from) {
        for (const auto& [k, v] : from) into[k] += v;
      },
      options);
  BivariatePoly p;
  for (const auto& [e, c] : counts) p.add_term(e.first, e.second, BigInt(c));
  return p;
}

inline bool is_symmetric_pair(std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  auto joint = joint_distribution(f, g);
  return joint == joint.transposed();
}

inline bool is_symmetric_pair(const Statistic& f, const Statistic& g, const FoldOptions& options = {}) {
  auto joint = joint_distribution(f, g, options);
  return joint == joint.transposed();
}

/// Coefficients palindromic about half the degree: q^deg P(1/q) = P(q).
inline bool is_reciprocal(const LaurentPoly& p) {
  if (p.is_zero()) throw InvalidArgument("is_reciprocal needs a nonzero polynomial");
  if (p.min_exponent() < 0) throw InvalidArgument("is_reciprocal needs nonnegative exponents");
  const auto deg = p.max_exponent();
  for (const auto& [e, c] : p.terms())
    if (p.coefficient(deg - e) != c) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Images and k+/k-

enum class ImageOp { sum, diff };

inline std::string to_string(ImageOp op) { return op == ImageOp::sum ? "sum" : "diff"; }

/// Im(f), Im(g) and Im(f +- g) gathered in one sweep.
struct ImageAnalysis {
  ImageOp op = ImageOp::sum;
  std::vector<std::int64_t> image_f;
  std::vector<std::int64_t> image_g;
  std::vector<std::int64_t> image;  // Im(f + g) or Im(f - g)

  /// |{f(x) +- g(y) : x, y}|.
  std::size_t pair_set_size() const {
    if (image_f.empty() || image_g.empty()) return 0;
    DenseCounter all;
    for (auto a : image_f)
      for (auto b : image_g) all.add(op == ImageOp::sum ? a + b : a - b);
    return all.support().size();
  }

  /// k+(f,g) or k-(f,g): |pair set| - |Im(f +- g)| - 1.
  std::int64_t k() const {
    return static_cast<std::int64_t>(pair_set_size()) - static_cast<std::int64_t>(image.size()) - 1;
  }
};

namespace detail {
struct ImageAccumulator {
  DenseCounter f, g, combined;
  void merge(const ImageAccumulator& o) {
    f.merge(o.f);
    g.merge(o.g);
    combined.merge(o.combined);
  }
};
}  // namespace detail

inline ImageAnalysis analyze_images(std::span<const std::int64_t> f, std::span<const std::int64_t> g, ImageOp op) {
  detail::require_same_size(f, g);
  detail::ImageAccumulator acc;
  for (std::size_t i = 0; i < f.size(); ++i) {
    acc.f.add(f[i]);
    acc.g.add(g[i]);
    acc.combined.add(op == ImageOp::sum ? f[i] + g[i] : f[i] - g[i]);
  }
  return {op, acc.f.support(), acc.g.support(), acc.combined.support()};
}

inline ImageAnalysis analyze_images(const Statistic& f, const Statistic& g, ImageOp op, const FoldOptions& options = {}) {
  detail::require_same_universe(f, g);
  auto acc = parallel_fold(
      EnumerationRange::whole(f.universe()), detail::ImageAccumulator{},
      [&](detail::ImageAccumulator& a, const SignedPermutation& w) {
        auto fv = f(w), gv = g(w);
        a.f.add(fv);
        a.g.add(gv);
        a.combined.add(op == ImageOp::sum ? fv + gv : fv - gv);
      },
      [](detail::ImageAccumulator& into, detail::ImageAccumulator&& from) { into.merge(from); }, options);
  return {op, acc.f.support(), acc.g.support(), acc.combined.support()};
}

inline std::vector<std::int64_t> sum_image(std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  return analyze_images(f, g, ImageOp::sum).image;
}
inline std::vector<std::int64_t> diff_image(std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  return analyze_images(f, g, ImageOp::diff).image;
}
inline std::vector<std::int64_t> sum_image(const Statistic& f, const Statistic& g, const FoldOptions& o = {}) {
  return analyze_images(f, g, ImageOp::sum, o).image;
}
inline std::vector<std::int64_t> diff_image(const Statistic& f, const Statistic& g, const FoldOptions& o = {}) {
  return analyze_images(f, g, ImageOp::diff, o).image;
}

inline std::int64_t k_plus(std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  return analyze_images(f, g, ImageOp::sum).k();
}
inline std::int64_t k_minus(std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  return analyze_images(f, g, ImageOp::diff).k();
}
inline std::int64_t k_plus(const Statistic& f, const Statistic& g, const FoldOptions& o = {}) {
  return analyze_images(f, g, ImageOp::sum, o).k();
}
inline std::int64_t k_minus(const Statistic& f, const Statistic& g, const FoldOptions& o = {}) {
  return analyze_images(f, g, ImageOp::diff, o).k();
}

// ---------------------------------------------------------------------------
// Ratio sums

/// lhs = sum over g(x) != 0 of f(x)/g(x); rhs = sum over f(x) != 0 of g(x)/f(x).
struct RatioCheck {
  BigRational lhs;
  BigRational rhs;
  bool equal = false;
};

inline RatioCheck ratio_sum_check(const BivariatePoly& joint) {
  RatioCheck r;
  for (const auto& [e, c] : joint.terms()) {
    auto [fv, gv] = e;
    // Division, not the two-argument constructor: the latter rejects negative denominators.
    if (gv != 0) r.lhs += BigRational(BigInt(c * fv)) / BigRational(gv);
    if (fv != 0) r.rhs += BigRational(BigInt(c * gv)) / BigRational(fv);
  }
  r.equal = r.lhs == r.rhs;
  return r;
}

inline RatioCheck ratio_sum_check(std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  return ratio_sum_check(joint_distribution(f, g));
}

inline RatioCheck ratio_sum_check(const Statistic& f, const Statistic& g, const FoldOptions& o = {}) {
  return ratio_sum_check(joint_distribution(f, g, o));
}

// ---------------------------------------------------------------------------
// Involutions

/// A permutation of {0..N-1} that is its own inverse.
class InvolutionMap {
 public:
  explicit InvolutionMap(std::vector<std::size_t> mapping) : mapping_(std::move(mapping)) {
    for (std::size_t x = 0; x < mapping_.size(); ++x)
      if (mapping_[x] >= mapping_.size() || mapping_[mapping_[x]] != x)
        throw InvalidArgument("mapping is not an involution at index " + std::to_string(x));
  }

  static InvolutionMap identity(std::size_t size) {
    std::vector<std::size_t> m(size);
    for (std::size_t i = 0; i < size; ++i) m[i] = i;
    return InvolutionMap(std::move(m));
  }

  std::size_t size() const { return mapping_.size(); }
  std::size_t operator()(std::size_t x) const { return mapping_[x]; }
  const std::vector<std::size_t>& mapping() const { return mapping_; }

  friend bool operator==(const InvolutionMap&, const InvolutionMap&) = default;

 private:
  std::vector<std::size_t> mapping_;
};

/// f(x) == g(iota(x)) for every x.
inline bool satisfies(const InvolutionMap& iota, std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  if (iota.size() != f.size() || f.size() != g.size()) return false;
  for (std::size_t x = 0; x < f.size(); ++x)
    if (f[x] != g[iota(x)]) return false;
  return true;
}

/// An involution with f = g o iota. Elements with f(x) = g(x) are fixed; the
/// i-th element (by index) of the (h,k) value class is paired with the i-th
/// element of the (k,h) class.
inline InvolutionMap build_involution(std::span<const std::int64_t> f, std::span<const std::int64_t> g) {
  detail::require_same_size(f, g);
  std::map<std::pair<std::int64_t, std::int64_t>, std::vector<std::size_t>> classes;
  for (std::size_t x = 0; x < f.size(); ++x) classes[{f[x], g[x]}].push_back(x);
  std::vector<std::size_t> mapping(f.size());
  for (const auto& [key, members] : classes) {
    auto [h, k] = key;
    if (h == k) {
      for (auto x : members) mapping[x] = x;
      continue;
    }
    auto mirror = classes.find({k, h});
    if (mirror == classes.end() || mirror->second.size() != members.size())
      throw NotSymmetric("no involution: value pair (" + std::to_string(h) + "," + std::to_string(k) +
                         ") occurs " + std::to_string(members.size()) + " times but its transpose " +
                         std::to_string(mirror == classes.end() ? 0 : mirror->second.size()) + " times");
    for (std::size_t i = 0; i < members.size(); ++i) mapping[members[i]] = mirror->second[i];
  }
  return InvolutionMap(std::move(mapping));
}

/// iota~(a, b) = (a, iota(b)) on X = A x B.
inline InvolutionMap lift_involution(const InvolutionMap& iota, const GoodDecomposition& d) {
  if (iota.size() != d.factor_b().size()) throw DescriptorMismatch("involution does not live on factor B");
  std::vector<std::size_t> mapping(d.poset().size());
  for (std::size_t x = 0; x < mapping.size(); ++x) {
    auto [a, b] = d.to_pair(x);
    mapping[x] = d.from_pair(a, iota(b));
  }
  return InvolutionMap(std::move(mapping));
}

// ---------------------------------------------------------------------------
// Descent classes

enum class DescentMode {
  a_descents,            // D_I = {w : D_R(w) = I} in type A
  b_descents_and_negs,   // D_{I,K} = {w : D_R(w) \ {s_0} = I, neg(w^-1) = K} in type B
  b_descents_and_neg_positions,  // as above with neg(w) = K (positions instead of values)
};

struct DescentClass {
  GeneratorSet descents;                // I
  std::optional<std::vector<int>> negs; // K, for the type B mode
  std::vector<SignedPermutation> elements;
};

inline std::vector<DescentClass> descent_class_partition(const GroupDescriptor& d, DescentMode mode) {
  if (mode == DescentMode::a_descents && d.family != Family::A)
    throw InvalidArgument("descent classes D_I are defined for type A, got " + d.to_string());
  if (mode != DescentMode::a_descents && d.family != Family::B)
    throw InvalidArgument("descent classes D_{I,K} are defined for type B, got " + d.to_string());
  std::map<std::pair<std::uint32_t, std::vector<int>>, std::vector<SignedPermutation>> classes;
  for_each_element(d, [&](const SignedPermutation& w) {
    auto I = right_descent_set(w);
    std::vector<int> K;
    if (mode != DescentMode::a_descents) {
      I.erase(0);
      K = mode == DescentMode::b_descents_and_negs ? neg_set(inverse(w)) : neg_set(w);
    }
    classes[{I.mask(), K}].push_back(w);
  });
  std::vector<DescentClass> out;
  for (auto& [key, members] : classes) {
    DescentClass c{GeneratorSet(key.first), std::nullopt, std::move(members)};
    if (mode != DescentMode::a_descents) c.negs = key.second;
    out.push_back(std::move(c));
  }
  return out;
}

inline LaurentPoly distribution_on(const Statistic& f, std::span<const SignedPermutation> elements) {
  DenseCounter c;
  for (const auto& w : elements) c.add(f(w));
  return c.to_poly();
}

inline BivariatePoly joint_distribution_on(const Statistic& f, const Statistic& g,
                                           std::span<const SignedPermutation> elements) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::uint64_t> counts;
  for (const auto& w : elements) ++counts[{f(w), g(w)}];
  BivariatePoly p;
  for (const auto& [e, c] : counts) p.add_term(e.first, e.second, BigInt(c));
  return p;
}

}  // namespace coxstat
