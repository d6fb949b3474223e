#pragma once

// Finite graded posets seen through their rank function only, good
// decompositions X = A x B, the operator R and induced-function predicates.
//
// Elements are indexed densely 0..|X|-1 and functions on a poset are integer
// vectors aligned with that index. File formats:
//   poset     {"ranks":[...], "bottom":i, "top":j}
//   function  [f(0), f(1), ...]

#include <algorithm>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "coxstat/enumerate.hpp"
#include "coxstat/error.hpp"
#include "coxstat/signed_permutation.hpp"
#include "coxstat/statistics.hpp"

namespace coxstat {

using PosetFunction = std::vector<std::int64_t>;

class FiniteGradedPoset {
 public:
  FiniteGradedPoset(std::vector<std::int64_t> ranks, std::size_t bottom, std::size_t top)
      : ranks_(std::move(ranks)), bottom_(bottom), top_(top) {
    if (ranks_.empty()) throw InvalidArgument("a poset needs at least one element");
    if (bottom_ >= ranks_.size() || top_ >= ranks_.size()) throw InvalidArgument("bottom/top index out of range");
    if (ranks_[bottom_] != 0) throw InvalidArgument("the minimum must have rank 0");
    const std::int64_t top_rank = ranks_[top_];
    std::vector<bool> present(static_cast<std::size_t>(top_rank) + 1, false);
    for (std::size_t i = 0; i < ranks_.size(); ++i) {
      auto r = ranks_[i];
      if (r < 0 || r > top_rank) throw InvalidArgument("rank of element " + std::to_string(i) + " is outside [0, rank(top)]");
      if (r == 0 && i != bottom_) throw InvalidArgument("only the minimum may have rank 0");
      if (r == top_rank && i != top_ && top_rank > 0) throw InvalidArgument("only the maximum may have the top rank");
      present[static_cast<std::size_t>(r)] = true;
    }
    if (!std::all_of(present.begin(), present.end(), [](bool b) { return b; }))
      throw InvalidArgument("every rank between 0 and rank(top) must be attained");
  }

  std::size_t size() const { return ranks_.size(); }
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }
  std::int64_t rank(std::size_t x) const { return ranks_[x]; }
  std::int64_t top_rank() const { return ranks_[top_]; }
  const std::vector<std::int64_t>& ranks() const { return ranks_; }

  nlohmann::json to_json() const { return {{"ranks", ranks_}, {"bottom", bottom_}, {"top", top_}}; }

  static FiniteGradedPoset from_json(const nlohmann::json& j) {
    try {
      return FiniteGradedPoset(j.at("ranks").get<std::vector<std::int64_t>>(), j.at("bottom").get<std::size_t>(),
                               j.at("top").get<std::size_t>());
    } catch (const nlohmann::json::exception& e) {
      throw InvalidArgument(std::string("malformed poset JSON: ") + e.what());
    }
  }

 private:
  std::vector<std::int64_t> ranks_;
  std::size_t bottom_;
  std::size_t top_;
};

inline PosetFunction poset_function_from_json(const nlohmann::json& j) {
  try {
    return j.get<PosetFunction>();
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument(std::string("function file must be an integer array: ") + e.what());
  }
}

/// Total order on m elements with rank = position.
inline FiniteGradedPoset chain_poset(int m) {
  if (m < 2) throw InvalidArgument("a chain needs at least 2 elements");
  std::vector<std::int64_t> ranks(static_cast<std::size_t>(m));
  for (int i = 0; i < m; ++i) ranks[static_cast<std::size_t>(i)] = i;
  return FiniteGradedPoset(std::move(ranks), 0, static_cast<std::size_t>(m - 1));
}

/// A bijection X -> A x B under which rank_X = rank_A o pi_A + rank_B o pi_B.
class GoodDecomposition {
 public:
  using Pair = std::pair<std::size_t, std::size_t>;

  GoodDecomposition(FiniteGradedPoset x, FiniteGradedPoset a, FiniteGradedPoset b, std::vector<Pair> to_pair)
      : x_(std::move(x)), a_(std::move(a)), b_(std::move(b)), to_pair_(std::move(to_pair)) {
    if (to_pair_.size() != x_.size() || x_.size() != a_.size() * b_.size())
      throw InvalidArgument("decomposition map is not a bijection onto A x B");
    from_pair_.assign(a_.size() * b_.size(), static_cast<std::size_t>(-1));
    for (std::size_t i = 0; i < to_pair_.size(); ++i) {
      auto [pa, pb] = to_pair_[i];
      if (pa >= a_.size() || pb >= b_.size()) throw InvalidArgument("decomposition map leaves A x B");
      auto& slot = from_pair_[pa * b_.size() + pb];
      if (slot != static_cast<std::size_t>(-1)) throw InvalidArgument("decomposition map is not injective");
      slot = i;
      if (x_.rank(i) != a_.rank(pa) + b_.rank(pb))
        throw InvalidArgument("rank is not additive at element " + std::to_string(i));
    }
    if (to_pair_[x_.bottom()] != Pair{a_.bottom(), b_.bottom()})
      throw InvalidArgument("the minimum does not map to (bottom_A, bottom_B)");
    if (to_pair_[x_.top()] != Pair{a_.top(), b_.top()})
      throw InvalidArgument("the maximum does not map to (top_A, top_B)");
  }

  const FiniteGradedPoset& poset() const { return x_; }
  const FiniteGradedPoset& factor_a() const { return a_; }
  const FiniteGradedPoset& factor_b() const { return b_; }

  Pair to_pair(std::size_t x) const { return to_pair_[x]; }
  std::size_t from_pair(std::size_t a, std::size_t b) const { return from_pair_[a * b_.size() + b]; }
  std::size_t pi_a(std::size_t x) const { return to_pair_[x].first; }
  std::size_t pi_b(std::size_t x) const { return to_pair_[x].second; }

  /// f_A(a) = f(a, bottom_B).
  PosetFunction slice_a(std::span<const std::int64_t> f) const {
    PosetFunction out(a_.size());
    for (std::size_t a = 0; a < a_.size(); ++a) out[a] = f[from_pair(a, b_.bottom())];
    return out;
  }

  /// f_B(b) = f(bottom_A, b).
  PosetFunction slice_b(std::span<const std::int64_t> f) const {
    PosetFunction out(b_.size());
    for (std::size_t b = 0; b < b_.size(); ++b) out[b] = f[from_pair(a_.bottom(), b)];
    return out;
  }

  /// h o pi_B for h on B.
  PosetFunction pull_back_b(std::span<const std::int64_t> h) const {
    PosetFunction out(x_.size());
    for (std::size_t x = 0; x < x_.size(); ++x) out[x] = h[pi_b(x)];
    return out;
  }

 private:
  FiniteGradedPoset x_, a_, b_;
  std::vector<Pair> to_pair_;
  std::vector<std::size_t> from_pair_;
};

/// P x Q with rank (p, q) -> rank_P(p) + rank_Q(q); element (p, q) has index p |Q| + q.
inline GoodDecomposition product_decomposition(const FiniteGradedPoset& p, const FiniteGradedPoset& q) {
  std::vector<std::int64_t> ranks;
  std::vector<GoodDecomposition::Pair> pairs;
  ranks.reserve(p.size() * q.size());
  for (std::size_t i = 0; i < p.size(); ++i)
    for (std::size_t j = 0; j < q.size(); ++j) {
      ranks.push_back(p.rank(i) + q.rank(j));
      pairs.emplace_back(i, j);
    }
  FiniteGradedPoset x(std::move(ranks), p.bottom() * q.size() + q.bottom(), p.top() * q.size() + q.top());
  return GoodDecomposition(std::move(x), p, q, std::move(pairs));
}

/// W = W^J x W_J for a classical group, with the elements behind each index.
struct CoxeterDecomposition {
  GroupDescriptor descriptor;
  GeneratorSet subset_J;
  std::vector<SignedPermutation> elements;           // X, in enumeration order
  std::vector<SignedPermutation> quotient_elements;  // A = W^J, in enumeration order
  std::vector<SignedPermutation> parabolic_elements; // B = W_J (n-windows), in enumeration order
  GoodDecomposition decomposition;

  /// Evaluates a statistic on every element of X.
  PosetFunction tabulate(const Statistic& f) const { return tabulate_on(f, elements); }
  /// Evaluates a statistic on every element of B (n-window or restricted form).
  PosetFunction tabulate_b(const Statistic& g) const {
    if (g.universe() == descriptor) return tabulate_on(g, parabolic_elements);
    auto model = restriction_model(descriptor, subset_J);
    if (!model || !(g.universe() == *model))
      throw DescriptorMismatch("statistic '" + g.name() + "' cannot be read on W_J");
    PosetFunction out;
    out.reserve(parabolic_elements.size());
    for (const auto& w : parabolic_elements) out.push_back(g(restrict_to_model(w, *model)));
    return out;
  }

  static PosetFunction tabulate_on(const Statistic& f, const std::vector<SignedPermutation>& xs) {
    PosetFunction out;
    out.reserve(xs.size());
    for (const auto& w : xs) out.push_back(f(w));
    return out;
  }
};

inline CoxeterDecomposition coxeter_good_decomposition(const GroupDescriptor& d, GeneratorSet J,
                                                       std::uint64_t cap = 10'000'000) {
  require_generators(d, J);
  const std::uint64_t order = group_order_u64(d);
  if (order > cap) throw CapExceeded(d.to_string() + " exceeds the decomposition cap");
  auto elements = all_elements(d);
  constexpr auto kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> a_index(elements.size(), kNone), b_index(elements.size(), kNone);
  std::vector<SignedPermutation> quotients, parabolics;
  std::vector<std::int64_t> a_ranks, b_ranks;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const auto& w = elements[i];
    if ((right_descent_set(w) & J).empty()) {
      a_index[i] = quotients.size();
      quotients.push_back(w);
      a_ranks.push_back(length(w));
    }
  }
  for (const auto& u : coxstat::parabolic_elements(d, J)) b_index[static_cast<std::size_t>(rank(u))] = 0;
  for (std::size_t i = 0; i < elements.size(); ++i) {
    if (b_index[i] == kNone) continue;
    b_index[i] = parabolics.size();
    parabolics.push_back(elements[i]);
    b_ranks.push_back(length(elements[i]));
  }
  std::vector<GoodDecomposition::Pair> pairs(elements.size());
  std::vector<std::int64_t> ranks(elements.size());
  for (std::size_t i = 0; i < elements.size(); ++i) {
    auto f = parabolic_decompose(elements[i], J);
    pairs[i] = {a_index[static_cast<std::size_t>(rank(f.w_quotient))],
                b_index[static_cast<std::size_t>(rank(f.w_parabolic))]};
    ranks[i] = length(elements[i]);
  }
  auto top_of = [](const std::vector<std::int64_t>& r) {
    return static_cast<std::size_t>(std::max_element(r.begin(), r.end()) - r.begin());
  };
  FiniteGradedPoset x(ranks, 0, static_cast<std::size_t>(rank(SignedPermutation::longest(d))));
  FiniteGradedPoset a(a_ranks, 0, top_of(a_ranks));
  FiniteGradedPoset b(b_ranks, 0, top_of(b_ranks));
  return {d, J, std::move(elements), std::move(quotients), std::move(parabolics),
          GoodDecomposition(std::move(x), std::move(a), std::move(b), std::move(pairs))};
}

/// R^k(f) = f - k rank_A o pi_A.
inline PosetFunction r_operator(std::span<const std::int64_t> f, std::int64_t k, const GoodDecomposition& d) {
  if (f.size() != d.poset().size()) throw DescriptorMismatch("function does not match the poset size");
  PosetFunction out(f.size());
  for (std::size_t x = 0; x < f.size(); ++x) out[x] = f[x] - k * d.factor_a().rank(d.pi_a(x));
  return out;
}

/// f ~ g: equidistributed and equal at the minimum and the maximum.
inline bool in_same_class(std::span<const std::int64_t> f, std::span<const std::int64_t> g, std::size_t bottom,
                          std::size_t top) {
  if (f.size() != g.size()) throw DescriptorMismatch("functions live on universes of different size");
  if (bottom >= f.size() || top >= f.size()) throw InvalidArgument("bottom/top index out of range");
  if (f[bottom] != g[bottom] || f[top] != g[top]) return false;
  std::map<std::int64_t, std::int64_t> balance;
  for (std::size_t i = 0; i < f.size(); ++i) {
    ++balance[f[i]];
    --balance[g[i]];
  }
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

inline bool in_same_class(std::span<const std::int64_t> f, std::span<const std::int64_t> g,
                          const FiniteGradedPoset& p) {
  return in_same_class(f, g, p.bottom(), p.top());
}

/// f ~ g on a whole classical group, with e and w_0 as minimum and maximum.
inline bool in_same_class(const Statistic& f, const Statistic& g) {
  if (!(f.universe() == g.universe())) throw DescriptorMismatch("statistics live on different groups");
  const auto& d = f.universe();
  auto e = SignedPermutation::identity(d), w0 = SignedPermutation::longest(d);
  if (f(e) != g(e) || f(w0) != g(w0)) return false;
  std::map<std::int64_t, std::int64_t> balance;
  for_each_element(d, [&](const SignedPermutation& w) {
    ++balance[f(w)];
    --balance[g(w)];
  });
  return std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
}

/// g in [rank_B] and R(f) = g o pi_B.
inline bool is_induced(std::span<const std::int64_t> f, std::span<const std::int64_t> g, const GoodDecomposition& d) {
  if (f.size() != d.poset().size() || g.size() != d.factor_b().size())
    throw DescriptorMismatch("function sizes do not match the decomposition");
  if (!in_same_class(g, d.factor_b().ranks(), d.factor_b())) return false;
  auto r = r_operator(f, 1, d);
  for (std::size_t x = 0; x < r.size(); ++x)
    if (r[x] != g[d.pi_b(x)]) return false;
  return true;
}

}  // namespace coxstat
