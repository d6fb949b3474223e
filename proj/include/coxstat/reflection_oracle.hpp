#pragma once

// Brute-force length oracle: breadth-first search in the Cayley graph gives
// the word length, and the reflection set T = {u s u^-1} is enumerated
// explicitly so that |T(w)| = |{t in T : l(wt) < l(w)}| can be compared with
// the closed-form length. Nothing here uses the window formulas for length.

#include <cstdint>
#include <deque>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "coxstat/signed_permutation.hpp"

namespace coxstat {

class ReflectionOracle {
 public:
  static constexpr std::uint64_t kDefaultCap = 50'000;

  explicit ReflectionOracle(const GroupDescriptor& d, std::uint64_t cap = kDefaultCap) : descriptor_(d) {
    auto e = SignedPermutation::identity(d);
    depth_.emplace(e, 0);
    elements_.push_back(e);
    std::deque<SignedPermutation> queue{e};
    while (!queue.empty()) {
      auto w = queue.front();
      queue.pop_front();
      int dw = depth_.at(w);
      for (int s = d.first_generator(); s < d.n; ++s) {
        auto ws = w.times_generator(s);
        if (depth_.emplace(ws, dw + 1).second) {
          if (depth_.size() > cap)
            throw CapExceeded("reflection oracle: " + d.to_string() + " has more than " + std::to_string(cap) +
                              " elements");
          elements_.push_back(ws);
          queue.push_back(ws);
        }
      }
    }
    std::unordered_set<SignedPermutation> seen;
    for (const auto& u : elements_) {
      auto u_inv = inverse(u);
      for (int s = d.first_generator(); s < d.n; ++s) {
        auto t = compose(compose(u, SignedPermutation::generator(d, s)), u_inv);
        if (seen.insert(t).second) reflections_.push_back(t);
      }
    }
  }

  const GroupDescriptor& descriptor() const { return descriptor_; }
  const std::vector<SignedPermutation>& elements() const { return elements_; }
  const std::vector<SignedPermutation>& reflections() const { return reflections_; }

  /// Minimal number of generators needed to write w.
  std::int64_t word_length(const SignedPermutation& w) const { return depth_.at(w); }

  /// T(w) = {t in T : wt < w}.
  std::vector<SignedPermutation> inversion_reflections(const SignedPermutation& w) const {
    std::vector<SignedPermutation> out;
    std::int64_t lw = word_length(w);
    for (const auto& t : reflections_)
      if (word_length(compose(w, t)) < lw) out.push_back(t);
    return out;
  }

  std::int64_t reflection_length(const SignedPermutation& w) const {
    return static_cast<std::int64_t>(inversion_reflections(w).size());
  }

 private:
  GroupDescriptor descriptor_;
  std::unordered_map<SignedPermutation, int> depth_;
  std::vector<SignedPermutation> elements_;
  std::vector<SignedPermutation> reflections_;
};

/// |T(w)| computed by brute force over all reflections of the group of w.
inline std::int64_t reflection_length_oracle(const SignedPermutation& w,
                                             std::uint64_t cap = ReflectionOracle::kDefaultCap) {
  return ReflectionOracle(w.descriptor(), cap).reflection_length(w);
}

}  // namespace coxstat
