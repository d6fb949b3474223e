#pragma once

// Explicit families in S_{n+1} showing that l + maj takes n(n+1) - 1 values:
// U_n = {sigma_{i,j}} carries n(n+1)/2 distinct even values of l + maj, and
// J_n = psi(U_n \ {sigma_{1,0}, sigma_{2,0}}) carries the odd ones.

#include <algorithm>
#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coxstat/signed_permutation.hpp"
#include "coxstat/statistics.hpp"

namespace coxstat {

struct WitnessClaim {
  std::string name;
  bool holds = false;
};

struct WitnessFamilies {
  using Index = std::pair<int, int>;  // (i, j)

  int n = 0;  // the group is S_{n+1}
  std::map<Index, SignedPermutation> sigma;
  std::vector<SignedPermutation> U;
  std::vector<SignedPermutation> J_set;
  std::map<Index, SignedPermutation> phi;  // defined off sigma_{1,n-1}
  std::map<Index, SignedPermutation> psi;  // defined off sigma_{1,0}, sigma_{2,0}
  std::vector<WitnessClaim> claims;

  bool all_claims_hold() const {
    return std::all_of(claims.begin(), claims.end(), [](const WitnessClaim& c) { return c.holds; });
  }
};

/// sigma_{i,j}(k) for k in [n+1].
inline SignedPermutation witness_sigma(int n, int i, int j) {
  if (n < 2 || j < 0 || j > n - 1 || i < 1 || i > n - j)
    throw InvalidArgument("sigma_{" + std::to_string(i) + "," + std::to_string(j) + "} is undefined for n = " +
                          std::to_string(n));
  GroupDescriptor d(Family::A, n + 1);
  std::vector<int> win(static_cast<std::size_t>(n + 1));
  for (int k = 1; k <= n + 1; ++k) {
    int v;
    if (k > n + 1 - j) v = k;
    else if (k > i) v = n + 2 - j - k;
    else if (k == i) v = n + 1 - j;
    else v = n + 1 - j - k;
    win[static_cast<std::size_t>(k - 1)] = v;
  }
  return SignedPermutation(d, win);
}

inline WitnessFamilies sum_image_witnesses(int n) {
  if (n < 2) throw InvalidArgument("witness families need n >= 2");
  GroupDescriptor d(Family::A, n + 1);
  WitnessFamilies wf;
  wf.n = n;
  for (int j = 0; j <= n - 1; ++j)
    for (int i = 1; i <= n - j; ++i) {
      auto s = witness_sigma(n, i, j);
      wf.sigma.emplace(WitnessFamilies::Index{i, j}, s);
      wf.U.push_back(s);
    }
  auto stat = [](const SignedPermutation& w) { return length(w) + maj(w); };
  auto w0 = SignedPermutation::longest(d);
  auto e = SignedPermutation::identity(d);
  std::unordered_set<SignedPermutation> u_set(wf.U.begin(), wf.U.end());

  bool phi_formula = true, phi_length = true, phi_maj = true;
  for (const auto& [ij, s] : wf.sigma) {
    auto [i, j] = ij;
    if (i == 1 && j == n - 1) continue;
    auto image = s.times_generator(i);
    wf.phi.emplace(ij, image);
    auto expected = (i < n - j) ? wf.sigma.at({i + 1, j}) : wf.sigma.at({1, j + 1});
    phi_formula = phi_formula && image == expected;
    phi_length = phi_length && length(image) == length(s) - 1;
    phi_maj = phi_maj && maj(image) == maj(s) - 1;
  }
  std::unordered_set<SignedPermutation> phi_images;
  for (const auto& [ij, img] : wf.phi) phi_images.insert(img);
  std::unordered_set<SignedPermutation> u_minus_w0 = u_set;
  u_minus_w0.erase(w0);
  bool phi_bijective = phi_images.size() == wf.phi.size() && phi_images == u_minus_w0;

  bool psi_length = true, psi_maj = true;
  for (const auto& [ij, s] : wf.sigma) {
    auto [i, j] = ij;
    if (j == 0 && (i == 1 || i == 2)) continue;
    int gen = (j == 0) ? n : n + 1 - j;
    auto image = s.generator_times(gen);
    wf.psi.emplace(ij, image);
    wf.J_set.push_back(image);
    psi_length = psi_length && length(image) == length(s) + 1;
    psi_maj = psi_maj && maj(image) == maj(s);
  }
  std::unordered_set<SignedPermutation> j_set(wf.J_set.begin(), wf.J_set.end());
  bool psi_injective = j_set.size() == wf.J_set.size();
  bool disjoint = std::none_of(wf.J_set.begin(), wf.J_set.end(), [&](const auto& w) { return u_set.contains(w); });
  bool u_even = std::all_of(wf.U.begin(), wf.U.end(), [&](const auto& w) { return stat(w) % 2 == 0; });
  bool j_odd = std::all_of(wf.J_set.begin(), wf.J_set.end(), [&](const auto& w) { return stat(w) % 2 == 1; });

  std::set<std::int64_t> u_values;
  for (const auto& w : wf.U) u_values.insert(stat(w));
  std::set<std::int64_t> all_values = u_values;
  for (const auto& w : wf.J_set) all_values.insert(stat(w));
  all_values.insert(stat(e));
  const std::size_t union_size = wf.U.size() + wf.J_set.size() + 1;

  auto add = [&](std::string name, bool holds) { wf.claims.push_back({std::move(name), holds}); };
  add("sigma_{1,0} = w0", wf.sigma.at({1, 0}) == w0);
  add("|U_n| = n(n+1)/2", u_set.size() == wf.U.size() && wf.U.size() == static_cast<std::size_t>(n * (n + 1) / 2));
  add("phi(sigma_{i,j}) = sigma_{i+1,j} or sigma_{1,j+1}", phi_formula);
  add("phi is a bijection U_n \\ {sigma_{1,n-1}} -> U_n \\ {w0}", phi_bijective);
  add("l(phi(sigma)) = l(sigma) - 1", phi_length);
  add("maj(phi(sigma)) = maj(sigma) - 1", phi_maj);
  add("l + maj is injective on U_n", u_values.size() == wf.U.size());
  add("l(psi(sigma)) = l(sigma) + 1", psi_length);
  add("maj(psi(sigma)) = maj(sigma)", psi_maj);
  add("psi is injective", psi_injective);
  add("J_n and U_n are disjoint", disjoint);
  add("e is outside U_n and J_n", !u_set.contains(e) && !j_set.contains(e));
  add("l + maj is even on U_n", u_even);
  add("l + maj is odd on J_n", j_odd);
  add("l + maj takes |U_n| + |J_n| + 1 = n(n+1) - 1 distinct values on U_n, J_n, e",
      all_values.size() == union_size && union_size == static_cast<std::size_t>(n * (n + 1) - 1));
  return wf;
}

}  // namespace coxstat
