#pragma once

// Brute-force reference implementations used by the tests. Nothing here calls
// into the library: windows are plain vectors and every statistic is read off
// its definition.

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <vector>

#include "coxstat/signed_permutation.hpp"

namespace oracle {

using Window = std::vector<int>;
using Poly = std::map<std::int64_t, std::int64_t>;  // exponent -> coefficient

inline Window identity(int n) {
  Window w(static_cast<std::size_t>(n));
  std::iota(w.begin(), w.end(), 1);
  return w;
}

/// Every element of the group as a window, via next_permutation and sign masks.
inline std::vector<Window> elements(coxstat::Family f, int n) {
  std::vector<Window> out;
  Window p = identity(n);
  do {
    if (f == coxstat::Family::A) {
      out.push_back(p);
      continue;
    }
    for (unsigned mask = 0; mask < (1U << n); ++mask) {
      if (f == coxstat::Family::D && std::popcount(mask) % 2 != 0) continue;
      Window w = p;
      for (int i = 0; i < n; ++i)
        if (mask & (1U << i)) w[static_cast<std::size_t>(i)] = -w[static_cast<std::size_t>(i)];
      out.push_back(w);
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

/// w * s_i acting on positions (1-based window positions).
inline Window times_generator(coxstat::Family f, Window w, int i) {
  if (i > 0) {
    std::swap(w[static_cast<std::size_t>(i - 1)], w[static_cast<std::size_t>(i)]);
  } else if (f == coxstat::Family::B) {
    w[0] = -w[0];
  } else {
    std::swap(w[0], w[1]);
    w[0] = -w[0];
    w[1] = -w[1];
  }
  return w;
}

/// Word length of every element by breadth-first search on the Cayley graph.
inline std::map<Window, std::int64_t> word_lengths(coxstat::Family f, int n) {
  std::map<Window, std::int64_t> depth{{identity(n), 0}};
  std::queue<Window> queue;
  queue.push(identity(n));
  int first = f == coxstat::Family::A ? 1 : 0;
  while (!queue.empty()) {
    Window w = queue.front();
    queue.pop();
    for (int s = first; s < n; ++s) {
      Window ws = times_generator(f, w, s);
      if (depth.emplace(ws, depth[w] + 1).second) queue.push(ws);
    }
  }
  return depth;
}

inline std::int64_t maj(const Window& w) {
  std::int64_t m = 0;
  for (std::size_t i = 0; i + 1 < w.size(); ++i)
    if (w[i] > w[i + 1]) m += static_cast<std::int64_t>(i + 1);
  return m;
}

inline std::int64_t inv(const Window& w) {
  std::int64_t c = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    for (std::size_t j = i + 1; j < w.size(); ++j)
      if (w[i] > w[j]) ++c;
  return c;
}

inline std::int64_t neg_sum(const Window& w) {
  std::int64_t s = 0;
  for (int v : w)
    if (v < 0) s += v;
  return s;
}

inline std::int64_t neg_count(const Window& w) {
  return std::count_if(w.begin(), w.end(), [](int v) { return v < 0; });
}

inline Window inverse(const Window& w) {
  Window out(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    int v = w[i];
    int sign = v < 0 ? -1 : 1;
    out[static_cast<std::size_t>(std::abs(v) - 1)] = sign * static_cast<int>(i + 1);
  }
  return out;
}

/// (1 + q + ... + q^{k-1}) as a polynomial.
inline Poly q_integer(int k) {
  Poly p;
  for (int e = 0; e < k; ++e) p[e] = 1;
  return p;
}

inline Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) out[ea + eb] += ca * cb;
  return out;
}

/// Poincare polynomial from the degree product formula.
inline Poly poincare(coxstat::Family f, int n) {
  Poly p{{0, 1}};
  switch (f) {
    case coxstat::Family::A:
      for (int i = 1; i <= n; ++i) p = multiply(p, q_integer(i));
      break;
    case coxstat::Family::B:
      for (int i = 1; i <= n; ++i) p = multiply(p, q_integer(2 * i));
      break;
    case coxstat::Family::D:
      p = q_integer(n);
      for (int i = 1; i < n; ++i) p = multiply(p, q_integer(2 * i));
      break;
  }
  return p;
}

template <class Fn>
Poly distribution(const std::vector<Window>& xs, Fn&& f) {
  Poly p;
  for (const auto& w : xs) ++p[f(w)];
  return p;
}

/// Converts a library polynomial to the plain map form.
template <class Laurent>
Poly to_poly(const Laurent& lp) {
  Poly p;
  for (const auto& [e, c] : lp.terms()) p[e] = static_cast<std::int64_t>(c);
  return p;
}

inline coxstat::SignedPermutation to_element(const coxstat::GroupDescriptor& d, const Window& w) {
  return coxstat::SignedPermutation(d, w);
}

}  // namespace oracle
