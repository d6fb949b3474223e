#pragma once

// Dense, splittable enumeration of S_n, S_n^B and S_n^D.
//
// Index layout: index = signbits * n! + lehmer(|sigma|), where lehmer is the
// factorial-number-system rank of the underlying permutation (most significant
// digit first, i.e. lexicographic order) and signbits is little-endian over
// window positions. Type D stores only the first n-1 sign bits; the sign of
// the last entry is fixed by parity.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <limits>
#include <string>
#include <thread>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "coxstat/signed_permutation.hpp"

namespace coxstat {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt group_order(const GroupDescriptor& d) {
  BigInt order = 1;
  for (int i = 2; i <= d.n; ++i) order *= i;
  if (d.family == Family::B) order <<= d.n;
  if (d.family == Family::D) order <<= (d.n - 1);
  return order;
}

/// Group order as a 64-bit index; throws when it does not fit.
inline std::uint64_t group_order_u64(const GroupDescriptor& d) {
  BigInt order = group_order(d);
  if (order > BigInt(std::numeric_limits<std::uint64_t>::max()))
    throw CapExceeded("order of " + d.to_string() + " does not fit a 64-bit index");
  return order.convert_to<std::uint64_t>();
}

namespace detail {

inline std::uint64_t factorial_u64(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

inline int sign_bit_count(const GroupDescriptor& d) {
  switch (d.family) {
    case Family::A: return 0;
    case Family::B: return d.n;
    case Family::D: return d.n - 1;
  }
  return 0;
}

// Applies sign bits to an absolute-value permutation.
inline void apply_signs(const GroupDescriptor& d, std::uint64_t signbits, std::span<std::int8_t> window) {
  int bits = sign_bit_count(d);
  int parity = 0;
  for (int i = 0; i < bits; ++i) {
    if ((signbits >> i) & 1U) {
      window[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(-window[static_cast<std::size_t>(i)]);
      parity ^= 1;
    }
  }
  if (d.family == Family::D && parity)
    window[static_cast<std::size_t>(d.n - 1)] = static_cast<std::int8_t>(-window[static_cast<std::size_t>(d.n - 1)]);
}

}  // namespace detail

/// The element with enumeration index k.
inline SignedPermutation unrank(const GroupDescriptor& d, std::uint64_t k) {
  const std::uint64_t order = group_order_u64(d);
  if (k >= order)
    throw InvalidArgument("index " + std::to_string(k) + " out of range for " + d.to_string() + " of order " +
                          std::to_string(order));
  const std::uint64_t nfact = detail::factorial_u64(d.n);
  std::uint64_t signbits = k / nfact;
  std::uint64_t code = k % nfact;
  std::vector<int> pool(static_cast<std::size_t>(d.n));
  for (int i = 0; i < d.n; ++i) pool[static_cast<std::size_t>(i)] = i + 1;
  SignedPermutation::Window win{};
  std::uint64_t weight = nfact;
  for (int pos = 0; pos < d.n; ++pos) {
    weight /= static_cast<std::uint64_t>(d.n - pos);
    auto digit = static_cast<std::size_t>(code / weight);
    code %= weight;
    win[static_cast<std::size_t>(pos)] = static_cast<std::int8_t>(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  detail::apply_signs(d, signbits, {win.data(), static_cast<std::size_t>(d.n)});
  return SignedPermutation::from_trusted(d, {win.data(), static_cast<std::size_t>(d.n)});
}

/// Enumeration index of w (inverse of unrank).
inline std::uint64_t rank(const SignedPermutation& w) {
  const auto& d = w.descriptor();
  const int n = d.n;
  std::uint64_t code = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    int ai = std::abs(w[i]);
    for (int j = i + 1; j < n; ++j)
      if (std::abs(w[j]) < ai) ++smaller;
    code = code * static_cast<std::uint64_t>(n - i) + static_cast<std::uint64_t>(smaller);
  }
  std::uint64_t signbits = 0;
  for (int i = 0; i < detail::sign_bit_count(d); ++i)
    if (w[i] < 0) signbits |= (std::uint64_t{1} << i);
  return signbits * detail::factorial_u64(n) + code;
}

/// Half-open index range [start, end) of one group.
struct EnumerationRange {
  GroupDescriptor descriptor;
  std::uint64_t start = 0;
  std::uint64_t end = 0;

  EnumerationRange(const GroupDescriptor& d, std::uint64_t s, std::uint64_t e) : descriptor(d), start(s), end(e) {
    if (s > e || e > group_order_u64(d)) throw InvalidArgument("invalid enumeration range for " + d.to_string());
  }
  static EnumerationRange whole(const GroupDescriptor& d) { return {d, 0, group_order_u64(d)}; }

  std::uint64_t size() const { return end - start; }
};

/// Steps through consecutive indices without unranking each element.
class EnumerationCursor {
 public:
  EnumerationCursor(const GroupDescriptor& d, std::uint64_t index)
      : descriptor_(d), current_(unrank(d, index)), signbits_(index / detail::factorial_u64(d.n)) {
    for (int i = 0; i < d.n; ++i) abs_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(std::abs(current_[i]));
  }

  const SignedPermutation& current() const { return current_; }

  /// Moves to the next index: next permutation of the absolute values, and on
  /// wrap-around the next sign pattern.
  void advance() {
    auto first = abs_.begin();
    auto last = abs_.begin() + descriptor_.n;
    if (!std::next_permutation(first, last)) ++signbits_;
    SignedPermutation::Window win = abs_;
    detail::apply_signs(descriptor_, signbits_, {win.data(), static_cast<std::size_t>(descriptor_.n)});
    current_ = SignedPermutation::from_trusted(descriptor_, {win.data(), static_cast<std::size_t>(descriptor_.n)});
  }

 private:
  GroupDescriptor descriptor_;
  SignedPermutation current_;
  SignedPermutation::Window abs_{};
  std::uint64_t signbits_;
};

/// Calls fn(w) for every element of the range, in index order.
template <class Fn>
void for_each_element(const EnumerationRange& range, Fn&& fn) {
  if (range.size() == 0) return;
  EnumerationCursor cursor(range.descriptor, range.start);
  for (std::uint64_t k = range.start; k < range.end; ++k) {
    fn(cursor.current());
    if (k + 1 < range.end) cursor.advance();
  }
}

template <class Fn>
void for_each_element(const GroupDescriptor& d, Fn&& fn) {
  for_each_element(EnumerationRange::whole(d), std::forward<Fn>(fn));
}

inline std::vector<SignedPermutation> all_elements(const GroupDescriptor& d) {
  std::vector<SignedPermutation> out;
  out.reserve(static_cast<std::size_t>(group_order_u64(d)));
  for_each_element(d, [&](const SignedPermutation& w) { out.push_back(w); });
  return out;
}

/// Worker count from COXSTAT_THREADS, falling back to the hardware.
inline unsigned default_thread_count() {
  if (const char* env = std::getenv("COXSTAT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

struct FoldOptions {
  unsigned threads = default_thread_count();
};

namespace detail {

// Chunking depends only on the range size, never on the worker count.
inline std::uint64_t chunk_count(std::uint64_t size) {
  constexpr std::uint64_t kTargetChunk = 8192;
  constexpr std::uint64_t kMaxChunks = 1024;
  return std::clamp<std::uint64_t>(size / kTargetChunk, 1, kMaxChunks);
}

// Pairwise reduction in index order (fan-in 2).
template <class Acc, class Merge>
Acc reduce_tree(std::vector<Acc>& parts, Merge& merge) {
  std::size_t width = parts.size();
  while (width > 1) {
    std::size_t half = (width + 1) / 2;
    for (std::size_t i = 0; i + half < width; ++i) merge(parts[i], std::move(parts[i + half]));
    width = half;
  }
  return std::move(parts.front());
}

template <class Acc, class Work, class Merge>
Acc fold_chunks(std::uint64_t start, std::uint64_t end, const Acc& identity, Work&& work, Merge&& merge,
                unsigned threads) {
  const std::uint64_t size = end - start;
  const std::uint64_t chunks = chunk_count(size);
  std::vector<Acc> parts(static_cast<std::size_t>(chunks), identity);
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (std::uint64_t c = next++; c < chunks; c = next++) {
      std::uint64_t lo = start + size * c / chunks;
      std::uint64_t hi = start + size * (c + 1) / chunks;
      work(parts[static_cast<std::size_t>(c)], lo, hi);
    }
  };
  unsigned pool = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(chunks)));
  if (pool == 1) {
    worker();
  } else {
    std::vector<std::jthread> workers;
    workers.reserve(pool);
    for (unsigned t = 0; t < pool; ++t) workers.emplace_back(worker);
  }
  return reduce_tree(parts, merge);
}

}  // namespace detail

/// Folds visit(acc, w) over the range. merge(into, from) must be associative
/// and commutative with `identity` neutral; the result does not depend on the
/// worker count.
template <class Acc, class Visit, class Merge>
Acc parallel_fold(const EnumerationRange& range, const Acc& identity, Visit&& visit, Merge&& merge,
                  const FoldOptions& options = {}) {
  if (range.size() == 0) return identity;
  return detail::fold_chunks(
      range.start, range.end, identity,
      [&](Acc& acc, std::uint64_t lo, std::uint64_t hi) {
        for_each_element(EnumerationRange(range.descriptor, lo, hi), [&](const SignedPermutation& w) { visit(acc, w); });
      },
      merge, options.threads);
}

/// Same contract over a plain index range [0, count).
template <class Acc, class Visit, class Merge>
Acc parallel_fold_indices(std::uint64_t count, const Acc& identity, Visit&& visit, Merge&& merge,
                          const FoldOptions& options = {}) {
  if (count == 0) return identity;
  return detail::fold_chunks(
      std::uint64_t{0}, count, identity,
      [&](Acc& acc, std::uint64_t lo, std::uint64_t hi) {
        for (std::uint64_t i = lo; i < hi; ++i) visit(acc, i);
      },
      merge, options.threads);
}

/// Calls fn(i) for i in [0, count) on the worker pool; fn must only touch
/// state owned by index i.
template <class Fn>
void parallel_for_indices(std::uint64_t count, Fn&& fn, const FoldOptions& options = {}) {
  struct Empty {};
  parallel_fold_indices(
      count, Empty{}, [&](Empty&, std::uint64_t i) { fn(i); }, [](Empty&, Empty&&) {}, options);
}

}  // namespace coxstat
