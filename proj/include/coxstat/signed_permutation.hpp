#pragma once

// Elements of the classical Coxeter groups S_n, S_n^B and S_n^D in window
// notation, together with the group law, length, descents and the parabolic
// factorization w = w^J w_J.
//
// Conventions:
//   * composition is (uv)(i) = u(v(i)) on [+-n];
//   * right multiplication by s_i (i >= 1) swaps window positions i, i+1;
//   * right multiplication by s_0 negates position 1 (type B) or maps
//     (a, b, ...) to (-b, -a, ...) (type D);
//   * type A of window n is the Coxeter system A_{n-1} with generators
//     s_1..s_{n-1}; types B and D use s_0..s_{n-1}.

#include <algorithm>
#include <array>
#include <bit>
#include <charconv>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "coxstat/error.hpp"

namespace coxstat {

inline constexpr int kMaxRank = 20;

enum class Family : std::uint8_t { A, B, D };

inline char family_letter(Family f) {
  switch (f) {
    case Family::A: return 'A';
    case Family::B: return 'B';
    case Family::D: return 'D';
  }
  return '?';
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\n' || s.back() == '\r'))
    s.remove_suffix(1);
  return s;
}

inline long long parse_integer(std::string_view s) {
  s = trim(s);
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  long long value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (s.empty() || ec != std::errc{} || ptr != s.data() + s.size())
    throw InvalidArgument("not an integer: '" + std::string(s) + "'");
  return value;
}

inline std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos == std::string_view::npos ? s.npos : pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace detail

/// Which Coxeter group a window belongs to.
struct GroupDescriptor {
  Family family = Family::A;
  int n = 1;  // window size

  GroupDescriptor() = default;
  GroupDescriptor(Family f, int window_size) : family(f), n(window_size) {
    int min_n = (f == Family::D) ? 2 : 1;
    if (window_size < min_n || window_size > kMaxRank)
      throw InvalidArgument(std::string("window size out of range for type ") + family_letter(f) +
                            ": " + std::to_string(window_size));
  }

  /// Parses "A:4", "B:3", "D:5".
  static GroupDescriptor parse(std::string_view text) {
    text = detail::trim(text);
    if (text.size() < 3 || text[1] != ':')
      throw InvalidArgument("group descriptor must look like A:n, B:n or D:n, got '" +
                            std::string(text) + "'");
    Family f;
    switch (text[0]) {
      case 'A': f = Family::A; break;
      case 'B': f = Family::B; break;
      case 'D': f = Family::D; break;
      default: throw InvalidArgument("unknown family '" + std::string(1, text[0]) + "'");
    }
    return GroupDescriptor(f, static_cast<int>(detail::parse_integer(text.substr(2))));
  }

  std::string to_string() const { return std::string(1, family_letter(family)) + ":" + std::to_string(n); }

  /// Index of the lowest generator: 1 for type A, 0 otherwise.
  int first_generator() const { return family == Family::A ? 1 : 0; }
  int generator_count() const { return n - first_generator(); }

  /// Length of the longest element.
  std::int64_t max_length() const {
    switch (family) {
      case Family::A: return std::int64_t{n} * (n - 1) / 2;
      case Family::B: return std::int64_t{n} * n;
      case Family::D: return std::int64_t{n} * (n - 1);
    }
    return 0;
  }

  friend bool operator==(const GroupDescriptor&, const GroupDescriptor&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const GroupDescriptor& d) { return os << d.to_string(); }

/// A set of simple generators s_i, stored as a bitmask over i.
class GeneratorSet {
 public:
  constexpr GeneratorSet() = default;
  constexpr explicit GeneratorSet(std::uint32_t mask) : mask_(mask) {}
  GeneratorSet(std::initializer_list<int> indices) {
    for (int i : indices) insert(i);
  }

  /// {s_first, ..., s_last}; empty when last < first.
  static GeneratorSet range(int first, int last) {
    GeneratorSet s;
    for (int i = first; i <= last; ++i) s.insert(i);
    return s;
  }

  /// All generators of the group.
  static GeneratorSet all(const GroupDescriptor& d) { return range(d.first_generator(), d.n - 1); }

  /// Parses "{s1,s2}", "s1,s2", "{}" or "".
  static GeneratorSet parse(std::string_view text) {
    GeneratorSet s;
    for (int i : parse_list(text)) s.insert(i);
    return s;
  }

  /// Ordered variant of parse, keeping the order and rejecting repeats.
  static std::vector<int> parse_list(std::string_view text) {
    text = detail::trim(text);
    if (!text.empty() && text.front() == '{') {
      if (text.back() != '}') throw InvalidArgument("unbalanced generator set '" + std::string(text) + "'");
      text = text.substr(1, text.size() - 2);
    }
    std::vector<int> out;
    if (detail::trim(text).empty()) return out;
    for (auto item : detail::split(text, ',')) {
      item = detail::trim(item);
      if (item.size() < 2 || item.front() != 's')
        throw InvalidArgument("generator must look like s<i>, got '" + std::string(item) + "'");
      long long i = detail::parse_integer(item.substr(1));
      if (i < 0 || i >= 32) throw InvalidArgument("generator index out of range: " + std::string(item));
      if (std::find(out.begin(), out.end(), static_cast<int>(i)) != out.end())
        throw InvalidArgument("repeated generator " + std::string(item));
      out.push_back(static_cast<int>(i));
    }
    return out;
  }

  constexpr bool contains(int i) const { return i >= 0 && i < 32 && ((mask_ >> i) & 1U); }
  constexpr void insert(int i) {
    if (i < 0 || i >= 32) throw InvalidArgument("generator index out of range");
    mask_ |= (1U << i);
  }
  constexpr void erase(int i) { mask_ &= ~(1U << i); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr std::uint32_t mask() const { return mask_; }
  constexpr bool is_subset_of(GeneratorSet other) const { return (mask_ & ~other.mask_) == 0; }

  std::vector<int> indices() const {
    std::vector<int> out;
    for (int i = 0; i < 32; ++i)
      if (contains(i)) out.push_back(i);
    return out;
  }

  std::string to_string() const {
    std::string s = "{";
    bool first = true;
    for (int i : indices()) {
      if (!first) s += ",";
      s += "s" + std::to_string(i);
      first = false;
    }
    return s + "}";
  }

  friend constexpr GeneratorSet operator&(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.mask_ & b.mask_); }
  friend constexpr GeneratorSet operator|(GeneratorSet a, GeneratorSet b) { return GeneratorSet(a.mask_ | b.mask_); }
  friend constexpr bool operator==(GeneratorSet, GeneratorSet) = default;

 private:
  std::uint32_t mask_ = 0;
};

inline std::ostream& operator<<(std::ostream& os, GeneratorSet s) { return os << s.to_string(); }

/// An element of S_n, S_n^B or S_n^D, stored by its window (sigma(1), ..., sigma(n)).
class SignedPermutation {
 public:
  using Window = std::array<std::int8_t, kMaxRank>;

  SignedPermutation() : SignedPermutation(identity(GroupDescriptor{})) {}

  /// Validating constructor.
  SignedPermutation(const GroupDescriptor& d, std::span<const int> window) : descriptor_(d) {
    if (static_cast<int>(window.size()) != d.n)
      throw InvalidArgument("window of size " + std::to_string(window.size()) + " does not fit " + d.to_string());
    std::array<bool, kMaxRank + 1> seen{};
    int negatives = 0;
    for (int i = 0; i < d.n; ++i) {
      int v = window[static_cast<std::size_t>(i)];
      int a = std::abs(v);
      if (v == 0 || a > d.n || seen[static_cast<std::size_t>(a)])
        throw InvalidArgument("window entries must form a signed permutation of [" + std::to_string(d.n) + "]");
      seen[static_cast<std::size_t>(a)] = true;
      if (v < 0) ++negatives;
      window_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
    }
    if (d.family == Family::A && negatives > 0)
      throw InvalidArgument("type A windows carry no negative entries");
    if (d.family == Family::D && negatives % 2 != 0)
      throw InvalidArgument("type D windows carry an even number of negative entries");
  }

  SignedPermutation(const GroupDescriptor& d, std::initializer_list<int> window)
      : SignedPermutation(d, std::span<const int>(window.begin(), window.size())) {}

  static SignedPermutation identity(const GroupDescriptor& d) {
    SignedPermutation w(d, Unchecked{});
    for (int i = 0; i < d.n; ++i) w.window_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(i + 1);
    return w;
  }

  /// The longest element w_0.
  static SignedPermutation longest(const GroupDescriptor& d) {
    SignedPermutation w(d, Unchecked{});
    for (int i = 0; i < d.n; ++i) {
      int v = i + 1;
      switch (d.family) {
        case Family::A: v = d.n - i; break;
        case Family::B: v = -(i + 1); break;
        case Family::D: v = (i == 0 && d.n % 2 == 1) ? 1 : -(i + 1); break;
      }
      w.window_[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(v);
    }
    return w;
  }

  /// The simple generator s_i in window form.
  static SignedPermutation generator(const GroupDescriptor& d, int i) {
    if (i < d.first_generator() || i >= d.n)
      throw InvalidArgument("s" + std::to_string(i) + " is not a generator of " + d.to_string());
    return identity(d).times_generator(i);
  }

  /// Parses "-1,2,3" (parentheses allowed).
  static SignedPermutation parse(const GroupDescriptor& d, std::string_view text) {
    text = detail::trim(text);
    if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
    std::vector<int> values;
    for (auto item : detail::split(text, ',')) values.push_back(static_cast<int>(detail::parse_integer(item)));
    return SignedPermutation(d, values);
  }

  /// Builds an element from raw window values without validation. The caller
  /// guarantees the values form an element of d.
  static SignedPermutation from_trusted(const GroupDescriptor& d, std::span<const std::int8_t> values) {
    SignedPermutation w(d, Unchecked{});
    std::copy(values.begin(), values.end(), w.window_.begin());
    return w;
  }

  const GroupDescriptor& descriptor() const { return descriptor_; }
  int size() const { return descriptor_.n; }

  /// Window entry at 0-based position.
  int operator[](int pos) const { return window_[static_cast<std::size_t>(pos)]; }

  /// sigma(i) for i in [+-n].
  int operator()(int i) const {
    int v = window_[static_cast<std::size_t>(std::abs(i) - 1)];
    return i < 0 ? -v : v;
  }

  std::span<const std::int8_t> window() const { return {window_.data(), static_cast<std::size_t>(descriptor_.n)}; }

  std::vector<int> window_values() const { return {window().begin(), window().end()}; }

  bool is_identity() const {
    for (int i = 0; i < descriptor_.n; ++i)
      if (window_[static_cast<std::size_t>(i)] != i + 1) return false;
    return true;
  }

  /// Right multiplication w * s_i.
  SignedPermutation times_generator(int i) const {
    SignedPermutation w = *this;
    auto& win = w.window_;
    if (i >= 1) {
      std::swap(win[static_cast<std::size_t>(i - 1)], win[static_cast<std::size_t>(i)]);
    } else if (descriptor_.family == Family::B) {
      win[0] = static_cast<std::int8_t>(-win[0]);
    } else {
      auto a = win[0];
      win[0] = static_cast<std::int8_t>(-win[1]);
      win[1] = static_cast<std::int8_t>(-a);
    }
    return w;
  }

  /// Left multiplication s_i * w (acts on values).
  SignedPermutation generator_times(int i) const {
    SignedPermutation w = *this;
    for (int p = 0; p < descriptor_.n; ++p) {
      int v = w.window_[static_cast<std::size_t>(p)];
      int a = std::abs(v), sign = v < 0 ? -1 : 1;
      int image = a;
      if (i >= 1) {
        if (a == i) image = i + 1;
        else if (a == i + 1) image = i;
        image *= sign;
      } else if (descriptor_.family == Family::B) {
        image = (a == 1) ? -v : v;
      } else {
        if (a == 1) image = -2 * sign;
        else if (a == 2) image = -1 * sign;
        else image = v;
      }
      w.window_[static_cast<std::size_t>(p)] = static_cast<std::int8_t>(image);
    }
    return w;
  }

  std::string to_string() const {
    std::string s;
    for (int i = 0; i < descriptor_.n; ++i) {
      if (i) s += ",";
      s += std::to_string(static_cast<int>(window_[static_cast<std::size_t>(i)]));
    }
    return s;
  }

  friend bool operator==(const SignedPermutation& a, const SignedPermutation& b) {
    return a.descriptor_ == b.descriptor_ && std::equal(a.window().begin(), a.window().end(), b.window().begin());
  }

 private:
  struct Unchecked {};
  SignedPermutation(const GroupDescriptor& d, Unchecked) : descriptor_(d) {}

  GroupDescriptor descriptor_;
  Window window_{};
};

inline std::ostream& operator<<(std::ostream& os, const SignedPermutation& w) { return os << "(" << w.to_string() << ")"; }

/// (uv)(i) = u(v(i)).
inline SignedPermutation compose(const SignedPermutation& u, const SignedPermutation& v) {
  if (!(u.descriptor() == v.descriptor()))
    throw DescriptorMismatch("cannot compose elements of " + u.descriptor().to_string() + " and " +
                             v.descriptor().to_string());
  SignedPermutation::Window out{};
  for (int i = 0; i < u.size(); ++i) out[static_cast<std::size_t>(i)] = static_cast<std::int8_t>(u(v[i]));
  return SignedPermutation::from_trusted(u.descriptor(), {out.data(), static_cast<std::size_t>(u.size())});
}

inline SignedPermutation inverse(const SignedPermutation& w) {
  SignedPermutation::Window out{};
  for (int i = 0; i < w.size(); ++i) {
    int v = w[i];
    out[static_cast<std::size_t>(std::abs(v) - 1)] = static_cast<std::int8_t>(v < 0 ? -(i + 1) : i + 1);
  }
  return SignedPermutation::from_trusted(w.descriptor(), {out.data(), static_cast<std::size_t>(w.size())});
}

/// Number of pairs i < j with sigma(i) > sigma(j) (signed comparison).
inline std::int64_t inv_count(std::span<const std::int8_t> window) {
  std::int64_t count = 0;
  for (std::size_t i = 0; i < window.size(); ++i)
    for (std::size_t j = i + 1; j < window.size(); ++j)
      if (window[i] > window[j]) ++count;
  return count;
}
inline std::int64_t inv_count(const SignedPermutation& w) { return inv_count(w.window()); }

/// 1-based positions carrying negative entries.
inline std::vector<int> neg_set(const SignedPermutation& w) {
  std::vector<int> out;
  for (int i = 0; i < w.size(); ++i)
    if (w[i] < 0) out.push_back(i + 1);
  return out;
}

inline int neg_count(std::span<const std::int8_t> window) {
  return static_cast<int>(std::count_if(window.begin(), window.end(), [](std::int8_t v) { return v < 0; }));
}

/// Sum of the negative window entries (a non-positive number).
inline std::int64_t neg_sum(std::span<const std::int8_t> window) {
  std::int64_t s = 0;
  for (auto v : window)
    if (v < 0) s += v;
  return s;
}

/// Coxeter length: inv for A, inv - sum(neg) for B, inv - sum(neg) - |neg| for D.
inline std::int64_t length(const SignedPermutation& w) {
  auto win = w.window();
  switch (w.descriptor().family) {
    case Family::A: return inv_count(win);
    case Family::B: return inv_count(win) - neg_sum(win);
    case Family::D: return inv_count(win) - neg_sum(win) - neg_count(win);
  }
  return 0;
}

/// s_i is a right descent of w, decided from the window.
inline bool has_right_descent(const SignedPermutation& w, int i) {
  if (i >= 1) return w[i - 1] > w[i];
  switch (w.descriptor().family) {
    case Family::A: return false;
    case Family::B: return w[0] < 0;
    case Family::D: return w[0] + w[1] < 0;
  }
  return false;
}

inline GeneratorSet right_descent_set(const SignedPermutation& w) {
  GeneratorSet out;
  for (int i = w.descriptor().first_generator(); i < w.size(); ++i)
    if (has_right_descent(w, i)) out.insert(i);
  return out;
}

inline GeneratorSet left_descent_set(const SignedPermutation& w) { return right_descent_set(inverse(w)); }

inline void require_generators(const GroupDescriptor& d, GeneratorSet J) {
  if (!J.is_subset_of(GeneratorSet::all(d)))
    throw InvalidArgument(J.to_string() + " is not a set of generators of " + d.to_string());
}

/// For J a "prefix" of the Dynkin diagram, the classical group that W_J is
/// naturally isomorphic to, acting on the first positions of the window:
///   {s_1..s_k}                 -> A:(k+1)
///   {s_0..s_{k-1}} in type B   -> B:k
///   {s_0..s_{k-1}} in type D   -> D:k   (k >= 2)
/// Returns nullopt for every other J.
inline std::optional<GroupDescriptor> restriction_model(const GroupDescriptor& d, GeneratorSet J) {
  require_generators(d, J);
  if (J.empty()) return GroupDescriptor(Family::A, 1);
  if (!J.contains(0)) {
    int k = J.size();
    if (J == GeneratorSet::range(1, k)) return GroupDescriptor(Family::A, k + 1);
    return std::nullopt;
  }
  int k = J.size();
  if (J != GeneratorSet::range(0, k - 1)) return std::nullopt;
  if (d.family == Family::B) return GroupDescriptor(Family::B, k);
  if (d.family == Family::D && k >= 2) return GroupDescriptor(Family::D, k);
  return std::nullopt;
}

/// Restricts an element of W_J to the window of its restriction model.
inline SignedPermutation restrict_to_model(const SignedPermutation& w_parabolic, const GroupDescriptor& model) {
  for (int i = model.n; i < w_parabolic.size(); ++i)
    if (w_parabolic[i] != i + 1)
      throw InvalidArgument("element does not fix the positions beyond the model window");
  std::array<int, kMaxRank> vals{};
  for (int i = 0; i < model.n; ++i) vals[static_cast<std::size_t>(i)] = w_parabolic[i];
  return SignedPermutation(model, std::span<const int>(vals.data(), static_cast<std::size_t>(model.n)));
}

/// Inverse of restrict_to_model: pads the window with fixed points.
inline SignedPermutation embed_from_model(const SignedPermutation& u, const GroupDescriptor& d) {
  if (u.size() > d.n) throw InvalidArgument("model window is larger than the target group");
  std::array<int, kMaxRank> vals{};
  for (int i = 0; i < d.n; ++i) vals[static_cast<std::size_t>(i)] = i < u.size() ? u[i] : i + 1;
  return SignedPermutation(d, std::span<const int>(vals.data(), static_cast<std::size_t>(d.n)));
}

/// w = w^J w_J with w^J in W^J and w_J in W_J.
struct CosetFactorization {
  SignedPermutation w_quotient;   // w^J
  SignedPermutation w_parabolic;  // w_J as an n-window
  GeneratorSet subset_J;
  /// w_J in the window of restriction_model(J), when J has one.
  std::optional<SignedPermutation> w_parabolic_restricted;
};

namespace detail {

// Strips right descents lying in J until none is left; returns w^J.
inline SignedPermutation strip_right_descents(SignedPermutation u, GeneratorSet J) {
  const auto gens = J.indices();
  bool progress = true;
  while (progress) {
    progress = false;
    for (int s : gens) {
      if (has_right_descent(u, s)) {
        u = u.times_generator(s);
        progress = true;
      }
    }
  }
  return u;
}

// When s_0 is not in J, W_J permutes positions inside the blocks of
// consecutive generators; w^J is w with each block sorted increasingly.
inline SignedPermutation sort_blocks(const SignedPermutation& w, GeneratorSet J) {
  SignedPermutation::Window win{};
  std::copy(w.window().begin(), w.window().end(), win.begin());
  int n = w.size();
  int i = 1;
  while (i < n) {
    if (!J.contains(i)) {
      ++i;
      continue;
    }
    int start = i - 1;
    while (i < n && J.contains(i)) ++i;
    std::sort(win.begin() + start, win.begin() + i);
  }
  return SignedPermutation::from_trusted(w.descriptor(), {win.data(), static_cast<std::size_t>(n)});
}

}  // namespace detail

/// The minimal coset representative w^J of w W_J.
inline SignedPermutation parabolic_quotient(const SignedPermutation& w, GeneratorSet J) {
  if (J.contains(0)) return detail::strip_right_descents(w, J);
  return detail::sort_blocks(w, J);
}

inline CosetFactorization parabolic_decompose(const SignedPermutation& w, GeneratorSet J) {
  require_generators(w.descriptor(), J);
  SignedPermutation quotient = parabolic_quotient(w, J);
  SignedPermutation parabolic = compose(inverse(quotient), w);
  std::optional<SignedPermutation> restricted;
  if (auto model = restriction_model(w.descriptor(), J)) restricted = restrict_to_model(parabolic, *model);
  return {quotient, parabolic, J, restricted};
}

/// Right multiplication by a word of generators, left to right.
inline SignedPermutation from_word(const GroupDescriptor& d, std::span<const int> word) {
  auto w = SignedPermutation::identity(d);
  for (int s : word) {
    if (s < d.first_generator() || s >= d.n)
      throw InvalidArgument("s" + std::to_string(s) + " is not a generator of " + d.to_string());
    w = w.times_generator(s);
  }
  return w;
}

}  // namespace coxstat

template <>
struct std::hash<coxstat::SignedPermutation> {
  std::size_t operator()(const coxstat::SignedPermutation& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL ^ static_cast<std::uint64_t>(w.descriptor().family);
    for (auto v : w.window()) {
      h ^= static_cast<std::uint8_t>(v);
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
