#pragma once

// Integer statistics on the classical groups and the parabolic induction
// operator f(w) = l(w^J) + g(w_J).

#include <cstdint>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "coxstat/enumerate.hpp"
#include "coxstat/error.hpp"
#include "coxstat/signed_permutation.hpp"

namespace coxstat {

/// Sum of the descent positions i (1-based) with window[i] > window[i+1],
/// comparing signed values.
inline std::int64_t maj(std::span<const std::int8_t> window) {
  std::int64_t s = 0;
  for (std::size_t i = 0; i + 1 < window.size(); ++i)
    if (window[i] > window[i + 1]) s += static_cast<std::int64_t>(i + 1);
  return s;
}
inline std::int64_t maj(const SignedPermutation& w) { return maj(w.window()); }

namespace detail {
inline void require_family(const SignedPermutation& w, Family f, const char* stat) {
  if (w.descriptor().family != f)
    throw WrongFamily(std::string(stat) + " is defined on type " + family_letter(f) + " only, got " +
                      w.descriptor().to_string());
}
}  // namespace detail

/// Negative major index: maj - sum of negative entries.
inline std::int64_t nmaj(const SignedPermutation& w) {
  detail::require_family(w, Family::B, "nmaj");
  return maj(w.window()) - neg_sum(w.window());
}

/// Flag-major index: 2 maj + |neg|.
inline std::int64_t fmaj(std::span<const std::int8_t> window) { return 2 * maj(window) + neg_count(window); }
inline std::int64_t fmaj(const SignedPermutation& w) {
  detail::require_family(w, Family::B, "fmaj");
  return fmaj(w.window());
}

/// D-negative major index: maj - sum of negative entries - |neg|.
inline std::int64_t dmaj(const SignedPermutation& w) {
  detail::require_family(w, Family::D, "dmaj");
  auto win = w.window();
  return maj(win) - neg_sum(win) - neg_count(win);
}

/// D-major index: fmaj of the window with its last entry made positive.
inline std::int64_t Dmaj(const SignedPermutation& w) {
  detail::require_family(w, Family::D, "Dmaj");
  SignedPermutation::Window win{};
  auto src = w.window();
  std::copy(src.begin(), src.end(), win.begin());
  auto& last = win[src.size() - 1];
  if (last < 0) last = static_cast<std::int8_t>(-last);
  return fmaj(std::span<const std::int8_t>(win.data(), src.size()));
}

/// A named integer function on one classical group. Immutable and safe to
/// call from many threads.
class Statistic {
 public:
  using Evaluator = std::function<std::int64_t(const SignedPermutation&)>;

  Statistic(std::string name, GroupDescriptor universe, Evaluator eval)
      : name_(std::move(name)), universe_(universe), eval_(std::make_shared<const Evaluator>(std::move(eval))) {}

  const std::string& name() const { return name_; }
  const GroupDescriptor& universe() const { return universe_; }

  std::int64_t operator()(const SignedPermutation& w) const { return (*eval_)(w); }

 private:
  std::string name_;
  GroupDescriptor universe_;
  std::shared_ptr<const Evaluator> eval_;
};

inline Statistic length_statistic(const GroupDescriptor& d) {
  return Statistic("len", d, [](const SignedPermutation& w) { return length(w); });
}

/// f*(w) = f(w^-1).
inline Statistic star(const Statistic& f) {
  std::string name = f.name();
  if (name.size() > 4 && name.ends_with("star")) name.resize(name.size() - 4);
  else name += "star";
  return Statistic(std::move(name), f.universe(), [f](const SignedPermutation& w) { return f(inverse(w)); });
}

/// Elements of the parabolic subgroup W_J as n-windows, breadth-first from e.
inline std::vector<SignedPermutation> parabolic_elements(const GroupDescriptor& d, GeneratorSet J,
                                                         std::uint64_t cap = 50'000'000) {
  require_generators(d, J);
  const auto gens = J.indices();
  std::vector<SignedPermutation> out{SignedPermutation::identity(d)};
  std::unordered_set<SignedPermutation> seen{out.front()};
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int s : gens) {
      auto next = out[head].times_generator(s);
      if (seen.insert(next).second) {
        if (out.size() >= cap) throw CapExceeded("parabolic subgroup exceeds the enumeration cap");
        out.push_back(next);
      }
    }
  }
  return out;
}

/// The longest element of W_J (w_0 of the parabolic subgroup).
inline SignedPermutation parabolic_longest(const GroupDescriptor& d, GeneratorSet J) {
  auto w = SignedPermutation::identity(d);
  bool grew = true;
  while (grew) {
    grew = false;
    for (int s : J.indices()) {
      if (!has_right_descent(w, s)) {
        w = w.times_generator(s);
        grew = true;
      }
    }
  }
  return w;
}

/// Result of checking g in [l] on a finite set of elements.
struct ClassCheck {
  bool equidistributed = false;
  bool bottom_matches = false;
  bool top_matches = false;
  bool passed() const { return equidistributed && bottom_matches && top_matches; }
};

/// Checks g ~ l on the listed elements of a parabolic subgroup whose minimum
/// is `bottom` and maximum is `top`.
template <class Elements>
ClassCheck check_length_class(const Statistic& g, const Elements& elements, const SignedPermutation& bottom,
                              const SignedPermutation& top) {
  std::map<std::int64_t, std::int64_t> balance;
  for (const auto& w : elements) {
    ++balance[g(w)];
    --balance[length(w)];
  }
  ClassCheck c;
  c.equidistributed = std::all_of(balance.begin(), balance.end(), [](const auto& kv) { return kv.second == 0; });
  c.bottom_matches = g(bottom) == length(bottom);
  c.top_matches = g(top) == length(top);
  return c;
}

/// g in [l] on its whole universe, by full enumeration.
inline ClassCheck check_length_class(const Statistic& g) {
  const auto& d = g.universe();
  return check_length_class(g, all_elements(d), SignedPermutation::identity(d), SignedPermutation::longest(d));
}

enum class Side { right, left };

inline std::string to_string(Side s) { return s == Side::right ? "right" : "left"; }
inline Side parse_side(std::string_view text) {
  if (text == "right") return Side::right;
  if (text == "left") return Side::left;
  throw InvalidArgument("side must be 'right' or 'left', got '" + std::string(text) + "'");
}

enum class Validation { on, off };

namespace detail {

// w -> l(w^J) + g(w_J), with g read either on the restriction model of J or
// on W_J as n-windows.
inline Statistic::Evaluator right_induced_evaluator(const Statistic& g, const GroupDescriptor& d, GeneratorSet J) {
  auto model = restriction_model(d, J);
  if (model && g.universe() == *model) {
    GroupDescriptor m = *model;
    return [g, J, m](const SignedPermutation& w) {
      auto quotient = parabolic_quotient(w, J);
      auto parabolic = compose(inverse(quotient), w);
      return length(quotient) + g(SignedPermutation::from_trusted(m, parabolic.window().first(static_cast<std::size_t>(m.n))));
    };
  }
  if (g.universe() == d) {
    return [g, J](const SignedPermutation& w) {
      auto quotient = parabolic_quotient(w, J);
      return length(quotient) + g(compose(inverse(quotient), w));
    };
  }
  throw DescriptorMismatch("base statistic '" + g.name() + "' lives on " + g.universe().to_string() +
                           ", which is neither " + d.to_string() + " nor the parabolic model of " + J.to_string());
}

}  // namespace detail

/// A statistic f on W induced from g on W_J.
struct InducedStatistic {
  Statistic base;
  GeneratorSet subset_J;
  Side side;
  Statistic statistic;

  std::int64_t operator()(const SignedPermutation& w) const { return statistic(w); }
};

/// Checks g in [l_J] by enumerating W_J (or its restriction model).
inline ClassCheck check_parabolic_base(const Statistic& g, const GroupDescriptor& d, GeneratorSet J) {
  auto model = restriction_model(d, J);
  if (model && g.universe() == *model) return check_length_class(g);
  if (g.universe() == d)
    return check_length_class(g, parabolic_elements(d, J), SignedPermutation::identity(d), parabolic_longest(d, J));
  throw DescriptorMismatch("base statistic '" + g.name() + "' cannot be evaluated on W_J for J = " + J.to_string());
}

/// Right: f(w) = l(w^J) + g(w_J). Left: the mirror image through the set ^J W,
/// computed as star(induce(star(g), J, right)).
inline InducedStatistic induce(const Statistic& g, const GroupDescriptor& d, GeneratorSet J, Side side = Side::right,
                               Validation validation = Validation::on) {
  require_generators(d, J);
  if (validation == Validation::on && !check_parabolic_base(g, d, J).passed())
    throw NotInLengthClass("'" + g.name() + "' is not in the class of the length on W_J, J = " + J.to_string());
  std::string name = "induced:" + g.name() + ":" + J.to_string() + ":" + to_string(side);
  if (side == Side::right) return {g, J, side, Statistic(name, d, detail::right_induced_evaluator(g, d, J))};
  Statistic right(name, d, detail::right_induced_evaluator(star(g), d, J));
  return {g, J, side, Statistic(name, d, [right](const SignedPermutation& w) { return right(inverse(w)); })};
}

/// Builds a statistic from its registry name:
///   len, inv, maj, majstar, nmaj, nmajstar, fmaj, dmaj, Dmaj, <name>star,
///   induced:<base>:<J>:<side>   (base evaluated on the restriction model of J,
///                                or on W itself when J has none)
inline Statistic make_statistic(std::string_view name, const GroupDescriptor& d,
                                Validation validation = Validation::on) {
  name = detail::trim(name);
  if (name.starts_with("induced:")) {
    auto last = name.rfind(':');
    auto middle = name.rfind(':', last - 1);
    if (last == std::string_view::npos || middle == std::string_view::npos || middle <= 8)
      throw InvalidArgument("induced statistic must be induced:<base>:<J>:<side>, got '" + std::string(name) + "'");
    auto base_name = name.substr(8, middle - 8);
    auto J = GeneratorSet::parse(name.substr(middle + 1, last - middle - 1));
    auto side = parse_side(name.substr(last + 1));
    require_generators(d, J);
    auto model = restriction_model(d, J);
    Statistic base = make_statistic(base_name, model.value_or(d), validation);
    return induce(base, d, J, side, validation).statistic;
  }
  auto check = [&](Family f) {
    if (d.family != f)
      throw WrongFamily(std::string(name) + " is defined on type " + family_letter(f) + " only, got " + d.to_string());
  };
  if (name == "len") return length_statistic(d);
  if (name == "inv") return Statistic("inv", d, [](const SignedPermutation& w) { return inv_count(w); });
  if (name == "maj") return Statistic("maj", d, [](const SignedPermutation& w) { return maj(w); });
  if (name == "nmaj") {
    check(Family::B);
    return Statistic("nmaj", d, [](const SignedPermutation& w) { return nmaj(w); });
  }
  if (name == "fmaj") {
    check(Family::B);
    return Statistic("fmaj", d, [](const SignedPermutation& w) { return fmaj(w); });
  }
  if (name == "dmaj") {
    check(Family::D);
    return Statistic("dmaj", d, [](const SignedPermutation& w) { return dmaj(w); });
  }
  if (name == "Dmaj") {
    check(Family::D);
    return Statistic("Dmaj", d, [](const SignedPermutation& w) { return Dmaj(w); });
  }
  if (name.size() > 4 && name.ends_with("star")) return star(make_statistic(name.substr(0, name.size() - 4), d, validation));
  throw InvalidArgument("unknown statistic '" + std::string(name) + "'");
}

}  // namespace coxstat
