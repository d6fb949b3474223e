#pragma once

// The computations behind each reproducible artifact, returned as plain data
// so that callers (the `repro` command, tests) can compare them with their own
// reference values.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxstat/analysis.hpp"
#include "coxstat/bigcox.hpp"
#include "coxstat/enumerate.hpp"
#include "coxstat/posets.hpp"
#include "coxstat/reflection_oracle.hpp"
#include "coxstat/statistics.hpp"
#include "coxstat/witnesses.hpp"

namespace coxstat::repro {

/// Coxeter rank r to the classical group: A_r = S_{r+1}, B_r, D_r.
inline GroupDescriptor descriptor_for_rank(Family family, int r) {
  return family == Family::A ? GroupDescriptor(Family::A, r + 1) : GroupDescriptor(family, r);
}

struct ImageRow {
  int rank = 0;
  std::string group;
  std::size_t image_size = 0;
  std::int64_t k = 0;
  std::vector<std::int64_t> image;
};

inline ImageRow image_row(Family family, int r, ImageOp op, std::string_view f, std::string_view g,
                          const FoldOptions& options = {}) {
  auto d = descriptor_for_rank(family, r);
  auto a = analyze_images(make_statistic(f, d), make_statistic(g, d), op, options);
  return {r, d.to_string(), a.image.size(), a.k(), a.image};
}

inline std::vector<ImageRow> image_sequence(Family family, int lo, int hi, ImageOp op, std::string_view f,
                                            std::string_view g, const FoldOptions& options = {}) {
  std::vector<ImageRow> rows;
  for (int r = lo; r <= hi; ++r) rows.push_back(image_row(family, r, op, f, g, options));
  return rows;
}

inline std::vector<std::size_t> sizes(const std::vector<ImageRow>& rows) {
  std::vector<std::size_t> out;
  for (const auto& r : rows) out.push_back(r.image_size);
  return out;
}

inline nlohmann::json to_json(const std::vector<ImageRow>& rows) {
  auto out = nlohmann::json::array();
  for (const auto& r : rows)
    out.push_back({{"rank", r.rank}, {"group", r.group}, {"image_size", r.image_size}, {"k", r.k}});
  return out;
}

// ---------------------------------------------------------------------------

struct ImageEquality {
  int n = 0;
  std::vector<std::int64_t> lhs;  // Im(l_B - nmaj) on B:n
  std::vector<std::int64_t> rhs;  // Im(l - maj) on S_n
  bool equal() const { return lhs == rhs; }
};

/// Im(l_X - h) on X:n against Im(l - maj) on S_n.
inline ImageEquality induced_diff_image(Family family, std::string_view h, int n, const FoldOptions& options = {}) {
  GroupDescriptor d(family, n), a(Family::A, n);
  return {n, diff_image(length_statistic(d), make_statistic(h, d), options),
          diff_image(length_statistic(a), make_statistic("maj", a), options)};
}

// ---------------------------------------------------------------------------

struct PairCheck {
  std::string group;
  std::string f;
  std::string g;
  bool symmetric = false;
  bool involution_found = false;  // build_involution succeeded
  bool involution_valid = false;  // and f = g o iota pointwise
  RatioCheck ratio;

  bool equivalence_holds() const { return symmetric == (involution_found && involution_valid); }
};

inline PairCheck check_pair(const GroupDescriptor& d, std::string_view f, std::string_view g,
                            const FoldOptions& options = {}) {
  PairCheck c{d.to_string(), std::string(f), std::string(g), false, false, false, {}};
  auto fs = make_statistic(f, d, Validation::off), gs = make_statistic(g, d, Validation::off);
  auto ft = tabulate(fs), gt = tabulate(gs);
  c.symmetric = is_symmetric_pair(fs, gs, options);
  c.ratio = ratio_sum_check(ft, gt);
  try {
    auto iota = build_involution(ft, gt);
    c.involution_found = true;
    c.involution_valid = satisfies(iota, ft, gt);
  } catch (const NotSymmetric&) {
  }
  return c;
}

/// The pairs whose symmetry is settled one way or the other.
inline std::vector<PairCheck> symmetric_pair_checks(const FoldOptions& options = {}) {
  std::vector<PairCheck> out;
  for (int n = 1; n <= 6; ++n) out.push_back(check_pair({Family::A, n}, "maj", "len", options));
  for (int n = 1; n <= 4; ++n) out.push_back(check_pair({Family::B, n}, "nmaj", "len", options));
  for (int n = 4; n <= 5; ++n) out.push_back(check_pair({Family::D, n}, "dmaj", "len", options));
  out.push_back(check_pair({Family::B, 3}, "fmaj", "len", options));
  out.push_back(check_pair({Family::D, 4}, "Dmaj", "len", options));
  return out;
}

inline nlohmann::json to_json(const PairCheck& c) {
  return {{"group", c.group},
          {"f", c.f},
          {"g", c.g},
          {"symmetric", c.symmetric},
          {"involution_found", c.involution_found},
          {"involution_valid", c.involution_valid},
          {"ratio_lhs", to_string(c.ratio.lhs)},
          {"ratio_rhs", to_string(c.ratio.rhs)}};
}

// ---------------------------------------------------------------------------

struct LiftCheck {
  std::string group;
  std::string statistic;
  bool base_valid = false;        // maj = l o iota on W_J
  bool lifted_valid = false;      // h = l o iota~ on W
  bool coset_form = false;        // iota~(w) = w^J iota(w_J)
};

/// Lifts the maj/len involution of W_J = S_n (J = {s_1..s_{n-1}}) to B:n or D:n.
inline LiftCheck lift_check(const GroupDescriptor& d, std::string_view h) {
  GeneratorSet J = GeneratorSet::range(1, d.n - 1);
  auto cd = coxeter_good_decomposition(d, J);
  GroupDescriptor model(Family::A, d.n);
  auto g = cd.tabulate_b(make_statistic("maj", model));
  auto rho_b = cd.decomposition.factor_b().ranks();
  auto iota = build_involution(g, rho_b);
  auto lifted = lift_involution(iota, cd.decomposition);
  auto ht = cd.tabulate(make_statistic(h, d));
  auto lt = cd.tabulate(length_statistic(d));
  LiftCheck c{d.to_string(), std::string(h), satisfies(iota, g, rho_b), satisfies(lifted, ht, lt), true};
  for (std::size_t x = 0; x < cd.elements.size(); ++x) {
    auto [a, b] = cd.decomposition.to_pair(x);
    auto expected = compose(cd.quotient_elements[a], cd.parabolic_elements[iota(b)]);
    if (!(cd.elements[lifted(x)] == expected)) {
      c.coset_form = false;
      break;
    }
  }
  return c;
}

inline std::vector<LiftCheck> lift_checks() {
  std::vector<LiftCheck> out;
  for (int n = 2; n <= 4; ++n) out.push_back(lift_check({Family::B, n}, "nmaj"));
  for (int n = 4; n <= 5; ++n) out.push_back(lift_check({Family::D, n}, "dmaj"));
  return out;
}

inline nlohmann::json to_json(const LiftCheck& c) {
  return {{"group", c.group},
          {"statistic", c.statistic},
          {"base_valid", c.base_valid},
          {"lifted_valid", c.lifted_valid},
          {"coset_form", c.coset_form}};
}

// ---------------------------------------------------------------------------

/// maj on S_3 induced to S_4 through J = {s_1, s_2}.
struct WorkedExample {
  std::map<std::string, std::int64_t> values;  // window text -> f
  bool restricts_to_maj = false;               // f = maj on W_J
  bool restricts_to_len = false;               // f = l on W^J
  bool in_length_class = false;
  bool symmetric_with_len = false;
};

inline WorkedExample worked_example() {
  GroupDescriptor d(Family::A, 4), model(Family::A, 3);
  GeneratorSet J = GeneratorSet::parse("{s1,s2}");
  auto f = induce(make_statistic("maj", model), d, J).statistic;
  WorkedExample ex;
  ex.restricts_to_maj = true;
  ex.restricts_to_len = true;
  for_each_element(d, [&](const SignedPermutation& w) {
    auto v = f(w);
    ex.values[w.to_string()] = v;
    if (w[3] == 4 && v != maj(w)) ex.restricts_to_maj = false;
    if ((right_descent_set(w) & J).empty() && v != length(w)) ex.restricts_to_len = false;
  });
  ex.in_length_class = in_same_class(f, length_statistic(d));
  ex.symmetric_with_len = is_symmetric_pair(f, length_statistic(d));
  return ex;
}

// ---------------------------------------------------------------------------

struct DescentCheck {
  std::string label;
  std::string group;
  std::size_t classes = 0;
  bool holds = false;
  bool informational = false;  // a variant reported alongside, not a stated claim
};

inline std::vector<DescentCheck> descent_checks() {
  std::vector<DescentCheck> out;
  for (int n = 1; n <= 6; ++n) {
    GroupDescriptor d(Family::A, n);
    auto len = length_statistic(d), imaj = make_statistic("majstar", d), mj = make_statistic("maj", d);
    auto parts = descent_class_partition(d, DescentMode::a_descents);
    bool ok = true;
    for (const auto& c : parts) ok = ok && distribution_on(len, c.elements) == distribution_on(imaj, c.elements);
    out.push_back({"l ~ majstar on every D_I", d.to_string(), parts.size(), ok, false});
    out.push_back({"joint(l, maj) = joint(majstar, maj)", d.to_string(), 0,
                   joint_distribution(len, mj) == joint_distribution(imaj, mj)});
  }
  for (int n = 1; n <= 4; ++n) {
    GroupDescriptor d(Family::B, n);
    auto len = length_statistic(d), inmaj = make_statistic("nmajstar", d), fm = make_statistic("fmaj", d);
    auto parts = descent_class_partition(d, DescentMode::b_descents_and_negs);
    bool ok = true;
    for (const auto& c : parts) ok = ok && distribution_on(len, c.elements) == distribution_on(inmaj, c.elements);
    out.push_back({"l_B ~ nmajstar on every D_{I,K}", d.to_string(), parts.size(), ok});
    auto by_position = descent_class_partition(d, DescentMode::b_descents_and_neg_positions);
    bool pos_ok = true;
    for (const auto& c : by_position)
      pos_ok = pos_ok && distribution_on(len, c.elements) == distribution_on(inmaj, c.elements);
    out.push_back({"l_B ~ nmajstar on every class with K = neg(w)", d.to_string(), by_position.size(), pos_ok, true});
    out.push_back({"joint(l_B, fmaj) = joint(nmajstar, fmaj)", d.to_string(), 0,
                   joint_distribution(len, fm) == joint_distribution(inmaj, fm)});
  }
  return out;
}

// ---------------------------------------------------------------------------

struct ChainExample {
  PosetFunction f{0, 3, 1, 6, 5, 4, 2, 7};
  bool in_rank_class = false;
  RatioCheck ratio;
  bool symmetric = false;
};

inline ChainExample chain_example() {
  ChainExample ex;
  auto chain = chain_poset(8);
  ex.in_rank_class = in_same_class(ex.f, chain.ranks(), chain);
  ex.ratio = ratio_sum_check(ex.f, chain.ranks());
  ex.symmetric = is_symmetric_pair(ex.f, chain.ranks());
  return ex;
}

// ---------------------------------------------------------------------------

struct GenericInduction {
  std::string statistic;
  std::string model;
  bool equidistributed = false;
  bool in_length_class = false;
  bool image_identity = false;  // Im(l_W - f) = Im(l_J - g)
};

struct GenericCheck {
  std::string preset;
  std::uint64_t order = 0;
  std::int64_t longest_length = 0;
  bool reciprocal = false;
  bool lengths_additive = false;  // l(w) = l(w^J) + l(w_J) for every listed J
  std::vector<GenericInduction> inductions;
};

inline GenericInduction generic_induction(const CoxeterGroup& group, std::string_view name,
                                          const FoldOptions& options = {}) {
  auto f = make_generic_statistic(group, name, Validation::on, options);
  auto lengths = group.lengths();
  GenericInduction out{std::string(name), "", false, false, false};
  out.equidistributed = distribution(f) == distribution(lengths);
  out.in_length_class = in_same_class(f, lengths, group.identity(), group.longest());
  // Recover the base statistic on its model for the image identity.
  auto last = name.rfind(':');
  auto middle = name.rfind(':', last - 1);
  std::vector<int> J;
  for (int s : GeneratorSet::parse_list(name.substr(middle + 1, last - middle - 1))) J.push_back(s - 1);
  auto pm = find_parabolic_model(group.matrix(), J);
  out.model = pm->model.to_string();
  auto g = make_statistic(name.substr(8, middle - 8), pm->model);
  out.image_identity = diff_image(lengths, f) == diff_image(length_statistic(pm->model), g, options);
  return out;
}

inline GenericCheck generic_check(std::string_view preset, const std::vector<std::string>& inductions,
                                  const FoldOptions& options = {}) {
  auto group = CoxeterGroup::enumerate(CoxeterMatrix::preset(preset));
  GenericCheck c{std::string(preset), group.size(), group.length(group.longest()),
                 is_reciprocal(group.poincare_polynomial()), true, {}};
  for (const auto& name : inductions) {
    c.inductions.push_back(generic_induction(group, name, options));
    auto last = name.rfind(':');
    auto middle = name.rfind(':', last - 1);
    std::vector<int> J;
    for (int s : GeneratorSet::parse_list(std::string_view(name).substr(middle + 1, last - middle - 1)))
      J.push_back(s - 1);
    for (std::uint32_t w = 0; w < group.size(); ++w) {
      auto f = group.parabolic_decompose(w, J);
      if (group.length(w) != group.length(f.w_quotient) + group.length(f.w_parabolic)) c.lengths_additive = false;
    }
  }
  return c;
}

inline std::vector<GenericCheck> generic_checks(const FoldOptions& options = {}) {
  return {generic_check("I2:5", {"induced:len:{s1}:right"}, options),
          generic_check("H3", {"induced:maj:{s1,s2}:right", "induced:maj:{s1,s2}:left"}, options),
          generic_check("F4", {"induced:fmaj:{s2,s3,s4}:right", "induced:maj:{s1,s2}:right"}, options),
          generic_check("E6", {"induced:maj:{s1,s3,s4,s5}:right", "induced:dmaj:{s2,s3,s4,s5}:right"}, options)};
}

inline nlohmann::json to_json(const GenericCheck& c) {
  auto inds = nlohmann::json::array();
  for (const auto& i : c.inductions)
    inds.push_back({{"statistic", i.statistic},
                    {"model", i.model},
                    {"equidistributed", i.equidistributed},
                    {"in_length_class", i.in_length_class},
                    {"image_identity", i.image_identity}});
  return {{"group", c.preset},
          {"order", c.order},
          {"longest_length", c.longest_length},
          {"poincare_reciprocal", c.reciprocal},
          {"lengths_additive", c.lengths_additive},
          {"inductions", inds}};
}

// ---------------------------------------------------------------------------

/// |Im(l_D + dmaj)| on D:n twice: through the library statistics, and through
/// BFS word lengths and a direct reading of the definition of dmaj.
struct ImageRecount {
  std::size_t library = 0;
  std::size_t recount = 0;
  std::int64_t formula = 0;  // 2n(n-1) - 1
};

inline ImageRecount dmaj_sum_image_recount(int n) {
  GroupDescriptor d(Family::D, n);
  ImageRecount r;
  r.library = sum_image(length_statistic(d), make_statistic("dmaj", d)).size();
  ReflectionOracle oracle(d);
  std::set<std::int64_t> values;
  for (const auto& w : oracle.elements()) {
    std::int64_t m = 0, negs = 0;
    for (int i = 0; i < n; ++i) {
      if (i + 1 < n && w[i] > w[i + 1]) m += i + 1;
      if (w[i] < 0) negs += -w[i] - 1;
    }
    values.insert(oracle.word_length(w) + m + negs);
  }
  r.recount = values.size();
  r.formula = 2LL * n * (n - 1) - 1;
  return r;
}

// ---------------------------------------------------------------------------

struct Options {
  bool extended = false;
  FoldOptions fold{};
};

/// Bundles criteria 1 to 4 into one canonical text for byte comparison.
inline std::string sequences_fingerprint(const FoldOptions& fold) {
  nlohmann::json j;
  j["A_diff"] = to_json(image_sequence(Family::A, 1, 9, ImageOp::diff, "len", "maj", fold));
  j["A_sum"] = to_json(image_sequence(Family::A, 1, 7, ImageOp::sum, "len", "maj", fold));
  j["B_sum_nmaj"] = to_json(image_sequence(Family::B, 2, 5, ImageOp::sum, "len", "nmaj", fold));
  j["B_diff_fmaj"] = to_json(image_sequence(Family::B, 2, 7, ImageOp::diff, "len", "fmaj", fold));
  return j.dump();
}

}  // namespace coxstat::repro
