#pragma once

// The `repro` report: every reproducible number, computed and compared with
// its published value.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include <json.hpp>

#include "coxstat/reproduction.hpp"

namespace coxstat::cli {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  nlohmann::json details;
};

namespace published {

inline const std::vector<std::size_t> kDiffLenMaj{1, 3, 5, 9, 15, 21, 29, 39, 49, 51, 63};  // ranks 1..11
inline const std::vector<std::size_t> kDiffLenFmaj{3, 7, 15, 25, 39, 55, 75};               // ranks 2..8
inline constexpr std::size_t kStatedDmajSumImageD4 = 3;

inline const std::vector<std::pair<std::string, std::int64_t>> kWorkedExample{
    {"1,4,2,3", 3}, {"2,1,4,3", 2}, {"4,1,2,3", 2}, {"2,4,1,3", 3}, {"4,2,1,3", 4},
    {"1,4,3,2", 4}, {"3,1,4,2", 3}, {"4,1,3,2", 3}, {"3,4,1,2", 4}, {"4,3,1,2", 5},
    {"2,4,3,1", 5}, {"3,2,4,1", 4}, {"4,2,3,1", 4}, {"3,4,2,1", 5}, {"4,3,2,1", 6}};

}  // namespace published

inline CriterionResult sequence_criterion(int id, std::string title, std::vector<repro::ImageRow> rows,
                                          const std::vector<std::size_t>& expected) {
  auto got = repro::sizes(rows);
  return {id, std::move(title), got == expected,
          {{"rows", repro::to_json(rows)}, {"image_sizes", got}, {"expected", expected}}};
}

inline std::vector<CriterionResult> run_report(const repro::Options& opt,
                                               const std::function<void(const CriterionResult&)>& progress = {}) {
  std::vector<CriterionResult> out;
  auto push = [&](CriterionResult r) {
    if (progress) progress(r);
    out.push_back(std::move(r));
  };
  const auto& fold = opt.fold;

  {
    int hi = opt.extended ? 11 : 9;
    std::vector<std::size_t> expected(published::kDiffLenMaj.begin(), published::kDiffLenMaj.begin() + hi);
    push(sequence_criterion(1, "|Im(l - maj)| on S_{n+1}",
                            repro::image_sequence(Family::A, 1, hi, ImageOp::diff, "len", "maj", fold), expected));
  }
  {
    auto rows = repro::image_sequence(Family::A, 1, 7, ImageOp::sum, "len", "maj", fold);
    std::vector<std::size_t> expected{2};
    for (std::size_t n = 2; n <= 7; ++n) expected.push_back(n * (n + 1) - 1);
    auto r = sequence_criterion(2, "|Im(l + maj)| on S_{n+1} and the witness families", rows, expected);
    auto witnesses = nlohmann::json::array();
    for (int n = 2; n <= 7; ++n) {
      auto wf = sum_image_witnesses(n);
      r.passed = r.passed && wf.all_claims_hold();
      auto claims = nlohmann::json::array();
      for (const auto& c : wf.claims) claims.push_back({{"claim", c.name}, {"holds", c.holds}});
      witnesses.push_back({{"n", n}, {"all_hold", wf.all_claims_hold()}, {"claims", claims}});
    }
    r.details["witnesses"] = witnesses;
    push(std::move(r));
  }
  {
    auto rows = repro::image_sequence(Family::B, 2, 5, ImageOp::sum, "len", "nmaj", fold);
    std::vector<std::size_t> expected{5};
    for (std::size_t n = 3; n <= 5; ++n) expected.push_back(2 * n * n - 1);
    auto r = sequence_criterion(3, "|Im(l_B + nmaj)| and Im(l_B - nmaj) = Im(l - maj)", rows, expected);
    auto eq = nlohmann::json::array();
    for (int n = 3; n <= 5; ++n) {
      auto e = repro::induced_diff_image(Family::B, "nmaj", n, fold);
      r.passed = r.passed && e.equal();
      eq.push_back({{"n", n}, {"equal", e.equal()}, {"image", e.lhs}});
    }
    r.details["diff_images"] = eq;
    push(std::move(r));
  }
  {
    int hi = opt.extended ? 8 : 7;
    std::vector<std::size_t> expected(published::kDiffLenFmaj.begin(), published::kDiffLenFmaj.begin() + (hi - 1));
    push(sequence_criterion(4, "|Im(l_B - fmaj)| on B_n",
                            repro::image_sequence(Family::B, 2, hi, ImageOp::diff, "len", "fmaj", fold), expected));
  }
  {
    auto b = ratio_sum_check(make_statistic("fmaj", {Family::B, 3}), length_statistic({Family::B, 3}), fold);
    auto d = ratio_sum_check(make_statistic("Dmaj", {Family::D, 4}), length_statistic({Family::D, 4}), fold);
    bool ok = to_string(b.lhs) == "22303/420" && to_string(b.rhs) == "14731/280" && !b.equal &&
              to_string(d.lhs) == "6451033/27720" && to_string(d.rhs) == "829573/3465" && !d.equal;
    push({5, "exact ratio sums", ok,
          {{"B:3 fmaj,len", {{"lhs", to_string(b.lhs)}, {"rhs", to_string(b.rhs)}, {"equal", b.equal}}},
           {"D:4 Dmaj,len", {{"lhs", to_string(d.lhs)}, {"rhs", to_string(d.rhs)}, {"equal", d.equal}}}}});
  }
  auto pairs = repro::symmetric_pair_checks(fold);
  {
    bool ok = true;
    auto details = nlohmann::json::array();
    for (const auto& p : pairs) {
      bool expect_symmetric = !(p.f == "fmaj" || p.f == "Dmaj");
      ok = ok && p.symmetric == expect_symmetric;
      details.push_back(repro::to_json(p));
    }
    push({6, "symmetric pairs", ok, details});
  }
  {
    bool ok = true;
    for (const auto& p : pairs) {
      ok = ok && p.equivalence_holds();
      if (p.f == "maj") ok = ok && p.involution_found && p.involution_valid;
    }
    auto lifts = nlohmann::json::array();
    for (const auto& l : repro::lift_checks()) {
      ok = ok && l.base_valid && l.lifted_valid && l.coset_form;
      lifts.push_back(repro::to_json(l));
    }
    push({7, "involutions and their lifts", ok, {{"lifts", lifts}}});
  }
  {
    auto ex = repro::worked_example();
    bool ok = ex.restricts_to_maj && ex.restricts_to_len && ex.in_length_class && ex.symmetric_with_len;
    auto values = nlohmann::json::object();
    for (const auto& [w, v] : published::kWorkedExample) {
      values[w] = ex.values.at(w);
      ok = ok && ex.values.at(w) == v;
    }
    push({8, "maj on S_3 induced to S_4", ok,
          {{"values", values},
           {"restricts_to_maj", ex.restricts_to_maj},
           {"restricts_to_len", ex.restricts_to_len},
           {"in_length_class", ex.in_length_class},
           {"symmetric_with_len", ex.symmetric_with_len}}});
  }
  {
    bool ok = true;
    auto details = nlohmann::json::array();
    for (const auto& c : repro::descent_checks()) {
      if (!c.informational) ok = ok && c.holds;
      details.push_back({{"check", c.label},
                         {"group", c.group},
                         {"classes", c.classes},
                         {"holds", c.holds},
                         {"informational", c.informational}});
    }
    push({9, "descent classes", ok, details});
  }
  {
    auto ex = repro::chain_example();
    push({10, "8-chain with f = (0,3,1,6,5,4,2,7)", ex.in_rank_class && ex.ratio.equal && !ex.symmetric,
          {{"in_rank_class", ex.in_rank_class},
           {"ratio_lhs", to_string(ex.ratio.lhs)},
           {"ratio_rhs", to_string(ex.ratio.rhs)},
           {"symmetric", ex.symmetric}}});
  }
  {
    const std::vector<std::uint64_t> orders{10, 120, 1152, 51840};
    auto checks = repro::generic_checks(fold);
    bool ok = checks.size() == orders.size();
    auto details = nlohmann::json::array();
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      ok = ok && c.order == orders[i] && c.reciprocal && c.lengths_additive;
      for (const auto& ind : c.inductions) ok = ok && ind.equidistributed && ind.in_length_class && ind.image_identity;
      details.push_back(repro::to_json(c));
    }
    push({11, "generic engine: I2(5), H3, F4, E6", ok, details});
  }
  {
    auto r = repro::dmaj_sum_image_recount(4);
    push({12, "|Im(l_D + dmaj)| on D_4", r.library == r.recount,
          {{"brute_force", r.library},
           {"recount", r.recount},
           {"stated_value", published::kStatedDmajSumImageD4},
           {"formula_2n(n-1)-1", r.formula}}});
  }
  {
    std::vector<std::string> prints;
    auto details = nlohmann::json::object();
    for (unsigned t : {1U, 2U, 4U, 8U}) {
      prints.push_back(repro::sequences_fingerprint({t}));
      details[std::to_string(t)] = std::to_string(std::hash<std::string>{}(prints.back()));
    }
    bool ok = std::all_of(prints.begin(), prints.end(), [&](const auto& p) { return p == prints.front(); });
    push({13, "bit-identical sequences at 1, 2, 4, 8 workers", ok, {{"fingerprints", details}}});
  }
  return out;
}

inline nlohmann::json to_json(const std::vector<CriterionResult>& results, bool extended) {
  auto list = nlohmann::json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.passed;
    list.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed}, {"details", r.details}});
  }
  return {{"extended", extended}, {"all_passed", all}, {"criteria", list}};
}

}  // namespace coxstat::cli
