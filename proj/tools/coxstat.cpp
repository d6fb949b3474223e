// coxstat: distributions, image tables and checks for statistics on Coxeter
// groups.
//
//   coxstat dist   --group A:3 --stat maj [--check-against len]
//   coxstat image  --group A --op diff --stats len,maj --ranks 1..8
//   coxstat verify symmetric --group B:3 --stats nmaj,len
//   coxstat repro  [--extended] [--out report.json]

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "coxstat/analysis.hpp"
#include "coxstat/bigcox.hpp"
#include "coxstat/posets.hpp"
#include "coxstat/reproduction.hpp"
#include "coxstat/witnesses.hpp"
#include "report.hpp"

namespace {

using namespace coxstat;

struct RunConfig {
  std::string group;
  std::string stat;
  std::string stats;
  std::string check_against;
  std::string op = "diff";
  std::string ranks;
  std::string format = "text";
  std::string out;
  std::string check;
  std::string expect = "equal";
  std::string poset;
  std::string values;
  unsigned threads = 0;
  std::uint64_t cap = 0;  // 0: engine default

  std::uint64_t classical_cap() const { return cap ? cap : 500'000'000; }
  std::uint64_t generic_cap() const { return cap ? cap : CoxeterGroup::kDefaultCap; }
  int n = 0;
  bool extended = false;

  FoldOptions fold() const { return threads == 0 ? FoldOptions{} : FoldOptions{threads}; }
};

/// Writes to --out when given, stdout otherwise.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw InvalidArgument("cannot open '" + path + "' for writing");
    }
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

bool is_classical(const std::string& text) {
  try {
    GroupDescriptor::parse(text);
    return true;
  } catch (const Error&) {
    return false;
  }
}

std::vector<std::string> split_names(const std::string& text, std::size_t expected) {
  // Commas inside {...} belong to generator sets.
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : text) {
    if (c == '{') ++depth;
    if (c == '}') --depth;
    if (c == ',' && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  if (expected && out.size() != expected)
    throw InvalidArgument("expected " + std::to_string(expected) + " statistic names in '" + text + "'");
  return out;
}

std::pair<int, int> parse_ranks(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) {
    int r = static_cast<int>(detail::parse_integer(text));
    return {r, r};
  }
  int lo = static_cast<int>(detail::parse_integer(text.substr(0, dots)));
  int hi = static_cast<int>(detail::parse_integer(text.substr(dots + 2)));
  if (lo > hi) throw InvalidArgument("empty rank range '" + text + "'");
  return {lo, hi};
}

Family parse_family(const std::string& text) {
  if (text == "A") return Family::A;
  if (text == "B") return Family::B;
  if (text == "D") return Family::D;
  throw InvalidArgument("--group must be A, B or D for image tables, got '" + text + "'");
}

void check_cap(const GroupDescriptor& d, std::uint64_t cap) {
  if (group_order(d) > BigInt(cap))
    throw CapExceeded(d.to_string() + " has " + to_string(group_order(d)) + " elements, above --cap " +
                      std::to_string(cap) + " (raise --cap; more --threads shortens the sweep)");
}

void print_poly(std::ostream& os, const RunConfig& cfg, const LaurentPoly& p, const std::optional<bool>& check) {
  if (cfg.format == "json") {
    nlohmann::json j{{"group", cfg.group}, {"statistic", cfg.stat}, {"distribution", p.to_json()}};
    if (check) j["check_against"] = {{"statistic", cfg.check_against}, {"equidistributed", *check}};
    os << j.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "exponent,coefficient\n";
    for (const auto& [e, c] : p.terms()) os << e << "," << to_string(c) << "\n";
    if (check) os << "# check_against " << cfg.check_against << "," << (*check ? "OK" : "FAIL") << "\n";
  } else {
    os << p.to_string() << "\n";
    if (check) os << (*check ? "OK" : "FAIL") << "\n";
  }
}

int cmd_dist(const RunConfig& cfg) {
  Output out(cfg.out);
  LaurentPoly p;
  std::optional<bool> check;
  if (is_classical(cfg.group)) {
    auto d = GroupDescriptor::parse(cfg.group);
    check_cap(d, cfg.classical_cap());
    p = distribution(make_statistic(cfg.stat, d), cfg.fold());
    if (!cfg.check_against.empty())
      check = p == distribution(make_statistic(cfg.check_against, d), cfg.fold());
  } else {
    auto group = CoxeterGroup::enumerate(load_coxeter_matrix(cfg.group), cfg.generic_cap());
    p = distribution(make_generic_statistic(group, cfg.stat, Validation::on, cfg.fold()));
    if (!cfg.check_against.empty())
      check = p == distribution(make_generic_statistic(group, cfg.check_against, Validation::on, cfg.fold()));
  }
  print_poly(out.stream(), cfg, p, check);
  return check.value_or(true) ? 0 : 1;
}

int cmd_image(const RunConfig& cfg) {
  Output out(cfg.out);
  auto family = parse_family(cfg.group);
  auto names = split_names(cfg.stats, 2);
  ImageOp op = cfg.op == "sum" ? ImageOp::sum : cfg.op == "diff" ? ImageOp::diff
                                                                  : throw InvalidArgument("--op must be sum or diff");
  auto [lo, hi] = parse_ranks(cfg.ranks);
  for (int r = lo; r <= hi; ++r) check_cap(repro::descriptor_for_rank(family, r), cfg.classical_cap());
  auto& os = out.stream();
  const char* kname = op == ImageOp::sum ? "k_plus" : "k_minus";
  if (cfg.format == "csv") os << "rank,group,image_size," << kname << "\n";
  if (cfg.format == "text") os << "rank group |Im| " << kname << "\n";
  auto rows = nlohmann::json::array();
  // Rows are streamed: large ranks take a while.
  for (int r = lo; r <= hi; ++r) {
    auto row = repro::image_row(family, r, op, names[0], names[1], cfg.fold());
    if (cfg.format == "csv") os << row.rank << "," << row.group << "," << row.image_size << "," << row.k << std::endl;
    else if (cfg.format == "text") os << row.rank << " " << row.group << " " << row.image_size << " " << row.k << std::endl;
    else rows.push_back({{"rank", row.rank}, {"group", row.group}, {"image_size", row.image_size}, {kname, row.k}});
  }
  if (cfg.format == "json")
    os << nlohmann::json{{"op", to_string(op)}, {"f", names[0]}, {"g", names[1]}, {"rows", rows}}.dump(2) << "\n";
  return 0;
}

// --- verify ---------------------------------------------------------------

struct Verdict {
  bool passed = false;
  nlohmann::json details;
};

Verdict verify_symmetric(const RunConfig& cfg) {
  auto d = GroupDescriptor::parse(cfg.group);
  auto names = split_names(cfg.stats, 2);
  bool sym = is_symmetric_pair(make_statistic(names[0], d), make_statistic(names[1], d), cfg.fold());
  return {sym, {{"symmetric", sym}}};
}

Verdict verify_ratio(const RunConfig& cfg) {
  auto d = GroupDescriptor::parse(cfg.group);
  auto names = split_names(cfg.stats, 2);
  auto r = ratio_sum_check(make_statistic(names[0], d), make_statistic(names[1], d), cfg.fold());
  if (cfg.expect != "equal" && cfg.expect != "unequal") throw InvalidArgument("--expect must be equal or unequal");
  bool passed = r.equal == (cfg.expect == "equal");
  return {passed,
          {{"lhs", to_string(r.lhs)}, {"rhs", to_string(r.rhs)}, {"result", r.equal ? "EQUAL" : "UNEQUAL"},
           {"expected", cfg.expect == "equal" ? "EQUAL" : "UNEQUAL"}}};
}

Verdict verify_class(const RunConfig& cfg) {
  auto d = GroupDescriptor::parse(cfg.group);
  auto names = split_names(cfg.stats, 2);
  bool same = in_same_class(make_statistic(names[0], d, Validation::off), make_statistic(names[1], d, Validation::off));
  return {same, {{"same_class", same}}};
}

Verdict verify_involution(const RunConfig& cfg) {
  auto d = GroupDescriptor::parse(cfg.group);
  auto names = split_names(cfg.stats, 2);
  auto f = tabulate(make_statistic(names[0], d)), g = tabulate(make_statistic(names[1], d));
  try {
    auto iota = build_involution(f, g);
    std::size_t fixed = 0;
    for (std::size_t x = 0; x < iota.size(); ++x) fixed += iota(x) == x;
    bool ok = satisfies(iota, f, g);
    return {ok, {{"found", true}, {"satisfies", ok}, {"fixed_points", fixed}}};
  } catch (const NotSymmetric& e) {
    return {false, {{"found", false}, {"reason", e.what()}}};
  }
}

Verdict verify_induced(const RunConfig& cfg) {
  // --stats f,g with g named on the model of W_J; --values carries J.
  auto d = GroupDescriptor::parse(cfg.group);
  auto names = split_names(cfg.stats, 2);
  auto J = GeneratorSet::parse(cfg.values);
  auto cd = coxeter_good_decomposition(d, J, cfg.classical_cap());
  auto model = restriction_model(d, J);
  auto f = cd.tabulate(make_statistic(names[0], d, Validation::off));
  auto g = cd.tabulate_b(make_statistic(names[1], model.value_or(d), Validation::off));
  bool induced = is_induced(f, g, cd.decomposition);
  return {induced, {{"induced", induced}, {"J", J.to_string()}}};
}

Verdict verify_witness(const RunConfig& cfg) {
  auto wf = sum_image_witnesses(cfg.n);
  auto claims = nlohmann::json::array();
  for (const auto& c : wf.claims) claims.push_back({{"claim", c.name}, {"holds", c.holds}});
  return {wf.all_claims_hold(), {{"n", cfg.n}, {"U_size", wf.U.size()}, {"J_size", wf.J_set.size()}, {"claims", claims}}};
}

Verdict verify_descents(const RunConfig& cfg) {
  auto d = GroupDescriptor::parse(cfg.group);
  auto mode = d.family == Family::A ? DescentMode::a_descents : DescentMode::b_descents_and_negs;
  const std::string istat = d.family == Family::A ? "majstar" : "nmajstar";
  auto len = length_statistic(d), other = make_statistic(istat, d);
  auto parts = descent_class_partition(d, mode);
  bool ok = true;
  for (const auto& c : parts) ok = ok && distribution_on(len, c.elements) == distribution_on(other, c.elements);
  return {ok, {{"classes", parts.size()}, {"compared", "len vs " + istat}, {"all_equidistributed", ok}}};
}

Verdict verify_lift(const RunConfig& cfg) {
  auto d = GroupDescriptor::parse(cfg.group);
  auto l = repro::lift_check(d, cfg.stat.empty() ? (d.family == Family::B ? "nmaj" : "dmaj") : cfg.stat);
  return {l.base_valid && l.lifted_valid && l.coset_form, repro::to_json(l)};
}

Verdict verify_reciprocal(const RunConfig& cfg) {
  LaurentPoly p;
  if (is_classical(cfg.group)) p = distribution(length_statistic(GroupDescriptor::parse(cfg.group)), cfg.fold());
  else p = CoxeterGroup::enumerate(load_coxeter_matrix(cfg.group), cfg.generic_cap()).poincare_polynomial();
  bool ok = is_reciprocal(p);
  return {ok, {{"poincare", p.to_string()}, {"reciprocal", ok}}};
}

Verdict verify_poset(const RunConfig& cfg) {
  auto read = [](const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidArgument("cannot read '" + path + "'");
    return nlohmann::json::parse(in);
  };
  auto poset = FiniteGradedPoset::from_json(read(cfg.poset));
  auto f = poset_function_from_json(read(cfg.values));
  if (f.size() != poset.size()) throw DescriptorMismatch("function and poset have different sizes");
  auto ratio = ratio_sum_check(f, poset.ranks());
  bool in_class = in_same_class(f, poset.ranks(), poset);
  bool sym = is_symmetric_pair(f, poset.ranks());
  return {in_class,
          {{"in_rank_class", in_class},
           {"symmetric", sym},
           {"ratio_lhs", to_string(ratio.lhs)},
           {"ratio_rhs", to_string(ratio.rhs)},
           {"ratio_equal", ratio.equal}}};
}

int cmd_verify(const RunConfig& cfg) {
  Verdict v;
  const auto& c = cfg.check;
  if (c == "symmetric") v = verify_symmetric(cfg);
  else if (c == "ratio") v = verify_ratio(cfg);
  else if (c == "class") v = verify_class(cfg);
  else if (c == "involution") v = verify_involution(cfg);
  else if (c == "induced") v = verify_induced(cfg);
  else if (c == "witnessA") v = verify_witness(cfg);
  else if (c == "descents") v = verify_descents(cfg);
  else if (c == "lift") v = verify_lift(cfg);
  else if (c == "reciprocal") v = verify_reciprocal(cfg);
  else if (c == "poset") v = verify_poset(cfg);
  else throw InvalidArgument("unknown check '" + c + "'");
  Output out(cfg.out);
  auto& os = out.stream();
  if (cfg.format == "json") {
    os << nlohmann::json{{"check", c}, {"passed", v.passed}, {"details", v.details}}.dump(2) << "\n";
  } else if (cfg.format == "csv") {
    os << "check,passed\n" << c << "," << (v.passed ? "PASS" : "FAIL") << "\n";
  } else {
    for (const auto& [k, val] : v.details.items()) {
      if (val.is_array()) continue;
      os << k << ": " << (val.is_string() ? val.get<std::string>() : val.dump()) << "\n";
    }
    if (v.details.contains("claims"))
      for (const auto& cl : v.details["claims"])
        os << "  [" << (cl["holds"].get<bool>() ? "ok" : "FAILED") << "] " << cl["claim"].get<std::string>() << "\n";
    os << (v.passed ? "PASS" : "FAIL") << "\n";
  }
  return v.passed ? 0 : 1;
}

int cmd_repro(const RunConfig& cfg) {
  repro::Options opt{cfg.extended, cfg.fold()};
  auto results = cli::run_report(opt, [](const cli::CriterionResult& r) {
    std::cerr << (r.passed ? "PASS" : "FAIL") << " [" << r.id << "] " << r.title << std::endl;
  });
  auto report = cli::to_json(results, cfg.extended);
  Output out(cfg.out);
  out.stream() << report.dump(2) << "\n";
  return report["all_passed"].get<bool>() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Statistics equidistributed with the length on Coxeter groups"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    sub->add_option("--threads", cfg.threads, "worker threads (default: COXSTAT_THREADS or all cores)");
    sub->add_option("--cap", cfg.cap, "largest group order to enumerate (default 5e8 classical, 1e5 generic)");
    sub->add_option("--out", cfg.out, "write the result to a file");
  };

  auto* dist = app.add_subcommand("dist", "distribution of a statistic");
  dist->add_option("--group", cfg.group, "A:n, B:n, D:n, a preset (I2:m, H3, F4, E6, E7, E8) or a .json matrix")
      ->required();
  dist->add_option("--stat", cfg.stat, "statistic name")->required();
  dist->add_option("--check-against", cfg.check_against, "assert equidistribution with this statistic");
  common(dist);

  auto* image = app.add_subcommand("image", "|Im(f+g)| or |Im(f-g)| with k+ / k- per rank");
  image->add_option("--group", cfg.group, "family A, B or D (ranks are Coxeter ranks)")->required();
  image->add_option("--op", cfg.op, "sum or diff")->check(CLI::IsMember({"sum", "diff"}));
  image->add_option("--stats", cfg.stats, "two statistics, e.g. len,maj")->required();
  image->add_option("--ranks", cfg.ranks, "rank or range lo..hi")->required();
  common(image);

  auto* verify = app.add_subcommand("verify", "run one named check; exit code 0 iff it passes");
  verify
      ->add_option("check", cfg.check,
                   "symmetric, ratio, class, involution, induced, witnessA, descents, lift, reciprocal, poset")
      ->required();
  verify->add_option("--group", cfg.group, "group descriptor or preset");
  verify->add_option("--stats", cfg.stats, "two statistics f,g");
  verify->add_option("--stat", cfg.stat, "statistic (lift)");
  verify->add_option("--n", cfg.n, "n for witnessA");
  verify->add_option("--expect", cfg.expect, "ratio: equal (default) or unequal");
  verify->add_option("--poset", cfg.poset, "poset JSON file {\"ranks\":[...],\"bottom\":i,\"top\":j}");
  verify->add_option("--values", cfg.values, "poset: function JSON file; induced: the set J");
  common(verify);

  auto* repro_cmd = app.add_subcommand("repro", "reproduce every published number into one JSON report");
  repro_cmd->add_flag("--extended", cfg.extended, "include S_11, S_12 and B_8");
  common(repro_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*dist) return cmd_dist(cfg);
    if (*image) return cmd_image(cfg);
    if (*verify) return cmd_verify(cfg);
    if (*repro_cmd) return cmd_repro(cfg);
  } catch (const coxstat::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
