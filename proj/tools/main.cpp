#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>

#include "CLI11.hpp"
#include "cycperm/autgroup.hpp"
#include "cycperm/error.hpp"
#include "cycperm/report_json.hpp"
#include "cycperm/selftest.hpp"
#include "cycperm/table.hpp"
#include "cycperm/threads.hpp"
#include "json.hpp"

using namespace cycperm;
using nlohmann::json;

namespace {

struct FieldArgs {
  std::string field = "2";
  std::string modulus;

  void add(CLI::App* app) {
    app->add_option("--field", field, "field descriptor: r or r^alpha")->capture_default_str();
    app->add_option("--modulus", modulus, "irreducible modulus as comma-separated residues");
  }
  FieldSpec build() const {
    return modulus.empty() ? parse_field(field) : parse_field(field, std::optional<std::string_view>(modulus));
  }
};

json factor_list(const std::vector<PolyFactor>& factors) {
  json out = json::array();
  for (const auto& f : factors)
    out.push_back({{"poly", format_poly(f.poly)}, {"pretty", pretty_poly(f.poly)}, {"multiplicity", f.multiplicity}});
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream os(path);
  if (!os) throw Error(ErrorCode::InvalidArgument, "cannot write " + path);
  os << text << '\n';
}

bool report_passes(const VerificationReport& r) {
  if (!r.certified || r.counterexample_count > 0 || r.equal == false) return false;
  if (r.predicted_order && r.computed_order && *r.predicted_order != *r.computed_order) return false;
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Permutation groups of cyclic codes"};
  app.require_subcommand(1);
  int status = 0;

  // factor
  FieldArgs factor_field;
  std::uint64_t factor_n = 0;
  auto* factor = app.add_subcommand("factor", "factor x^n - 1 into irreducibles");
  factor_field.add(factor);
  factor->add_option("--n", factor_n, "length")->required();
  factor->callback([&] {
    std::cout << factor_list(factor_xn_minus_1(factor_n, factor_field.build())).dump(2) << '\n';
  });

  // cyclotomic
  FieldArgs cyc_field;
  std::uint64_t cyc_n = 0;
  auto* cyc = app.add_subcommand("cyclotomic", "Q_n reduced over the field, with its irreducible factors");
  cyc_field.add(cyc);
  cyc->add_option("--n", cyc_n, "index")->required();
  cyc->callback([&] {
    const FieldSpec f = cyc_field.build();
    const Poly q = cyclotomic(cyc_n, f);
    std::vector<PolyFactor> parts;
    for (const auto& pf : factor_xn_minus_1(cyc_n, f))
      if (poly_divides(pf.poly, q)) parts.push_back({pf.poly, 1});
    json out = {{"n", cyc_n}, {"poly", format_poly(q)}, {"pretty", pretty_poly(q)}, {"factors", factor_list(parts)}};
    std::cout << out.dump(2) << '\n';
  });

  // code-info
  FieldArgs info_field;
  std::size_t info_n = 0;
  std::string info_gen;
  std::uint64_t info_cap = kDefaultEnumerationCap;
  auto* info = app.add_subcommand("code-info", "parameters of C_{n,g}");
  info_field.add(info);
  info->add_option("--n", info_n, "length")->required();
  info->add_option("--gen", info_gen, "generator: coefficient list or expression such as x^3+x+1")->required();
  info->add_option("--cap", info_cap, "largest codeword count enumerated for min_distance")->capture_default_str();
  info->callback([&] {
    const FieldSpec f = info_field.build();
    const CyclicCodeSpec code = make_code(f, info_n, parse_poly_any(info_gen, f));
    json out = {{"n", code.n()},
                {"k", code.k()},
                {"gen", format_poly(code.gen())},
                {"check", format_poly(code.check())},
                {"dual_gen", format_poly(code.dual_gen())}};
    try {
      out["min_distance"] = code.k() == 0 ? json(nullptr) : json(min_distance(code, info_cap));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TooLarge) throw;
      out["min_distance"] = nullptr;
    }
    out["factors_of_xn_minus_1"] = factor_list(factor_xn_minus_1(info_n, f));
    std::cout << out.dump(2) << '\n';
  });

  // perm-group
  FieldArgs pg_field;
  std::size_t pg_n = 0;
  std::string pg_gen, pg_mode = "certify", pg_claim;
  std::uint64_t pg_trials = 0, pg_seed = 42;
  std::size_t pg_cutoff = kDefaultExhaustiveCutoff, pg_cap = kDefaultOrderCap;
  auto* pg = app.add_subcommand("perm-group", "compute or certify Per(C)");
  pg_field.add(pg);
  pg->add_option("--n", pg_n, "length")->required();
  pg->add_option("--gen", pg_gen, "generator polynomial")->required();
  pg->add_option("--mode", pg_mode, "brute | backtrack | certify")
      ->check(CLI::IsMember({"brute", "backtrack", "certify"}))
      ->capture_default_str();
  pg->add_option("--claim", pg_claim, "group expression; certify mode predicts one when omitted");
  pg->add_option("--trials", pg_trials, "random permutations for falsification (certify mode)")->capture_default_str();
  pg->add_option("--seed", pg_seed, "sampling seed")->capture_default_str();
  pg->add_option("--cutoff", pg_cutoff, "largest n for brute mode")->capture_default_str();
  pg->add_option("--order-cap", pg_cap, "largest degree for Schreier-Sims orders")->capture_default_str();
  pg->callback([&] {
    const FieldSpec f = pg_field.build();
    const CyclicCodeSpec code = make_code(f, pg_n, parse_poly_any(pg_gen, f));
    std::optional<GroupExpr> claim;
    if (!pg_claim.empty()) claim = parse_group_expr(pg_claim);
    VerificationReport rep;
    const Method method = parse_method(pg_mode);
    if (method == Method::Certify) {
      if (!claim) claim = predicted_group(code);
      if (claim->degree() != pg_n)
        throw Error(ErrorCode::DegreeMismatch, "claim degree " + std::to_string(claim->degree()) + " vs length " +
                                                   std::to_string(pg_n));
      const auto gens = materialize(*claim, f);
      CertifyOptions opts;
      opts.order_cap = pg_cap;
      rep = certify_subgroup(code, gens, claim, opts);
      if (pg_trials > 0) {
        const auto s = falsify_by_sampling(code, gens, pg_trials, pg_seed);
        rep.trials = s.trials;
        rep.seed = s.seed;
        rep.rng = s.rng;
        rep.counterexamples = s.counterexamples;
        rep.counterexample_count = s.counterexample_count;
        rep.elapsed_ms += s.elapsed_ms;
      }
    } else {
      const auto start = std::chrono::steady_clock::now();
      const PermGroup per =
          method == Method::Exhaustive ? exhaustive_per_group(code, pg_cutoff) : backtrack_per_group(code);
      rep.code = describe(code);
      rep.method = method;
      rep.computed_order = per.order();
      rep.certified = true;
      if (claim) {
        if (claim->degree() != pg_n)
          throw Error(ErrorCode::DegreeMismatch, "claim degree " + std::to_string(claim->degree()) + " vs length " +
                                                     std::to_string(pg_n));
        const auto gens = materialize(*claim, f);
        rep.predicted = format_group_expr(*claim);
        rep.predicted_order = symbolic_order(*claim, f);
        for (const auto& s : gens)
          if (!preserves_code(code, s)) rep.certified = false;
        rep.equal = groups_equal(per, group_from_generators(gens));
      }
      rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    }
    std::cout << report_to_json(rep) << '\n';
    if (!report_passes(rep)) status = 1;
  });

  // table
  std::vector<std::string> tb_rows;
  bool tb_all = false;
  std::string tb_tier = "exact", tb_out, tb_csv;
  RunConfig tb_cfg;
  auto* tb = app.add_subcommand("table", "verify the embedded binary table");
  tb->add_option("--row", tb_rows, "row id, repeatable (e.g. R04a)");
  tb->add_flag("--all", tb_all, "every row");
  tb->add_option("--tier", tb_tier, "strongest tier to run: exact | backtrack | certify")
      ->check(CLI::IsMember({"exact", "backtrack", "certify"}))
      ->capture_default_str();
  tb->add_option("--out", tb_out, "JSON report path (stdout when omitted)");
  tb->add_option("--csv", tb_csv, "CSV summary path");
  tb->add_option("--trials", tb_cfg.trials, "sampling trials for certify-tier rows")->capture_default_str();
  tb->add_option("--seed", tb_cfg.seed, "sampling seed")->capture_default_str();
  tb->add_option("--order-cap", tb_cfg.order_cap, "largest degree for Schreier-Sims orders")->capture_default_str();
  tb->add_flag("--list", "print row ids and claims, then exit");
  tb->callback([&] {
    if (tb->count("--list")) {
      for (const auto& r : table_rows()) std::cout << r.id << '\t' << r.n << '\t' << r.gen_text << '\t' << r.claim << '\n';
      return;
    }
    if (tb_all)
      for (const auto& r : table_rows()) tb_rows.push_back(r.id);
    if (tb_rows.empty()) throw CLI::ValidationError("table", "give --row ID or --all");
    tb_cfg.max_tier = parse_tier(tb_tier);
    const auto results = run_table(tb_rows, tb_cfg);
    write_text(tb_out, results_to_json(results));
    if (!tb_csv.empty()) {
      std::ofstream os(tb_csv);
      os << results_to_csv(results);
    }
    for (const auto& r : results) {
      std::cerr << (r.passed ? "PASS " : "FAIL ") << r.id << " [" << tier_name(r.tier) << "]";
      if (r.error) std::cerr << " error: " << *r.error;
      std::cerr << '\n';
      if (!r.passed) status = 1;
    }
  });

  // selftest
  std::string st_sabotage;
  SelftestOptions st_opts;
  auto* st = app.add_subcommand("selftest", "fast invariant suite");
  st->add_option("--seed", st_opts.seed, "base seed")->capture_default_str();
  st->add_option("--cases", st_opts.cases, "randomized cases per property")->capture_default_str();
  st->add_option("--sabotage", st_sabotage, "deliberately break one convention: compose | wreath")
      ->check(CLI::IsMember({"compose", "wreath"}));
  st->callback([&] {
    if (st_sabotage == "compose")
      st_opts.compose = [](const Permutation& a, const Permutation& b) { return compose(b, a); };
    if (st_sabotage == "wreath") st_opts.transpose_wreath = true;
    const auto res = run_selftest(st_opts);
    for (const auto& c : res.checks) {
      std::cout << (c.passed ? "ok   " : "FAIL ") << c.name << " (" << static_cast<long>(c.elapsed_ms) << " ms)";
      if (!c.passed) std::cout << ": " << c.detail;
      std::cout << '\n';
    }
    if (!res.passed()) status = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  } catch (const Error& e) {
    json err = {{"error", std::string(error_code_name(e.code()))}, {"message", e.what()}};
    if (e.offset()) err["offset"] = *e.offset();
    std::cerr << err.dump() << '\n';
    return 2;
  }
  return status;
}
