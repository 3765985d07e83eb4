#include "cycperm/table.hpp"

#include <chrono>
#include <sstream>

#include "cycperm/error.hpp"
#include "cycperm/threads.hpp"
#include "json_io.hpp"

namespace cycperm {

namespace {

struct Template {
  const char* id;
  const char* length;
  std::size_t n;
  const char* gen;    // {g}: cubic, {h}: degree-21 trinomial
  const char* claim;  // {P}: group of the length-7 cubic code
  const char* label;
};

// Rows listed with an "or" pair of generators; variant a uses x^3+x+1,
// variant b the reciprocal x^3+x^2+1.
constexpr Template kPaired[] = {
    {"R01", "7", 7, "{g}", "{P}", "PSL(2,7)"},
    {"R02", "2·7", 14, "{g}", "wr(S(2),{P},rows)", "S_2 ≀ PSL(2,7)"},
    {"R03", "2·7", 14, "({g})^2", "wr({P},S(2),cols)", "PSL(2,7) ≀ S_2"},
    {"R04", "3·7", 21, "{g}", "wr(S(3),{P},rows)", "S_3 ≀ PSL(2,7)"},
    {"R05", "3·2·7", 42, "{g}", "wr(S(6),{P},rows)", "S_6 ≀ PSL(2,7)"},
    {"R06", "7^2", 49, "{g}", "wr(S(7),{P},rows)", "S_7 ≀ PSL(2,7)"},
    {"R07", "7^2", 49, "{h}", "wr({P},S(7),cols)", "PSL(2,7) ≀ S_7"},
    {"R08", "2·7^2", 98, "{h}", "wr(wr(S(2),{P},rows),S(7),cols)", "(S_2 ≀ PSL(2,7)) ≀ S_7"},
    {"R09", "2·7^2", 98, "({h})^2", "wr({P},S(14),cols)", "PSL(2,7) ≀ S_14"},
    {"R10", "2^2·7^2", 196, "({g})^4", "wr(wr(S(7),{P},rows),S(4),cols)", "(S_7 ≀ PSL(2,7)) ≀ S_4"},
    {"R11", "2^2·7^2", 196, "({h})^2", "wr(wr(S(2),{P},rows),S(14),cols)", "(S_2 ≀ PSL(2,7)) ≀ S_14"},
    {"R12", "2^2·7^2", 196, "({h})^4", "wr({P},S(28),cols)", "PSL(2,7) ≀ S_28"},
    {"R13", "3·2·7^2", 294, "{h}", "wr(wr(S(6),{P},rows),S(7),cols)", "(S_6 ≀ PSL(2,7)) ≀ S_7"},
    {"R14", "3·2·7^2", 294, "({h})^2", "wr(wr(S(3),{P},rows),S(14),cols)", "(S_3 ≀ PSL(2,7)) ≀ S_14"},
};

struct Single {
  const char* id;
  const char* length;
  std::size_t n;
  const char* gen_text;
  const char* gen_expr;
  const char* claim;
  const char* label;
  const char* note;
};

constexpr Single kSingle[] = {
    {"R15", "31", 31, "(x^5+x^2+1)(x^5+x^3+1)(x^5+x^3+x^2+x+1)", "(x^5+x^2+1)*(x^5+x^3+1)*(x^5+x^3+x^2+x+1)",
     "C31xC5", "C_31 ⋊ C_5", ""},
    {"R16", "2·31", 62, "(x^5+x^2+1)^2(x^5+x^3+1)^2(x^5+x^3+x^2+x+1)^2",
     "(x^5+x^2+1)^2*(x^5+x^3+1)^2*(x^5+x^3+x^2+x+1)^2", "wr(C31xC5,S(2),cols)", "(C_31 ⋊ C_5) ≀ S_2", ""},
    {"R17", "31^2", 961, "(x^155+x^62+1)(x^155+x^93+1)(x^155+x^93+x^62+x^31+1)",
     "(x^155+x^62+1)*(x^155+x^93+1)*(x^155+x^93+x^62+x^31+1)", "wr(C31xC5,S(31),cols)", "(C_31 ⋊ C_5) ≀ S_31", ""},
    {"R18", "2^2·31^2", 3844, "(x^155+x^62+1)^2(x^155+x^93+1)^2(x^155+x^93+x^62+x^31+1)^2",
     "(x^155+x^62+1)^2*(x^155+x^93+1)^2*(x^155+x^93+x^62+x^31+1)^2", "wr(wr(S(2),C31xC5,rows),S(62),cols)",
     "(S_2 ≀ (C_31 ⋊ C_5)) ≀ S_62", ""},
    {"R19", "3", 3, "Q_3(x)", "Q3", "S(3)", "S_3", ""},
    {"R20", "5", 5, "Q_5(x)", "Q5", "S(5)", "S_5", ""},
    {"R21", "7", 7, "Q_7(x)", "Q7", "S(7)", "S_7", ""},
    {"R22", "31", 31, "Q_31(x)", "Q31", "S(31)", "S_31", ""},
    {"R23", "3·5", 15, "(x-1)Q_3(x)Q_5(x)", "(x-1)*Q3*Q5", "x(3,5)", "S_3 × S_5", ""},
    {"R24", "3·5", 15, "Q_15(x)", "Q15", "x(3,5)", "S_3 × S_5",
     "printed table calls this the 217-th cyclotomic polynomial; the length-15 row means Q_15"},
    {"R25", "7·31", 217, "(x-1)Q_7(x)Q_31(x)", "(x-1)*Q7*Q31", "x(7,31)", "S_7 × S_31", ""},
    {"R26", "7·31", 217, "Q_217(x)", "Q217", "x(7,31)", "S_7 × S_31", ""},
    {"R27", "2·3·5", 30, "Q_3(x)Q_5(x)", "Q3*Q5", "wr(S(2),x(3,5),rows)", "S_2 ≀ (S_3 × S_5)", ""},
    {"R28", "7·3·5", 105, "Q_3(x)Q_5(x)", "Q3*Q5", "wr(S(7),x(3,5),rows)", "S_7 ≀ (S_3 × S_5)", ""},
    {"R29", "3·5·7", 105, "Q_5(x)Q_7(x)", "Q5*Q7", "wr(S(3),x(5,7),rows)", "S_3 ≀ (S_5 × S_7)", ""},
};

std::string substitute(std::string s, std::string_view key, std::string_view value) {
  for (std::size_t pos = s.find(key); pos != std::string::npos; pos = s.find(key, pos + value.size()))
    s.replace(pos, key.size(), value);
  return s;
}

std::vector<TableRow> build_rows() {
  struct Variant {
    char suffix;
    const char* g;
    const char* h;
    const char* leaf;
    const char* note;
  };
  const Variant variants[] = {
      {'a', "x^3+x+1", "x^21+x^7+1", "PSL2_7", ""},
      {'b', "x^3+x^2+1", "x^21+x^14+1", "per(7,[1,0,1,1])",
       "reciprocal generator; its length-7 group is a conjugate of the PSL2_7 embedding"},
  };
  std::vector<TableRow> rows;
  for (const auto& t : kPaired)
    for (const auto& v : variants) {
      TableRow r;
      r.id = std::string(t.id) + v.suffix;
      r.length_text = t.length;
      r.n = t.n;
      r.gen_text = substitute(substitute(t.gen, "{g}", v.g), "{h}", v.h);
      r.gen_expr = r.gen_text;
      r.claim = substitute(t.claim, "{P}", v.leaf);
      r.label = t.label;
      r.note = v.note;
      rows.push_back(std::move(r));
    }
  for (const auto& s : kSingle)
    rows.push_back({s.id, s.length, s.n, s.gen_text, s.gen_expr, s.claim, s.label, s.note});
  return rows;
}

bool enumerable(const CyclicCodeSpec& code, std::uint64_t cap) {
  const std::size_t k = std::min(code.k(), code.n() - code.k());
  return k < 64 && (std::uint64_t{1} << k) <= cap;
}

RowResult run_row(const TableRow& row, const RunConfig& cfg) {
  using Clock = std::chrono::steady_clock;
  const auto start = Clock::now();
  RowResult res;
  res.id = row.id;
  const FieldSpec f2;
  const CyclicCodeSpec code = make_code(f2, row.n, parse_poly_expr(row.gen_expr, f2));
  const GroupExpr claim = parse_group_expr(row.claim);
  if (claim.degree() != row.n)
    throw Error(ErrorCode::DegreeMismatch,
                "claim degree " + std::to_string(claim.degree()) + " vs length " + std::to_string(row.n));
  const std::vector<Permutation> gens = materialize(claim, f2);

  CertifyOptions opts;
  opts.order_cap = cfg.order_cap;
  opts.threads = 1;
  res.report = certify_subgroup(code, gens, claim, opts);
  if (res.report.computed_order) res.order_match = *res.report.computed_order == *res.report.predicted_order;

  res.tier = Tier::Certify;
  if (cfg.max_tier >= Tier::Backtrack && row.n <= cfg.backtrack_max_n && enumerable(code, cfg.enumeration_cap))
    res.tier = Tier::Backtrack;
  if (cfg.max_tier >= Tier::Exact && row.n <= cfg.exact_max_n) res.tier = Tier::Exact;

  if (res.tier != Tier::Certify) {
    const PermGroup per = res.tier == Tier::Exact ? exhaustive_per_group(code, cfg.exact_max_n, 1)
                                                  : backtrack_per_group(code, cfg.enumeration_cap);
    res.search_order = per.order();
    res.report.equal = groups_equal(per, group_from_generators(gens));
    res.report.method = res.tier == Tier::Exact ? Method::Exhaustive : Method::Backtrack;
  } else if (cfg.trials > 0) {
    const VerificationReport s = falsify_by_sampling(code, gens, cfg.trials, cfg.seed);
    res.report.trials = s.trials;
    res.report.seed = s.seed;
    res.report.rng = s.rng;
    res.report.counterexamples = s.counterexamples;
    res.report.counterexample_count = s.counterexample_count;
  }

  res.passed = res.report.certified && res.order_match.value_or(true) && res.report.counterexample_count == 0 &&
               res.report.equal.value_or(true);
  res.report.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - start).count();
  return res;
}

}  // namespace

const std::vector<TableRow>& table_rows() {
  static const std::vector<TableRow> rows = build_rows();
  return rows;
}

const TableRow& find_row(std::string_view id) {
  for (const auto& r : table_rows())
    if (r.id == id) return r;
  throw Error(ErrorCode::InvalidArgument, "no table row '" + std::string(id) + "'");
}

std::string_view tier_name(Tier t) {
  switch (t) {
    case Tier::Certify: return "certify";
    case Tier::Backtrack: return "backtrack";
    case Tier::Exact: return "exact";
  }
  return "certify";
}

Tier parse_tier(std::string_view name) {
  if (name == "certify") return Tier::Certify;
  if (name == "backtrack") return Tier::Backtrack;
  if (name == "exact") return Tier::Exact;
  throw Error(ErrorCode::InvalidArgument, "unknown tier '" + std::string(name) + "'");
}

Tier eligible_tier(const TableRow& row, const RunConfig& cfg) {
  if (cfg.max_tier >= Tier::Exact && row.n <= cfg.exact_max_n) return Tier::Exact;
  if (cfg.max_tier >= Tier::Backtrack && row.n <= cfg.backtrack_max_n) {
    const FieldSpec f2;
    if (enumerable(make_code(f2, row.n, parse_poly_expr(row.gen_expr, f2)), cfg.enumeration_cap))
      return Tier::Backtrack;
  }
  return Tier::Certify;
}

std::vector<RowResult> run_table(const std::vector<std::string>& ids, const RunConfig& cfg) {
  std::vector<const TableRow*> rows;
  for (const auto& id : ids) rows.push_back(&find_row(id));
  std::vector<RowResult> out(rows.size());
  parallel_for(rows.size(), cfg.threads, [&](std::size_t i) {
    try {
      out[i] = run_row(*rows[i], cfg);
    } catch (const std::exception& e) {
      out[i].id = rows[i]->id;
      out[i].passed = false;
      out[i].error = e.what();
    }
  });
  return out;
}

std::string results_to_json(const std::vector<RowResult>& results, int indent) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : results) {
    const TableRow& row = find_row(r.id);
    nlohmann::json j;
    j["id"] = r.id;
    j["length"] = row.length_text;
    j["n"] = row.n;
    j["generator"] = row.gen_text;
    j["claim"] = row.claim;
    j["label"] = row.label;
    if (!row.note.empty()) j["note"] = row.note;
    j["tier"] = std::string(tier_name(r.tier));
    j["passed"] = r.passed;
    j["order_match"] = r.order_match ? nlohmann::json(*r.order_match) : nlohmann::json(nullptr);
    j["search_order"] = r.search_order ? nlohmann::json(to_decimal(*r.search_order)) : nlohmann::json(nullptr);
    j["error"] = r.error ? nlohmann::json(*r.error) : nlohmann::json(nullptr);
    j["report"] = r.error ? nlohmann::json(nullptr) : detail::report_value(r.report);
    arr.push_back(std::move(j));
  }
  return arr.dump(indent);
}

std::string results_to_csv(const std::vector<RowResult>& results) {
  std::ostringstream os;
  os << "id,n,tier,certified,order_match,equal,counterexamples,passed,elapsed_ms\n";
  auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : ""; };
  for (const auto& r : results) {
    os << r.id << ',' << find_row(r.id).n << ',' << tier_name(r.tier) << ',' << (r.report.certified ? "true" : "false")
       << ',' << tri(r.order_match) << ',' << tri(r.report.equal) << ',' << r.report.counterexample_count << ','
       << (r.passed ? "true" : "false") << ',' << r.report.elapsed_ms << '\n';
  }
  return os.str();
}

}  // namespace cycperm
