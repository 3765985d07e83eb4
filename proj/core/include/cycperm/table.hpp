#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cycperm/autgroup.hpp"

namespace cycperm {

/// One binary record of the regression table. Rows whose generator is
/// listed with an "or" alternative appear twice, suffixed a and b.
struct TableRow {
  std::string id;
  std::string length_text;  // factored, e.g. "2·7^2"
  std::size_t n = 0;
  std::string gen_text;  // as printed in the table
  std::string gen_expr;  // parse_poly_expr input over F_2
  std::string claim;     // group expression of degree n
  std::string label;     // group as printed in the table
  std::string note;
};

const std::vector<TableRow>& table_rows();
/// Throws InvalidArgument for an unknown id.
const TableRow& find_row(std::string_view id);

enum class Tier { Certify, Backtrack, Exact };
std::string_view tier_name(Tier t);
Tier parse_tier(std::string_view name);

struct RunConfig {
  Tier max_tier = Tier::Exact;  // rows run the strongest eligible tier up to this one
  std::size_t exact_max_n = 10;
  std::size_t backtrack_max_n = 24;
  std::uint64_t enumeration_cap = kDefaultEnumerationCap;
  std::uint64_t trials = 100000;  // sampling for certify-tier rows; 0 disables
  std::uint64_t seed = 42;
  std::size_t order_cap = kDefaultOrderCap;
  unsigned threads = 0;
};

struct RowResult {
  std::string id;
  Tier tier = Tier::Certify;
  VerificationReport report;
  std::optional<BigInt> search_order;  // |Per(C)| from the exact or backtrack tier
  std::optional<bool> order_match;     // <gens> order vs symbolic, when computed
  bool passed = false;
  std::optional<std::string> error;
};

/// Tier a row would get under `cfg`.
Tier eligible_tier(const TableRow& row, const RunConfig& cfg);

/// Rows are verified concurrently; results come back in the order of `ids`.
/// Per-row failures are recorded and do not stop the run.
std::vector<RowResult> run_table(const std::vector<std::string>& ids, const RunConfig& cfg);

std::string results_to_json(const std::vector<RowResult>& results, int indent = 2);
/// Columns: id,n,tier,certified,order_match,equal,counterexamples,passed,elapsed_ms
std::string results_to_csv(const std::vector<RowResult>& results);

}  // namespace cycperm
