#include "cycperm/report_json.hpp"

#include "cycperm/error.hpp"
#include "json_io.hpp"

namespace cycperm {

namespace detail {

using nlohmann::json;

namespace {

template <class T, class F>
json opt(const std::optional<T>& v, F&& f) {
  return v ? json(f(*v)) : json(nullptr);
}

template <class T>
std::optional<T> get_opt(const json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

std::optional<BigInt> get_big(const json& j, const char* key) {
  auto s = get_opt<std::string>(j, key);
  if (!s) return std::nullopt;
  return parse_decimal(*s);
}

}  // namespace

json report_value(const VerificationReport& r) {
  json j;
  j["code"] = {{"field", r.code.field}, {"modulus", r.code.modulus}, {"n", r.code.n}, {"gen", r.code.gen}};
  j["method"] = std::string(method_name(r.method));
  j["predicted"] = opt(r.predicted, [](const std::string& s) { return s; });
  j["predicted_order"] = opt(r.predicted_order, [](const BigInt& b) { return to_decimal(b); });
  j["computed_order"] = opt(r.computed_order, [](const BigInt& b) { return to_decimal(b); });
  j["certified"] = r.certified;
  j["equal"] = opt(r.equal, [](bool b) { return b; });
  json failures = json::array();
  for (const auto& f : r.failures) failures.push_back({{"generator", f.generator}, {"basis_word", f.basis_word}});
  j["failures"] = std::move(failures);
  json cex = json::array();
  for (const auto& s : r.counterexamples) cex.push_back(s.images());
  j["counterexamples"] = std::move(cex);
  j["counterexample_count"] = r.counterexample_count;
  j["trials"] = opt(r.trials, [](std::uint64_t v) { return v; });
  j["seed"] = opt(r.seed, [](std::uint64_t v) { return v; });
  j["rng"] = r.rng;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

VerificationReport report_from_value(const json& j) {
  VerificationReport r;
  const auto& c = j.at("code");
  r.code.field = c.at("field").get<std::string>();
  r.code.modulus = c.value("modulus", std::string());
  r.code.n = c.at("n").get<std::size_t>();
  r.code.gen = c.at("gen").get<std::string>();
  r.method = parse_method(j.at("method").get<std::string>());
  r.predicted = get_opt<std::string>(j, "predicted");
  r.predicted_order = get_big(j, "predicted_order");
  r.computed_order = get_big(j, "computed_order");
  r.certified = j.at("certified").get<bool>();
  r.equal = get_opt<bool>(j, "equal");
  if (j.contains("failures"))
    for (const auto& f : j.at("failures"))
      r.failures.push_back({f.at("generator").get<std::size_t>(), f.at("basis_word").get<std::size_t>()});
  if (j.contains("counterexamples"))
    for (const auto& s : j.at("counterexamples")) r.counterexamples.emplace_back(s.get<std::vector<std::uint32_t>>());
  r.counterexample_count = j.value("counterexample_count", std::uint64_t{0});
  r.trials = get_opt<std::uint64_t>(j, "trials");
  r.seed = get_opt<std::uint64_t>(j, "seed");
  r.rng = j.value("rng", std::string());
  r.elapsed_ms = j.value("elapsed_ms", 0.0);
  return r;
}

}  // namespace detail

std::string report_to_json(const VerificationReport& report, int indent) {
  return detail::report_value(report).dump(indent);
}

VerificationReport report_from_json(std::string_view text) {
  try {
    return detail::report_from_value(nlohmann::json::parse(text));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::SyntaxError, std::string("report JSON: ") + e.what());
  }
}

}  // namespace cycperm
