#include "upinv/records.hpp"

#include "json.hpp"
#include "upinv/errors.hpp"
#include "upinv/io.hpp"

namespace upinv {

using nlohmann::json;

namespace {

template <typename T>
json optional_json(const std::optional<T>& v) {
  return v ? json(*v) : json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const json& j) {
  if (j.is_null()) return std::nullopt;
  return j.get<T>();
}

json parse_kind(std::string_view text, std::string_view kind) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorCode::ParseError, std::string("malformed record: ") + e.what());
  }
  if (!doc.is_object() || doc.value("kind", "") != kind) {
    throw Error(ErrorCode::ParseError, "expected a record of kind " + std::string(kind));
  }
  return doc;
}

// Wraps nlohmann type errors so callers only ever see Error(ParseError).
template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("bad record field: ") + e.what());
  }
}

json hsop_json(const HsopCertificate& c, PrimeModulus p) {
  json polys = json::array();
  for (const auto& f : c.polys) polys.push_back(render(f));
  json exps = json::array();
  for (const auto& e : c.power_exponents) exps.push_back(optional_json(e));
  return {{"kind", "hsop_certificate"},
          {"p", p.value()},
          {"status", to_string(c.status)},
          {"polys", polys},
          {"degrees", c.degrees},
          {"power_exponents", exps},
          {"n_max", c.n_max},
          {"group_order", c.group_order},
          {"degree_product_ok", c.degree_product_ok}};
}

HsopCertificate hsop_from(const json& j) {
  HsopCertificate c;
  const PrimeModulus p(j.at("p").get<std::int64_t>());
  const auto status = j.at("status").get<std::string>();
  if (status != "Certified" && status != "Unknown") throw Error(ErrorCode::ParseError, "bad status " + status);
  c.status = status == "Certified" ? HsopStatus::Certified : HsopStatus::Unknown;
  for (const auto& f : j.at("polys")) c.polys.push_back(parse_poly(f.get<std::string>(), p));
  c.degrees = j.at("degrees").get<std::array<std::uint32_t, 3>>();
  const auto& exps = j.at("power_exponents");
  if (!exps.is_array() || exps.size() != 3) throw Error(ErrorCode::ParseError, "power_exponents needs 3 entries");
  for (std::size_t i = 0; i < 3; ++i) c.power_exponents[i] = optional_from<std::uint32_t>(exps[i]);
  c.n_max = j.at("n_max").get<std::uint32_t>();
  c.group_order = j.at("group_order").get<std::size_t>();
  c.degree_product_ok = j.at("degree_product_ok").get<bool>();
  return c;
}

json falsifier_json(const FalsifierReport& r) {
  json cands = json::array();
  for (const auto& c : r.candidates) {
    cands.push_back({{"degrees", c.degrees},
                     {"first_mismatch", optional_json(c.first_mismatch)},
                     {"survives", c.survives()}});
  }
  return {{"kind", "falsifier_report"},
          {"group_order", r.group_order},
          {"max_degree", r.max_degree},
          {"hilbert_function", r.hf.dims},
          {"candidates", cands},
          {"verdict", to_string(r.verdict)}};
}

FalsifierReport falsifier_from(const json& j) {
  FalsifierReport r;
  r.group_order = j.at("group_order").get<std::size_t>();
  r.max_degree = j.at("max_degree").get<std::uint32_t>();
  r.hf.dims = j.at("hilbert_function").get<std::vector<std::size_t>>();
  for (const auto& c : j.at("candidates")) {
    r.candidates.push_back({c.at("degrees").get<std::array<std::uint32_t, 3>>(),
                            optional_from<std::uint32_t>(c.at("first_mismatch"))});
  }
  const auto v = j.at("verdict").get<std::string>();
  if (v == "NonPolynomialCertified") {
    r.verdict = FalsifierVerdict::NonPolynomialCertified;
  } else if (v == "Inconclusive") {
    r.verdict = FalsifierVerdict::Inconclusive;
  } else {
    throw Error(ErrorCode::ParseError, "bad falsifier verdict " + v);
  }
  return r;
}

json preconditions_json(const Preconditions& pre) {
  return {{"p", pre.p},
          {"group_order", pre.group_order},
          {"p_odd", pre.p_odd},
          {"upper_triangular", pre.upper_triangular},
          {"unipotent_order", optional_json(pre.unipotent_order)},
          {"unipotent_abelian", optional_json(pre.unipotent_abelian)},
          {"transvection_count", optional_json(pre.transvection_count)},
          {"transvection_subgroup_order", optional_json(pre.transvection_subgroup_order)},
          {"pseudoreflection_subgroup_order", optional_json(pre.pseudoreflection_subgroup_order)}};
}

Preconditions preconditions_from(const json& j) {
  Preconditions pre;
  pre.p = j.at("p").get<std::uint32_t>();
  pre.group_order = j.at("group_order").get<std::size_t>();
  pre.p_odd = j.at("p_odd").get<bool>();
  pre.upper_triangular = j.at("upper_triangular").get<bool>();
  pre.unipotent_order = optional_from<std::size_t>(j.at("unipotent_order"));
  pre.unipotent_abelian = optional_from<bool>(j.at("unipotent_abelian"));
  pre.transvection_count = optional_from<std::size_t>(j.at("transvection_count"));
  pre.transvection_subgroup_order = optional_from<std::size_t>(j.at("transvection_subgroup_order"));
  pre.pseudoreflection_subgroup_order = optional_from<std::size_t>(j.at("pseudoreflection_subgroup_order"));
  return pre;
}

}  // namespace

std::string to_record(const HilbertFunction& hf) {
  return json{{"kind", "hilbert_function"}, {"dims", hf.dims}}.dump();
}

std::string to_record(const HsopCertificate& cert, PrimeModulus p) { return hsop_json(cert, p).dump(); }

std::string to_record(const FalsifierReport& report) { return falsifier_json(report).dump(); }

std::string to_record(const PolynomialityVerdict& v, PrimeModulus p) {
  json doc{{"kind", "verdict"},
           {"outcome", to_string(v.outcome)},
           {"rule", to_string(v.rule)},
           {"reason", v.reason},
           {"preconditions", preconditions_json(v.preconditions)},
           {"evidence_consistent", v.evidence_consistent},
           {"falsifier", v.falsifier ? falsifier_json(*v.falsifier) : json(nullptr)},
           {"certificate", v.certificate ? hsop_json(*v.certificate, p) : json(nullptr)}};
  return doc.dump();
}

HilbertFunction parse_hilbert_record(std::string_view text) {
  const auto doc = parse_kind(text, "hilbert_function");
  return guarded([&] { return HilbertFunction{doc.at("dims").get<std::vector<std::size_t>>()}; });
}

HsopCertificate parse_hsop_record(std::string_view text) {
  const auto doc = parse_kind(text, "hsop_certificate");
  return guarded([&] { return hsop_from(doc); });
}

FalsifierReport parse_falsifier_record(std::string_view text) {
  const auto doc = parse_kind(text, "falsifier_report");
  return guarded([&] { return falsifier_from(doc); });
}

PolynomialityVerdict parse_verdict_record(std::string_view text) {
  const auto doc = parse_kind(text, "verdict");
  return guarded([&] {
    PolynomialityVerdict v;
    const auto outcome = outcome_from_string(doc.at("outcome").get<std::string>());
    const auto rule = rule_from_string(doc.at("rule").get<std::string>());
    if (!outcome || !rule) throw Error(ErrorCode::ParseError, "unknown outcome or rule");
    v.outcome = *outcome;
    v.rule = *rule;
    v.reason = doc.at("reason").get<std::string>();
    v.preconditions = preconditions_from(doc.at("preconditions"));
    v.evidence_consistent = doc.at("evidence_consistent").get<bool>();
    if (!doc.at("falsifier").is_null()) v.falsifier = falsifier_from(doc.at("falsifier"));
    if (!doc.at("certificate").is_null()) v.certificate = hsop_from(doc.at("certificate"));
    return v;
  });
}

}  // namespace upinv
