#include "upinv/verdict.hpp"

#include <algorithm>
#include <utility>

#include "upinv/errors.hpp"

namespace upinv {

namespace {

constexpr std::pair<Outcome, std::string_view> kOutcomeNames[] = {
    {Outcome::Polynomial, "Polynomial"},
    {Outcome::NonPolynomial, "NonPolynomial"},
    {Outcome::Unknown, "Unknown"},
};

constexpr std::pair<Rule, std::string_view> kRuleNames[] = {
    {Rule::NonmodularReflectionGroup, "nonmodular-reflection-group"},
    {Rule::NonmodularNotReflectionGroup, "nonmodular-not-reflection-group"},
    {Rule::UnipotentWithoutTransvections, "unipotent-without-transvections"},
    {Rule::UnipotentGeneratedByTransvections, "unipotent-generated-by-transvections"},
    {Rule::TransvectionsDoNotGenerate, "transvections-do-not-generate"},
    {Rule::HilbertFalsifier, "hilbert-falsifier"},
    {Rule::HsopCertificate, "hsop-certificate"},
    {Rule::HypothesesNotMet, "hypotheses-not-met"},
};

}  // namespace

std::string_view to_string(Outcome o) noexcept {
  for (const auto& [k, v] : kOutcomeNames) {
    if (k == o) return v;
  }
  return "?";
}

std::string_view to_string(Rule r) noexcept {
  for (const auto& [k, v] : kRuleNames) {
    if (k == r) return v;
  }
  return "?";
}

std::optional<Outcome> outcome_from_string(std::string_view s) noexcept {
  for (const auto& [k, v] : kOutcomeNames) {
    if (v == s) return k;
  }
  return std::nullopt;
}

std::optional<Rule> rule_from_string(std::string_view s) noexcept {
  for (const auto& [k, v] : kRuleNames) {
    if (v == s) return k;
  }
  return std::nullopt;
}

namespace {

PolynomialityVerdict decide(const MatrixGroup& g) {
  PolynomialityVerdict v;
  auto& pre = v.preconditions;
  pre.p = g.modulus().value();
  pre.group_order = g.order();
  // PrimeModulus never holds 2, so this is recorded rather than tested.
  pre.p_odd = pre.p % 2 == 1;
  pre.upper_triangular = g.is_upper_triangular();
  if (!pre.upper_triangular) {
    v.reason = "group is not upper triangular in the given basis";
    return v;
  }

  const auto h = unipotent_subgroup(g);
  pre.unipotent_order = h.order();
  if (h.order() == 1) {
    // H is the Sylow p-subgroup, so |H| = 1 means p does not divide |G|.
    const auto refl = pseudoreflection_subgroup(g);
    pre.pseudoreflection_subgroup_order = refl.order();
    if (refl.order() == g.order()) {
      v.outcome = Outcome::Polynomial;
      v.rule = Rule::NonmodularReflectionGroup;
      v.reason = "nonmodular group generated by pseudoreflections";
    } else {
      v.outcome = Outcome::NonPolynomial;
      v.rule = Rule::NonmodularNotReflectionGroup;
      v.reason = "pseudoreflections generate a proper subgroup";
    }
    return v;
  }

  pre.unipotent_abelian = is_abelian(h);
  if (!*pre.unipotent_abelian) {
    v.reason = "unipotent subgroup is not abelian";
    return v;
  }

  const auto count = static_cast<std::size_t>(
      std::count_if(h.elements().begin(), h.elements().end(),
                    [](const Matrix3& m) { return classify(m).type == ReflectionType::Transvection; }));
  pre.transvection_count = count;
  if (count == 0) {
    v.outcome = Outcome::Polynomial;
    v.rule = Rule::UnipotentWithoutTransvections;
    v.reason = "abelian unipotent subgroup contains no transvections";
    return v;
  }

  const auto t = transvection_subgroup(h);
  pre.transvection_subgroup_order = t.order();
  if (t.order() == h.order()) {
    v.outcome = Outcome::Polynomial;
    v.rule = Rule::UnipotentGeneratedByTransvections;
    v.reason = "unipotent Sylow subgroup is generated by transvections";
  } else {
    v.outcome = Outcome::NonPolynomial;
    v.rule = Rule::TransvectionsDoNotGenerate;
    v.reason = "unipotent subgroup contains transvections but is not generated by them";
  }
  return v;
}

}  // namespace

PolynomialityVerdict classify_polynomiality(const MatrixGroup& g, const VerdictOptions& options) {
  PolynomialityVerdict v = decide(g);

  if (options.cross_check) {
    v.falsifier = hilbert_falsify(g, options.falsifier_degree);
    const bool refuted = v.falsifier->verdict == FalsifierVerdict::NonPolynomialCertified;
    if (refuted && v.outcome == Outcome::Unknown) {
      v.outcome = Outcome::NonPolynomial;
      v.rule = Rule::HilbertFalsifier;
      v.reason += "; every degree triple is ruled out by the Hilbert function";
    } else if (refuted && v.outcome == Outcome::Polynomial) {
      v.evidence_consistent = false;
    }
  }

  if (options.candidate_invariants) {
    v.certificate = hsop_check(g, *options.candidate_invariants, options.hsop_n_max);
    const bool proves = v.certificate->certified() && v.certificate->degree_product_ok;
    if (proves && v.outcome == Outcome::Unknown) {
      v.outcome = Outcome::Polynomial;
      v.rule = Rule::HsopCertificate;
      v.reason += "; supplied invariants form an hsop with degree product |G|";
    } else if (proves && v.outcome == Outcome::NonPolynomial) {
      v.evidence_consistent = false;
    }
  }
  return v;
}

}  // namespace upinv
