#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "upinv/group.hpp"
#include "upinv/invariants.hpp"
#include "upinv/polynomial.hpp"

namespace upinv {

enum class Outcome { Polynomial, NonPolynomial, Unknown };

/// Which argument produced the outcome.
enum class Rule {
  /// p does not divide |G|: polynomial iff generated by pseudoreflections
  /// (Chevalley-Shephard-Todd-Serre, both directions).
  NonmodularReflectionGroup,
  NonmodularNotReflectionGroup,
  /// Abelian unipotent subgroup without transvections.
  UnipotentWithoutTransvections,
  /// Unipotent Sylow subgroup generated by its transvections.
  UnipotentGeneratedByTransvections,
  /// Abelian unipotent subgroup containing transvections without being
  /// generated by them.
  TransvectionsDoNotGenerate,
  /// Every degree triple ruled out by the Hilbert function.
  HilbertFalsifier,
  /// Supplied invariants certified as an hsop whose degree product is |G|.
  HsopCertificate,
  /// Hypotheses of the classification not met.
  HypothesesNotMet,
};

std::string_view to_string(Outcome o) noexcept;
std::string_view to_string(Rule r) noexcept;
std::optional<Outcome> outcome_from_string(std::string_view s) noexcept;
std::optional<Rule> rule_from_string(std::string_view s) noexcept;

/// The checks the pipeline ran; fields stay empty when the pipeline stopped earlier.
struct Preconditions {
  std::uint32_t p = 0;
  std::size_t group_order = 0;
  bool p_odd = false;
  bool upper_triangular = false;
  std::optional<std::size_t> unipotent_order;
  std::optional<bool> unipotent_abelian;
  std::optional<std::size_t> transvection_count;
  std::optional<std::size_t> transvection_subgroup_order;
  std::optional<std::size_t> pseudoreflection_subgroup_order;

  bool operator==(const Preconditions&) const = default;
};

struct VerdictOptions {
  /// Attach hilbert_falsify evidence.
  bool cross_check = false;
  std::uint32_t falsifier_degree = 12;
  /// Optional candidate basic invariants to certify and attach.
  std::optional<std::array<Polynomial, 3>> candidate_invariants;
  std::optional<std::uint32_t> hsop_n_max;
};

struct PolynomialityVerdict {
  Outcome outcome = Outcome::Unknown;
  Rule rule = Rule::HypothesesNotMet;
  std::string reason;
  Preconditions preconditions;
  std::optional<FalsifierReport> falsifier;
  std::optional<HsopCertificate> certificate;
  /// False when attached evidence contradicts the rule-based outcome.
  bool evidence_consistent = true;

  bool operator==(const PolynomialityVerdict&) const = default;
};

PolynomialityVerdict classify_polynomiality(const MatrixGroup& g, const VerdictOptions& options = {});

}  // namespace upinv
