#pragma once

// Equivalence harness: compares the condensed apex with the closed-form
// expansion for each convention variant, symbolically and at seeded random
// valuations. Mismatches are data, never exceptions.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "lamdet/engine.hpp"

namespace lamdet {

struct Mismatch {
  int n = 0;
  std::uint64_t seed = 0;  // valuation seed, replayable with replay_mismatch
  std::string condensed;   // exact values at that valuation
  std::string closed_form;
};

struct SizeVerdict {
  int n = 0;
  std::optional<bool> symbolic_equal;  // unset when only numeric checks ran
  bool mu_trivial_equal = false;       // equality after mu -> 1
  bool integer_coefficients = false;   // of the condensed apex
  std::size_t condensed_terms = 0;
  std::size_t closed_form_terms = 0;
  int numeric_trials = 0;
  int numeric_agreements = 0;
  std::optional<Mismatch> first_mismatch;
};

struct ExchangeSummary {
  int k = 0;
  int total = 0;
  int generic_agree = 0;
  int mu_trivial_agree = 0;
};

struct VariantVerdict {
  ConventionVariant variant;
  std::vector<SizeVerdict> sizes;
  std::optional<bool> symbolic_equal;  // over every size tested
  int numeric_trials = 0;
  std::optional<Mismatch> first_mismatch;
  std::optional<int> minimal_mismatch_n;
  std::optional<ExchangeSummary> exchange;
  /// Apexes and exchange identities all agree once mu -> 1.
  bool lambda_x_agree = false;
  /// Some check failed, and lambda_x_agree: the disagreement sits in the
  /// mu weight alone.
  bool mismatch_localized_to_mu = false;
};

struct VerifyOptions {
  int n = 2;
  std::vector<ConventionVariant> variants;
  bool symbolic = true;
  int trials = 3;
  std::uint64_t seed = 0;
  int bit_size = 16;
  int max_n = kDefaultMaxEnumerationN;
  bool exchange = true;
  int exchange_k = 3;
  Backend backend = Backend::Parallel;
};

struct EquivalenceReport {
  static constexpr int kSchemaVersion = 1;
  int n = 0;
  int k = 0;
  std::uint64_t seed = 0;
  int trials = 0;
  int bit_size = 0;
  bool symbolic = true;
  std::vector<VariantVerdict> verdicts;
  /// First variant, in registry order, equal symbolically at every size.
  std::optional<std::string> validated_variant;
};

/// Seed of numeric trial `trial` at pyramid size n.
std::uint64_t trial_seed(std::uint64_t seed, int n, int trial);

EquivalenceReport verify_equivalence(const VerifyOptions& options);

/// Re-evaluates both sides at the mismatch's seed; returns (condensed, closed form).
std::pair<Rational, Rational> replay_mismatch(const Mismatch& m, const ConventionVariant& variant, int bit_size);

nlohmann::json to_json(const EquivalenceReport& r);
/// The conventions ledger: one row per variant, one column per size.
std::string to_markdown(const EquivalenceReport& r);
std::string to_text(const EquivalenceReport& r);

}  // namespace lamdet
