#include "lamdet/verify.hpp"

#include <set>
#include <sstream>

namespace lamdet {

namespace {

constexpr int kWitnessSearch = 64;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

struct Sides {
  LaurentPoly condensed;
  LaurentPoly closed;
};

Sides both_sides(int n, const ConventionVariant& v, Backend backend, int max_n) {
  Sides s;
  s.condensed = condense(init_pyramid(n, InitMode::Generic), v, backend).apex();
  s.closed = closed_form(n, n, v, backend, max_n).poly;
  return s;
}

std::set<VarAtom> joint_atoms(const Sides& s) {
  auto atoms = s.condensed.atoms();
  atoms.merge(s.closed.atoms());
  return atoms;
}

LaurentPoly drop_mu(const LaurentPoly& p) {
  SpecializationRules r;
  r.mu = Collapse::One;
  return specialize(p, r);
}

std::optional<Mismatch> numeric_check(const Sides& s, int n, std::uint64_t seed, int trial, int bit_size) {
  const auto ts = trial_seed(seed, n, trial);
  const auto val = random_valuation(joint_atoms(s), ts, bit_size);
  const Rational a = eval(s.condensed, val), b = eval(s.closed, val);
  if (a == b) return std::nullopt;
  return Mismatch{n, ts, rational_to_string(a), rational_to_string(b)};
}

}  // namespace

std::uint64_t trial_seed(std::uint64_t seed, int n, int trial) {
  return splitmix64(splitmix64(seed ^ (static_cast<std::uint64_t>(n) << 32)) + static_cast<std::uint64_t>(trial));
}

EquivalenceReport verify_equivalence(const VerifyOptions& o) {
  if (o.n < 2) throw Error(ErrorCode::InvalidArgument, "verification needs n >= 2");
  if (o.n > o.max_n)
    throw Error(ErrorCode::ResourceLimit,
                "n=" + std::to_string(o.n) + " exceeds the symbolic bound " + std::to_string(o.max_n));
  if (o.trials < 0) throw Error(ErrorCode::InvalidArgument, "trials must be >= 0");

  EquivalenceReport report;
  report.n = o.n;
  report.k = o.n;
  report.seed = o.seed;
  report.trials = o.trials;
  report.bit_size = o.bit_size;
  report.symbolic = o.symbolic;

  for (const auto& v : o.variants) {
    VariantVerdict verdict;
    verdict.variant = v;
    bool all_equal = true;
    bool lambda_x = true;
    for (int m = 2; m <= o.n; ++m) {
      const Sides s = both_sides(m, v, o.backend, o.max_n);
      SizeVerdict sv;
      sv.n = m;
      sv.condensed_terms = s.condensed.term_count();
      sv.closed_form_terms = s.closed.term_count();
      sv.integer_coefficients = s.condensed.has_integer_coefficients();
      sv.mu_trivial_equal = drop_mu(s.condensed) == drop_mu(s.closed);
      const bool equal = s.condensed == s.closed;
      if (o.symbolic) sv.symbolic_equal = equal;

      for (int t = 0; t < o.trials; ++t) {
        ++sv.numeric_trials;
        auto mm = numeric_check(s, m, o.seed, t, o.bit_size);
        if (!mm) {
          ++sv.numeric_agreements;
        } else if (!sv.first_mismatch) {
          sv.first_mismatch = std::move(mm);
        }
      }
      // A symbolic difference always gets a replayable witness.
      for (int t = o.trials; !equal && !sv.first_mismatch && t < o.trials + kWitnessSearch; ++t)
        sv.first_mismatch = numeric_check(s, m, o.seed, t, o.bit_size);

      const bool differs = !equal;
      all_equal = all_equal && !differs;
      lambda_x = lambda_x && sv.mu_trivial_equal;
      verdict.numeric_trials += sv.numeric_trials;
      if (differs && !verdict.minimal_mismatch_n) verdict.minimal_mismatch_n = m;
      if (sv.first_mismatch && !verdict.first_mismatch) verdict.first_mismatch = sv.first_mismatch;
      verdict.sizes.push_back(std::move(sv));
    }
    if (o.symbolic) verdict.symbolic_equal = all_equal;

    bool exchange_ok = true;
    if (o.exchange) {
      ExchangeSummary ex;
      ex.k = o.exchange_k;
      for (const auto& b : enumerate_asms(o.exchange_k, o.max_n)) {
        ++ex.total;
        const bool generic = exchange_identity(b, v, false).equal;
        ex.generic_agree += generic;
        ex.mu_trivial_agree += exchange_identity(b, v, true).equal;
      }
      exchange_ok = ex.generic_agree == ex.total;
      lambda_x = lambda_x && ex.mu_trivial_agree == ex.total;
      verdict.exchange = ex;
    }
    verdict.lambda_x_agree = lambda_x;
    verdict.mismatch_localized_to_mu = lambda_x && (!all_equal || !exchange_ok);
    if (o.symbolic && all_equal && !report.validated_variant) report.validated_variant = v.id;
    report.verdicts.push_back(std::move(verdict));
  }
  return report;
}

std::pair<Rational, Rational> replay_mismatch(const Mismatch& m, const ConventionVariant& variant, int bit_size) {
  const Sides s = both_sides(m.n, variant, Backend::Serial, std::max(m.n, kDefaultMaxEnumerationN));
  const auto val = random_valuation(joint_atoms(s), m.seed, bit_size);
  return {eval(s.condensed, val), eval(s.closed, val)};
}

// ------------------------------------------------------------------ output

namespace {

nlohmann::json mismatch_json(const std::optional<Mismatch>& m) {
  if (!m) return nullptr;
  return {{"n", m->n}, {"seed", m->seed}, {"condensed", m->condensed}, {"closed_form", m->closed_form}};
}

nlohmann::json optional_bool(const std::optional<bool>& b) { return b ? nlohmann::json(*b) : nlohmann::json(nullptr); }

std::string verdict_word(const SizeVerdict& s) {
  if (s.symbolic_equal) return *s.symbolic_equal ? "equal" : "differs";
  return s.numeric_agreements == s.numeric_trials ? "agrees numerically" : "differs";
}

}  // namespace

nlohmann::json to_json(const EquivalenceReport& r) {
  nlohmann::json verdicts = nlohmann::json::array();
  for (const auto& v : r.verdicts) {
    nlohmann::json sizes = nlohmann::json::array();
    for (const auto& s : v.sizes) {
      sizes.push_back({{"n", s.n},
                       {"symbolic_equal", optional_bool(s.symbolic_equal)},
                       {"mu_trivial_equal", s.mu_trivial_equal},
                       {"integer_coefficients", s.integer_coefficients},
                       {"condensed_terms", s.condensed_terms},
                       {"closed_form_terms", s.closed_form_terms},
                       {"numeric_trials", s.numeric_trials},
                       {"numeric_agreements", s.numeric_agreements},
                       {"first_mismatch", mismatch_json(s.first_mismatch)}});
    }
    nlohmann::json ex = nullptr;
    if (v.exchange) {
      ex = {{"k", v.exchange->k},
            {"total", v.exchange->total},
            {"generic_agree", v.exchange->generic_agree},
            {"mu_trivial_agree", v.exchange->mu_trivial_agree}};
    }
    verdicts.push_back({{"variant", to_json(v.variant)},
                        {"symbolic_equal", optional_bool(v.symbolic_equal)},
                        {"numeric_trials", v.numeric_trials},
                        {"first_mismatch", mismatch_json(v.first_mismatch)},
                        {"minimal_mismatch_n", v.minimal_mismatch_n ? nlohmann::json(*v.minimal_mismatch_n) : nullptr},
                        {"exchange_identity", ex},
                        {"lambda_x_agree", v.lambda_x_agree},
                        {"mismatch_localized_to_mu", v.mismatch_localized_to_mu},
                        {"sizes", sizes}});
  }
  return {{"schema_version", EquivalenceReport::kSchemaVersion},
          {"n", r.n},
          {"k", r.k},
          {"seed", r.seed},
          {"trials", r.trials},
          {"bit_size", r.bit_size},
          {"symbolic", r.symbolic},
          {"validated_variant", r.validated_variant ? nlohmann::json(*r.validated_variant) : nullptr},
          {"verdicts", verdicts}};
}

std::string to_markdown(const EquivalenceReport& r) {
  std::ostringstream out;
  out << "# Conventions ledger\n\n";
  out << "Apex of the size-n pyramid against the closed-form expansion, n = 2.." << r.n << ", seed " << r.seed
      << ", " << r.trials << " numeric trials per size.\n\n";
  out << "| variant | mu reading | delta | A-side mu shift |";
  for (int m = 2; m <= r.n; ++m) out << " n=" << m << " |";
  out << " exchange (generic) | exchange (mu=1) | mismatch witness |\n";
  out << "|---|---|---|---|";
  for (int m = 2; m <= r.n; ++m) out << "---|";
  out << "---|---|---|\n";
  for (const auto& v : r.verdicts) {
    out << "| " << v.variant.id << " | " << to_string(v.variant.reading) << " | " << v.variant.recurrence_mu_col
        << " | " << to_string(v.variant.mu_shift) << " |";
    for (const auto& s : v.sizes) out << ' ' << verdict_word(s) << (s.mu_trivial_equal ? "" : " (mu=1 differs)") << " |";
    if (v.exchange) {
      out << ' ' << v.exchange->generic_agree << '/' << v.exchange->total << " | " << v.exchange->mu_trivial_agree
          << '/' << v.exchange->total << " |";
    } else {
      out << " - | - |";
    }
    if (v.first_mismatch) {
      out << " n=" << v.first_mismatch->n << " seed " << v.first_mismatch->seed << " |";
    } else {
      out << " - |";
    }
    out << '\n';
  }
  out << '\n';
  if (r.validated_variant) {
    out << "Validated variant: `" << *r.validated_variant << "`.\n";
  } else {
    out << "No variant validated symbolically.\n";
  }
  for (const auto& v : r.verdicts) {
    if (v.mismatch_localized_to_mu)
      out << "- `" << v.variant.id << "`: lambda and x parts agree after mu -> 1; the mismatch is in the mu weight.\n";
  }
  return out.str();
}

std::string to_text(const EquivalenceReport& r) {
  std::ostringstream out;
  for (const auto& v : r.verdicts) {
    out << v.variant.id << ':';
    for (const auto& s : v.sizes) out << " n=" << s.n << ' ' << verdict_word(s) << ';';
    if (v.exchange)
      out << " exchange " << v.exchange->generic_agree << '/' << v.exchange->total << " (mu=1 "
          << v.exchange->mu_trivial_agree << '/' << v.exchange->total << ')';
    if (v.first_mismatch) out << " witness n=" << v.first_mismatch->n << " seed=" << v.first_mismatch->seed;
    out << '\n';
  }
  out << "validated: " << (r.validated_variant ? *r.validated_variant : std::string("none")) << '\n';
  return out.str();
}

}  // namespace lamdet
