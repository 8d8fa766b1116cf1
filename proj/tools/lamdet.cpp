// Command-line front end. stdout carries only the requested artifact;
// diagnostics and errors go to stderr. Exit codes: 0 ok, 1 domain error
// (JSON {"error","message"} on stderr), 2 usage error.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lamdet/io.hpp"
#include "lamdet/kernels.hpp"
#include "lamdet/verify.hpp"

using namespace lamdet;
using nlohmann::json;

namespace {

struct Options {
  int n = 0;
  int k = 0;
  int max_n = kDefaultMaxEnumerationN;
  bool force = false;
  std::string variant;
  std::string variants = "all";
  std::string registry_file;
  std::uint64_t seed = 0;
  int trials = 3;
  int bit_size = 16;
  std::string init = "generic";
  std::string format = "text";
  std::string file;
  std::string side = "left";
  std::string kind = "down-left";
  bool count_only = false;
  bool with_terms = false;
  bool numeric_only = false;
  bool no_exchange = false;
  std::string lambda_rule = "keep";
  std::string mu_rule = "keep";
  bool x0_one = false;
  std::vector<std::string> bindings;
  int repeats = 3;
};

std::string slurp_input(const std::string& file) {
  std::ostringstream buf;
  if (file.empty() || file == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(file);
    if (!in) throw Error(ErrorCode::InvalidArgument, "cannot open '" + file + "'");
    buf << in.rdbuf();
  }
  return buf.str();
}

AsmMatrix read_asm_input(const std::string& file) {
  const std::string text = slurp_input(file);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return asm_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  return validate_asm(parse_grid(text));
}

int bounded_n(const Options& o, int n) {
  if (n > o.max_n && !o.force) {
    throw Error(ErrorCode::ResourceLimit, "n=" + std::to_string(n) + " exceeds --max-n " + std::to_string(o.max_n) +
                                              "; pass --force to run anyway");
  }
  return std::max(o.max_n, n);
}

std::vector<ConventionVariant> registry(const Options& o) {
  if (o.registry_file.empty()) return default_registry();
  try {
    return registry_from_json(json::parse(slurp_input(o.registry_file)));
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

ConventionVariant chosen_variant(const Options& o) {
  if (o.variant.empty()) return o.registry_file.empty() ? default_variant() : registry(o).front();
  return find_variant(registry(o), o.variant);
}

void emit(const json& j) { std::cout << j.dump(2) << '\n'; }

Collapse parse_collapse(const std::string& s) {
  if (s == "keep") return Collapse::Keep;
  if (s == "const") return Collapse::Constant;
  if (s == "diag") return Collapse::Diagonal;
  return Collapse::One;
}

// --------------------------------------------------------------- commands

void cmd_enumerate(const Options& o) {
  const auto all = enumerate_asms(o.n, bounded_n(o, o.n));
  if (o.count_only) {
    if (o.format == "json") emit(json{{"n", o.n}, {"count", all.size()}});
    else std::cout << all.size() << '\n';
    return;
  }
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& b : all) arr.push_back(to_json(b));
    emit(arr);
    return;
  }
  for (std::size_t i = 0; i < all.size(); ++i) std::cout << (i ? "\n" : "") << format_grid(all[i].entries());
}

void cmd_cumulant(const Options& o) {
  const AsmMatrix b = read_asm_input(o.file);
  const auto c = o.side == "left" ? left_cumulant(b) : right_cumulant(b);
  if (o.format == "json") emit(to_json(c));
  else std::cout << format_grid(c.entries());
}

void cmd_fan(const Options& o) {
  const AsmMatrix b = read_asm_input(o.file);
  const auto fan = make_fan(b, parse_fan_kind(o.kind));
  if (o.format == "json") {
    emit(to_json(fan));
    return;
  }
  bool first = true;
  for (const auto& [bits, m] : fan.members) {
    std::cout << (first ? "" : "\n") << (bits.size() ? bits.str() : "-") << '\n' << format_grid(m.entries());
    first = false;
  }
}

PolyGrid poly_grid(const json& rows) {
  std::vector<std::vector<LaurentPoly>> cells;
  for (const auto& r : rows) {
    cells.emplace_back();
    for (const auto& c : r) cells.back().push_back(c.is_string() ? parse_poly(c.get<std::string>())
                                                                 : LaurentPoly(c.get<long>()));
  }
  const int h = static_cast<int>(cells.size());
  const int w = h ? static_cast<int>(cells[0].size()) : 0;
  PolyGrid g(h, w);
  for (int i = 0; i < h; ++i) {
    if (static_cast<int>(cells[i].size()) != w) throw Error(ErrorCode::ShapeMismatch, "ragged initial values");
    for (int j = 0; j < w; ++j) g(i, j) = cells[i][j];
  }
  return g;
}

void cmd_condense(const Options& o) {
  bounded_n(o, o.n);
  std::optional<CustomInit> custom;
  InitMode mode = InitMode::Generic;
  if (o.init == "ones") mode = InitMode::Ones;
  if (o.init == "file") {
    mode = InitMode::Custom;
    try {
      const json j = json::parse(slurp_input(o.file));
      custom = CustomInit{poly_grid(j.at("x0")), poly_grid(j.at("x1"))};
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  }
  const Pyramid p = condense(init_pyramid(o.n, mode, custom), chosen_variant(o));
  if (o.format == "json") emit(to_json(p));
  else std::cout << to_text(p.apex()) << '\n';
}

void cmd_closed_form(const Options& o) {
  const int k = o.k ? o.k : o.n;
  const auto cf = closed_form(o.n, k, chosen_variant(o), Backend::Parallel, bounded_n(o, k));
  if (o.format == "json") {
    emit(to_json(cf, o.with_terms));
    return;
  }
  if (o.with_terms) {
    for (const auto& t : cf.terms) std::cout << (t.bits.size() ? t.bits.str() : "-") << ' ' << to_string(t.monomial) << '\n';
    return;
  }
  std::cout << to_text(cf.poly) << '\n';
}

VerifyOptions verify_options(const Options& o) {
  VerifyOptions v;
  v.n = o.n;
  v.variants = select_variants(registry(o), o.variants);
  v.symbolic = !o.numeric_only;
  v.trials = o.trials;
  v.seed = o.seed;
  v.bit_size = o.bit_size;
  v.max_n = bounded_n(o, o.n);
  v.exchange = !o.no_exchange;
  return v;
}

void print_report(const EquivalenceReport& r, const std::string& format) {
  if (format == "json") emit(to_json(r));
  else if (format == "markdown") std::cout << to_markdown(r);
  else std::cout << to_text(r);
}

void cmd_verify(const Options& o) { print_report(verify_equivalence(verify_options(o)), o.format); }

void cmd_count(const Options& o) {
  const auto c = count_terms(o.k, bounded_n(o, o.k));
  if (o.format == "json") emit(json{{"k", o.k}, {"count", c}});
  else std::cout << c << '\n';
}

void cmd_specialize(const Options& o) {
  SpecializationRules rules;
  rules.lambda = parse_collapse(o.lambda_rule);
  rules.mu = parse_collapse(o.mu_rule);
  rules.x0_to_one = o.x0_one;
  for (const auto& b : o.bindings) {
    const auto eq = b.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::ParseError, "binding '" + b + "' must look like atom=value");
    rules.numeric[parse_atom(b.substr(0, eq))] = parse_rational(b.substr(eq + 1));
  }
  const std::string text = slurp_input(o.file);
  const auto first = text.find_first_not_of(" \t\r\n");
  LaurentPoly p;
  if (first != std::string::npos && text[first] == '{') {
    try {
      p = poly_from_json(json::parse(text));
    } catch (const json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what());
    }
  } else {
    p = parse_poly(text);
  }
  const auto out = specialize(p, rules);
  if (o.format == "json") emit(to_json(out));
  else std::cout << to_text(out) << '\n';
}

void cmd_bench(const Options& o) {
  VerifyOptions v = verify_options(o);
  json timings = json::object();
  std::optional<json> reference;
  for (auto backend : {Backend::Serial, Backend::Parallel}) {
    v.backend = backend;
    double best = 0;
    json report;
    for (int rep = 0; rep < std::max(1, o.repeats); ++rep) {
      const auto t0 = std::chrono::steady_clock::now();
      report = to_json(verify_equivalence(v));
      const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
      best = rep == 0 ? secs : std::min(best, secs);
    }
    if (reference && *reference != report)
      throw Error(ErrorCode::InvariantBroken, "serial and parallel reports differ");
    reference = report;
    timings[backend == Backend::Serial ? "serial_seconds" : "parallel_seconds"] = best;
  }
  timings["threads"] = kernels::omp::thread_count();
  if (o.format == "json") {
    emit(json{{"report", *reference}, {"timings", timings}});
    return;
  }
  std::cout << "serial   " << timings["serial_seconds"].get<double>() << " s\n"
            << "parallel " << timings["parallel_seconds"].get<double>() << " s (" << timings["threads"].get<int>()
            << " threads)\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lambda-determinant engine: ASMs, interlacing, condensation and closed forms"};
  app.require_subcommand(1);
  Options o;
  const std::vector<std::string> text_json{"text", "json"};

  auto add_format = [&](CLI::App* c, const std::vector<std::string>& allowed) {
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember(allowed));
  };
  auto add_guard = [&](CLI::App* c) {
    c->add_option("--max-n", o.max_n, "Largest size allowed without --force")->check(CLI::PositiveNumber);
    c->add_flag("--force", o.force, "Run beyond --max-n");
  };
  auto add_variant = [&](CLI::App* c) {
    c->add_option("--variant", o.variant, "Convention variant id (default: the validated one)");
    c->add_option("--registry", o.registry_file, "JSON convention registry replacing the shipped one");
  };
  auto add_verify_flags = [&](CLI::App* c) {
    c->add_option("--n", o.n, "Largest pyramid size")->required()->check(CLI::Range(2, 1000));
    c->add_option("--variants", o.variants, "Comma-separated variant ids, or 'all'");
    c->add_option("--registry", o.registry_file, "JSON convention registry replacing the shipped one");
    c->add_option("--seed", o.seed, "Seed for random valuations");
    c->add_option("--trials", o.trials, "Random valuations per size")->check(CLI::NonNegativeNumber);
    c->add_option("--bits", o.bit_size, "Bit size of random valuations")->check(CLI::Range(1, 62));
    c->add_flag("--numeric-only", o.numeric_only, "Skip the symbolic comparison");
    c->add_flag("--no-exchange", o.no_exchange, "Skip the per-ASM exchange identity");
    add_guard(c);
  };

  auto* enumerate = app.add_subcommand("enumerate", "List every n x n ASM in lexicographic order");
  enumerate->add_option("--n", o.n, "Size")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--count-only", o.count_only, "Print only the count");
  add_format(enumerate, text_json);
  add_guard(enumerate);

  auto* cumulant = app.add_subcommand("cumulant", "Left or right corner-sum matrix of an ASM");
  cumulant->add_option("--side", o.side, "left or right")->check(CLI::IsMember({"left", "right"}));
  cumulant->add_option("--file", o.file, "Matrix file (default stdin)");
  add_format(cumulant, text_json);

  auto* fan = app.add_subcommand("fan", "Members of an up/down operator applied to an ASM");
  fan->add_option("--kind", o.kind, "down-left, up-left, down-right or up-right")
      ->check(CLI::IsMember({"down-left", "up-left", "down-right", "up-right"}));
  fan->add_option("--file", o.file, "Matrix file (default stdin)");
  add_format(fan, text_json);

  auto* condense_cmd = app.add_subcommand("condense", "Run the octahedral recurrence and print the apex");
  condense_cmd->add_option("--n", o.n, "Pyramid size")->required()->check(CLI::PositiveNumber);
  condense_cmd->add_option("--init", o.init, "generic, ones or file")->check(CLI::IsMember({"generic", "ones", "file"}));
  condense_cmd->add_option("--file", o.file, "JSON {\"x0\": [[...]], \"x1\": [[...]]} for --init file");
  add_variant(condense_cmd);
  add_format(condense_cmd, text_json);
  add_guard(condense_cmd);

  auto* closed = app.add_subcommand("closed-form", "Closed-form ASM expansion of x[k]_{1,1}");
  closed->add_option("--n", o.n, "Pyramid size")->required()->check(CLI::PositiveNumber);
  closed->add_option("--k", o.k, "Layer (default n)")->check(CLI::PositiveNumber);
  closed->add_flag("--terms", o.with_terms, "List the individual terms");
  add_variant(closed);
  add_format(closed, text_json);
  add_guard(closed);

  auto* verify = app.add_subcommand("verify", "Compare condensation with the closed form per convention variant");
  add_verify_flags(verify);
  add_format(verify, {"text", "json", "markdown"});

  auto* count = app.add_subcommand("count", "Number of closed-form terms for layer k");
  count->add_option("--k", o.k, "Layer")->required()->check(CLI::PositiveNumber);
  add_format(count, text_json);
  add_guard(count);

  auto* spec = app.add_subcommand("specialize", "Substitute into a Laurent polynomial read from stdin or --file");
  const std::vector<std::string> collapse_modes{"keep", "const", "diag", "one"};
  spec->add_option("--lambda", o.lambda_rule, "keep, const, diag or one")->check(CLI::IsMember(collapse_modes));
  spec->add_option("--mu", o.mu_rule, "keep, const, diag or one")->check(CLI::IsMember(collapse_modes));
  spec->add_flag("--x0-one", o.x0_one, "Set every x0 atom to 1");
  spec->add_option("--bind", o.bindings, "Numeric binding atom=value, repeatable");
  spec->add_option("--file", o.file, "Polynomial file (default stdin)");
  add_format(spec, text_json);

  auto* bench = app.add_subcommand("bench", "Time verify on the serial and parallel kernels");
  add_verify_flags(bench);
  bench->add_option("--repeats", o.repeats, "Timed repetitions per backend")->check(CLI::PositiveNumber);
  add_format(bench, text_json);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (*enumerate) cmd_enumerate(o);
    else if (*cumulant) cmd_cumulant(o);
    else if (*fan) cmd_fan(o);
    else if (*condense_cmd) cmd_condense(o);
    else if (*closed) cmd_closed_form(o);
    else if (*verify) cmd_verify(o);
    else if (*count) cmd_count(o);
    else if (*spec) cmd_specialize(o);
    else if (*bench) cmd_bench(o);
  } catch (const Error& e) {
    std::cerr << json{{"error", std::string(to_string(e.code()))}, {"message", e.what()}}.dump() << '\n';
    return 1;
  }
  return 0;
}
