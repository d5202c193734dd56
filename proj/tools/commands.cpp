#include "commands.hpp"

#include "toric/errors.hpp"
#include "toric/hermite_oracle.hpp"
#include "toric/json_io.hpp"
#include "toric/lattice_fan.hpp"
#include "toric/oracles.hpp"
#include "toric/polysys.hpp"
#include "toric/stability_calc.hpp"
#include "toric/stanley_reisner.hpp"

#include <CLI11.hpp>
#include <openssl/evp.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <regex>
#include <sstream>

namespace toricctl {

using toric::Json;

std::string sha256_hex(const std::string& bytes) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  if (EVP_Digest(bytes.data(), bytes.size(), digest, &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 failed");
  }
  std::ostringstream hex;
  for (unsigned int i = 0; i < length; ++i) hex << std::hex << std::setw(2) << std::setfill('0') << int(digest[i]);
  return hex.str();
}

namespace {

// A fan that fails validation; carries the report for the diagnostic.
struct InvalidFan : std::runtime_error {
  explicit InvalidFan(toric::ValidationReport r) : std::runtime_error("fan fails validation"), report(std::move(r)) {}
  toric::ValidationReport report;
};

Json violations_to_json(const toric::ValidationReport& report) {
  Json out = Json::array();
  for (const auto& v : report.violations) out.push_back({{"axiom", v.axiom}, {"cone", v.cone}, {"detail", v.detail}});
  return out;
}

std::string completeness_name(toric::Completeness c) {
  switch (c) {
    case toric::Completeness::complete:
      return "complete";
    case toric::Completeness::incomplete:
      return "incomplete";
    case toric::Completeness::unknown:
      return "unknown";
  }
  return "unknown";
}

// A readable file, or a builtin name such as cp(2) or hirzebruch:1.
struct FanInput {
  toric::Fan fan;
  Json canonical;
  std::string source;
};

FanInput load_fan(const std::string& arg) {
  if (std::filesystem::exists(arg)) {
    toric::Fan fan = toric::fan_from_json(toric::read_json_file(arg));
    return {fan, toric::fan_to_json(fan), arg};
  }
  static const std::regex builtin(R"((cp|hirzebruch|affine)[(:]\d+\)?)");
  if (!std::regex_match(arg, builtin)) throw toric::ParseError("", "cannot read " + arg);
  toric::Fan fan = toric::builtin_fan(arg);
  return {fan, toric::fan_to_json(fan), arg};
}

FanInput load_valid_fan(const std::string& arg) {
  FanInput in = load_fan(arg);
  auto report = toric::validate_fan(in.fan);
  if (!report.valid()) throw InvalidFan(std::move(report));
  return in;
}

toric::GaussianRational parse_gaussian(const std::string& text) {
  const auto colon = text.find(':');
  try {
    if (colon == std::string::npos) return toric::GaussianRational(toric::parse_rational(text));
    return {toric::parse_rational(text.substr(0, colon)), toric::parse_rational(text.substr(colon + 1))};
  } catch (const std::invalid_argument& e) {
    throw toric::ParseError("", "bad Gaussian rational '" + text + "': " + e.what());
  }
}

Json gaussian_to_json(const toric::GaussianRational& z) {
  return Json::array({toric::to_string(z.re), toric::to_string(z.im)});
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv("TORICCTL_SEED"); env != nullptr && *env != '\0') {
    try {
      std::size_t used = 0;
      const auto value = std::stoull(env, &used, 10);
      if (used == std::string(env).size()) return value;
    } catch (const std::exception&) {
    }
    throw toric::ParseError("", std::string("TORICCTL_SEED is not an unsigned integer: ") + env);
  }
  return kDefaultSeed;
}

class Emitter {
 public:
  explicit Emitter(std::ostream& out) : out_(out) {}

  void emit(const std::string& command, const std::string& anchor, const Json& inputs, Json result,
            std::optional<std::uint64_t> seed = std::nullopt) {
    Json doc{{"tool_version", kToolVersion},
             {"command", command},
             {"anchor", anchor},
             {"index_base", 0},
             {"input_hash", sha256_hex(inputs.dump())},
             {"result", std::move(result)}};
    if (seed) doc["seed"] = *seed;
    out_ << doc.dump(2) << "\n";
  }

 private:
  std::ostream& out_;
};

std::string e1_table(const toric::E1Support& table) {
  // Symbols: '.' zero, '?' possibly nonzero, '~' tail beyond the truncation.
  const auto width = std::max<std::size_t>(3, std::to_string(table.s_hi).size() + 1);
  std::ostringstream text;
  text << std::setw(4) << "k\\s";
  for (long s = table.s_lo; s <= table.s_hi; ++s) text << std::setw(static_cast<int>(width)) << s;
  text << "\n";
  for (std::size_t k = 0; k < table.cells.size(); ++k) {
    text << std::setw(4) << k;
    for (auto status : table.cells[k]) {
      const char* symbol = status == toric::CellStatus::zero ? "." : status == toric::CellStatus::possibly_nonzero ? "?" : "~";
      text << std::setw(static_cast<int>(width)) << symbol;
    }
    text << "\n";
  }
  text << "legend: . zero  ? possibly_nonzero  ~ tail_unknown\n";
  return text.str();
}

Json analyze(const toric::Fan& fan) {
  Json result{{"fan", toric::fan_to_json(fan)},
              {"valid", true},
              {"smooth", toric::is_smooth(fan)},
              {"completeness", completeness_name(toric::completeness(fan))},
              {"spans_lattice", toric::spans_lattice(fan)}};
  const auto prim = toric::primitive_collections(fan);
  result["primitive_collections"] = toric::index_sets_to_json(prim);
  result["r_min"] = prim.empty() ? Json(nullptr) : Json(prim.front().size());
  const auto search = toric::find_degree_vector(fan);
  Json degrees{{"found", search.degrees.has_value()}, {"bound", search.bound}, {"bound_hit", search.bound_hit}};
  if (search.degrees) degrees["degrees"] = search.degrees->entries();
  result["degree_vector"] = std::move(degrees);
  if (toric::spans_lattice(fan)) result["cox_group_rank"] = toric::cox_group_rank(fan);
  return result;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Toric fan, polynomial-space and stability toolkit", "toricctl"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);

  std::string fan_arg;
  std::string complex_arg;
  std::string system_arg;
  int n = 1;
  std::optional<std::uint64_t> seed_flag;
  std::string format = "json";
  std::vector<long> degrees_arg;
  std::vector<long> shift_arg;
  std::vector<long> second_shift_arg;
  std::vector<std::string> values_arg;
  std::string at_arg;
  std::optional<long> s_lo;
  std::optional<long> s_hi;
  int trials = -1;
  int height = 50;
  std::optional<int> vk;
  std::optional<int> vn;
  std::optional<int> vd;
  long max_d_prime = 8;
  int samples = 1000;
  int max_n = 6;

  auto fan_cmd = app.add_subcommand("fan", "Fan predicates and constructions");
  fan_cmd->require_subcommand(1);
  auto fan_analyze = fan_cmd->add_subcommand("analyze", "Validate and run every fan predicate");
  fan_analyze->add_option("fan", fan_arg, "Fan JSON file or builtin name")->required();
  auto fan_validate = fan_cmd->add_subcommand("validate", "List violated fan axioms");
  fan_validate->add_option("fan", fan_arg, "Fan JSON file or builtin name")->required();
  auto fan_power_cmd = fan_cmd->add_subcommand("power", "Combinatorial power fan with n-fold blocks");
  fan_power_cmd->add_option("fan", fan_arg, "Fan JSON file or builtin name")->required();
  fan_power_cmd->add_option("--n", n, "Power")->required()->check(CLI::PositiveNumber);

  auto complex_cmd = app.add_subcommand("complex", "Simplicial complex operations");
  complex_cmd->require_subcommand(1);
  auto complex_power_cmd = complex_cmd->add_subcommand("power", "Polyhedral power K(n)");
  auto complex_prims = complex_cmd->add_subcommand("primitives", "Minimal non-faces");
  for (auto* sub : {complex_power_cmd, complex_prims}) {
    auto* c = sub->add_option("--complex", complex_arg, "Complex JSON file");
    auto* f = sub->add_option("--fan", fan_arg, "Fan JSON file or builtin name; uses its underlying complex");
    c->excludes(f);
  }
  complex_power_cmd->add_option("--n", n, "Power")->required()->check(CLI::PositiveNumber);

  auto poly_cmd = app.add_subcommand("poly", "Polynomial systems");
  poly_cmd->require_subcommand(1);
  auto poly_check = poly_cmd->add_subcommand("check", "Membership test");
  poly_check->add_option("--fan", fan_arg, "Fan JSON file or builtin name")->required();
  poly_check->add_option("--system", system_arg, "System JSON file")->required();
  poly_check->add_option("--n", n, "Multiplicity bound")->required()->check(CLI::PositiveNumber);
  auto poly_stabilize = poly_cmd->add_subcommand("stabilize", "Stabilization map on a root-form system");
  poly_stabilize->add_option("--system", system_arg, "Root-form system JSON file")->required();
  poly_stabilize->add_option("--a", shift_arg, "Degree increments")->required()->delimiter(',');
  poly_stabilize->add_option("--then", second_shift_arg, "Second increment, composed after the first")->delimiter(',');
  poly_stabilize->add_option("--fan", fan_arg, "Also report membership before and after");
  poly_stabilize->add_option("--n", n, "Multiplicity bound for the membership report")->check(CLI::PositiveNumber);
  auto poly_jet = poly_cmd->add_subcommand("jet", "Jet section or jet evaluation");
  poly_jet->add_option("--b", values_arg, "Target jet values p/q or p/q:r/s")->delimiter(',');
  poly_jet->add_option("--system", system_arg, "Coefficient-form system to evaluate");
  poly_jet->add_option("--at", at_arg, "Evaluation point p/q or p/q:r/s");
  poly_jet->add_option("--n", n, "Jet length")->check(CLI::PositiveNumber);

  auto oracle_cmd = app.add_subcommand("oracle", "Seeded certification suites");
  oracle_cmd->require_subcommand(1);
  auto oracle_vandermonde = oracle_cmd->add_subcommand("vandermonde", "Confluent Vandermonde rank and Hermite dimension");
  oracle_vandermonde->add_option("--k", vk, "Number of nodes")->check(CLI::PositiveNumber);
  oracle_vandermonde->add_option("--n", vn, "Derivative orders")->check(CLI::PositiveNumber);
  oracle_vandermonde->add_option("--d", vd, "Degree")->check(CLI::PositiveNumber);
  oracle_vandermonde->add_option("--height", height, "Height bound of the rational nodes")->check(CLI::PositiveNumber);
  auto oracle_band = oracle_cmd->add_subcommand("band", "A_t enumeration against the closed form");
  oracle_band->add_option("--max-d-prime", max_d_prime, "Largest floor(d_min/n) sampled");
  auto oracle_complement = oracle_cmd->add_subcommand("complement", "Polyhedral product versus arrangement");
  oracle_complement->add_option("--samples", samples, "Sampled points per fan")->check(CLI::NonNegativeNumber);
  auto oracle_jet = oracle_cmd->add_subcommand("jetsection", "Jet of the jet section at 0");
  oracle_jet->add_option("--max-n", max_n, "Largest jet length")->check(CLI::PositiveNumber);
  auto oracle_membership = oracle_cmd->add_subcommand("membership", "Exact gcd test versus root-multiset test");
  auto oracle_stab = oracle_cmd->add_subcommand("stabilization", "Stabilization laws");
  for (auto* sub : {oracle_vandermonde, oracle_band, oracle_complement, oracle_jet, oracle_membership, oracle_stab}) {
    sub->add_option("--seed", seed_flag, "64-bit seed; overrides TORICCTL_SEED");
    sub->add_option("--trials", trials, "Number of random trials")->check(CLI::NonNegativeNumber);
  }

  auto stability_cmd = app.add_subcommand("stability", "Stability dimensions and E1 vanishing");
  stability_cmd->require_subcommand(1);
  auto stability_report_cmd = stability_cmd->add_subcommand("report", "Stability dimension and bookkeeping");
  auto stability_e1 = stability_cmd->add_subcommand("e1", "E1 vanishing table");
  for (auto* sub : {stability_report_cmd, stability_e1}) {
    sub->add_option("--fan", fan_arg, "Fan JSON file or builtin name")->required();
    sub->add_option("--degrees", degrees_arg, "Degree vector, comma separated")->required()->delimiter(',');
    sub->add_option("--n", n, "Multiplicity bound")->required()->check(CLI::PositiveNumber);
  }
  stability_e1->add_option("--s-lo", s_lo, "First s column");
  stability_e1->add_option("--s-hi", s_hi, "Last s column");
  stability_e1->add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));

  auto fail = [&](const std::string& kind, const std::string& message, Json extra = Json::object()) {
    extra["error"] = kind;
    extra["message"] = message;
    err << extra.dump(2) << "\n";
  };

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  Emitter emitter(out);
  try {
    if (fan_analyze->parsed()) {
      const FanInput in = load_fan(fan_arg);
      auto report = toric::validate_fan(in.fan);
      if (!report.valid()) throw InvalidFan(std::move(report));
      Json result = analyze(in.fan);
      result["source"] = in.source;
      emitter.emit("fan analyze", "primitive collections = minimal non-faces of K_Σ; r_min = min |P|",
                   {{"fan", in.canonical}}, std::move(result));
      return kOk;
    }
    if (fan_validate->parsed()) {
      const FanInput in = load_fan(fan_arg);
      const auto report = toric::validate_fan(in.fan);
      emitter.emit("fan validate", "simplicial, strongly convex, closed under faces and intersections",
                   {{"fan", in.canonical}}, {{"valid", report.valid()}, {"violations", violations_to_json(report)}});
      return report.valid() ? kOk : kInvalidFan;
    }
    if (fan_power_cmd->parsed()) {
      const FanInput in = load_valid_fan(fan_arg);
      const toric::Fan power = toric::fan_power(in.fan, n);
      const auto report = toric::validate_fan(power);
      std::map<std::string, long> by_axiom;
      for (const auto& v : report.violations) ++by_axiom[v.axiom];
      emitter.emit("fan power", "rays n_{i,j} = n_i in block j, vertex i*n + j; cones = faces of K_Σ(n)",
                   {{"fan", in.canonical}, {"n", n}},
                   {{"fan", toric::fan_to_json(power)},
                    {"n", n},
                    {"geometric_fan", report.valid()},
                    {"violations_by_axiom", by_axiom}});
      return kOk;
    }
    if (complex_power_cmd->parsed() || complex_prims->parsed()) {
      if (complex_arg.empty() == fan_arg.empty()) throw toric::ParseError("", "give exactly one of --complex and --fan");
      Json canonical;
      toric::SimplicialComplex k;
      if (!complex_arg.empty()) {
        k = toric::complex_from_json(toric::read_json_file(complex_arg));
        canonical = {{"complex", toric::complex_to_json(k)}};
      } else {
        const FanInput in = load_valid_fan(fan_arg);
        k = toric::underlying_complex(in.fan);
        canonical = {{"fan", in.canonical}};
      }
      if (complex_power_cmd->parsed()) {
        canonical["n"] = n;
        const auto power = toric::complex_power(k, n);
        emitter.emit("complex power", "τ ∈ K(n) iff no σ×[n] ⊆ τ for a minimal non-face σ of K", canonical,
                     {{"complex", toric::complex_to_json(power)},
                      {"face_count", power.faces().size()},
                      {"minimal_non_faces", toric::index_sets_to_json(toric::minimal_non_faces(power))}});
      } else {
        const auto prim = toric::minimal_non_faces(k);
        emitter.emit("complex primitives", "minimal non-faces of K", canonical,
                     {{"minimal_non_faces", toric::index_sets_to_json(prim)},
                      {"r_min", prim.empty() ? Json(nullptr) : Json(prim.front().size())}});
      }
      return kOk;
    }
    if (poly_check->parsed()) {
      const FanInput in = load_valid_fan(fan_arg);
      const Json doc = toric::read_json_file(system_arg);
      const toric::PolySystem system = toric::system_from_json(doc);
      const toric::Membership verdict = toric::is_member(system, in.fan, n);
      const bool coefficient = std::holds_alternative<toric::CoeffSystem>(system);
      const auto degrees = std::visit([](const auto& s) { return s.degrees(); }, system);
      Json result{{"member", verdict.member},
                  {"n", n},
                  {"degrees", degrees.entries()},
                  {"representation", coefficient ? "coefficient" : "root"}};
      result["witness"] = verdict.witness ? Json(verdict.witness->to_vector()) : Json(nullptr);
      if (verdict.common_factor) result["common_factor"] = toric::poly_to_json(*verdict.common_factor);
      if (verdict.common_root) result["common_root"] = toric::complex_number_to_json(*verdict.common_root);
      if (!coefficient) result["tolerance"] = toric::kRootClusterTolerance;
      const auto& d = degrees.entries();
      if (n > *std::max_element(d.begin(), d.end())) result["note"] = "contractible regime";
      const Json canonical_system =
          coefficient ? toric::system_to_json(std::get<toric::CoeffSystem>(system))
                      : toric::system_to_json(std::get<toric::RootSystem>(system));
      emitter.emit("poly check", "member iff no primitive collection σ has a common root of multiplicity ≥ n in f_i, i ∈ σ",
                   {{"fan", in.canonical}, {"system", canonical_system}, {"n", n}}, std::move(result));
      return kOk;
    }
    if (poly_stabilize->parsed()) {
      const toric::PolySystem system = toric::system_from_json(toric::read_json_file(system_arg));
      if (!std::holds_alternative<toric::RootSystem>(system)) {
        throw toric::ParseError("/roots", "stabilize needs a root-form system");
      }
      const auto& roots = std::get<toric::RootSystem>(system);
      toric::RootSystem result_system = toric::stabilize(roots, shift_arg);
      Json inputs{{"system", toric::system_to_json(roots)}, {"a", shift_arg}};
      Json result{{"degrees_before", roots.degrees().entries()}};
      if (!second_shift_arg.empty()) {
        result["once"] = toric::system_to_json(result_system);
        result_system = toric::stabilize(result_system, second_shift_arg);
        inputs["then"] = second_shift_arg;
      }
      result["system"] = toric::system_to_json(result_system);
      result["degrees_after"] = result_system.degrees().entries();
      if (!fan_arg.empty()) {
        const FanInput in = load_valid_fan(fan_arg);
        inputs["fan"] = in.canonical;
        inputs["n"] = n;
        result["member_before"] = toric::is_member(roots, in.fan, n).member;
        result["member_after"] = toric::is_member(result_system, in.fan, n).member;
      }
      emitter.emit("poly stabilize", "w ↦ (N(D) − e^{−Re w}) + i·Im w, then (z − (N(D)+i))^{a_i} appended to f_i",
                   inputs, std::move(result));
      return kOk;
    }
    if (poly_jet->parsed()) {
      if (!values_arg.empty()) {
        std::vector<toric::GaussianRational> b;
        Json bj = Json::array();
        for (const auto& v : values_arg) {
          b.push_back(parse_gaussian(v));
          bj.push_back(gaussian_to_json(b.back()));
        }
        const auto f = toric::jet_section(b);
        Json values = Json::array();
        for (const auto& g : toric::jet(f, static_cast<int>(b.size()))) values.push_back(gaussian_to_json(g(0)));
        emitter.emit("poly jet", "f_b = b_0 + Σ_{k≥1} (b_k − b_0) z^k / k!, F_n(f_b)(0) = b", {{"b", bj}},
                     {{"section", toric::poly_to_json(f)}, {"jet_at_zero", values}, {"identity", values == bj}});
        return kOk;
      }
      if (system_arg.empty() || at_arg.empty()) {
        throw toric::ParseError("", "poly jet needs --b, or --system with --at");
      }
      const auto system = toric::system_from_json(toric::read_json_file(system_arg));
      if (!std::holds_alternative<toric::CoeffSystem>(system)) {
        throw toric::ParseError("/polys", "jet evaluation needs a coefficient-form system");
      }
      const auto& coeff = std::get<toric::CoeffSystem>(system);
      const auto alpha = parse_gaussian(at_arg);
      const auto point = toric::evaluate_jet(coeff, n, alpha);
      Json blocks = Json::array();
      for (const auto& block : point.blocks) {
        Json row = Json::array();
        for (auto z : block) row.push_back(toric::complex_number_to_json(z));
        blocks.push_back(std::move(row));
      }
      emitter.emit("poly jet", "F_n(f) = (f, f + f', ..., f + f^{(n−1)})",
                   {{"system", toric::system_to_json(coeff)}, {"at", gaussian_to_json(alpha)}, {"n", n}},
                   {{"blocks", blocks}, {"zero_support", point.zero_support(0.0).to_vector()}});
      return kOk;
    }
    for (auto* sub : {oracle_vandermonde, oracle_band, oracle_complement, oracle_jet, oracle_membership, oracle_stab}) {
      if (!sub->parsed()) continue;
      const std::uint64_t seed = resolve_seed(seed_flag);
      Json options{{"suite", sub->get_name()}, {"seed", seed}, {"trials", trials}};
      toric::OracleSummary summary;
      std::string anchor;
      if (sub == oracle_vandermonde) {
        toric::VandermondeOptions opt{trials < 0 ? 500 : trials, vk, vn, vd, height};
        options["k"] = vk ? Json(*vk) : Json(nullptr);
        options["n"] = vn ? Json(*vn) : Json(nullptr);
        options["d"] = vd ? Json(*vd) : Json(nullptr);
        options["height"] = height;
        summary = toric::vandermonde_suite(seed, opt);
        anchor = "rank C_n = nk for k distinct nodes and d ≥ nk; monic Hermite solutions form a (d − nk)-dimensional affine space";
      } else if (sub == oracle_band) {
        options["max_d_prime"] = max_d_prime;
        const std::vector<toric::BandCase> corpus{
            {"hirzebruch(1)", toric::hirzebruch_fan(1), toric::DegreeVector({5, 7, 5, 12}), 2}};
        summary = toric::band_suite(seed, trials < 0 ? 50 : trials, corpus, max_d_prime);
        anchor = "min_t a(t) = d(D;Σ,n) + 2 with a(t) = (2n r_min − 3)d′ + t − 1";
      } else if (sub == oracle_complement) {
        options["samples"] = samples;
        summary = toric::complement_suite(seed, trials < 0 ? samples : trials);
        anchor = "Z_{K_Σ}(C^n, (C^n)*) = C^{nr} ∖ L_n(Σ)";
      } else if (sub == oracle_jet) {
        options["max_n"] = max_n;
        summary = toric::jetsection_suite(seed, trials < 0 ? 100 : trials, max_n);
        anchor = "F_n(f_b)(0) = b";
      } else if (sub == oracle_membership) {
        const int count = trials < 0 ? 200 : trials;
        summary = toric::membership_suite(seed, count, count);
        anchor = "member iff no primitive collection shares a root of multiplicity ≥ n";
      } else {
        summary = toric::stabilization_suite(seed, trials < 0 ? 100 : trials);
        anchor = "s_{D+a,D+a+b} ∘ s_{D,D+a} raises degrees by a + b";
      }
      emitter.emit("oracle " + sub->get_name(), anchor, options, summary.to_json(), seed);
      return summary.ok() ? kOk : kOracleFailure;
    }
    if (stability_report_cmd->parsed() || stability_e1->parsed()) {
      const FanInput in = load_valid_fan(fan_arg);
      const toric::DegreeVector degrees(degrees_arg);
      const Json inputs{{"fan", in.canonical}, {"degrees", degrees.entries()}, {"n", n}};
      if (stability_e1->parsed()) {
        const auto table = toric::e1_support(degrees, in.fan, n, s_lo, s_hi);
        if (format == "text") {
          out << e1_table(table);
          return kOk;
        }
        Json rows = Json::array();
        for (std::size_t k = 0; k < table.cells.size(); ++k) {
          Json cells = Json::array();
          for (auto status : table.cells[k]) cells.push_back(toric::to_string(status));
          rows.push_back({{"k", k}, {"cells", std::move(cells)}});
        }
        emitter.emit("stability e1", "E^1_{k,s} = 0 for s ≤ (2n r_min − 2)k − 1", inputs,
                     {{"d_prime", table.d_prime}, {"s_lo", table.s_lo}, {"s_hi", table.s_hi}, {"rows", rows}});
        return kOk;
      }
      const auto report = toric::stability_report(degrees, in.fan, n);
      Json result{{"n", report.n},
                  {"r_min", report.r_min},
                  {"d_min", report.d_min},
                  {"d_prime", report.d_prime},
                  {"stability_dim", report.stability_dim},
                  {"degree_null", report.degree_null},
                  {"equivalence", report.homotopy ? "homotopy" : "homology"},
                  {"dim_arrangement", toric::dim_arrangement(in.fan, n)}};
      result["connectivity"] = report.connectivity ? Json(*report.connectivity) : Json(nullptr);
      if (n >= 2 && report.d_prime >= 1) {
        const auto t = toric::truncation_dim(degrees, in.fan, n);
        result["truncation_dim"] = {{"direct", t.direct},
                                    {"bundle_rank", t.bundle_rank},
                                    {"config_dim", t.config_dim},
                                    {"decomposed", t.decomposed}};
        if (report.d_prime <= toric::kBandEnumerationCap) {
          const auto band = toric::min_unknown_band(degrees, in.fan, n);
          Json terms = Json::array();
          for (const auto& term : band.terms) {
            terms.push_back({{"t", term.t}, {"brute_force", term.brute_force}, {"closed_form", term.closed_form}});
          }
          result["min_unknown_band"] = {{"value", *band.min_band}, {"agrees", band.agrees}, {"terms", terms}};
        } else {
          result["min_unknown_band"] = {{"value", nullptr}, {"note", "d' above the enumeration cap"}};
        }
      } else if (n >= 2) {
        result["min_unknown_band"] = {{"value", nullptr}, {"note", "no band"}};
      }
      emitter.emit("stability report", n >= 2 ? "d(D;Σ,n) = (2n r_min − 3)⌊d_min/n⌋ − 2"
                                              : "n = 1: (2 r_min − 3)d_min − 2, or d_min − 2 in homology when r_min = 2",
                   inputs, std::move(result));
      return kOk;
    }
    fail("usage", "no command given");
    return kParse;
  } catch (const toric::ParseError& e) {
    fail("parse", e.what(), {{"pointer", e.pointer}});
    return kParse;
  } catch (const InvalidFan& e) {
    fail("invalid_fan", e.what(), {{"violations", violations_to_json(e.report)}});
    return kInvalidFan;
  } catch (const toric::StructureError& e) {
    fail("invalid_fan", e.what());
    return kInvalidFan;
  } catch (const toric::UnsupportedFan& e) {
    fail("unsupported_fan", e.what());
    return kInvalidFan;
  } catch (const toric::UndefinedValue& e) {
    fail("undefined", e.what());
    return kInvalidFan;
  } catch (const toric::ShapeMismatch& e) {
    fail("shape_mismatch", e.what());
    return kShapeMismatch;
  } catch (const toric::CapExceeded& e) {
    fail("cap_exceeded", e.what());
    return kCapExceeded;
  } catch (const toric::InvalidInput& e) {
    fail("invalid_input", e.what());
    return kParse;
  } catch (const std::exception& e) {
    fail("internal", e.what());
    return kOracleFailure;
  }
}

}  // namespace toricctl
