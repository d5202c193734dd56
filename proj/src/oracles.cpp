#include "toric/oracles.hpp"

#include "toric/errors.hpp"
#include "toric/hermite_oracle.hpp"
#include "toric/stability_calc.hpp"
#include "toric/stanley_reisner.hpp"

#include <algorithm>
#include <set>
#include <string>

namespace toric {

Json OracleSummary::to_json() const {
  return Json{{"suite", suite}, {"seed", seed},   {"trials", trials}, {"failures", failures},
              {"pass", ok()},   {"failed", failed}, {"info", info}};
}

std::vector<std::pair<std::string, Fan>> fixture_fans() {
  std::vector<std::pair<std::string, Fan>> out;
  for (int m = 1; m <= 3; ++m) out.emplace_back("cp(" + std::to_string(m) + ")", cp_fan(m));
  for (int k = 1; k <= 3; ++k) out.emplace_back("hirzebruch(" + std::to_string(k) + ")", hirzebruch_fan(k));
  const Fan h1 = hirzebruch_fan(1);
  out.emplace_back("hirzebruch(1) minus {2,3}",
                   Fan::from_max_cones(2, h1.rays(), {IndexSet{0, 1}, IndexSet{1, 2}, IndexSet{3, 0}}));
  return out;
}

namespace {

long uniform(std::mt19937_64& rng, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); }

void fail(OracleSummary& summary, long trial, Json detail) {
  ++summary.failures;
  detail["trial"] = trial;
  summary.failed.push_back(std::move(detail));
}

Json rationals_to_json(const std::vector<Rational>& xs) {
  Json out = Json::array();
  for (const auto& x : xs) out.push_back(to_string(x));
  return out;
}

Rational random_rational(std::mt19937_64& rng, long height) {
  return Rational(uniform(rng, -height, height), uniform(rng, 1, height));
}

// Real and imaginary parts p/q with q in {1, 2, 4}, |re| <= 2 and |im| <= 8; exact in double.
GaussianRational random_gaussian(std::mt19937_64& rng) {
  const long q = 1L << uniform(rng, 0, 2);
  const long p = uniform(rng, -2 * q, 2 * q);
  const long s = 1L << uniform(rng, 0, 2);
  const long t = uniform(rng, -8 * s, 8 * s);
  return {Rational(p, q), Rational(t, s)};
}

struct FreshRoots {
  std::set<std::pair<Rational, Rational>> used;

  GaussianRational next(std::mt19937_64& rng) {
    for (;;) {
      GaussianRational z = random_gaussian(rng);
      if (used.insert({z.re, z.im}).second) return z;
    }
  }
};

Json gaussian_to_json(const GaussianRational& z) { return Json::array({to_string(z.re), to_string(z.im)}); }

}  // namespace

DualSystem random_dual_system(std::mt19937_64& rng, const Fan& fan, int n, bool planted) {
  const int r = fan.ray_count();
  std::vector<std::vector<std::pair<GaussianRational, int>>> roots(static_cast<std::size_t>(r));
  FreshRoots fresh;
  DualSystem out;
  out.planted = planted;
  out.planted_root = fresh.next(rng);

  // The shared root sits on a primitive collection, or on a cone where sharing is harmless.
  IndexSet target;
  if (planted) {
    const auto prim = primitive_collections(fan);
    target = prim[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(prim.size()) - 1))];
    out.planted_on = target;
  } else {
    const auto cones = fan.max_cones();
    target = cones[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(cones.size()) - 1))];
  }
  for (int i : target.to_vector()) roots[static_cast<std::size_t>(i)].emplace_back(out.planted_root, n);

  for (auto& f : roots) {
    const long extra = uniform(rng, f.empty() ? 1 : 0, 3);
    for (long e = 0; e < extra; ++e) f.emplace_back(fresh.next(rng), static_cast<int>(uniform(rng, 1, n + 1)));
  }
  for (const auto& f : roots) {
    out.coeff.polys.push_back(poly_from_roots(f));
    RootPoly g;
    for (const auto& [z, mult] : f) g.roots.push_back({z.to_complex(), mult});
    out.roots.polys.push_back(std::move(g));
  }
  return out;
}

OracleSummary vandermonde_suite(std::uint64_t seed, const VandermondeOptions& options) {
  OracleSummary summary{"vandermonde", seed};
  std::mt19937_64 rng(seed);
  if (options.height < 1) throw InvalidInput("height must be positive");
  long max_rank = 0;
  for (int trial = 0; trial < options.trials; ++trial) {
    const int k = options.k.value_or(static_cast<int>(uniform(rng, 1, 5)));
    const int n = options.n.value_or(static_cast<int>(uniform(rng, 1, 4)));
    const int d = options.d.value_or(static_cast<int>(uniform(rng, n * k, std::max(n * k, 30))));
    if (k < 1 || n < 1 || d < 1) throw InvalidInput("k, n and d must be positive");
    if (d < n * k) throw InvalidInput("the certified regime needs d >= n*k");
    const auto points = random_distinct_points(rng, k, options.height);

    HermiteSpec spec{points, n, d, {}};
    for (int l = 0; l < n; ++l) {
      std::vector<Rational> row;
      for (int j = 0; j < k; ++j) row.push_back(random_rational(rng, options.height));
      spec.targets.push_back(std::move(row));
    }
    ++summary.trials;
    Json detail{{"k", k}, {"n", n}, {"d", d}, {"points", rationals_to_json(points)}};

    const RankClaim claim = verify_rank_claim(points, n, d);
    max_rank = std::max(max_rank, claim.rank);
    if (!claim.holds) {
      detail["rank"] = claim.rank;
      fail(summary, trial, std::move(detail));
      continue;
    }
    HermiteSolution solution;
    try {
      solution = hermite_dimension(spec);
    } catch (const InternalError& e) {
      detail["error"] = e.what();
      fail(summary, trial, std::move(detail));
      continue;
    }
    if (solution.dimension != d - static_cast<long>(n) * k) {
      detail["dimension"] = solution.dimension;
      fail(summary, trial, std::move(detail));
      continue;
    }
    // Substitute the particular solution back into every condition.
    std::vector<Rational> coeffs = solution.particular;
    coeffs.push_back(Rational(1));
    const Polynomial<Rational> f(std::move(coeffs));
    for (int l = 0; l < n; ++l) {
      const auto g = derivative(f, static_cast<std::size_t>(l));
      for (int j = 0; j < k; ++j) {
        if (g(points[static_cast<std::size_t>(j)]) != spec.targets[static_cast<std::size_t>(l)][static_cast<std::size_t>(j)]) {
          detail["substitution"] = {{"order", l}, {"point", j}};
        }
      }
    }
    if (detail.contains("substitution")) fail(summary, trial, std::move(detail));
  }
  summary.info = {{"height", options.height}, {"max_rank", max_rank}};
  return summary;
}

OracleSummary band_suite(std::uint64_t seed, int trials, const std::vector<BandCase>& explicit_cases,
                         long max_d_prime) {
  if (max_d_prime < 1) throw InvalidInput("max d' must be at least 1");
  if (max_d_prime > kBandEnumerationCap) {
    throw CapExceeded("d' = " + std::to_string(max_d_prime) + " exceeds the band enumeration cap of " +
                      std::to_string(kBandEnumerationCap));
  }
  OracleSummary summary{"band", seed};
  std::mt19937_64 rng(seed);
  const auto fans = fixture_fans();

  std::vector<BandCase> cases = explicit_cases;
  for (int trial = 0; trial < trials; ++trial) {
    const auto& [name, fan] = fans[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(fans.size()) - 1))];
    const int n = static_cast<int>(uniform(rng, 2, 4));
    const long d_prime = uniform(rng, 1, max_d_prime);
    const long d_min = n * d_prime + uniform(rng, 0, n - 1);
    std::vector<long> degrees(static_cast<std::size_t>(fan.ray_count()));
    for (auto& x : degrees) x = d_min + uniform(rng, 0, 6);
    degrees[static_cast<std::size_t>(uniform(rng, 0, fan.ray_count() - 1))] = d_min;
    cases.push_back({name, fan, DegreeVector(std::move(degrees)), n});
  }

  Json results = Json::array();
  long terms = 0;
  for (std::size_t c = 0; c < cases.size(); ++c) {
    const auto& bc = cases[c];
    ++summary.trials;
    const BandResult band = min_unknown_band(bc.degrees, bc.fan, bc.n);
    Json entry{{"fan", bc.fan_name},
               {"degrees", bc.degrees.entries()},
               {"n", bc.n},
               {"stability_dim", band.stability_dim},
               {"min_band", band.min_band ? Json(*band.min_band) : Json(nullptr)}};
    terms += static_cast<long>(band.terms.size());
    const bool attained_at_one = !band.terms.empty() && band.terms.front().t == 1 &&
                                 band.min_band == band.terms.front().brute_force;
    if (!band.agrees || !attained_at_one) {
      Json mismatched = Json::array();
      for (const auto& term : band.terms) {
        if (term.brute_force != term.closed_form) {
          mismatched.push_back({{"t", term.t}, {"brute_force", term.brute_force}, {"closed_form", term.closed_form}});
        }
      }
      entry["mismatched_terms"] = std::move(mismatched);
      fail(summary, static_cast<long>(c), entry);
    }
    if (c < explicit_cases.size()) results.push_back(std::move(entry));
  }
  summary.info = {{"explicit", std::move(results)}, {"terms_checked", terms}, {"max_d_prime", max_d_prime}};
  return summary;
}

OracleSummary complement_suite(std::uint64_t seed, int samples_per_fan, int block_length) {
  if (block_length < 1) throw InvalidInput("block length must be positive");
  OracleSummary summary{"complement", seed};
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(-1.0, 1.0);

  auto fans = fixture_fans();
  for (const char* base : {"cp(1)", "cp(2)", "cp(3)", "hirzebruch(1)"}) {
    for (int n = 2; n <= 3; ++n) {
      const Fan power = fan_power(builtin_fan(base), n);
      if (power.ray_count() <= 12) {
        fans.emplace_back("power(" + std::string(base) + ", " + std::to_string(n) + ")", power);
      }
    }
  }

  const double tolerance = kSampledZeroTolerance;
  Json per_fan = Json::array();
  long trial = 0;
  for (const auto& [name, fan] : fans) {
    const int r = fan.ray_count();
    const SimplicialComplex k = underlying_complex(fan);
    const auto prim = primitive_collections(fan);
    auto check = [&](const PointInProduct& x, bool exhaustive) {
      ++summary.trials;
      const bool in_product = in_polyhedral_product(x, k, exhaustive ? 0.0 : tolerance);
      const bool in_arr = in_arrangement(x, prim, exhaustive ? 0.0 : tolerance);
      if (in_product == in_arr) {
        fail(summary, trial, {{"fan", name}, {"zero_support", x.zero_support(exhaustive ? 0.0 : tolerance).to_vector()}});
      }
      ++trial;
    };
    auto nonzero_block = [&] {
      std::vector<Complex> block(static_cast<std::size_t>(block_length));
      for (auto& z : block) z = Complex(unit(rng), unit(rng));
      block[static_cast<std::size_t>(uniform(rng, 0, block_length - 1))] += Complex(2.0, 0.0);
      return block;
    };

    if (r <= 12) {
      const IndexSet all = IndexSet::full(r);
      all.for_each_subset([&](IndexSet zeros) {
        PointInProduct x;
        for (int i = 0; i < r; ++i) {
          x.blocks.push_back(zeros.contains(i) ? std::vector<Complex>(static_cast<std::size_t>(block_length))
                                               : nonzero_block());
        }
        check(x, true);
      });
    }
    // Sampled points: near-zero blocks below the tolerance count as zero.
    for (int s = 0; s < samples_per_fan; ++s) {
      PointInProduct x;
      const double p = std::uniform_real_distribution<double>(0.0, 0.7)(rng);
      for (int i = 0; i < r; ++i) {
        if (std::bernoulli_distribution(p)(rng)) {
          std::vector<Complex> block(static_cast<std::size_t>(block_length));
          for (auto& z : block) z = Complex(unit(rng), unit(rng)) * 1e-14;
          x.blocks.push_back(std::move(block));
        } else {
          x.blocks.push_back(nonzero_block());
        }
      }
      check(x, false);
    }
    per_fan.push_back({{"fan", name}, {"rays", r}, {"primitive_collections", prim.size()}});
  }
  summary.info = {{"fans", std::move(per_fan)}, {"samples_per_fan", samples_per_fan}, {"tolerance", tolerance}};
  return summary;
}

OracleSummary jetsection_suite(std::uint64_t seed, int trials, int max_n) {
  if (max_n < 1) throw InvalidInput("max n must be positive");
  OracleSummary summary{"jetsection", seed};
  std::mt19937_64 rng(seed);
  for (int trial = 0; trial < trials; ++trial) {
    const int n = static_cast<int>(uniform(rng, 1, max_n));
    std::vector<GaussianRational> b;
    for (int j = 0; j < n; ++j) b.emplace_back(random_rational(rng, 50), random_rational(rng, 50));
    ++summary.trials;
    const auto values = jet(jet_section(b), n);
    bool same = true;
    for (int j = 0; j < n; ++j) same = same && values[static_cast<std::size_t>(j)](GaussianRational(0)) == b[static_cast<std::size_t>(j)];
    if (!same) {
      Json bj = Json::array();
      for (const auto& z : b) bj.push_back(gaussian_to_json(z));
      fail(summary, trial, {{"n", n}, {"b", std::move(bj)}});
    }
  }
  summary.info = {{"max_n", max_n}};
  return summary;
}

OracleSummary membership_suite(std::uint64_t seed, int planted, int generic) {
  OracleSummary summary{"membership", seed};
  std::mt19937_64 rng(seed);
  const auto fans = fixture_fans();
  long agreements = 0;
  for (int trial = 0; trial < planted + generic; ++trial) {
    const bool plant = trial < planted;
    const auto& [name, fan] = fans[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(fans.size()) - 1))];
    const int n = static_cast<int>(uniform(rng, 1, 3));
    const DualSystem system = random_dual_system(rng, fan, n, plant);
    ++summary.trials;
    const Membership exact = is_member(system.coeff, fan, n);
    const Membership sampled = is_member(system.roots, fan, n);
    if (exact.member == sampled.member) ++agreements;
    if (exact.member == plant || sampled.member == plant) {
      fail(summary, trial,
           {{"fan", name},
            {"n", n},
            {"planted", plant},
            {"exact_member", exact.member},
            {"root_member", sampled.member},
            {"system", system_to_json(system.roots)}});
    }
  }
  summary.info = {{"planted", planted},
                  {"generic", generic},
                  {"agreements", agreements},
                  {"tolerance", kRootClusterTolerance}};
  return summary;
}

OracleSummary stabilization_suite(std::uint64_t seed, int trials) {
  OracleSummary summary{"stabilization", seed};
  std::mt19937_64 rng(seed);
  const auto fans = fixture_fans();
  auto shift = [&](int r) {
    std::vector<long> a(static_cast<std::size_t>(r));
    do {
      for (auto& x : a) x = uniform(rng, 0, 3);
    } while (std::all_of(a.begin(), a.end(), [](long x) { return x == 0; }));
    return a;
  };
  for (int trial = 0; trial < trials; ++trial) {
    const auto& [name, fan] = fans[static_cast<std::size_t>(uniform(rng, 0, static_cast<long>(fans.size()) - 1))];
    const int n = static_cast<int>(uniform(rng, 1, 3));
    const DualSystem system = random_dual_system(rng, fan, n, trial % 2 == 0);
    const auto a = shift(fan.ray_count());
    const auto b = shift(fan.ray_count());
    ++summary.trials;

    const DegreeVector d = system.roots.degrees();
    const RootSystem once = stabilize(system.roots, a);
    const RootSystem twice = stabilize(once, b);
    std::vector<long> ab(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) ab[i] = a[i] + b[i];

    Json detail{{"fan", name}, {"n", n}, {"a", a}, {"b", b}};
    if (is_member(system.roots, fan, n).member != is_member(once, fan, n).member) detail["error"] = "membership changed";
    if (!(once.degrees() == d + a)) detail["error"] = "degrees after one stabilization";
    if (!(twice.degrees() == d + ab)) detail["error"] = "composed degree law";
    if (detail.contains("error")) fail(summary, trial, std::move(detail));
  }
  return summary;
}

}  // namespace toric
