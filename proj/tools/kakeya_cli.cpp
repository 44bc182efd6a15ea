// Copyright 2026 The Kakeya-Fq Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// kakeya: command-line front end.
//
// Exit codes: 0 success / positive answer, 1 usage or data error,
// 2 negative mathematical answer (not Kakeya, solver precondition unmet).

#include <cstdint>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "kakeya/bounds.hpp"
#include "kakeya/gf.hpp"
#include "kakeya/io.hpp"
#include "kakeya/kakeya_set.hpp"
#include "kakeya/parallel.hpp"
#include "kakeya/polymethod.hpp"
#include "kakeya/search.hpp"

namespace {

using kakeya::io::json;
using kakeya::io::str;

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitNegative = 2;

struct Options {
  unsigned threads = kakeya::default_threads();

  std::uint32_t q = 0;
  unsigned n = 0;
  unsigned m = 0;
  std::string variant;
  std::string out;
  std::string in;
  std::string witnesses_out;
  bool stored_only = false;
  std::string points;

  bool optimize = false;
  unsigned m_cap = 0;
  bool as_json = false;
  bool as_csv = false;

  double alpha = 0.0;
  unsigned n_probe = 64;
  std::uint64_t mc_samples = 0;
  std::uint64_t seed = 1;
};

std::string coords(const std::vector<kakeya::Rep>& v) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ")";
  return os.str();
}

void emit_json(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump() << "\n";
  } else {
    kakeya::io::write_json_file(out, j);
  }
}

int run_construct(const Options& o) {
  const auto field = kakeya::Field::make(o.q);
  const auto variant = kakeya::variant_from_string(o.variant);
  const auto set = kakeya::construct(field, o.n, variant);
  emit_json(kakeya::io::set_to_json(set), o.out);
  if (!o.out.empty()) {
    const auto size = kakeya::upper_bound_size(field, o.n, variant);
    std::cout << "constructed " << o.variant << " set in " << field->describe() << "^" << o.n
              << ": |K| = " << set.size() << " (leading term " << str(size.leading)
              << ", C = " << std::fixed << std::setprecision(4)
              << kakeya::to_double(size.constant) << ")\n";
  }
  return kExitOk;
}

int run_verify(const Options& o) {
  const auto set = kakeya::io::set_from_json(kakeya::io::read_json_file(o.in));
  const auto result = o.stored_only ? kakeya::verify_stored_witnesses(set)
                                    : kakeya::verify(set, o.threads);
  if (!result.ok) {
    std::cout << "not kakeya: no line in direction " << coords(result.failing->coords)
              << " (|K| = " << set.size() << ")\n";
    return kExitNegative;
  }
  std::cout << "kakeya: every one of " << result.witnesses.size()
            << " directions has a full line (|K| = " << set.size() << ")\n";
  if (!o.witnesses_out.empty()) {
    kakeya::io::write_json_file(o.witnesses_out,
                                kakeya::io::witnesses_to_json(set.field(), set.dim(),
                                                              result.witnesses));
  }
  return kExitOk;
}

int run_bound(const Options& o) {
  std::vector<kakeya::BoundReport> rows;
  std::string note;
  if (o.optimize) {
    rows.push_back(kakeya::best_m(o.n, o.q, o.m_cap));
    note = "best m in [1, " + std::to_string(o.m_cap) + "], ties to smaller m";
  } else {
    rows.push_back(kakeya::lemma_bound(o.n, o.q, o.m));
  }
  if (o.as_csv) {
    std::cout << "q,n,m,N,denom,bound_ceiling\n";
    for (const auto& r : rows) {
      std::cout << r.q << "," << r.n << "," << r.m << "," << r.N << "," << r.denom << ","
                << r.bound_ceiling << "\n";
    }
  } else if (o.as_json) {
    json j = kakeya::io::bound_to_json(rows.front());
    if (!note.empty()) j["selection"] = note;
    std::cout << j.dump() << "\n";
  } else {
    for (const auto& r : rows) {
      std::cout << "q=" << r.q << " n=" << r.n << " m=" << r.m << " N=" << r.N
                << " denom=" << r.denom << " bound=" << str(r.bound)
                << " bound_ceiling=" << r.bound_ceiling << "\n";
    }
    if (!note.empty()) std::cout << "(" << note << ")\n";
  }
  return kExitOk;
}

int run_vanish(const Options& o) {
  const auto field = kakeya::Field::make(o.q);
  const auto set = kakeya::io::set_from_json(kakeya::io::read_json_file(o.points));
  if (set.field().q() != o.q || set.dim() != o.n) {
    std::cerr << "vanish: point file has q=" << set.field().q() << " n=" << set.dim()
              << ", expected q=" << o.q << " n=" << o.n << "\n";
    return kExitError;
  }
  try {
    const auto g = kakeya::find_vanishing_poly(field, set.points(), o.n, o.m);
    emit_json(kakeya::io::poly_to_json(g), o.out);
    if (!o.out.empty()) {
      std::cout << "found g with " << g.term_count() << " terms, total degree " << g.degree()
                << " < " << o.m * o.q << ", vanishing to order " << o.m << " on "
                << set.size() << " points\n";
    }
  } catch (const kakeya::BoundNotSatisfied& e) {
    std::cerr << "vanish: " << e.what() << "\n";
    return kExitNegative;
  }
  return kExitOk;
}

int run_minsearch(const Options& o) {
  const auto field = kakeya::Field::make(o.q);
  const auto result = kakeya::min_kakeya(field, o.n);
  const auto lower = kakeya::best_m(2, o.q, 4);
  std::cout << "q=" << o.q << " n=2 min_kakeya=" << result.size
            << " lower_bound=" << lower.bound_ceiling << " (m=" << lower.m << ")";
  for (auto v : {kakeya::Variant::kOdd, kakeya::Variant::kEven}) {
    if (kakeya::variant_supported(*field, v)) {
      std::cout << " construction_" << kakeya::to_string(v) << "="
                << kakeya::upper_bound_size(field, 2, v).exact;
    }
  }
  std::cout << " nodes=" << result.nodes << "\n";
  if (!o.out.empty()) kakeya::io::write_json_file(o.out, kakeya::io::set_to_json(result.witness));
  return kExitOk;
}

int run_asym(const Options& o) {
  const auto r = kakeya::c_alpha(o.alpha, o.n_probe);
  if (o.as_json) {
    json ladder = json::array();
    for (const auto& rung : r.ladder) {
      ladder.push_back({{"n", rung.n}, {"log_volume", rung.log_volume}, {"tau", rung.tau}});
    }
    json j = {{"alpha", r.alpha},
              {"n_probe", r.n_probe},
              {"method", r.method},
              {"tau_probe", r.tau_probe},
              {"tau", r.tau},
              {"log_n_coefficient", r.log_n_coefficient},
              {"entropy_factor", r.entropy_factor},
              {"c_alpha", r.c_alpha},
              {"c_alpha_probe", r.c_alpha_probe},
              {"monotone", r.monotone},
              {"ladder", ladder}};
    if (o.mc_samples > 0) {
      const auto mc = kakeya::region_volume_monte_carlo(8, o.alpha, o.mc_samples, o.seed);
      j["monte_carlo"] = {{"n", 8},
                          {"seed", o.seed},
                          {"samples", mc.samples},
                          {"estimate", mc.estimate},
                          {"std_error", mc.std_error},
                          {"exact", kakeya::to_double(kakeya::region_volume(8, o.alpha))}};
    }
    std::cout << j.dump() << "\n";
    return kExitOk;
  }
  std::cout << std::setprecision(6) << std::fixed;
  std::cout << "alpha=" << r.alpha << " n_probe=" << r.n_probe << " method=" << r.method << "\n";
  std::cout << "  n     volume^(1/n)\n";
  for (const auto& rung : r.ladder) {
    std::cout << "  " << std::setw(4) << rung.n << "  " << rung.tau << "\n";
  }
  std::cout << "trend " << (r.monotone ? "monotone increasing" : "not monotone") << "\n";
  std::cout << "tau_probe=" << r.tau_probe << " tau_fit=" << r.tau
            << " (log n coefficient " << r.log_n_coefficient << ")\n";
  std::cout << "entropy_factor=" << r.entropy_factor << "\n";
  std::cout << "c_alpha=" << r.c_alpha << " = 1/" << 1.0 / r.c_alpha
            << "  (probe only: 1/" << 1.0 / r.c_alpha_probe << ")\n";
  if (o.mc_samples > 0) {
    const auto mc = kakeya::region_volume_monte_carlo(8, o.alpha, o.mc_samples, o.seed);
    std::cout << "monte-carlo volume n=8: " << mc.estimate << " +- " << mc.std_error
              << " (exact " << kakeya::to_double(kakeya::region_volume(8, o.alpha))
              << ", seed " << o.seed << ")\n";
  }
  return kExitOk;
}

int run_report(const Options& o) {
  std::ostream& os = std::cout;
  os << "Presets: lower bound at fixed m vs c0 (c1 q)^n\n";
  os << std::left << std::setw(18) << "preset" << std::right << std::setw(3) << "n"
     << std::setw(5) << "q" << std::setw(4) << "m" << std::setw(22) << "bound"
     << std::setw(18) << "floor" << "  holds\n";
  for (unsigned n : {2u, 3u, 4u, 6u}) {
    for (std::uint64_t q : {5u, 9u, 31u}) {
      for (const auto& p : {kakeya::preset_quarter(n, q), kakeya::preset_half(n, q)}) {
        os << std::left << std::setw(18) << p.name
           << std::right << std::setw(3) << n << std::setw(5) << q << std::setw(4)
           << p.bound.m << std::setw(22) << std::setprecision(4) << std::fixed
           << kakeya::to_double(p.bound.bound) << std::setw(18) << p.floor_float << "  "
           << (p.holds_exact ? "yes" : "NO") << "\n";
      }
    }
  }

  os << "\nCubic check n=3: 5/24·q³ from m=2, against q³/6\n";
  os << std::setw(5) << "q" << std::setw(10) << "N_q(3,2)" << std::setw(14) << "bound m=2"
     << std::setw(14) << "5/24*q^3" << std::setw(12) << "q^3/6" << "  holds\n";
  for (std::uint64_t q : {3u, 5u, 7u, 9u, 11u, 25u, 49u, 101u}) {
    const auto r = kakeya::lemma_bound(3, q, 2);
    const kakeya::Rational target(5 * q * q * q, 24);
    os << std::setw(5) << q << std::setw(10) << r.N << std::setw(14) << str(r.bound)
       << std::setw(14) << std::setprecision(2) << kakeya::to_double(target) << std::setw(12)
       << static_cast<double>(q * q * q) / 6.0 << "  " << (r.bound >= target ? "yes" : "NO")
       << "\n";
  }

  os << "\nConstructions: exact size vs 2^-(n-1) q^n + C q^(n-1)\n";
  os << std::left << std::setw(16) << "variant" << std::right << std::setw(4) << "q"
     << std::setw(3) << "n" << std::setw(10) << "exact" << std::setw(10) << "core"
     << std::setw(12) << "leading" << std::setw(9) << "C" << "\n";
  for (std::uint32_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 101u}) {
    const auto field = kakeya::Field::make(q);
    for (unsigned n : {2u, 3u}) {
      for (auto v : {kakeya::Variant::kOdd, kakeya::Variant::kRecursiveOdd,
                     kakeya::Variant::kEvenStyleOdd, kakeya::Variant::kEven}) {
        if (!kakeya::variant_supported(*field, v)) continue;
        const auto s = kakeya::upper_bound_size(field, n, v);
        os << std::left << std::setw(16) << kakeya::to_string(v) << std::right << std::setw(4)
           << q << std::setw(3) << n << std::setw(10) << s.exact << std::setw(10) << s.core
           << std::setw(12) << std::setprecision(2) << kakeya::to_double(s.leading)
           << std::setw(9) << std::setprecision(4) << kakeya::to_double(s.constant) << "\n";
      }
    }
  }

  os << "\nPlane sandwich: lower bound <= exact minimum <= construction\n";
  os << std::setw(4) << "q" << std::setw(8) << "lower" << std::setw(9) << "minimum"
     << std::setw(14) << "construction" << "\n";
  for (std::uint32_t q : {2u, 3u, 4u, 5u}) {
    const auto field = kakeya::Field::make(q);
    const auto lower = kakeya::best_m(2, q, 4);
    const auto exact = kakeya::min_kakeya(field, 2);
    const auto v = field->characteristic_two() ? kakeya::Variant::kEven : kakeya::Variant::kOdd;
    os << std::setw(4) << q << std::setw(8) << lower.bound_ceiling << std::setw(9)
       << exact.size << std::setw(14) << kakeya::upper_bound_size(field, 2, v).exact << "\n";
  }
  (void)o;
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Kakeya sets over finite fields: constructions, verification, bounds"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--threads", o.threads, "Worker threads (default: KAKEYA_THREADS or all cores)")
      ->check(CLI::PositiveNumber);

  auto* construct = app.add_subcommand("construct", "Build an explicit Kakeya set");
  construct->add_option("--q", o.q, "Field order")->required();
  construct->add_option("--n", o.n, "Dimension (>= 2)")->required();
  construct->add_option("--variant", o.variant, "odd|even|recursive-odd|even-style-odd")
      ->required()
      ->check(CLI::IsMember({"odd", "even", "recursive-odd", "even-style-odd"}));
  construct->add_option("--out", o.out, "Output set file (default: stdout)");

  auto* verify = app.add_subcommand("verify", "Check the Kakeya property exhaustively");
  verify->add_option("--in", o.in, "Set file")->required();
  verify->add_option("--witnesses", o.witnesses_out, "Write per-direction witness lines");
  verify->add_flag("--stored", o.stored_only, "Only check the witnesses stored in the file");

  auto* bound = app.add_subcommand("bound", "Multiplicity lower bound N_q(n,m)/C(m+n-1,n)");
  bound->add_option("--q", o.q, "Field order")->required();
  bound->add_option("--n", o.n, "Dimension")->required()->check(CLI::PositiveNumber);
  auto* m_opt = bound->add_option("--m", o.m, "Multiplicity")->check(CLI::PositiveNumber);
  auto* opt_flag = bound->add_flag("--optimize", o.optimize, "Scan m in [1, m-cap]");
  auto* cap_opt = bound->add_option("--m-cap", o.m_cap, "Largest m scanned")
                      ->check(CLI::PositiveNumber);
  opt_flag->excludes(m_opt);
  cap_opt->needs(opt_flag);
  auto* json_flag = bound->add_flag("--json", o.as_json, "JSON output");
  auto* csv_flag = bound->add_flag("--csv", o.as_csv, "CSV output");
  json_flag->excludes(csv_flag);

  auto* vanish = app.add_subcommand("vanish", "Find g vanishing to order m on a point set");
  vanish->add_option("--q", o.q, "Field order")->required();
  vanish->add_option("--n", o.n, "Dimension")->required();
  vanish->add_option("--m", o.m, "Multiplicity")->required()->check(CLI::PositiveNumber);
  vanish->add_option("--points", o.points, "Point set file")->required();
  vanish->add_option("--out", o.out, "Output polynomial file (default: stdout)");

  auto* minsearch = app.add_subcommand("minsearch", "Exact minimum Kakeya set in F_q^2");
  minsearch->add_option("--q", o.q, "Field order (<= 9)")->required();
  minsearch->add_option("--n", o.n, "Dimension (2 only)")->default_val(2);
  minsearch->add_option("--out", o.out, "Write the minimum set");

  auto* asym = app.add_subcommand("asym", "Asymptotic constant c_alpha");
  asym->add_option("--alpha", o.alpha, "Degree fraction alpha in (0, 1]")->required();
  asym->add_option("--n-probe", o.n_probe, "Largest dimension probed (>= 8)")->default_val(64);
  asym->add_option("--mc-samples", o.mc_samples, "Monte Carlo cross-check sample count");
  asym->add_option("--seed", o.seed, "Monte Carlo seed")->default_val(1);
  asym->add_flag("--json", o.as_json, "JSON output");

  auto* report = app.add_subcommand("report", "Reproduction table of the headline numbers");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*construct) return run_construct(o);
    if (*verify) return run_verify(o);
    if (*bound) {
      if (!o.optimize && o.m == 0) {
        std::cerr << "bound: give --m M or --optimize --m-cap C\n";
        return kExitError;
      }
      if (o.optimize && o.m_cap == 0) {
        std::cerr << "bound: --optimize needs --m-cap\n";
        return kExitError;
      }
      return run_bound(o);
    }
    if (*vanish) return run_vanish(o);
    if (*minsearch) return run_minsearch(o);
    if (*asym) return run_asym(o);
    if (*report) return run_report(o);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
