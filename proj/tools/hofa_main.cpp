// hofa: command-line front end over the analysis library.

#include <cinttypes>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hofa/arith.hpp"
#include "hofa/correlations.hpp"
#include "hofa/gowers.hpp"
#include "hofa/katai.hpp"
#include "hofa/nil.hpp"
#include "hofa/parreg.hpp"
#include "hofa/quadint.hpp"
#include "hofa/structure.hpp"

using json = nlohmann::ordered_json;
using namespace hofa;

namespace {

constexpr const char* kVersion = "0.1.0";

/// Round to 12 significant digits so serialized output is stable and short.
double r12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return std::strtod(buf, nullptr);
}

u64 fnv1a(const std::string& s) {
  u64 h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

struct Output {
  std::string path;  // empty = stdout
  std::string config;
  u64 seed = 0;

  json provenance() const {
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(fnv1a(config)));
    return json{{"tool", "hofa"}, {"version", kVersion}, {"configHash", hash}, {"seed", seed}};
  }

  void write_json(json body) const {
    json doc;
    doc["provenance"] = provenance();
    doc["result"] = std::move(body);
    if (path.empty()) {
      std::cout << doc.dump(2) << "\n";
    } else {
      std::ofstream out(path, std::ios::binary);
      out << doc.dump(2) << "\n";
    }
  }

  void write_csv(const std::string& header, const std::vector<std::string>& rows) const {
    std::ostringstream s;
    char hash[32];
    std::snprintf(hash, sizeof(hash), "%016llx", static_cast<unsigned long long>(fnv1a(config)));
    s << "# hofa " << kVersion << " config=" << hash << " seed=" << seed << "\n" << header << "\n";
    for (const auto& r : rows) s << r << "\n";
    if (path.empty()) {
      std::cout << s.str();
    } else {
      std::ofstream out(path, std::ios::binary);
      out << s.str();
    }
  }
};

std::vector<cplx> load_values(const std::string& input, i64 N, const arith::FactorSieve*& sieve_out,
                              std::vector<std::unique_ptr<arith::FactorSieve>>& owned) {
  if (std::filesystem::exists(input)) {
    // CSV rows: n,re,im
    std::ifstream in(input);
    std::vector<cplx> values(N, cplx{0.0, 0.0});
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line[0] == '#' || line[0] == 'n') continue;
      i64 n;
      double re, im;
      if (std::sscanf(line.c_str(), "%" SCNd64 ",%lf,%lf", &n, &re, &im) == 3 && n >= 1 && n <= N) {
        values[n - 1] = {re, im};
      }
    }
    return values;
  }
  const arith::MultiplicativeSpec spec = arith::MultiplicativeSpec::parse(input);
  owned.push_back(std::make_unique<arith::FactorSieve>(N));
  sieve_out = owned.back().get();
  std::vector<cplx> values(N);
  parallel_for(1, N + 1, [&](i64 n) { values[n - 1] = spec.evaluate(n, *sieve_out); });
  return values;
}

parreg::QuadraticForm3 parse_form(const std::string& text) {
  parreg::QuadraticForm3 f;
  if (std::sscanf(text.c_str(), "%" SCNd64 ",%" SCNd64 ",%" SCNd64 ",%" SCNd64 ",%" SCNd64 ",%" SCNd64, &f.a, &f.b,
                  &f.c, &f.d, &f.e, &f.f) != 6) {
    throw CLI::ValidationError("--form", "expected six comma-separated integers a,b,c,d,e,f");
  }
  return f;
}

std::vector<std::pair<i64, i64>> parse_forms(const std::string& text) {
  std::vector<std::pair<i64, i64>> forms;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ';')) {
    i64 k, l;
    if (std::sscanf(part.c_str(), "%" SCNd64 ",%" SCNd64, &k, &l) != 2) {
      throw CLI::ValidationError("--forms", "expected 'k,l;k,l;...'");
    }
    forms.emplace_back(k, l);
  }
  if (forms.empty()) throw CLI::ValidationError("--forms", "no forms given");
  return forms;
}

nil::HeisenbergElement parse_heis(const std::string& text) {
  nil::HeisenbergElement a;
  if (std::sscanf(text.c_str(), "%lf,%lf,%lf", &a.x, &a.y, &a.z) != 3) {
    throw CLI::ValidationError("--a", "expected 'x,y,z'");
  }
  return a;
}

std::vector<arith::MultiplicativeSpec> standard_family() {
  return {arith::MultiplicativeSpec::liouville(), arith::MultiplicativeSpec::moebius(),
          arith::MultiplicativeSpec::dirichlet(3, 1), arith::MultiplicativeSpec::archimedean(1.0)};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"computable core of multiplicative-function uniformity experiments"};
  app.require_subcommand(1);

  std::string output_path;
  u64 seed = 0;
  app.add_option("--output", output_path, "write results to this file instead of stdout");
  app.add_option("--seed", seed, "seed recorded in the provenance header");

  // gowers
  auto* sc_gowers = app.add_subcommand("gowers", "interval Gowers norm of a multiplicative function");
  std::string g_spec = "liouville";
  i64 g_N = 1024;
  int g_s = 2;
  bool g_cyclic = false;
  sc_gowers->add_option("--spec", g_spec, "function spec");
  sc_gowers->add_option("--N", g_N, "range")->check(CLI::PositiveNumber);
  sc_gowers->add_option("--s", g_s, "norm order")->check(CLI::Range(1, 5));
  sc_gowers->add_flag("--cyclic", g_cyclic, "norm on Z_N instead of the interval norm");

  // decompose
  auto* sc_dec = app.add_subcommand("decompose", "structured/uniform decomposition report");
  std::string d_spec = "liouville";
  i64 d_N = 10000, d_Q = 6, d_W = 12;
  double d_theta = 0.3;
  sc_dec->add_option("--spec", d_spec, "function spec");
  sc_dec->add_option("--N", d_N, "range")->check(CLI::PositiveNumber);
  sc_dec->add_option("--Q", d_Q, "kernel periodicity")->check(CLI::PositiveNumber);
  sc_dec->add_option("--W", d_W, "kernel width")->check(CLI::PositiveNumber);
  sc_dec->add_option("--theta", d_theta, "certificate threshold");

  // katai
  auto* sc_katai = app.add_subcommand("katai", "pair correlations over small prime dilates");
  std::string k_input = "liouville";
  i64 k_K = 10, k_N = 10000;
  sc_katai->add_option("--input", k_input, "function spec or CSV file (n,re,im)");
  sc_katai->add_option("--K", k_K, "prime cutoff")->check(CLI::PositiveNumber);
  sc_katai->add_option("--N", k_N, "range")->check(CLI::PositiveNumber);

  // katai-zd
  auto* sc_kzd = app.add_subcommand("katai-zd", "orthogonality sums over the quadratic ring");
  i64 z_d = 1, z_x = 10000, z_plimit = 100, z_r = 1;
  std::string z_g = "liouville";
  sc_kzd->add_option("--d", z_d, "ring parameter")->check(CLI::PositiveNumber);
  sc_kzd->add_option("--norm-limit", z_x, "norm range x")->check(CLI::PositiveNumber);
  sc_kzd->add_option("--P-norm-limit", z_plimit, "prime-element norm cutoff")->check(CLI::PositiveNumber);
  sc_kzd->add_option("--g", z_g, "multiplicative spec pulled back through the norm");
  sc_kzd->add_option("--r", z_r, "norm power");

  // quadfield
  auto* sc_quad = app.add_subcommand("quadfield", "quadratic ring utilities");
  sc_quad->fallthrough();
  i64 q_d = 1;
  sc_quad->add_option("--d", q_d, "ring parameter")->check(CLI::PositiveNumber);
  auto* sc_primes = sc_quad->add_subcommand("primes", "canonical prime elements, CSV (m,n,norm,ramified)");
  i64 q_limit = 100;
  sc_primes->add_option("--limit", q_limit, "norm cutoff")->check(CLI::PositiveNumber);

  // chowla
  auto* sc_chowla = app.add_subcommand("chowla", "Chowla-type average");
  std::string c_spec = "liouville", c_forms = "1,0;1,1", c_region = "square";
  i64 c_d = 1, c_r = 1, c_N = 512;
  sc_chowla->add_option("--spec", c_spec, "function spec");
  sc_chowla->add_option("--d", c_d, "ring parameter")->check(CLI::PositiveNumber);
  sc_chowla->add_option("--r", c_r, "power on the quadratic form")->check(CLI::NonNegativeNumber);
  sc_chowla->add_option("--forms", c_forms, "linear forms 'k,l;k,l'");
  sc_chowla->add_option("--N", c_N, "region size")->check(CLI::PositiveNumber);
  sc_chowla->add_option("--region", c_region, "square|ball")->check(CLI::IsMember({"square", "ball"}));

  // parreg
  auto* sc_parreg = app.add_subcommand("parreg", "partition-regularity tools");
  sc_parreg->require_subcommand(1);
  std::string p_form = "16,9,-1,0,0,0", p_partition = "trivial", p_set = "odd";
  i64 p_bound = 2000, p_M = 4;
  auto* sc_elig = sc_parreg->add_subcommand("eligible", "discriminant eligibility test");
  sc_elig->add_option("--form", p_form, "a,b,c,d,e,f");
  auto* sc_param = sc_parreg->add_subcommand("parametrize", "parametric solution family");
  sc_param->add_option("--form", p_form, "a,b,c,d,e,f");
  auto* sc_search = sc_parreg->add_subcommand("search", "monochromatic solution search");
  sc_search->add_option("--form", p_form, "a,b,c,d,e,f");
  sc_search->add_option("--bound", p_bound, "search bound")->check(CLI::PositiveNumber);
  sc_search->add_option("--partition", p_partition, "trivial|7adic")->check(CLI::IsMember({"trivial", "7adic"}));
  auto* sc_pdensity = sc_parreg->add_subcommand("density", "multiplicative density on the Folner set");
  sc_pdensity->add_option("--set", p_set, "odd|mult6|all");
  sc_pdensity->add_option("--M", p_M, "Folner index")->check(CLI::PositiveNumber);

  // density (top-level alias of parreg density)
  auto* sc_density = app.add_subcommand("density", "multiplicative density on the Folner set");
  sc_density->add_option("--set", p_set, "odd|mult6|all");
  sc_density->add_option("--M", p_M, "Folner index")->check(CLI::PositiveNumber);

  // nil
  auto* sc_nil = app.add_subcommand("nil", "Heisenberg orbits and Daboussi checks");
  sc_nil->require_subcommand(1);
  std::string n_a = "1.41421356,1.73205081,0";
  i64 n_N = 100000, n_budget = 10;
  bool n_diag = false;
  auto* sc_orbit = sc_nil->add_subcommand("orbit", "reduced orbit of a^n");
  sc_orbit->add_option("--a", n_a, "x,y,z");
  sc_orbit->add_option("--N", n_N, "length")->check(CLI::PositiveNumber);
  sc_orbit->add_flag("--diag", n_diag, "report the equidistribution diagnostic");
  sc_orbit->add_option("--budget", n_budget, "progression step budget")->check(CLI::PositiveNumber);
  auto* sc_dab = sc_nil->add_subcommand("daboussi", "sup over the family of twisted orbit averages");
  std::string n_family = "std";
  sc_dab->add_option("--a", n_a, "x,y,z");
  sc_dab->add_option("--N", n_N, "length")->check(CLI::PositiveNumber);
  sc_dab->add_option("--family", n_family, "std or ';'-joined spec list");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    const int code = app.exit(err);
    return code == 0 ? 0 : 2;
  }

  Output out;
  out.path = output_path;
  out.seed = seed;
  {
    // Hash the analysis configuration only; the output destination does not
    // affect the computation and must not change the hash.
    std::ostringstream cfg;
    for (int i = 1; i < argc; ++i) {
      if (std::string(argv[i]) == "--output") {
        ++i;
        continue;
      }
      cfg << argv[i] << " ";
    }
    out.config = cfg.str();
  }

  try {
    if (*sc_gowers) {
      const arith::FactorSieve sieve(g_N);
      const arith::FunctionTable table = arith::tabulate(arith::MultiplicativeSpec::parse(g_spec), g_N, sieve);
      double norm;
      if (g_cyclic) {
        norm = gowers::gowers_norm_cyclic(gowers::signal_from_values(table.values()), g_s);
      } else {
        norm = gowers::gowers_norm_interval(table.values(), g_s);
      }
      out.write_json({{"spec", g_spec}, {"N", g_N}, {"s", g_s}, {"cyclic", g_cyclic}, {"norm", r12(norm)}});
    } else if (*sc_dec) {
      const arith::FactorSieve sieve(d_N);
      const arith::FunctionTable table = arith::tabulate(arith::MultiplicativeSpec::parse(d_spec), d_N, sieve);
      const i64 ntilde = structure::default_ntilde(d_N);
      structure::KernelParams params{ntilde, d_Q, d_W, d_theta};
      const structure::Kernel kernel = structure::structured_kernel(params);
      const structure::Decomposition dec = structure::decompose(table, kernel);
      const structure::U2Certificate cert = structure::conditional_u2_certificate(dec, kernel, d_theta);
      out.write_json({{"spec", d_spec},
                      {"N", d_N},
                      {"Ntilde", ntilde},
                      {"Q", d_Q},
                      {"W", d_W},
                      {"theta", d_theta},
                      {"spectrumSize", dec.report.spectrum_size},
                      {"almostPeriodDeficit", r12(dec.report.almost_period_deficit)},
                      {"u2Uniform", r12(dec.report.u2_of_uniform)},
                      {"hypothesisHolds", cert.hypothesis_holds},
                      {"certified", cert.certified}});
    } else if (*sc_katai) {
      const arith::FactorSieve* sieve = nullptr;
      std::vector<std::unique_ptr<arith::FactorSieve>> owned;
      const std::vector<cplx> values = load_values(k_input, k_N, sieve, owned);
      const katai::PairCorrelationReport report = katai::pair_correlations(values, k_K);
      json entries = json::object();
      for (const auto& [pq, v] : report.entries) {
        entries[std::to_string(pq.first) + "," + std::to_string(pq.second)] = r12(v);
      }
      out.write_json({{"input", k_input}, {"N", k_N}, {"K", k_K}, {"entries", entries}, {"maxEntry", r12(report.max_entry)}});
    } else if (*sc_kzd) {
      const arith::FactorSieve sieve(z_x + 1);
      const std::vector<quadfield::PrimeElement> P = quadfield::prime_elements(z_d, z_plimit);
      const katai::TkStatistics tk = katai::tk_statistics(z_d, P, z_x);
      const katai::NormPullback f{arith::MultiplicativeSpec::parse(z_g), z_r};
      const katai::KataiZdSums sums =
          katai::katai_zd_sums(z_d, f, [](const quadfield::QuadInt&) { return cplx{1.0, 0.0}; }, P, z_x, sieve);
      out.write_json({{"d", z_d},
                      {"x", z_x},
                      {"PNormLimit", z_plimit},
                      {"PSize", P.size()},
                      {"A", r12(tk.A)},
                      {"meanDeviation", r12(tk.mean_deviation)},
                      {"count", tk.count},
                      {"SRe", r12(sums.S.real())},
                      {"SIm", r12(sums.S.imag())},
                      {"C", r12(sums.C)}});
    } else if (*sc_quad) {
      const std::vector<quadfield::PrimeElement> prims = quadfield::prime_elements(q_d, q_limit);
      std::vector<std::string> rows;
      for (const auto& pe : prims) {
        rows.push_back(std::to_string(pe.z.m) + "," + std::to_string(pe.z.n) + "," +
                       std::to_string(quadfield::norm(pe.z)) + "," + (pe.ramified ? "1" : "0"));
      }
      out.write_csv("m,n,norm,ramified", rows);
    } else if (*sc_chowla) {
      const i64 sieve_limit = std::max<i64>(quadfield::norm_form(c_d, c_N, c_N) + 1, 4 * c_N);
      const arith::FactorSieve sieve(sieve_limit);
      correlations::LinearFormSet forms{parse_forms(c_forms)};
      const correlations::Region region =
          c_region == "ball" ? correlations::Region::norm_ball() : correlations::Region::square();
      const cplx avg = correlations::chowla_average(arith::MultiplicativeSpec::parse(c_spec), c_d, {}, c_r, forms, c_N,
                                                    region, sieve);
      const i64 count = c_region == "ball" ? static_cast<i64>(quadfield::enumerate_ball(c_N, c_d).size()) : c_N * c_N;
      out.write_json({{"spec", c_spec},
                      {"d", c_d},
                      {"r", c_r},
                      {"forms", c_forms},
                      {"N", c_N},
                      {"region", c_region},
                      {"avgRe", r12(avg.real())},
                      {"avgIm", r12(avg.imag())},
                      {"count", count}});
    } else if (*sc_parreg || *sc_density) {
      auto run_density = [&]() {
        std::function<bool(i128)> pred;
        if (p_set == "odd") {
          pred = [](i128 v) { return v % 2 != 0; };
        } else if (p_set == "mult6") {
          pred = [](i128 v) { return v % 6 == 0; };
        } else if (p_set == "all") {
          pred = [](i128) { return true; };
        } else {
          throw CLI::ValidationError("--set", "expected odd|mult6|all");
        }
        const double density = parreg::mult_density(pred, p_M);
        out.write_json({{"set", p_set}, {"M", p_M}, {"density", r12(density)}});
      };
      if (*sc_density || *sc_pdensity) {
        run_density();
      } else if (*sc_elig) {
        const parreg::QuadraticForm3 form = parse_form(p_form);
        const parreg::Discriminants disc = parreg::discriminants(form);
        out.write_json({{"form", p_form},
                        {"delta1", disc.d1},
                        {"delta2", disc.d2},
                        {"delta3", disc.d3},
                        {"eligible", parreg::is_eligible(form)}});
      } else if (*sc_param) {
        const parreg::ParamFamily fam = parreg::parametrize(parse_form(p_form));
        out.write_json({{"form", p_form},
                        {"ell0", fam.ell0},
                        {"ell1", fam.ell1},
                        {"ell2", fam.ell2},
                        {"ell3", fam.ell3},
                        {"ell4", fam.ell4},
                        {"signY", fam.sign_y},
                        {"lambdaPoly", {fam.lambda_poly[0], fam.lambda_poly[1], fam.lambda_poly[2]}},
                        {"verifiedGridRadius", 4}});
      } else if (*sc_search) {
        const parreg::QuadraticForm3 form = parse_form(p_form);
        std::function<i64(i64)> cells;
        if (p_partition == "7adic") {
          cells = parreg::base7_cell;
        } else {
          cells = [](i64) { return i64{1}; };
        }
        const std::vector<parreg::MonochromaticHit> hits = parreg::search_monochromatic(cells, form, p_bound);
        json jhits = json::array();
        for (const auto& h : hits) jhits.push_back({{"x", h.x}, {"y", h.y}, {"lambda", h.lambda}, {"cell", h.cell}});
        out.write_json(
            {{"form", p_form}, {"partition", p_partition}, {"bound", p_bound}, {"hits", jhits}, {"count", hits.size()}});
      }
    } else if (*sc_nil) {
      const nil::HeisenbergElement a = parse_heis(n_a);
      if (*sc_orbit) {
        const std::vector<nil::HeisenbergElement> pts = nil::orbit_closed_form(a, n_N);
        json body{{"a", n_a}, {"N", n_N}};
        if (n_diag) {
          std::vector<std::vector<double>> horiz(pts.size());
          for (size_t i = 0; i < pts.size(); ++i) horiz[i] = {pts[i].x, pts[i].y};
          body["diagnostic"] = r12(nil::equidistribution_diagnostic(horiz, n_budget));
          body["budget"] = n_budget;
          out.write_json(body);
        } else {
          std::vector<std::string> rows;
          rows.reserve(pts.size());
          char buf[96];
          for (size_t i = 0; i < pts.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "%zu,%.12g,%.12g,%.12g", i + 1, pts[i].x, pts[i].y, pts[i].z);
            rows.emplace_back(buf);
          }
          out.write_csv("n,x,y,z", rows);
        }
      } else {
        std::vector<arith::MultiplicativeSpec> family;
        if (n_family == "std") {
          family = standard_family();
        } else {
          std::stringstream ss(n_family);
          std::string part;
          while (std::getline(ss, part, ';')) family.push_back(arith::MultiplicativeSpec::parse(part));
        }
        const arith::FactorSieve sieve(n_N);
        const double value = nil::daboussi_check(a, {1, 0}, family, n_N, sieve);
        out.write_json({{"a", n_a}, {"N", n_N}, {"family", n_family}, {"value", r12(value)}});
      }
    }
  } catch (const CLI::ValidationError& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::length_error& err) {
    std::cerr << "error: " << err.what() << "\n";
    return 2;
  } catch (const std::exception& err) {
    std::cerr << "computation error: " << err.what() << "\n";
    return 1;
  }
  return 0;
}
