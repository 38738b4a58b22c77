#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "gtc/code_algebra.hpp"
#include "gtc/css_lattice.hpp"
#include "gtc/distance.hpp"
#include "gtc/errors.hpp"
#include "gtc/gb1d.hpp"
#include "gtc/search.hpp"

namespace {

using namespace gtc;

struct CommonOpts {
  std::string order = "lex-xy";
  std::string distance = "exact";
  std::int64_t cap = 14;
  std::uint64_t trials = 100'000;
  std::uint64_t seed = 0xC0DE;
  int workers = 0;
  std::string format = "table";

  DistancePolicy policy() const {
    if (distance == "exact") return DistancePolicy::exact(cap);
    DistancePolicy p = DistancePolicy::ris(trials);
    return p;
  }
  MonomialOrder monomial_order() const { return order == "lex-yx" ? lex_yx() : lex_xy(); }
};

void add_common(CLI::App* cmd, CommonOpts& o) {
  cmd->add_option("--order", o.order, "Monomial order: lex-xy (eliminates x) or lex-yx")
      ->check(CLI::IsMember({"lex-xy", "lex-yx"}));
  cmd->add_option("--distance", o.distance, "Distance method: exact or ris")
      ->check(CLI::IsMember({"exact", "ris"}));
  cmd->add_option("--cap", o.cap, "Exact-distance certification cap");
  cmd->add_option("--trials", o.trials, "RIS trial count");
  cmd->add_option("--seed", o.seed, "PRNG seed");
  cmd->add_option("--workers", o.workers, "Worker threads (0 = hardware)");
  cmd->add_option("--format", o.format, "Output format: table or json")
      ->check(CLI::IsMember({"table", "json"}));
}

std::string side_name(Side s) {
  switch (s) {
    case Side::x: return "X";
    case Side::z: return "Z";
    case Side::both: return "both";
  }
  return "?";
}

void emit_matrices(const CssCode& code, const std::string& path, const std::string& mformat) {
  auto [hx, hz] = build_parity_checks(code);
  auto write = [&](const Gf2Matrix& m, const std::string& suffix) {
    std::string ext = mformat == "alist" ? ".alist" : ".txt";
    std::ofstream os(path + suffix + ext);
    if (!os) throw DomainError("cannot open matrix output file: " + path + suffix + ext);
    if (mformat == "alist")
      write_alist(m, os);
    else
      write_dense(m, os);
  };
  write(hx, ".hx");
  write(hz, ".hz");
}

int cmd_analyze(const std::string& ftext, const std::string& gtext,
                const std::vector<std::int64_t>& torus_spec, const CommonOpts& opts,
                bool with_distance, const std::string& matrices_path,
                const std::string& matrix_format) {
  LaurentPoly f = parse_poly(ftext);
  LaurentPoly g = parse_poly(gtext);
  if (f.is_zero() || g.is_zero()) throw DomainError("analyze: polynomials must be nonzero");

  nlohmann::ordered_json j;
  j["f"] = render_poly(f);
  j["g"] = render_poly(g);

  bool to_ok = check_to_condition(f, g);
  j["to_condition"] = to_ok;
  if (!to_ok) {
    if (opts.format == "json") {
      std::cout << j.dump(2) << "\n";
    } else {
      std::cout << "f = " << j["f"].get<std::string>() << "\n";
      std::cout << "g = " << j["g"].get<std::string>() << "\n";
      std::cout << "TO condition: VIOLATED (f and g share a factor; no anyon theory)\n";
    }
    return 0;
  }

  Budget budget;
  GroebnerBasis gb = laurent_ideal_basis(f, g, {}, opts.monomial_order(), budget);
  StandardMonomialBasis sm = standard_monomials(gb);
  j["k_max"] = 2 * sm.count();
  j["quotient_dimension"] = sm.count();
  std::vector<std::string> monos;
  for (const auto& e : sm.monomials) monos.push_back(render_poly(LaurentPoly({e})));
  j["standard_monomials"] = monos;
  std::vector<std::string> basis;
  for (const auto& gen : gb.gens) basis.push_back(render_poly(to_laurent(gen)));
  j["groebner_basis"] = basis;
  j["order"] = gb.order.name();

  std::optional<CssCode> code;
  if (torus_spec.size() == 3) {
    TwistedTorus torus(torus_spec[0], torus_spec[1], torus_spec[2]);
    std::int64_t k = k_on_torus(f, g, torus);
    j["torus"] = {{"a1", {0, torus.alpha}}, {"a2", {torus.beta, torus.gamma}}};
    j["n"] = torus.qubits();
    j["k"] = k;
    j["achieves_full_k"] = achieves_full_k(f, g, torus);
    code = CssCode{f, g, torus};
    if (with_distance && k > 0) {
      DistanceResult d = css_distance(*code, opts.policy(), opts.seed, opts.workers);
      j["d"] = d.d;
      j["d_exact"] = d.exact;
      j["d_side"] = side_name(d.side);
    }
    if (!matrices_path.empty()) emit_matrices(*code, matrices_path, matrix_format);
  }

  if (opts.format == "json") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "f = " << j["f"].get<std::string>() << "\n";
  std::cout << "g = " << j["g"].get<std::string>() << "\n";
  std::cout << "TO condition: satisfied\n";
  std::cout << "quotient dimension = " << sm.count() << ", k_max = " << 2 * sm.count() << "\n";
  std::cout << "standard monomials:";
  for (const auto& m : monos) std::cout << " " << m;
  std::cout << "\n";
  std::cout << "groebner basis (" << gb.order.name() << "):\n";
  for (const auto& b : basis) std::cout << "  " << b << "\n";
  if (code) {
    std::cout << "torus a1=(0," << code->torus.alpha << ") a2=(" << code->torus.beta << ","
              << code->torus.gamma << "): n = " << j["n"].get<std::int64_t>()
              << ", k = " << j["k"].get<std::int64_t>()
              << (j["achieves_full_k"].get<bool>() ? " (full k_max)" : "") << "\n";
    if (j.contains("d"))
      std::cout << "distance: d = " << j["d"].get<std::int64_t>()
                << (j["d_exact"].get<bool>() ? " (exact certificate)" : " (upper bound)")
                << ", side " << j["d_side"].get<std::string>() << "\n";
  }
  return 0;
}

int cmd_period(const std::string& ftext, const std::string& gtext, const CommonOpts& opts) {
  LaurentPoly f = parse_poly(ftext);
  LaurentPoly g = parse_poly(gtext);

  Gf2Poly hy = to_univariate(univariate_generator(f, g, Var::y), Var::y);
  Gf2Poly hx = to_univariate(univariate_generator(f, g, Var::x), Var::x);

  nlohmann::ordered_json j;
  j["h_y"] = hy.to_string('y');
  j["h_x"] = hx.to_string('x');

  auto factor_block = [](const Gf2Poly& h, char var) {
    nlohmann::ordered_json out = nlohmann::json::array();
    for (const auto& [p, m] : factor_univariate(h).factors) {
      nlohmann::ordered_json item;
      item["factor"] = p.to_string(var);
      item["multiplicity"] = m;
      item["order"] = multiplicative_order(p);
      out.push_back(item);
    }
    return out;
  };
  j["h_y_factors"] = factor_block(hy, 'y');
  j["h_x_factors"] = factor_block(hx, 'x');

  std::uint64_t ly = minimal_period(hy);
  std::uint64_t lx = minimal_period(hx);
  j["L_y"] = ly;
  j["L_x"] = lx;

  constexpr std::uint64_t kTwistScanLimit = 1u << 21;
  if (ly <= kTwistScanLimit) {
    auto twist = minimal_full_k_twist(f, g, ly, lx);
    if (twist) {
      j["full_k_twist"] = {{"a1", {0, static_cast<std::int64_t>(ly)}},
                           {"a2", {twist->first, twist->second}},
                           {"n", 2 * static_cast<std::int64_t>(ly) * twist->first}};
    }
  } else {
    j["full_k_twist_scan"] = "skipped (L_y too large)";
  }

  if (opts.format == "json") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "h(y)  = " << j["h_y"].get<std::string>() << "\n";
  std::cout << "h'(x) = " << j["h_x"].get<std::string>() << "\n";
  auto print_factors = [&](const char* label, const nlohmann::ordered_json& arr) {
    std::cout << label << ":\n";
    for (const auto& item : arr)
      std::cout << "  (" << item["factor"].get<std::string>() << ")^"
                << item["multiplicity"].get<int>() << "  order "
                << item["order"].get<std::uint64_t>() << "\n";
  };
  print_factors("factors of h(y)", j["h_y_factors"]);
  print_factors("factors of h'(x)", j["h_x_factors"]);
  std::cout << "L_y = " << ly << "\nL_x = " << lx << "\n";
  std::cout << "minimal untwisted torus for full k: " << lx << " x " << ly << "\n";
  if (j.contains("full_k_twist")) {
    auto& t = j["full_k_twist"];
    std::cout << "full-k twisted torus: a1=(0," << ly << ") a2=(" << t["a2"][0] << ","
              << t["a2"][1] << "), n = " << t["n"] << "\n";
  } else if (j.contains("full_k_twist_scan")) {
    std::cout << "full-k twist scan skipped (L_y too large)\n";
  }
  return 0;
}

int cmd_search(const std::string& range, const CommonOpts& opts, std::uint64_t filter_trials,
               bool no_dedup, const std::string& records_path, const std::string& optima_path) {
  std::int64_t lo = 0, hi = 0;
  auto dots = range.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoll(range);
    } else {
      lo = std::stoll(range.substr(0, dots));
      hi = std::stoll(range.substr(dots + 2));
    }
  } catch (const std::exception&) {
    throw DomainError("search: bad range '" + range + "' (expected A..B)");
  }

  SearchSpace space;
  for (std::int64_t n = lo; n <= hi; ++n)
    if (n >= 2 && n % 2 == 0) space.n_values.push_back(n);
  space.policy = opts.policy();
  space.seed = opts.seed;
  space.dedup_symmetry = !no_dedup;
  space.filter_trials = filter_trials;

  std::ofstream records(records_path);
  std::ofstream optima(optima_path);
  if (!records) throw DomainError("cannot open " + records_path);
  if (!optima) throw DomainError("cannot open " + optima_path);
  optima << records_csv_header() << "\n";

  SearchSink sink;
  sink.on_record = [&](const CodeRecord& r) { records << record_to_json(r) << "\n"; };
  sink.on_optimum = [&](const CodeRecord& r) {
    optima << record_to_csv(r) << "\n";
    std::cout << "n=" << r.n << " optimum [[" << r.n << "," << r.k << "," << r.d << "]]"
              << (r.d_exact ? "" : " (d upper bound)") << "  f=" << r.f << "  g=" << r.g
              << "  a1=(0," << r.alpha << ") a2=(" << r.beta << "," << r.gamma << ")"
              << "  kd^2/n=" << r.merit.str() << "  locality=" << r.locality << "\n";
  };

  SearchSummary s = run_search(space, opts.workers, sink);
  std::cout << "candidates=" << s.candidates << " records=" << s.records
            << " skipped_zero_k=" << s.skipped_zero_k << " skipped_to=" << s.skipped_to
            << " skipped_budget=" << s.skipped_budget << "\n";
  return 0;
}

int cmd_reduce1d(const std::string& ftext, const std::string& gtext, std::int64_t alpha,
                 std::int64_t gamma, const CommonOpts& opts, bool with_distance) {
  LaurentPoly f = parse_poly(ftext);
  LaurentPoly g = parse_poly(gtext);
  TwistedTorus torus(alpha, 1, gamma);
  GbCode1D code = reduce_to_1d(f, g, torus);
  std::int64_t k = k_1d(code);

  nlohmann::ordered_json j;
  j["f_y"] = code.f.to_string('y');
  j["g_y"] = code.g.to_string('y');
  j["l"] = code.l;
  j["n"] = code.n();
  j["k"] = k;
  if (with_distance && k > 0) {
    CssCode css{from_univariate(code.f, Var::y), from_univariate(code.g, Var::y), torus};
    DistanceResult d = css_distance(css, opts.policy(), opts.seed, opts.workers);
    j["d"] = d.d;
    j["d_exact"] = d.exact;
  }

  if (opts.format == "json") {
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  std::cout << "f(y) = " << j["f_y"].get<std::string>() << "\n";
  std::cout << "g(y) = " << j["g_y"].get<std::string>() << "\n";
  std::cout << "l = " << code.l << ", n = " << code.n() << ", k = " << k << "\n";
  if (j.contains("d"))
    std::cout << "d = " << j["d"].get<std::int64_t>()
              << (j["d_exact"].get<bool>() ? " (exact certificate)" : " (upper bound)") << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Generalized toric codes on twisted tori: algebraic analysis and search"};
  app.require_subcommand(1);
  app.set_config("--config", "", "Config file (key=value), overridden by flags");

  CommonOpts opts;

  std::string a_f, a_g;
  std::vector<std::int64_t> a_torus;
  bool a_dist = false;
  std::string a_matrices, a_matrix_format = "dense";
  auto* analyze = app.add_subcommand("analyze", "TO condition, k_max, per-torus k and distance");
  analyze->add_option("f", a_f, "X-type polynomial f(x,y)")->required();
  analyze->add_option("g", a_g, "X-type polynomial g(x,y)")->required();
  analyze->add_option("--torus", a_torus, "Torus alpha,beta,gamma")->expected(3)->delimiter(',');
  analyze->add_flag("--with-distance", a_dist, "Also compute the code distance");
  analyze->add_option("--emit-matrices", a_matrices, "Write H_X/H_Z to PREFIX.hx/.hz files");
  analyze->add_option("--matrix-format", a_matrix_format, "Matrix file format")
      ->check(CLI::IsMember({"dense", "alist"}));
  add_common(analyze, opts);

  std::string p_f, p_g;
  auto* period = app.add_subcommand("period", "Univariate generators, factors, anyon periods");
  period->add_option("f", p_f)->required();
  period->add_option("g", p_g)->required();
  add_common(period, opts);

  std::string s_range, s_records = "records.jsonl", s_optima = "optima.csv";
  std::uint64_t s_filter_trials = 1000;
  bool s_no_dedup = false;
  auto* search = app.add_subcommand("search", "Search optimal codes over a range of even n");
  search->add_option("range", s_range, "Even-n range, e.g. 12..72")->required();
  search->add_option("--out-records", s_records, "JSON-lines output of all viable records");
  search->add_option("--out-optima", s_optima, "CSV output of per-n optima");
  search->add_option("--filter-trials", s_filter_trials, "RIS trials for the cheap filter pass");
  search->add_flag("--no-dedup", s_no_dedup, "Disable symmetry deduplication");
  add_common(search, opts);

  std::string r_f, r_g;
  std::int64_t r_alpha = 0, r_gamma = 0;
  bool r_dist = false;
  auto* reduce1d =
      app.add_subcommand("reduce1d", "Reduce a width-one twisted torus code to a 1D GB code");
  reduce1d->add_option("f", r_f)->required();
  reduce1d->add_option("g", r_g)->required();
  reduce1d->add_option("alpha", r_alpha, "Cycle length (a1 = (0, alpha))")->required();
  reduce1d->add_option("gamma", r_gamma, "Twist (a2 = (1, gamma))")->required();
  reduce1d->add_flag("--with-distance", r_dist, "Also compute the code distance");
  add_common(reduce1d, opts);

  try {
    app.parse(argc, argv);
    if (analyze->parsed())
      return cmd_analyze(a_f, a_g, a_torus, opts, a_dist, a_matrices, a_matrix_format);
    if (period->parsed()) return cmd_period(p_f, p_g, opts);
    if (search->parsed())
      return cmd_search(s_range, opts, s_filter_trials, s_no_dedup, s_records, s_optima);
    if (reduce1d->parsed()) return cmd_reduce1d(r_f, r_g, r_alpha, r_gamma, opts, r_dist);
    return 2;
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const BudgetExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 4;
  }
}
