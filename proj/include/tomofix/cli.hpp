// Command-line surface. Every subcommand writes a deterministic payload to
// stdout; the run manifest (parameters, elapsed time, payload digest) goes
// to stderr or to the --manifest path, never into the payload, so output
// bytes are reproducible across runs and worker counts.
#pragma once

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "tomofix/grid_text.hpp"
#include "tomofix/reproduce.hpp"
#include "tomofix/serialize.hpp"

namespace tomofix::cli {

inline std::uint64_t fnv1a64(std::string_view s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline std::string digest_hex(std::string_view payload) {
  std::ostringstream os;
  os << "fnv1a64:" << std::hex << fnv1a64(payload);
  return os.str();
}

struct CommonFlags {
  bool as_json = false;
  bool as_grid = false;
  std::uint64_t seed = 20240801;
  int threads = 1;
  std::uint64_t budget = 1000000;
  std::string manifest_path;
};

namespace handlers {

inline std::string root_text(const RootOfUnity& u) {
  if (u.order == 1) return "1";
  if (u.order == 2) return "-1";
  return "zeta_" + std::to_string(u.order) + "^" + std::to_string(u.exp);
}

inline int zero_locus_cmd(long long n, bool use_oracle, const CommonFlags& flags,
                          std::ostream& out) {
  std::vector<TorusPoint> pts =
      use_oracle ? zero_locus_oracle(n, flags.threads) : square_zero_locus(n);
  if (flags.as_json) {
    json arr = json::array();
    for (const TorusPoint& p : pts) arr.push_back(to_json(p));
    out << arr.dump(2) << "\n";
  } else {
    out << "# torus zero locus for the punctured square window, width " << n << "\n";
    out << "# source: " << (use_oracle ? "exhaustive oracle" : "closed form") << "\n";
    for (const TorusPoint& p : pts)
      out << "(" << root_text(p.x) << ", " << root_text(p.y) << ")\n";
    out << "count: " << pts.size() << "\n";
  }
  return 0;
}

inline int bounded_basis_cmd(long long n, bool rational, const CommonFlags& flags,
                             std::ostream& out) {
  if (rational) {
    RationalBasis rb = rational_basis(n);
    if (flags.as_json) {
      json arrays = json::array();
      for (std::size_t k = 0; k < rb.arrays.size(); ++k) {
        json entry = to_json(rb.arrays[k]);
        entry["periods"] = {{rb.periods[k].first.i1, rb.periods[k].first.i2},
                            {rb.periods[k].second.i1, rb.periods[k].second.i2}};
        arrays.push_back(std::move(entry));
      }
      out << json{{"n", n},
                  {"fundamental_torus", {rb.n1, rb.n2}},
                  {"count", rb.arrays.size()},
                  {"arrays", std::move(arrays)}}
                 .dump(2)
          << "\n";
    } else {
      out << "# rational basis of bounded fixed arrays, width " << n << " (" << rb.arrays.size()
          << " arrays on the " << rb.n1 << "x" << rb.n2 << " torus)\n";
      for (std::size_t k = 0; k < rb.arrays.size(); ++k) {
        out << "array " << k << ", periods (" << rb.periods[k].first.i1 << ","
            << rb.periods[k].first.i2 << "),(" << rb.periods[k].second.i1 << ","
            << rb.periods[k].second.i2 << ")\n";
        out << render_grid(rb.arrays[k], k == 0);
      }
    }
    return 0;
  }
  std::vector<CharacterArray> basis = bounded_basis(n);
  if (flags.as_json) {
    json arrays = json::array();
    for (const CharacterArray& a : basis) {
      auto [pp, qq] = period_lattice(a);
      json entry{{"point", to_json(a.point())},
                 {"dims", {a.n1(), a.n2()}},
                 {"periods", {{pp.i1, pp.i2}, {qq.i1, qq.i2}}}};
      arrays.push_back(std::move(entry));
    }
    out << json{{"n", n}, {"count", basis.size()}, {"arrays", std::move(arrays)}}.dump(2)
        << "\n";
  } else {
    out << "# character arrays at the " << basis.size() << " zero-locus points, width " << n
        << "\n";
    for (std::size_t k = 0; k < basis.size(); ++k) {
      const CharacterArray& a = basis[k];
      auto [pp, qq] = period_lattice(a);
      out << "array " << k << ": point (" << root_text(a.point().x) << ", "
          << root_text(a.point().y) << "), periods (" << pp.i1 << "," << pp.i2 << "),("
          << qq.i1 << "," << qq.i2 << ")\n";
      if (flags.as_grid) out << render_grid(a.materialize(), k == 0);
    }
  }
  return 0;
}

inline int poly_cmd(long long n, std::size_t point_index, long long degree_bound,
                    long long region_w, long long region_h, const CommonFlags& flags,
                    std::ostream& out, std::ostream& err) {
  std::vector<TorusPoint> pts = square_zero_locus(n);
  if (point_index >= pts.size()) {
    err << "poly: point index " << point_index << " out of range (locus has " << pts.size()
        << " points)\n";
    return 2;
  }
  const TorusPoint p = pts[point_index];
  const Window w = puncture(square_window(n));
  DiffOp2 d = window_operator(w, p);
  SolutionSpace ss = sol_space(d, degree_bound);
  std::size_t formula = dim_formula(d, degree_bound);
  Rect region{0, region_w - 1, 0, region_h - 1};
  if (flags.as_json) {
    json basis = json::array();
    for (const Poly2& g : ss.basis) {
      PatchArray<CycElem> arr = array_from_solution(w, p, g, region);
      json cells = json::array();
      for (long long j = region.jmin; j <= region.jmax; ++j) {
        json row = json::array();
        for (long long i = region.imin; i <= region.imax; ++i) row.push_back(arr.at(i, j).str());
        cells.push_back(std::move(row));
      }
      basis.push_back(json{{"solution", g.str()}, {"array", std::move(cells)}});
    }
    out << json{{"n", n},
                {"point", to_json(p)},
                {"degree_bound", degree_bound},
                {"dimension", ss.dimension()},
                {"dimension_formula", formula},
                {"region", {region_w, region_h}},
                {"basis", std::move(basis)}}
               .dump(2)
        << "\n";
  } else {
    out << "# polynomial-growth fixed arrays, width " << n << ", point ("
        << root_text(p.x) << ", " << root_text(p.y) << "), degree <= " << degree_bound << "\n";
    out << "dimension: " << ss.dimension() << " (formula: " << formula << ")\n";
    for (std::size_t k = 0; k < ss.basis.size(); ++k) {
      PatchArray<CycElem> arr = array_from_solution(w, p, ss.basis[k], region);
      out << "solution " << k << ": " << ss.basis[k].str() << "\n";
      out << render_grid(arr, k == 0);
    }
  }
  return 0;
}

inline int modp_cmd(unsigned long p, long long n, bool has_n, bool sweep,
                    const CommonFlags& flags, std::ostream& out) {
  if (sweep) {
    std::vector<SweepRow> rows = invertibility_sweep(p);
    if (flags.as_json) {
      json arr = json::array();
      for (const SweepRow& r : rows)
        arr.push_back(json{{"n", r.n}, {"kernel_dim", r.kernel_dim}, {"det", r.det}});
      out << json{{"p", p}, {"sweep", std::move(arr)}}.dump(2) << "\n";
    } else {
      out << "# kernel dimension and determinant across widths, p = " << p << "\n";
      for (const SweepRow& r : rows)
        out << "n=" << r.n << " kernel_dim=" << r.kernel_dim << " det=" << r.det
            << " (n^2-1 mod p = " << ((r.n * r.n - 1) % static_cast<long long>(p)) << ")\n";
    }
    return 0;
  }
  long long width = has_n ? n : 2;
  KernelReport k = kernel(width, p);
  GroupDetCheck det = group_det_check(width, p);
  if (flags.as_json) {
    json j = to_json(k);
    j["det"] = det.direct;
    j["det_formula"] = det.formula;
    out << j.dump(2) << "\n";
  } else {
    out << "# punctured square window width " << width << " on the " << p << "-torus\n";
    out << "kernel dimension: " << k.dimension << "\n";
    out << "det: " << det.direct << " (n^2-1 mod p = " << det.formula << ")"
        << (det.equal ? "" : "  MISMATCH") << "\n";
    for (std::size_t b = 0; b < k.basis.size(); ++b) {
      out << "kernel basis " << b << ":\n";
      out << render_grid(k.basis[b], b == 0);
    }
  }
  return det.equal ? 0 : 1;
}

inline json certificate_json(const ZnArray& a, const Window& w) {
  TranslateSums ts = window_translate_sums(a, w);
  json sums = json::array();
  for (const auto& [k, s] : ts.sums)
    sums.push_back(json{{"translate", {k.i1, k.i2}}, {"sum", s}});
  return json{{"n", a.n()},
              {"array", a.row_vector()},
              {"balanced", is_balanced(a)},
              {"zero_sum", ts.all_zero},
              {"translate_sums", std::move(sums)}};
}

inline int balanced_cmd(bool do_search, long long fn_n, bool has_fn, long long probe_n,
                        bool has_probe, long long k, const CommonFlags& flags, std::ostream& out,
                        std::ostream& err) {
  int selected = (do_search ? 1 : 0) + (has_fn ? 1 : 0) + (has_probe ? 1 : 0);
  if (selected != 1) {
    err << "balanced: choose exactly one of --search, --fn, --probe\n";
    return 2;
  }
  if (do_search) {
    const Window w = puncture(square_window(2));
    std::vector<ZnArray> sols = search_balanced_3torus();
    if (flags.as_json) {
      json arr = json::array();
      for (const ZnArray& a : sols) arr.push_back(certificate_json(a, w));
      out << arr.dump(2) << "\n";
    } else {
      out << "# balanced zero-sum arrays on the 3-torus (origin value 0)\n";
      for (const ZnArray& a : sols) {
        for (long long v : a.row_vector()) out << v << " ";
        out << "\n";
      }
      out << "count: " << sols.size() << "\n";
    }
    return 0;
  }
  if (has_fn) {
    ZnArray f = construct_fn(fn_n);
    const Window w = puncture(square_window(fn_n - 1));
    if (flags.as_json) {
      out << certificate_json(f, w).dump(2) << "\n";
    } else {
      out << "# balanced zero-sum construction on the " << fn_n << "-torus\n";
      out << render_grid(f.torus());
      out << "balanced: yes; zero-sum for the punctured width-" << (fn_n - 1)
          << " square: yes\n";
    }
    return 0;
  }
  ProbeReport rep = composite_probe(probe_n, k, flags.budget);
  if (flags.as_json) {
    json found = json::array();
    for (const ZnArray& a : rep.found)
      found.push_back(certificate_json(a, puncture(square_window(k))));
    out << json{{"n", rep.n},
                {"k", rep.k},
                {"budget", rep.budget},
                {"nodes", rep.nodes},
                {"status", to_string(rep.status)},
                {"exhausted", rep.exhausted},
                {"seeded_witness", rep.seeded_witness},
                {"found", std::move(found)}}
               .dump(2)
        << "\n";
  } else {
    out << "# probe: balanced arrays on the " << rep.n << "-torus, zero-sum for width " << rep.k
        << "\n";
    out << "status: " << to_string(rep.status) << "\n";
    out << "nodes: " << rep.nodes << " / " << rep.budget << "\n";
    out << "exhausted: " << (rep.exhausted ? "yes" : "no") << "\n";
    out << "found: " << rep.found.size() << "\n";
    for (const ZnArray& a : rep.found) {
      for (long long v : a.row_vector()) out << v << " ";
      out << "\n";
    }
  }
  return 0;
}

inline int verify_cmd(const CommonFlags& flags, std::size_t cases, std::size_t cyc_cases,
                      std::ostream& out) {
  std::vector<PropertyResult> results = core_property_suite(flags.seed, cases);
  results.push_back(cyclotomic_zero_suite(flags.seed + 1, cyc_cases));
  std::size_t failures = 0;
  for (const PropertyResult& r : results) {
    out << (r.passed() ? "[PASS] " : "[FAIL] ") << r.name << " (" << r.cases << " cases";
    if (!r.passed()) out << ", " << r.failures << " failures";
    out << ")\n";
    failures += r.failures;
  }
  out << (failures == 0 ? "all property suites passed\n" : "property suites FAILED\n");
  return failures == 0 ? 0 : 1;
}

inline int reproduce_cmd(const CommonFlags& flags, std::ostream& out) {
  ReproduceOutcome outcome = run_reproduce(flags.threads);
  out << outcome.table;
  return outcome.all_passed() ? 0 : 1;
}

}  // namespace handlers

// Parses argv (without the program name), runs the selected subcommand,
// streams the payload to `out`, and emits the manifest. Exit codes:
// 0 success, 1 a verified identity failed, 2 usage error.
inline int dispatch(std::vector<std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact fixed-point computations for window sums on lattice arrays"};
  app.name("tomofix");
  app.fallthrough();  // global flags remain valid after a subcommand name
  CommonFlags flags;
  app.add_flag("--json", flags.as_json, "machine-readable output");
  app.add_flag("--grid", flags.as_grid, "render arrays as text grids");
  app.add_option("--seed", flags.seed, "seed for randomized property suites");
  app.add_option("--threads", flags.threads, "worker threads for parallel checks")
      ->check(CLI::Range(1, 64));
  app.add_option("--budget", flags.budget, "node budget for search probes");
  app.add_option("--manifest", flags.manifest_path, "write the run manifest to this file");
  unsigned long cap = 0;
  app.add_option("--conductor-cap", cap, "override the cyclotomic conductor cap");

  auto* zl = app.add_subcommand("zero-locus", "exact torus zero locus of the window polynomial");
  long long zl_n = 2;
  bool zl_oracle = false;
  zl->add_option("--n", zl_n, "square window width")->required()->check(CLI::Range(2, 64));
  zl->add_flag("--oracle", zl_oracle, "use the exhaustive enumeration oracle");

  auto* bb = app.add_subcommand("bounded-basis", "bounded fixed arrays from the zero locus");
  long long bb_n = 2;
  bool bb_rational = false;
  bb->add_option("--n", bb_n, "square window width")->required()->check(CLI::Range(2, 16));
  bb->add_flag("--rational", bb_rational, "emit the rational basis");

  auto* po = app.add_subcommand("poly", "polynomial-growth fixed arrays at a zero-locus point");
  long long po_n = 2, po_deg = 1;
  std::size_t po_idx = 0;
  std::string po_region = "8x8";
  po->add_option("--n", po_n, "square window width")->required()->check(CLI::Range(2, 16));
  po->add_option("--point-index", po_idx, "index into the zero locus")->required();
  po->add_option("--degree", po_deg, "degree bound")->required()->check(CLI::Range(0, 16));
  po->add_option("--region", po_region, "synthesis region WxH");

  auto* mp = app.add_subcommand("modp", "window operator on the p-torus");
  unsigned long mp_p = 3;
  long long mp_n = 2;
  bool mp_sweep = false;
  mp->add_option("--p", mp_p, "odd prime torus size")->required();
  auto* mp_n_opt = mp->add_option("--n", mp_n, "square window width");
  mp->add_flag("--sweep", mp_sweep, "sweep all widths 2..p-1");

  auto* ba = app.add_subcommand("balanced", "balanced zero-sum arrays on the n-torus");
  long long ba_n = 3, ba_fn = 3, ba_probe = 4, ba_k = 2;
  bool ba_search = false;
  ba->add_option("--n", ba_n, "torus size (search supports 3)");
  ba->add_flag("--search", ba_search, "exhaustive search on the 3-torus");
  auto* ba_fn_opt = ba->add_option("--fn", ba_fn, "emit the explicit construction for this n");
  auto* ba_probe_opt = ba->add_option("--probe", ba_probe, "budgeted search on a composite torus");
  ba->add_option("--k", ba_k, "window width for the probe");

  auto* ve = app.add_subcommand("verify", "randomized property suites (seeded)");
  std::size_t ve_cases = 500, ve_cyc = 1000;
  ve->add_option("--cases", ve_cases, "cases per ring instance");
  ve->add_option("--cyc-cases", ve_cyc, "cyclotomic expression trees");

  auto* rp = app.add_subcommand("reproduce-paper", "run every golden check");

  app.require_subcommand(0, 1);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    err << app.help();
    return 2;
  }

  if (app.get_subcommands().empty()) {
    err << app.help();
    return 2;
  }
  if (cap > 0) set_conductor_cap(cap);

  const auto started = std::chrono::steady_clock::now();
  std::ostringstream payload;
  int code = 0;
  std::string subcommand;
  json parameters = json::object();
  try {
    if (zl->parsed()) {
      subcommand = "zero-locus";
      parameters = {{"n", zl_n}, {"oracle", zl_oracle}};
      code = handlers::zero_locus_cmd(zl_n, zl_oracle, flags, payload);
    } else if (bb->parsed()) {
      subcommand = "bounded-basis";
      parameters = {{"n", bb_n}, {"rational", bb_rational}};
      code = handlers::bounded_basis_cmd(bb_n, bb_rational, flags, payload);
    } else if (po->parsed()) {
      subcommand = "poly";
      long long w = 8, h = 8;
      auto xpos = po_region.find('x');
      if (xpos == std::string::npos) {
        err << "poly: --region must look like 12x12\n";
        return 2;
      }
      w = std::stoll(po_region.substr(0, xpos));
      h = std::stoll(po_region.substr(xpos + 1));
      if (w < 1 || h < 1) {
        err << "poly: region must be positive\n";
        return 2;
      }
      parameters = {{"n", po_n}, {"point_index", po_idx}, {"degree", po_deg}, {"region", po_region}};
      code = handlers::poly_cmd(po_n, po_idx, po_deg, w, h, flags, payload, err);
    } else if (mp->parsed()) {
      subcommand = "modp";
      parameters = {{"p", mp_p}, {"sweep", mp_sweep}};
      if (!mp_n_opt->empty()) parameters["n"] = mp_n;
      code = handlers::modp_cmd(mp_p, mp_n, !mp_n_opt->empty(), mp_sweep, flags, payload);
    } else if (ba->parsed()) {
      subcommand = "balanced";
      parameters = {{"n", ba_n}};
      if (ba_search) {
        if (ba_n != 3) {
          err << "balanced: --search supports --n 3\n";
          return 2;
        }
        parameters["search"] = true;
      }
      if (!ba_fn_opt->empty()) parameters["fn"] = ba_fn;
      if (!ba_probe_opt->empty()) {
        parameters["probe"] = ba_probe;
        parameters["k"] = ba_k;
        parameters["budget"] = flags.budget;
      }
      code = handlers::balanced_cmd(ba_search, ba_fn, !ba_fn_opt->empty(), ba_probe,
                                    !ba_probe_opt->empty(), ba_k, flags, payload, err);
    } else if (ve->parsed()) {
      subcommand = "verify";
      parameters = {{"seed", flags.seed}, {"cases", ve_cases}, {"cyc_cases", ve_cyc}};
      code = handlers::verify_cmd(flags, ve_cases, ve_cyc, payload);
    } else if (rp->parsed()) {
      subcommand = "reproduce-paper";
      parameters = {{"threads", flags.threads}};
      code = handlers::reproduce_cmd(flags, payload);
    }
  } catch (const verification_error& e) {
    err << "verification failure: " << e.what() << "\n";
    return 1;
  } catch (const construction_failure& e) {
    err << "construction failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  const auto finished = std::chrono::steady_clock::now();
  const std::string body = payload.str();
  out << body;

  json manifest{{"subcommand", subcommand},
                {"parameters", parameters},
                {"exact_arithmetic", true},
                {"elapsed_ms",
                 std::chrono::duration<double, std::milli>(finished - started).count()},
                {"result_digest", digest_hex(body)}};
  if (!flags.manifest_path.empty()) {
    std::ofstream mf(flags.manifest_path);
    mf << manifest.dump(2) << "\n";
  } else {
    err << "manifest: " << manifest.dump() << "\n";
  }
  return code;
}

}  // namespace tomofix::cli
