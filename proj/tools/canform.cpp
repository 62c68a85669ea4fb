// canform: exact canonical forms of convex polytopes from the command line.
//
// Verbs
//   canon              canonical form by one engine or all three
//   residue            facet residue and its chart record
//   adjoint            adjoint polynomial report
//   residual           residual arrangement flats
//   polar              polar dual at an interior point
//   dualvol            dual-volume form, or its exact value at a point
//   laplace            dual-cone terms and the assembled form
//   mixedvol           dual mixed volume of several bodies
//   check-recursion    residue recursion bottoms out in +-1 leaves
//   check-subdivision  part forms sum to the parent form
//   check-filliman     the three engines agree
//   check-convexity    sign pattern of the form on interior samples
//   check-pushforward  numeric pushforward identity
//
// Exit status: 0 on success and passing checks, 1 on failing checks
// (the report is still emitted), 2 on input errors.

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "canform/io.hpp"
#include "canform/mixedvol.hpp"

namespace {

using namespace canform;

Polytope load_polytope(const std::string& path) {
  std::vector<std::string> warnings;
  Polytope p = polytope_from_json(load_json(path), &warnings);
  for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
  return p;
}

std::vector<Rat> parse_point(const std::string& s) {
  std::vector<Rat> x;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    if (comma == std::string::npos) comma = s.size();
    std::string tok = s.substr(start, comma - start);
    tok.erase(0, tok.find_first_not_of(' '));
    tok.erase(tok.find_last_not_of(' ') + 1);
    if (tok.empty()) throw InputError("--at: empty coordinate");
    x.push_back(rat_from_string(tok));
    start = comma + 1;
  }
  return x;
}

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

void print_form(const CanonicalForm& f, const std::string& format) {
  if (format == "json")
    std::cout << form_to_json(f).dump(2) << "\n";
  else
    std::cout << pretty(f) << "\n";
}

int emit_check(const CheckReport& rep, const std::string& format) {
  if (format == "json") {
    std::cout << report_to_json(rep).dump(2) << "\n";
  } else {
    std::cout << rep.name << ": " << (rep.passed ? "passed" : "FAILED")
              << "\n";
    for (const auto& w : rep.witnesses)
      if (w.contains("mismatch")) std::cout << "  " << w.dump() << "\n";
  }
  return rep.passed ? 0 : 1;
}

Json poly_terms_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.terms())
    out.push_back(Json{{"coeff", rat_to_string(c)}, {"exp", e}});
  return out;
}

struct Options {
  std::string input;
  std::vector<std::string> inputs;
  std::string parent;
  std::vector<std::string> parts;
  std::string method = "all";
  std::string format = "pretty";
  std::string at;
  int facet = -1;
  int samples = 0;
  double tol = 0;
  int threads = 1;
  std::uint64_t seed = 0;
};

int run_canon(const Options& o) {
  const Polytope p = load_polytope(o.input);
  if (o.method == "all") {
    const CanonicalForm t = canon_triangulation(p);
    if (!form_equal(t, canon_dual_volume(p)) ||
        !form_equal(t, canon_laplace(p)))
      throw InternalError("engines disagree on the canonical form");
    if (o.format == "json") {
      std::cout << form_to_json(t).dump(2) << "\n";
    } else {
      std::cout << pretty(t) << "\n";
      std::cout << "triangulation, dual-volume, and dual-cone engines agree\n";
    }
    return 0;
  }
  const Method m = o.method == "triangulation" ? Method::triangulation
                   : o.method == "dualvol"     ? Method::dualvol
                                               : Method::laplace;
  print_form(canonical_form(p, m), o.format);
  return 0;
}

int run_residue(const Options& o) {
  const Polytope p = load_polytope(o.input);
  if (o.facet < 0 || o.facet >= static_cast<int>(p.facets.size()))
    throw InputError("--facet: index out of range (" +
                     std::to_string(p.facets.size()) + " facets)");
  const CanonicalForm f = canonical_form(p);
  ResidueChart chart;
  const CanonicalForm r = residue(f, p.facets[o.facet], &chart);
  if (o.format == "json") {
    Json coeffs = Json::array();
    for (const auto& a : chart.pole.coeffs())
      coeffs.push_back(rat_to_string(a));
    std::cout << Json{{"form", form_to_json(r)},
                      {"chart",
                       {{"pole",
                         {{"c0", rat_to_string(chart.pole.c0())},
                          {"coeffs", coeffs}}},
                        {"pivot", f.vars[chart.pivot]},
                        {"pivot_coeff", rat_to_string(chart.pivot_coeff)}}}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << pretty(r) << "\n";
    std::cout << "chart: " << linform_to_string(chart.pole, f.vars)
              << " = 0 solved for " << f.vars[chart.pivot] << " (coefficient "
              << rat_to_string(chart.pivot_coeff) << ")\n";
  }
  return 0;
}

int run_adjoint(const Options& o) {
  const Polytope p = load_polytope(o.input);
  const AdjointReport rep = adjoint_report(p);
  const auto vars = homogeneous_vars(p.dim);
  if (o.format == "json") {
    std::cout << Json{{"adjoint", poly_terms_json(rep.adjoint_poly)},
                      {"degree", rep.degree},
                      {"vanishes_on_residual", rep.vanishes},
                      {"kernel_dim", rep.kernel_dim},
                      {"unique", rep.unique}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << "adjoint: " << poly_to_string(rep.adjoint_poly, vars) << "\n";
    std::cout << "degree: " << rep.degree << "\n";
    std::cout << "vanishes on residual arrangement: "
              << (rep.vanishes ? "yes" : "NO") << "\n";
    std::cout << "interpolation kernel dimension: " << rep.kernel_dim
              << (rep.unique ? " (unique up to scale)" : "") << "\n";
  }
  return 0;
}

int run_residual(const Options& o) {
  const Polytope p = load_polytope(o.input);
  const auto flats = residual_arrangement(p);
  if (o.format == "json") {
    Json out = Json::array();
    for (const auto& fl : flats) {
      Json span = Json::array();
      for (const auto& v : flat_span(fl)) {
        Json row = Json::array();
        for (const auto& x : v) row.push_back(rat_to_string(x));
        span.push_back(std::move(row));
      }
      out.push_back(Json{{"pdim", fl.pdim}, {"span", std::move(span)},
                         {"facets", fl.facets}});
    }
    std::cout << out.dump(2) << "\n";
  } else {
    if (flats.empty()) {
      std::cout << "residual arrangement is empty\n";
      return 0;
    }
    for (size_t i = 0; i < flats.size(); ++i) {
      std::cout << "flat " << i << ": projective dimension " << flats[i].pdim
                << ", span";
      for (const auto& v : flat_span(flats[i]))
        std::cout << " (" << detail::coord_list(v) << ")";
      std::cout << "\n";
    }
  }
  return 0;
}

int run_polar(const Options& o, bool have_at) {
  const Polytope p = load_polytope(o.input);
  const std::vector<Rat> x = have_at ? parse_point(o.at) : p.centroid;
  const Polytope q = polar_at(p, x);
  if (o.format == "json") {
    std::cout << polytope_to_json(q).dump(2) << "\n";
  } else {
    std::cout << "polar dual at (" << detail::coord_list(x) << "): "
              << q.vertices.size() << " vertices\n";
    for (const auto& v : q.vertices)
      std::cout << "  (" << detail::coord_list(v) << ")\n";
  }
  return 0;
}

int run_dualvol(const Options& o, bool have_at) {
  const Polytope p = load_polytope(o.input);
  const CanonicalForm f = canon_dual_volume(p);
  if (!have_at) {
    print_form(f, o.format);
    return 0;
  }
  const std::vector<Rat> x = parse_point(o.at);
  const Rat v = form_value(f, x);
  if (o.format == "json") {
    Json at = Json::array();
    for (const auto& xi : x) at.push_back(rat_to_string(xi));
    std::cout << Json{{"at", std::move(at)}, {"value", rat_to_string(v)}}
                     .dump(2)
              << "\n";
  } else {
    std::cout << rat_to_string(v) << "\n";
  }
  return 0;
}

int run_laplace(const Options& o) {
  const Polytope p = load_polytope(o.input);
  const auto terms = laplace_terms(p);
  const CanonicalForm f = canon_laplace(p);
  if (o.format == "json") {
    Json ts = Json::array();
    for (const auto& t : terms) {
      Json rays = Json::array();
      for (const auto& r : t.rays) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(rat_to_string(x));
        rays.push_back(std::move(row));
      }
      ts.push_back(Json{{"absdet", rat_to_string(t.absdet)},
                        {"rays", std::move(rays)}});
    }
    std::cout << Json{{"terms", std::move(ts)}, {"form", form_to_json(f)}}
                     .dump(2)
              << "\n";
  } else {
    for (size_t i = 0; i < terms.size(); ++i) {
      std::cout << "term " << i << ": |det| = "
                << rat_to_string(terms[i].absdet) << ", rays";
      for (const auto& r : terms[i].rays)
        std::cout << " (" << detail::coord_list(r) << ")";
      std::cout << "\n";
    }
    std::cout << "form: " << pretty(f) << "\n";
  }
  return 0;
}

int run_mixedvol(const Options& o) {
  std::vector<Polytope> ps;
  for (const auto& path : o.inputs) ps.push_back(load_polytope(path));
  print_form(dual_mixed_volume(ps), o.format);
  return 0;
}

int run_pushforward(const Options& o, bool have_samples, bool have_tol,
                    bool have_seed) {
  PushforwardInput in = pushforward_input_from_json(load_json(o.input));
  if (have_samples) in.samples = o.samples;
  if (have_tol) in.tol = o.tol;
  const std::uint64_t seed = have_seed ? o.seed : 4242;

  if (in.W.empty() || in.W[0].size() < 2)
    throw InputError("pushforward json: \"W\" rows need at least 2 entries");
  const int d = static_cast<int>(in.W[0].size()) - 1;
  std::vector<std::vector<Rat>> waff;
  for (const auto& w : in.W) {
    if (w[0] <= 0)
      throw InputError("pushforward json: \"W\" heights must be positive");
    std::vector<Rat> row;
    for (int j = 1; j <= d; ++j) row.push_back(w[j] / w[0]);
    waff.push_back(std::move(row));
  }
  const Polytope target = hull_from_vertices(d, waff);
  const auto reports = pushforward_check(in.W, in.V, target, in.samples,
                                         in.tol, seed, o.threads);
  bool all = true;
  for (const auto& r : reports) all = all && r.passed;
  if (o.format == "json") {
    Json out = Json::array();
    for (const auto& r : reports) out.push_back(pushforward_report_to_json(r));
    std::cout << out.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      std::cout << "sample (" << detail::coord_list(r.sample) << "): degree "
                << r.degree_found << ", lhs " << fmt(std::abs(r.lhs))
                << ", rhs " << fmt(r.rhs) << ", rel err " << fmt(r.rel_err)
                << (r.exact ? ", exact" : "")
                << (r.passed ? "" : ", FAILED") << "\n";
    }
    std::cout << "pushforward: " << (all ? "passed" : "FAILED") << "\n";
  }
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact canonical forms, residues, adjoints, and dual volumes "
               "of convex polytopes"};
  app.require_subcommand(1);

  Options o;
  int rc = 0;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", o.format, "output format")
        ->check(CLI::IsMember({"pretty", "json"}));
  };
  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("--input", o.input, "polytope JSON file")->required();
  };

  auto* canon = app.add_subcommand("canon", "canonical form of a polytope");
  add_input(canon);
  add_format(canon);
  canon->add_option("--method", o.method, "engine selection")
      ->check(CLI::IsMember({"triangulation", "dualvol", "laplace", "all"}));
  canon->callback([&] { rc = run_canon(o); });

  auto* res = app.add_subcommand("residue", "residue on a facet hyperplane");
  add_input(res);
  add_format(res);
  res->add_option("--facet", o.facet, "facet index")->required();
  res->callback([&] { rc = run_residue(o); });

  auto* adj = app.add_subcommand("adjoint", "adjoint polynomial report");
  add_input(adj);
  add_format(adj);
  adj->callback([&] { rc = run_adjoint(o); });

  auto* resid = app.add_subcommand("residual", "residual arrangement flats");
  add_input(resid);
  add_format(resid);
  resid->callback([&] { rc = run_residual(o); });

  auto* polar = app.add_subcommand("polar", "polar dual at an interior point");
  add_input(polar);
  add_format(polar);
  auto* polar_at_opt = polar->add_option(
      "--at", o.at, "interior point p1,p2,... (default centroid)");
  polar->callback([&] { rc = run_polar(o, polar_at_opt->count() > 0); });

  auto* dvol = app.add_subcommand(
      "dualvol", "dual-volume form, or its exact value at a point");
  add_input(dvol);
  add_format(dvol);
  auto* dvol_at_opt =
      dvol->add_option("--at", o.at, "evaluation point p1,p2,...");
  dvol->callback([&] { rc = run_dualvol(o, dvol_at_opt->count() > 0); });

  auto* lap = app.add_subcommand("laplace", "dual-cone decomposition");
  add_input(lap);
  add_format(lap);
  lap->callback([&] { rc = run_laplace(o); });

  auto* mvol = app.add_subcommand("mixedvol", "dual mixed volume");
  mvol->add_option("--input", o.inputs, "polytope JSON files")->required();
  add_format(mvol);
  mvol->callback([&] { rc = run_mixedvol(o); });

  auto* ckr = app.add_subcommand("check-recursion",
                                 "residue recursion ends in +-1 leaves");
  add_input(ckr);
  add_format(ckr);
  ckr->callback([&] { rc = emit_check(recursion_verify(load_polytope(o.input)),
                                      o.format); });

  auto* cks = app.add_subcommand("check-subdivision",
                                 "part forms sum to the parent form");
  cks->add_option("--parent", o.parent, "parent polytope JSON file")
      ->required();
  cks->add_option("--parts", o.parts, "subdivision piece JSON files")
      ->required();
  add_format(cks);
  cks->callback([&] {
    std::vector<Polytope> parts;
    for (const auto& path : o.parts) parts.push_back(load_polytope(path));
    rc = emit_check(subdivision_verify(load_polytope(o.parent), parts),
                    o.format);
  });

  auto* ckf = app.add_subcommand("check-filliman", "three engines agree");
  add_input(ckf);
  add_format(ckf);
  ckf->callback([&] { rc = emit_check(filliman_check(load_polytope(o.input)),
                                      o.format); });

  auto* ckc = app.add_subcommand("check-convexity",
                                 "sign pattern on interior samples");
  add_input(ckc);
  add_format(ckc);
  auto* ckc_samples = ckc->add_option("--samples", o.samples, "sample count");
  auto* ckc_seed = ckc->add_option("--seed", o.seed, "sampling seed");
  ckc->callback([&] {
    rc = emit_check(
        positive_convexity_check(load_polytope(o.input),
                                 ckc_samples->count() ? o.samples : 100,
                                 ckc_seed->count() ? o.seed : 9001),
        o.format);
  });

  auto* ckp = app.add_subcommand("check-pushforward",
                                 "numeric pushforward identity");
  ckp->add_option("--input", o.input, "map JSON file (W, V, samples, tol)")
      ->required();
  add_format(ckp);
  auto* ckp_samples = ckp->add_option("--samples", o.samples, "sample count");
  auto* ckp_tol = ckp->add_option("--tol", o.tol, "comparison tolerance");
  auto* ckp_seed = ckp->add_option("--seed", o.seed, "sampling seed");
  ckp->add_option("--threads", o.threads, "worker threads");
  ckp->callback([&] {
    rc = run_pushforward(o, ckp_samples->count() > 0, ckp_tol->count() > 0,
                         ckp_seed->count() > 0);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  return rc;
}
