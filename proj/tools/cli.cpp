#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "unigraph/error.hpp"
#include "unigraph/io.hpp"

namespace unigraph::cli {

namespace {

// Dense steps of the theorem1 command stop here.
constexpr int kDenseOrderCap = 1024;
// Weighing matrices are embedded in the report only up to this order.
constexpr int kReportMatrixCap = 64;

struct Options {
  std::string in, out, group, gens, format = "json";
  std::uint64_t seed = 0;
  double tol = kUnitaryTolerance, delta = 1e-6;
  int restarts = 50, max_iter = 10000, threads = 1, max_n = 6, k = 3;
  bool loops = false, recognize = false, optimize = false;
};

struct Run {
  Json result;
  int code = kCertified;
};

SolverConfig solver(const Options& o) {
  SolverConfig c;
  c.tol = o.tol;
  c.min_magnitude = o.delta;
  c.max_iter = o.max_iter;
  c.restarts = o.restarts;
  c.seed = o.seed;
  c.threads = o.threads;
  c.validate();
  return c;
}

bool wants_text_file(const std::string& path) {
  return path.size() >= 4 && path.compare(path.size() - 4, 4, ".txt") == 0;
}

void emit_digraph(const Options& o, const Digraph& d, Json& result) {
  if (o.out.empty()) {
    result["digraph"] = {{"n", d.order()}, {"adjacency", int_matrix_to_json(d.adjacency())}};
    return;
  }
  write_file(o.out, wants_text_file(o.out) ? to_text(d) : to_json_text(d));
  result["written"] = o.out;
}

Json arc_json(const Arc& a) { return Json::array({a.tail, a.head}); }

Json names(const FiniteGroup& g, const std::vector<int>& elements) {
  Json j = Json::array();
  for (int e : elements) j.push_back(g.name(e));
  return j;
}

int verdict_code(Verdict v) { return v == Verdict::Excluded ? kExcluded : kUndecided; }

int outcome_code(Outcome o) {
  switch (o) {
    case Outcome::Certified: return kCertified;
    case Outcome::Excluded: return kExcluded;
    case Outcome::Undecided: return kUndecided;
  }
  return kUndecided;
}

Run run_analyze(const Options& o, const Digraph& d) {
  const ConditionReport rep = necessary_battery(d);
  return {{{"n", d.order()}, {"report", to_json(rep)}}, verdict_code(rep.overall)};
}

Run run_certify(const Options& o, const Digraph& d) {
  const CertifyResult r = certify(d, solver(o));
  Json j = to_json(r);
  j["n"] = d.order();
  return {std::move(j), outcome_code(r.outcome)};
}

Run run_cayley(const Options& o) {
  const FiniteGroup g = build_group(o.group);
  const GenSet s = parse_genset(g, o.gens, true);
  const Digraph d = cayley_digraph(g, s);
  Json j = {{"group", o.group}, {"order", g.order()}, {"generators", names(g, s.elements)}, {"arcs", d.arc_count()}};
  if (auto w = mansilla_serra_check(g, s))
    j["line_digraph_witness"] = {{"x", g.name(w->x)}, {"subgroup", names(g, w->subgroup)}};
  else
    j["line_digraph_witness"] = nullptr;
  emit_digraph(o, d, j);
  return {std::move(j), kCertified};
}

Json multidigraph_json(const Multidigraph& m) {
  return {{"n", m.order()}, {"adjacency", int_matrix_to_json(m.multiplicities())}};
}

Run run_linedigraph(const Options& o, const std::string& text) {
  if (!o.recognize) {
    const LineDigraph l = line_digraph(parse_multidigraph(text));
    Json arcs = Json::array();
    for (const Arc& a : l.arc_of_vertex) arcs.push_back(arc_json(a));
    Json j = {{"n", l.digraph.order()}, {"arc_of_vertex", std::move(arcs)}};
    emit_digraph(o, l.digraph, j);
    return {std::move(j), kCertified};
  }
  const Digraph d = parse_digraph(text);
  const Recognition r = recognize_line_digraph(d);
  Json j = {{"n", d.order()}, {"accepted", r.accepted()}};
  if (r.witness) {
    j["witness"] = {{"axis", r.witness->axis == Axis::Rows ? "rows" : "columns"},
                    {"pair", Json::array({r.witness->first, r.witness->second})}};
    return {std::move(j), kExcluded};
  }
  Json arcs = Json::array();
  for (const Arc& a : r.arc_of_vertex) arcs.push_back(arc_json(a));
  j["arc_of_vertex"] = std::move(arcs);
  j["base"] = multidigraph_json(*r.base);
  if (!o.out.empty()) {
    write_file(o.out, multidigraph_json(*r.base).dump(2) + "\n");
    j["written"] = o.out;
  }
  return {std::move(j), kCertified};
}

Run run_hypercube(const Options& o) {
  const IntMatrix w = hypercube_weighing(o.k, o.loops);
  const Digraph q = hypercube_graph(o.k, o.loops);
  const auto weight = weighing_weight(w);
  if (!weight || support(w, 0.0) != q) throw InternalError("hypercube weighing matrix failed verification");
  Json j = {{"k", o.k}, {"loops", o.loops}, {"n", q.order()}, {"weight", *weight}};
  j["weighing"] = q.order() <= kReportMatrixCap ? int_matrix_to_json(w) : Json(nullptr);
  emit_digraph(o, q, j);
  return {std::move(j), kCertified};
}

Run run_theorem1(const Options& o) {
  const FiniteGroup g = build_group(o.group);
  const GenSet s = parse_genset(g, o.gens);
  if (s.elements.size() != 2) throw InputError("theorem1 needs exactly two generators");
  const GenSet t = theorem1_generating_set(g, s.elements[0], s.elements[1]);
  Json j = {{"group", o.group}, {"order", g.order()}, {"generators", names(g, s.elements)}, {"T", names(g, t.elements)}};
  const auto w = mansilla_serra_check(g, t);
  j["line_digraph_witness"] =
      w ? Json{{"x", g.name(w->x)}, {"subgroup", names(g, w->subgroup)}} : Json(nullptr);
  if (g.order() > kDenseOrderCap)
    throw CapacityError("dense certification limited to order " + std::to_string(kDenseOrderCap));
  const Digraph d = cayley_digraph(g, t);
  const Recognition rec = recognize_line_digraph(d);
  j["recognized"] = rec.accepted();
  int code = kUndecided;
  if (has_square_full_blocks(d)) {
    const ComplexMatrix u = block_dft_unitary(d);
    const double residual = unitarity_residual(u);
    const bool ok = verify_certificate(d, u, o.tol, o.delta);
    j["certificate"] = {{"kind", to_string(CertificateKind::LineDigraphDft)}, {"residual", residual}, {"support_match", ok}};
    if (!ok) throw InternalError("block DFT certificate failed verification");
    code = kCertified;
  } else {
    j["certificate"] = nullptr;
  }
  if (!o.out.empty()) emit_digraph(o, d, j);
  return {std::move(j), code};
}

Run run_spectrum(const Options& o) {
  const FiniteGroup g = build_group(o.group);
  if (g.source() != GroupSource::Cyclic) throw InputError("spectrum needs a cyclic group Z:n");
  const GenSet s = parse_genset(g, o.gens, true);
  Json values = Json::array();
  for (const Complex& z : circulant_spectrum(g.order(), s.elements)) values.push_back({z.real(), z.imag()});
  return {{{"n", g.order()}, {"residues", s.elements}, {"eigenvalues", std::move(values)}}, kCertified};
}

Run run_sperner(const Options& o, const Digraph& d) {
  const SpernerResult r = sperner_capacity(d, o.optimize ? SpernerMode::Optimize : SpernerMode::Uniform, o.seed);
  return {{{"n", d.order()},
           {"mode", o.optimize ? "optimize" : "uniform"},
           {"value", r.value},
           {"distribution", r.distribution},
           {"heuristic", r.heuristic}},
          kCertified};
}

Json edge_list(const Digraph& d) {
  Json e = Json::array();
  for (int i = 0; i < d.order(); ++i)
    for (int j = i + 1; j < d.order(); ++j)
      if (d.has_arc(i, j)) e.push_back({i, j});
  return e;
}

Run run_survey(const Options& o) {
  const SurveyResult s = conjecture_survey(o.max_n, solver(o));
  Json entries = Json::array();
  for (const auto& e : s.entries)
    entries.push_back({{"n", e.graph.order()},
                       {"edges", edge_list(e.graph)},
                       {"battery", to_string(e.battery)},
                       {"outcome", to_string(e.outcome)},
                       {"certificate", e.certificate ? Json(to_string(*e.certificate)) : Json(nullptr)},
                       {"hamiltonian", e.hamiltonian}});
  Json candidates = Json::array();
  for (const auto& g : s.counterexample_candidates) candidates.push_back({{"n", g.order()}, {"edges", edge_list(g)}});
  return {{{"max_n", o.max_n},
           {"graphs", s.entries.size()},
           {"excluded", s.excluded},
           {"certified", s.certified},
           {"undecided", s.undecided},
           {"hamiltonian", s.hamiltonian},
           {"counterexample_candidates", std::move(candidates)},
           {"entries", std::move(entries)}},
          kCertified};
}

void render_text(const Json& j, std::ostream& out, const std::string& indent = "") {
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (it.key() == "conditions") {
      out << indent << "conditions:\n";
      for (const auto& c : v)
        out << indent << "  " << c["status"].get<std::string>() << "  " << c["name"].get<std::string>() << "  "
            << c["detail"].get<std::string>() << "\n";
    } else if (v.is_object()) {
      out << indent << it.key() << ":\n";
      render_text(v, out, indent + "  ");
    } else if (v.is_array() && !v.empty() && v[0].is_structured()) {
      out << indent << it.key() << ": [" << v.size() << " items]\n";
    } else {
      out << indent << it.key() << ": " << v.dump() << "\n";
    }
  }
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Digraphs of unitary matrices: necessary conditions, constructions and numerical realisations",
               kToolName};
  app.require_subcommand(1);
  app.set_version_flag("--version", kToolVersion);
  Options o;

  auto input = [&o](CLI::App* c) { c->add_option("--in", o.in, "digraph file (JSON or text)")->required(); };
  auto output = [&o](CLI::App* c) { c->add_option("--out", o.out, "write the digraph here (.txt for text, else JSON)"); };
  auto common = [&o](CLI::App* c) {
    c->add_option("--seed", o.seed, "random seed");
    c->add_option("--format", o.format, "report format")->check(CLI::IsMember({"json", "text"}));
  };
  auto solver_flags = [&o](CLI::App* c) {
    c->add_option("--tol", o.tol, "unitarity residual threshold");
    c->add_option("--delta", o.delta, "minimum magnitude of required entries");
    c->add_option("--restarts", o.restarts, "projection restarts");
    c->add_option("--max-iter", o.max_iter, "iterations per restart");
    c->add_option("--threads", o.threads, "worker threads for restarts");
  };
  auto group_flags = [&o](CLI::App* c) {
    c->add_option("--group", o.group, "Z:n, Z2^k, D:n, S:n, prod:Z:a,Z:b or table:PATH")->required();
    c->add_option("--gens", o.gens, "comma-separated elements")->required();
  };

  auto* analyze = app.add_subcommand("analyze", "run the necessary-condition battery");
  input(analyze), common(analyze);
  auto* cert = app.add_subcommand("certify", "battery, constructions, then numerical search");
  input(cert), common(cert), solver_flags(cert);
  auto* cayley = app.add_subcommand("cayley", "Cayley digraph X(G;S)");
  group_flags(cayley), output(cayley), common(cayley);
  auto* line = app.add_subcommand("linedigraph", "line digraph of a multidigraph, or recognition");
  input(line), output(line), common(line);
  line->add_flag("--recognize", o.recognize, "recognise the input and recover a base");
  auto* cube = app.add_subcommand("hypercube", "hypercube Q_k and its weighing matrix");
  cube->add_option("--k", o.k, "dimension")->check(CLI::PositiveNumber);
  cube->add_flag("--loops", o.loops, "add a loop at every vertex");
  output(cube), common(cube);
  auto* thm1 = app.add_subcommand("theorem1", "coset generating set and line-digraph certificate");
  group_flags(thm1), output(thm1), common(thm1);
  thm1->add_option("--tol", o.tol, "unitarity residual threshold");
  thm1->add_option("--delta", o.delta, "minimum magnitude of required entries");
  auto* spec = app.add_subcommand("spectrum", "circulant spectrum of X(Z_n;S)");
  group_flags(spec), common(spec);
  auto* sperner = app.add_subcommand("sperner", "Sperner capacity of the edge family");
  input(sperner), common(sperner);
  sperner->add_flag("--optimize", o.optimize, "search the simplex instead of the uniform distribution");
  auto* survey = app.add_subcommand("survey", "connected graphs up to --max-n vertices");
  survey->add_option("--max-n", o.max_n, "largest order, 2..8");
  common(survey), solver_flags(survey);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    err << app.help();
    return kUsage;
  }

  const auto start = std::chrono::steady_clock::now();
  Run r;
  std::optional<std::string> digest;
  try {
    std::string text;
    if (!o.in.empty()) {
      text = read_file(o.in);
      digest = hex64(fnv1a64(text));
    }
    if (analyze->parsed()) r = run_analyze(o, parse_digraph(text));
    else if (cert->parsed()) r = run_certify(o, parse_digraph(text));
    else if (cayley->parsed()) r = run_cayley(o);
    else if (line->parsed()) r = run_linedigraph(o, text);
    else if (cube->parsed()) r = run_hypercube(o);
    else if (thm1->parsed()) r = run_theorem1(o);
    else if (spec->parsed()) r = run_spectrum(o);
    else if (sperner->parsed()) r = run_sperner(o, parse_digraph(text));
    else r = run_survey(o);
  } catch (const ParseError& e) {
    err << "error: " << o.in << ": " << e.what() << "\n";
    return kUsage;
  } catch (const CapacityError& e) {
    err << "capacity: " << e.what() << "\n";
    return kCapacity;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  const double ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

  Json report = {{"schema", 1},
                 {"tool", kToolName},
                 {"version", kToolVersion},
                 {"command", args},
                 {"input_digest", digest ? Json(*digest) : Json(nullptr)},
                 {"seed", o.seed},
                 {"exit_code", r.code},
                 {"result", std::move(r.result)},
                 {"timing_ms", std::round(ms * 1000.0) / 1000.0}};
  if (o.format == "text")
    render_text(report, out);
  else
    out << report.dump(2) << "\n";
  return r.code;
}

}  // namespace unigraph::cli
