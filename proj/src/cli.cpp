#include "mixed_milnor/cli.hpp"

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "mixed_milnor/error.hpp"
#include "mixed_milnor/parser.hpp"

namespace mixed_milnor {
namespace {

struct Input {
  MixedPoly poly;
  Json meta;
};

Input load_poly(const std::string& text, const std::string& corpus_name, const std::vector<int>& params,
                std::size_t n_hint = 0) {
  if (!text.empty() && !corpus_name.empty())
    throw Error(ErrorCode::BadRequest, "give either a polynomial or a corpus name, not both");
  if (!corpus_name.empty()) {
    CorpusEntry e = corpus(corpus_name, params);
    Json meta{{"corpus", corpus_name}, {"params", params}, {"poly", to_string(e.poly)}, {"provenance", e.provenance}};
    return {e.poly, meta};
  }
  if (text.empty()) throw Error(ErrorCode::BadRequest, "no polynomial given (use --poly or --corpus)");
  MixedPoly p = parse_poly(text, n_hint);
  return {p, Json{{"poly", to_string(p)}}};
}

Subset parse_subset(const std::string& text, std::size_t n) {
  Subset I;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t b = item.find_first_not_of(" \t{}[]");
    if (b == std::string::npos) continue;
    std::size_t e = item.find_last_not_of(" \t{}[]");
    std::string s = item.substr(b, e - b + 1);
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw Error(ErrorCode::BadRequest, "bad subset entry '" + s + "'");
    long k = std::stol(s);
    if (k < 1 || static_cast<std::size_t>(k) > n) throw Error(ErrorCode::IndexOutOfRange, "subset index out of range");
    I.push_back(static_cast<std::size_t>(k - 1));
  }
  std::sort(I.begin(), I.end());
  I.erase(std::unique(I.begin(), I.end()), I.end());
  return I;
}

std::complex<double> parse_complex(const std::string& raw) {
  std::size_t b = raw.find_first_not_of(" \t"), e = raw.find_last_not_of(" \t");
  if (b == std::string::npos) throw Error(ErrorCode::BadRequest, "empty point coordinate");
  std::string s = raw.substr(b, e - b + 1);
  try {
    std::size_t used = 0;
    double x = std::stod(s, &used);
    if (used == s.size()) {
      if (!std::isfinite(x)) throw Error(ErrorCode::BadRequest, "non-finite coordinate");
      return {x, 0.0};
    }
  } catch (const std::invalid_argument&) {
  } catch (const std::out_of_range&) {
    throw Error(ErrorCode::BadRequest, "coordinate out of range");
  }
  MixedPoly c = parse_poly(s, 1);
  if (c.is_zero()) return {0.0, 0.0};
  if (c.size() != 1 || c.terms().begin()->first.total_degree() != 0)
    throw Error(ErrorCode::BadRequest, "point coordinate '" + s + "' is not a constant");
  return c.terms().begin()->second.to_complex();
}

ComplexPoint parse_point(const std::string& text, std::size_t n) {
  ComplexPoint p;
  int depth = 0;
  std::string cur;
  for (char ch : text) {
    if (ch == '(') ++depth;
    if (ch == ')') --depth;
    if (ch == ',' && depth == 0) {
      p.push_back(parse_complex(cur));
      cur.clear();
    } else {
      cur += ch;
    }
  }
  p.push_back(parse_complex(cur));
  if (p.size() != n) throw Error(ErrorCode::DimensionMismatch, "point has " + std::to_string(p.size()) +
                                                                   " coordinates, polynomial has " + std::to_string(n));
  return p;
}

void merge(Json& dst, const Json& src) {
  for (auto it = src.begin(); it != src.end(); ++it) dst[it.key()] = it.value();
}

Json face_list(const std::vector<FaceDescriptor>& faces) {
  Json a = Json::array();
  for (const auto& f : faces) a.push_back(to_json(f));
  return a;
}

Json essential_summary(const MixedPoly& f) {
  Json a = Json::array();
  for (const auto& face : essential_noncompact_faces(f))
    a.push_back(Json{{"I", subset_json(face.noncompact_directions)},
                     {"generators", face.compact_part},
                     {"witness", face.weight_witness},
                     {"d", face.d_value}});
  return a;
}

Outcome dispatch(const Request& req) {
  const std::string& cmd = req.command;
  Outcome out;
  Json& r = out.report;
  r["command"] = cmd;
  r["seed"] = req.seed;

  if (cmd == "corpus") {
    if (req.corpus.empty()) {
      r["names"] = corpus_names();
      return out;
    }
    Input in = load_poly("", req.corpus, req.params);
    r["input"] = in.meta;
    return out;
  }

  // a point may name more coordinates than the polynomial text mentions
  std::size_t n_hint = 0;
  if (!req.point.empty()) {
    int depth = 0;
    n_hint = 1;
    for (char ch : req.point) {
      depth += ch == '(' ? 1 : ch == ')' ? -1 : 0;
      if (ch == ',' && depth == 0) ++n_hint;
    }
  }
  Input in = load_poly(req.poly, req.corpus, req.params, n_hint);
  const MixedPoly& f = in.poly;
  r["input"] = in.meta;
  const std::size_t n = f.num_vars();
  r["n"] = n;

  if (cmd == "newton") {
    SupportReport sr = support_vertices(f);
    r["vertices"] = to_json(sr)["vertices"];
    r["convenient"] = sr.convenient;
    r["essential_faces"] = essential_summary(f);
    Json ines = Json::array();
    for (const auto& face : essential_noncompact_faces(f, false, true))
      if (face.kind == FaceKind::NonCompactInessential) ines.push_back(to_json(face));
    r["inessential_faces"] = ines;
    r["compact_faces"] = face_list(compact_faces(f));
  } else if (cmd == "vanishing") {
    Json v = to_json(vanishing_subsets(f));
    r["vanishing"] = v["vanishing"];
    r["nonvanishing"] = v["nonvanishing"];
  } else if (cmd == "faces") {
    r["faces"] = face_list(all_faces(f));
  } else if (cmd == "nondeg") {
    Json faces = Json::array();
    bool clean = true;
    for (const auto& v : falsify_nondegeneracy(f, req.budget, req.seed)) {
      faces.push_back(to_json(v));
      clean &= v.status == NondegeneracyStatus::NoCriticalPointFound;
    }
    r["budget"] = req.budget;
    r["faces"] = faces;
    r["no_critical_point_found"] = clean;
    if (req.strict && !clean) out.exit_code = 2;
  } else if (cmd == "tame") {
    TamenessOptions opts;
    opts.budget = req.budget;
    opts.seed = req.seed;
    if (req.radius) opts.probe_radius = *req.radius;
    std::vector<Subset> targets;
    if (!req.I.empty()) targets.push_back(parse_subset(req.I, n));
    else targets = vanishing_subsets(f).vanishing;
    Json verdicts = Json::array();
    bool any_not_tame = false, any_inconclusive = false;
    double r_nc = kInfinity;
    for (const auto& I : targets) {
      TamenessVerdict v = local_tameness_check(f, I, opts);
      any_not_tame |= v.status == TamenessStatus::NotTame;
      any_inconclusive |= v.status == TamenessStatus::Inconclusive;
      r_nc = std::min(r_nc, v.status == TamenessStatus::NotTame ? 0.0 : v.certified_radius);
      verdicts.push_back(to_json(v));
    }
    r["budget"] = req.budget;
    r["probe_radius"] = opts.probe_radius;
    r["verdicts"] = verdicts;
    if (req.I.empty()) {
      r["r_nc"] = radius_json(r_nc);
      if (req.r0) r["rho_0"] = radius_json(std::min(r_nc, *req.r0));
    }
    // worst verdict over the checked subsets
    r["status"] = status_name(any_not_tame       ? TamenessStatus::NotTame
                              : any_inconclusive ? TamenessStatus::Inconclusive
                                                 : TamenessStatus::TameCertified);
    if (req.strict && any_not_tame) out.exit_code = 2;
  } else if (cmd == "zeta") {
    Json z = to_json(zeta_function(f));
    for (auto& [k, v] : z.items()) r[k] = v;
  } else if (cmd == "arc-limit" || cmd == "af-test") {
    if (req.arc.empty()) throw Error(ErrorCode::BadRequest, "--arc is required");
    Arc arc = parse_arc(req.arc, n);
    r["arc"] = to_string(arc);
    if (cmd == "arc-limit") {
      r["limit"] = to_json(limit_tangent(f, arc));
    } else {
      if (req.I.empty()) throw Error(ErrorCode::BadRequest, "--I is required");
      AfArcVerdict v = af_test_arc(f, arc, parse_subset(req.I, n));
      merge(r, to_json(v));
      if (req.strict && v.status == AfStatus::Fails) out.exit_code = 2;
    }
  } else if (cmd == "transversality") {
    if (!req.point.empty()) {
      ComplexPoint p = parse_point(req.point, n);
      r["point"] = point_json(p);
      r["residual"] = transversality_residual(f, p);
    } else {
      double radius = req.radius.value_or(1.0);
      int samples = req.samples > 0 ? req.samples : 10000;
      r["radius"] = radius;
      r["delta"] = req.delta;
      r["samples"] = samples;
      r["scan"] = to_json(transversality_scan(f, radius, req.delta, samples, req.seed));
    }
  } else if (cmd == "openness") {
    if (req.point.empty()) throw Error(ErrorCode::BadRequest, "--point is required");
    ComplexPoint p = parse_point(req.point, n);
    int samples = req.samples > 0 ? req.samples : 20000;
    OpennessProbe probe = boundary_openness_probe(f, p, req.epsilon, samples, req.seed);
    r["point"] = point_json(p);
    r["epsilon"] = req.epsilon;
    r["samples"] = samples;
    merge(r, to_json(probe));
    if (req.strict && probe.arg_coverage < 1.0) out.exit_code = 2;
  } else if (cmd == "pullback") {
    PullbackSpec spec{req.a, req.b};
    if (spec.b.empty()) spec.b.assign(spec.a.size(), 0);
    MixedPoly g = pullback_cyclic(f, spec);
    r["a"] = spec.a;
    r["b"] = spec.b;
    r["poly"] = to_string(g);
  } else if (cmd == "join") {
    Input second = load_poly(req.poly2, req.corpus2, req.params2);
    JoinResult j = join(f, second.poly);
    r["input2"] = second.meta;
    r["poly"] = to_string(j.poly);
    r["names"] = j.names;
  } else {
    throw Error(ErrorCode::BadRequest, "unknown command '" + cmd + "'");
  }
  return out;
}

Json error_json(const std::string& code, const std::string& message) {
  return Json{{"command", nullptr}, {"seed", nullptr}, {"error", {{"code", code}, {"message", message}}}};
}

void render_text(const Json& j, std::ostream& os, int indent) {
  std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    bool nested = (v.is_object() && !v.empty()) ||
                  (v.is_array() && !v.empty() && (v.front().is_object()));
    if (!nested) {
      os << pad << it.key() << ": " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
      continue;
    }
    os << pad << it.key() << ":\n";
    if (v.is_object()) {
      render_text(v, os, indent + 2);
    } else {
      for (const auto& item : v) {
        os << pad << "  -\n";
        render_text(item, os, indent + 4);
      }
    }
  }
}

}  // namespace

Outcome execute(const Request& req) {
  auto failure = [&req](Json err) {
    Json j;
    j["command"] = req.command;
    j["seed"] = req.seed;
    j["error"] = std::move(err);
    return Outcome{j, 1};
  };
  try {
    return dispatch(req);
  } catch (const SyntaxError& e) {
    return failure(Json{{"code", "SyntaxError"}, {"message", e.what()}, {"position", e.position()}, {"expected", e.expected()}});
  } catch (const Error& e) {
    return failure(Json{{"code", std::string(error_code_name(e.code()))}, {"message", e.what()}});
  } catch (const std::exception& e) {
    return failure(Json{{"code", "InternalError"}, {"message", e.what()}});
  }
}

Request request_from_json(const Json& j) {
  if (!j.is_object()) throw Error(ErrorCode::BadRequest, "batch line is not a JSON object");
  Request r;
  auto get = [&j](const char* key, auto& dst) {
    if (j.contains(key)) j.at(key).get_to(dst);
  };
  get("command", r.command);
  get("poly", r.poly);
  get("corpus", r.corpus);
  get("params", r.params);
  get("poly2", r.poly2);
  get("corpus2", r.corpus2);
  get("params2", r.params2);
  get("seed", r.seed);
  get("budget", r.budget);
  if (j.contains("radius")) r.radius = j.at("radius").get<double>();
  get("epsilon", r.epsilon);
  get("delta", r.delta);
  if (j.contains("r0")) r.r0 = j.at("r0").get<double>();
  get("samples", r.samples);
  get("I", r.I);
  get("arc", r.arc);
  get("point", r.point);
  get("a", r.a);
  get("b", r.b);
  get("strict", r.strict);
  return r;
}

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"mixed-milnor: Newton boundaries, tameness, limit tangents and zeta functions of mixed polynomials"};
  app.require_subcommand(0, 1);
  Request req;
  bool json = false;
  std::string batch;
  app.add_option("--batch", batch, "JSON-lines file of requests; one JSON report per line");

  const std::vector<std::pair<std::string, std::string>> commands = {
      {"newton", "vertices, convenience and essential non-compact faces"},
      {"vanishing", "vanishing coordinate subspaces"},
      {"faces", "every face of the Newton polyhedron"},
      {"nondeg", "strong non-degeneracy falsifier"},
      {"tame", "local tameness along vanishing coordinate subspaces"},
      {"zeta", "zeta function of the Milnor fibration"},
      {"arc-limit", "limit tangent covectors along an arc"},
      {"af-test", "a_f test along an arc into C^I"},
      {"transversality", "sphere/fiber transversality residual or scan"},
      {"openness", "argument coverage of f near a point of V"},
      {"pullback", "cyclic covering pullback"},
      {"join", "join with a second polynomial on new variables"},
      {"corpus", "list or show the named example polynomials"},
  };
  for (const auto& [name, help] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("polynomial", req.poly, "polynomial text");
    sub->add_option("--poly", req.poly, "polynomial text");
    sub->add_option("--corpus", req.corpus, "corpus name");
    sub->add_option("--params", req.params, "corpus parameters")->delimiter(',');
    sub->add_option("--seed", req.seed, "random seed")->capture_default_str();
    sub->add_option("--budget", req.budget, "multistart restarts per face")->capture_default_str();
    sub->add_option("--radius", req.radius, "probe radius (tame) or sphere radius (transversality)");
    sub->add_option("--epsilon", req.epsilon, "polydisc radius for openness")->capture_default_str();
    sub->add_option("--delta", req.delta, "fiber bound |f| <= delta for transversality")->capture_default_str();
    sub->add_option("--r0", req.r0, "stable radius used for rho_0");
    sub->add_option("--samples", req.samples, "sample count");
    sub->add_option("--I", req.I, "coordinate subset, 1-based, e.g. 1,3");
    sub->add_option("--arc", req.arc, "arc, e.g. \"z1 = 1; z2 = t\"");
    sub->add_option("--point", req.point, "point, e.g. \"1, 0\"");
    sub->add_option("--a", req.a, "pullback exponents a")->delimiter(',');
    sub->add_option("--b", req.b, "pullback exponents b")->delimiter(',');
    sub->add_option("--poly2", req.poly2, "second polynomial (join)");
    sub->add_option("--corpus2", req.corpus2, "second corpus name (join)");
    sub->add_option("--params2", req.params2, "second corpus parameters (join)")->delimiter(',');
    sub->add_flag("--json", json, "emit JSON");
    sub->add_flag("--strict", req.strict, "exit 2 on negative verdicts");
  }
  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version print and succeed; usage errors count as errors
    int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  if (!batch.empty()) {
    std::ifstream in(batch);
    if (!in) {
      err << "error [BadRequest]: cannot open " << batch << "\n";
      return 1;
    }
    int code = 0;
    std::string line;
    while (std::getline(in, line)) {
      if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
      Outcome o;
      try {
        o = execute(request_from_json(Json::parse(line)));
      } catch (const std::exception& e) {
        o = {error_json("BadRequest", e.what()), 1};
      }
      out << o.report.dump() << "\n";
      code = std::max(code, o.exit_code);
    }
    return code;
  }

  for (const auto* sub : app.get_subcommands())
    req.command = sub->get_name();
  if (req.command.empty()) {
    out << app.help();
    return 1;
  }
  Outcome o = execute(req);
  if (json) {
    out << o.report.dump(2) << "\n";
  } else if (o.report.contains("error")) {
    err << "error [" << o.report["error"]["code"].get<std::string>() << "]: "
        << o.report["error"]["message"].get<std::string>() << "\n";
  } else {
    render_text(o.report, out, 0);
  }
  return o.exit_code;
}

}  // namespace mixed_milnor
