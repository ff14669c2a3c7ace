#include "bjorling/problem.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace bjorling {

using json = nlohmann::ordered_json;

namespace {

std::string number_text(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string scalar_text(const json& j, const char* what) {
  if (j.is_number()) return number_text(j.get<double>());
  if (j.is_string()) return j.get<std::string>();
  throw InputError(std::string(what) + " must be a number or an expression string");
}

json scalar_json(const std::string& s) {
  double v = 0.0;
  const char* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec == std::errc() && ptr == end) return v;
  return s;
}

const json& require(const json& j, const char* key, const char* where) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(where) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

ParamMap params_from(const json& j) {
  ParamMap p;
  if (j.is_null()) return p;
  if (!j.is_object()) throw InputError("\"params\" must be an object of numbers");
  for (const auto& [k, v] : j.items()) {
    if (!v.is_number()) throw InputError("parameter \"" + k + "\" must be a number");
    p[k] = v.get<double>();
  }
  return p;
}

json params_json(const ParamMap& p) {
  json j = json::object();
  for (const auto& [k, v] : p) j[k] = v;
  return j;
}

Frame frame_from(const json& j) {
  const std::string f = j.get<std::string>();
  if (f == "canonical") return Frame::canonical;
  if (f == "null") return Frame::null;
  throw InputError("frame must be \"canonical\" or \"null\", got \"" + f + "\"");
}

const char* frame_name(Frame f) { return f == Frame::null ? "null" : "canonical"; }

std::array<std::string, 3> components_from(const json& j, const char* where) {
  return {scalar_text(require(j, "x1", where), "x1"), scalar_text(require(j, "x2", where), "x2"),
          scalar_text(require(j, "x3", where), "x3")};
}

CurveSpec curve_from(const json& j, const char* where) {
  CurveSpec c;
  c.components = components_from(j, where);
  if (j.contains("params")) c.params = params_from(j.at("params"));
  if (j.contains("interval")) {
    const json& iv = j.at("interval");
    if (!iv.is_array() || iv.size() != 2) throw InputError(std::string(where) + ": interval must be [a, b]");
    c.interval = std::array<std::string, 2>{scalar_text(iv[0], "interval"), scalar_text(iv[1], "interval")};
  }
  return c;
}

json curve_json(const CurveSpec& c) {
  json j;
  j["x1"] = c.components[0];
  j["x2"] = c.components[1];
  j["x3"] = c.components[2];
  if (!c.params.empty()) j["params"] = params_json(c.params);
  if (c.interval) j["interval"] = {scalar_json((*c.interval)[0]), scalar_json((*c.interval)[1])};
  return j;
}

ClosedFormSpec closed_form_from(const json& j) {
  ClosedFormSpec c;
  c.components = components_from(j, "closed_form");
  if (j.contains("frame")) c.frame = frame_from(j.at("frame"));
  return c;
}

json closed_form_json(const ClosedFormSpec& c) {
  json j;
  j["x1"] = c.components[0];
  j["x2"] = c.components[1];
  j["x3"] = c.components[2];
  j["frame"] = frame_name(c.frame);
  return j;
}

ProblemSpec problem_from(const json& j) {
  if (!j.is_object()) throw InputError("problem document must be a JSON object");
  ProblemSpec p;
  p.gamma = curve_from(require(j, "gamma", "problem"), "gamma");
  if (!p.gamma.interval) throw InputError("gamma: missing \"interval\"");
  const json& w = require(j, "w", "problem");
  if (w.is_object() && w.contains("builder")) {
    const std::string b = w.at("builder").get<std::string>();
    if (b == "geodesic") {
      p.w.builder = NormalSpec::Builder::geodesic;
    } else if (b == "planar_orthogonal") {
      p.w.builder = NormalSpec::Builder::planar_orthogonal;
      const json& n = require(w, "plane_normal", "w");
      if (!n.is_array() || n.size() != 3) throw InputError("w: plane_normal must have 3 entries");
      for (std::size_t i = 0; i < 3; ++i) p.w.plane_normal[i] = scalar_text(n[i], "plane_normal");
      if (w.contains("frame")) p.w.frame = frame_from(w.at("frame"));
    } else {
      throw InputError("w: unknown builder \"" + b + "\"");
    }
  } else {
    p.w.curve = curve_from(w, "w");
  }
  if (j.contains("kind")) {
    const std::string k = j.at("kind").get<std::string>();
    if (k == "timelike") {
      p.kind = DataKind::timelike;
    } else if (k == "spacelike") {
      p.kind = DataKind::spacelike;
    } else {
      throw InputError("kind must be \"timelike\" or \"spacelike\"");
    }
  }
  if (j.contains("basepoint")) p.basepoint = scalar_text(j.at("basepoint"), "basepoint");
  if (j.contains("domain")) {
    const json& d = j.at("domain");
    if (!d.is_array() || d.size() != 4) throw InputError("domain must be [t0, t1, s0, s1]");
    std::array<std::string, 4> r;
    for (std::size_t i = 0; i < 4; ++i) r[i] = scalar_text(d[i], "domain");
    p.domain = r;
  }
  if (j.contains("params")) p.params = params_from(j.at("params"));
  return p;
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

template <class Fn>
auto with_json_errors(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw InputError(std::string("unexpected JSON shape: ") + e.what());
  }
}

}  // namespace

ParamMap effective_params(const ProblemSpec& p, const ParamMap& overrides) {
  ParamMap out = p.gamma.params;
  for (const auto& [k, v] : p.w.curve.params) out[k] = v;
  for (const auto& [k, v] : p.params) out[k] = v;
  for (const auto& [k, v] : overrides) out[k] = v;
  return out;
}

double eval_scalar(std::string_view src, const ParamMap& params) {
  ParseOptions opts;
  opts.variables.clear();
  for (const auto& [k, v] : params) opts.parameters.insert(k);
  return evaluate(parse(src, opts), {}, params);
}

Problem instantiate(const ProblemSpec& spec, const ParamMap& overrides) {
  Problem out;
  out.params = effective_params(spec, overrides);
  const ParamMap& P = out.params;

  if (!spec.gamma.interval) throw InputError("gamma: missing interval");
  const Interval I{eval_scalar((*spec.gamma.interval)[0], P), eval_scalar((*spec.gamma.interval)[1], P)};
  const CurveExpr gamma = CurveExpr::parse(spec.gamma.components, I, P);
  std::optional<double> basepoint;
  if (!spec.basepoint.empty()) basepoint = eval_scalar(spec.basepoint, P);

  switch (spec.w.builder) {
    case NormalSpec::Builder::curve: {
      if (!spec.kind) throw InputError("\"kind\" is required when W is given explicitly");
      Interval J = I;
      if (spec.w.curve.interval) {
        J = {eval_scalar((*spec.w.curve.interval)[0], P), eval_scalar((*spec.w.curve.interval)[1], P)};
      }
      const CurveExpr w = CurveExpr::parse(spec.w.curve.components, J, P);
      const Interval common = intersect(I, J);
      out.data = {gamma.curve(), w.curve(), *spec.kind, basepoint.value_or(common.mid())};
      break;
    }
    case NormalSpec::Builder::geodesic:
      out.data = geodesic_data(gamma.curve(), basepoint);
      break;
    case NormalSpec::Builder::planar_orthogonal: {
      const LVec3 e{eval_scalar(spec.w.plane_normal[0], P), eval_scalar(spec.w.plane_normal[1], P),
                    eval_scalar(spec.w.plane_normal[2], P)};
      out.data = planar_orthogonal_data(gamma.curve(), e, spec.w.frame, basepoint);
      break;
    }
  }
  if (spec.kind && *spec.kind != out.data.kind) {
    throw InputError("declared kind " + std::string(to_string(*spec.kind)) +
                     " does not match the curve, which is " + std::string(to_string(out.data.kind)));
  }
  if (spec.domain) {
    const auto& d = *spec.domain;
    out.domain = Rect{eval_scalar(d[0], P), eval_scalar(d[1], P), eval_scalar(d[2], P),
                      eval_scalar(d[3], P)};
  }
  return out;
}

SurfaceFn closed_form_function(const ClosedFormSpec& spec, const ParamMap& params) {
  ParseOptions opts;
  opts.variables = {"t", "s"};
  for (const auto& [k, v] : params) opts.parameters.insert(k);
  std::array<Expr, 3> e;
  for (std::size_t i = 0; i < 3; ++i) e[i] = parse(spec.components[i], opts).bind(params);
  const bool null_frame = spec.frame == Frame::null;
  return [e, null_frame](double t, double s) {
    const double v[2] = {t, s};
    const LVec3 p{evaluate(e[0], v), evaluate(e[1], v), evaluate(e[2], v)};
    return null_frame ? null_frame_to_canonical(p) : p;
  };
}

ProblemSpec problem_from_json(std::string_view text) {
  const json j = parse_document(text);
  return with_json_errors([&] { return problem_from(j); });
}

FixtureSpec fixture_from_json(std::string_view text) {
  const json j = parse_document(text);
  return with_json_errors([&] {
    FixtureSpec f;
    f.problem = problem_from(j);
    f.name = require(j, "name", "fixture").get<std::string>();
    if (j.contains("description")) f.description = j.at("description").get<std::string>();
    if (j.contains("role")) f.role = j.at("role").get<std::string>();
    f.closed_form = closed_form_from(require(j, "closed_form", "fixture"));
    if (j.contains("closed_form_alt")) f.closed_form_alt = closed_form_from(j.at("closed_form_alt"));
    return f;
  });
}

std::string to_json(const FixtureSpec& f) {
  json j;
  j["name"] = f.name;
  j["description"] = f.description;
  j["role"] = f.role;
  const ProblemSpec& p = f.problem;
  if (p.kind) j["kind"] = std::string(to_string(*p.kind));
  if (!p.params.empty()) j["params"] = params_json(p.params);
  j["gamma"] = curve_json(p.gamma);
  switch (p.w.builder) {
    case NormalSpec::Builder::curve:
      j["w"] = curve_json(p.w.curve);
      break;
    case NormalSpec::Builder::geodesic:
      j["w"] = {{"builder", "geodesic"}};
      break;
    case NormalSpec::Builder::planar_orthogonal:
      j["w"] = {{"builder", "planar_orthogonal"},
                {"plane_normal",
                 {scalar_json(p.w.plane_normal[0]), scalar_json(p.w.plane_normal[1]),
                  scalar_json(p.w.plane_normal[2])}},
                {"frame", frame_name(p.w.frame)}};
      break;
  }
  if (!p.basepoint.empty()) j["basepoint"] = scalar_json(p.basepoint);
  if (p.domain) {
    json d = json::array();
    for (const auto& x : *p.domain) d.push_back(scalar_json(x));
    j["domain"] = d;
  }
  j["closed_form"] = closed_form_json(f.closed_form);
  if (f.closed_form_alt) j["closed_form_alt"] = closed_form_json(*f.closed_form_alt);
  return j.dump(2) + "\n";
}

ProblemSpec load_problem(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return problem_from_json(ss.str());
}

namespace {

std::string_view trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string_view::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t") - b + 1);
}

}  // namespace

ParamMap parse_param_list(std::string_view list) {
  ParamMap out;
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    const std::string_view item = trim(list.substr(0, comma));
    list = comma == std::string_view::npos ? std::string_view{} : list.substr(comma + 1);
    if (item.empty()) continue;
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || trim(item.substr(0, eq)).empty()) {
      throw InputError("parameter override \"" + std::string(item) + "\" is not of the form k=v");
    }
    const std::string key(trim(item.substr(0, eq)));
    const std::string_view val = trim(item.substr(eq + 1));
    double v = 0.0;
    auto [ptr, ec] = std::from_chars(val.data(), val.data() + val.size(), v);
    if (ec != std::errc() || ptr != val.data() + val.size()) {
      throw InputError("parameter \"" + key + "\" has a non-numeric value");
    }
    out[key] = v;
  }
  return out;
}

}  // namespace bjorling
