#include "bjorling_cli/cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "bjorling/bjorling.hpp"

namespace bjorling::cli {

namespace {

struct JobConfig {
  std::string data;
  std::string fixture;
  std::string mesh;
  std::string grid = "51x51";
  std::string domain;
  std::optional<double> tol;
  std::string format;
  std::string out;
  std::string params;
  std::vector<std::string> only;
  std::string export_dir;
};

std::pair<int, int> parse_grid(const std::string& g) {
  const auto x = g.find_first_of("xX");
  int nt = 0;
  int ns = 0;
  if (x == std::string::npos || std::sscanf(g.c_str(), "%d", &nt) != 1 ||
      std::sscanf(g.c_str() + x + 1, "%d", &ns) != 1) {
    throw InputError("--grid must look like NxM, got \"" + g + "\"");
  }
  if (nt < 2 || ns < 2) throw InputError("--grid needs at least 2x2 points");
  return {nt, ns};
}

std::optional<Rect> parse_domain(const std::string& d) {
  if (d.empty()) return std::nullopt;
  Rect r;
  char tail = 0;
  if (std::sscanf(d.c_str(), "%lf,%lf,%lf,%lf%c", &r.t0, &r.t1, &r.s0, &r.s1, &tail) != 4) {
    throw InputError("--domain must be t0,t1,s0,s1");
  }
  if (!(r.t0 < r.t1 && r.s0 < r.s1)) throw InputError("--domain must have t0 < t1 and s0 < s1");
  return r;
}

std::string pick_format(const JobConfig& c) {
  std::string f = c.format;
  if (f.empty() && !c.out.empty()) {
    f = std::filesystem::path(c.out).extension().string();
    if (!f.empty()) f.erase(0, 1);
  }
  if (f.empty()) f = "csv";
  if (f != "obj" && f != "csv" && f != "json") throw InputError("--format must be obj, csv or json");
  return f;
}

template <class Fn>
void with_output(const std::string& path, std::ostream& fallback, Fn&& fn) {
  if (path.empty()) {
    fn(fallback);
    return;
  }
  std::ofstream os(path, std::ios::binary);
  if (!os) throw InputError("cannot write " + path);
  fn(os);
  if (!os) throw InputError("failed writing " + path);
}

struct Solved {
  Surface surface;
  BjorlingData data;
};

ProblemSpec problem_for(const JobConfig& c) {
  if (!c.data.empty() && !c.fixture.empty()) throw InputError("give either --data or --fixture");
  if (!c.data.empty()) return load_problem(c.data);
  if (!c.fixture.empty()) return fixture_spec(c.fixture).problem;
  throw InputError("one of --data or --fixture is required");
}

Solved solve_job(const JobConfig& c) {
  const ProblemSpec spec = problem_for(c);
  const Problem p = instantiate(spec, parse_param_list(c.params));
  SolveOptions opts;
  if (c.tol) opts.tol = *c.tol;
  opts.domain = parse_domain(c.domain);
  if (!opts.domain) opts.domain = p.domain;
  return {solve(p.data, opts), p.data};
}

int cmd_solve(const JobConfig& c, std::ostream& out, std::ostream& err) {
  const auto [nt, ns] = parse_grid(c.grid);
  const std::string format = pick_format(c);
  const Solved s = solve_job(c);
  const Mesh m = sample_grid(s.surface.as_function(), s.surface.domain(), nt, ns);
  with_output(c.out, out, [&](std::ostream& os) {
    if (format == "obj") {
      write_obj(os, m);
    } else if (format == "json") {
      write_mesh_json(os, m);
    } else {
      write_csv(os, m);
    }
  });
  if (!c.out.empty()) {
    err << "wrote " << m.points.size() << " points (" << nt << "x" << ns << ") to " << c.out << "\n";
  }
  return ok;
}

void print_failures(const VerificationReport& r, std::ostream& err) {
  for (const auto& ch : r.checks) {
    if (ch.pass) continue;
    err << "FAIL " << ch.name << ": " << ch.residual.value << (ch.lower_bound ? " <= " : " > ")
        << ch.tol << " at (" << ch.residual.t << ", " << ch.residual.s << ")\n";
  }
}

int cmd_verify(const JobConfig& c, std::ostream& out, std::ostream& err) {
  const int sources = !c.data.empty() + !c.fixture.empty() + !c.mesh.empty();
  if (sources != 1) throw InputError("verify needs exactly one of --data, --fixture or --mesh");
  const auto [nt, ns] = parse_grid(c.grid);

  VerificationReport rep;
  if (!c.mesh.empty()) {
    std::ifstream in(c.mesh);
    if (!in) throw InputError("cannot open " + c.mesh);
    rep = verify_mesh(read_csv(in), c.tol.value_or(1e-3));
  } else if (!c.fixture.empty()) {
    Fixture f = named_surface(c.fixture, parse_param_list(c.params));
    if (auto d = parse_domain(c.domain)) f.domain = *d;
    FixtureCheckOptions opts;
    opts.grid = std::max(nt, ns);
    if (c.tol) opts.solve.tol = *c.tol;
    rep = check_fixture(f, opts);
  } else {
    const Solved s = solve_job(c);
    rep = verify_surface(s.surface.as_function(), Grid::over(s.surface.domain(), nt, ns));
    add_boundary_checks(rep, s.surface, s.data);
  }
  with_output(c.out, out, [&](std::ostream& os) { os << report_to_json(rep); });
  print_failures(rep, err);
  return rep.pass() ? ok : verification_failed;
}

int cmd_gallery(const JobConfig& c, std::ostream& out, std::ostream& err) {
  const ParamMap overrides = parse_param_list(c.params);
  if (!c.export_dir.empty()) {
    std::filesystem::create_directories(c.export_dir);
    for (const auto& f : fixture_specs()) {
      const auto path = std::filesystem::path(c.export_dir) / (f.name + ".json");
      std::ofstream os(path, std::ios::binary);
      if (!os) throw InputError("cannot write " + path.string());
      os << to_json(f);
    }
    err << "exported " << fixture_specs().size() << " fixtures to " << c.export_dir << "\n";
  }

  std::vector<std::string> names = c.only.empty() ? list() : c.only;
  const auto [nt, ns] = parse_grid(c.grid);
  FixtureCheckOptions opts;
  opts.grid = std::max(nt, ns);
  if (c.tol) opts.solve.tol = *c.tol;

  char line[200];
  std::snprintf(line, sizeof line, "%-30s %-10s %-12s %-26s %s\n", "fixture", "kind", "max_error",
                "worst_check", "status");
  out << line;
  bool all = true;
  for (const auto& name : names) {
    const Fixture f = named_surface(name, overrides);
    const auto start = std::chrono::steady_clock::now();
    const VerificationReport rep = check_fixture(f, opts);
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool pair = f.spec.role == "null_pair";
    const CheckResult* key = rep.find(pair ? "pair_distance" : "closed_form_distance");
    std::string worst = "-";
    for (const auto& ch : rep.checks) {
      if (!ch.pass) {
        worst = ch.name;
        break;
      }
    }
    std::snprintf(line, sizeof line, "%-30s %-10s %-12.3e %-26s %s (%.2fs)\n", name.c_str(),
                  pair ? "null" : std::string(to_string(f.data.kind)).c_str(),
                  key ? key->residual.value : 0.0, worst.c_str(), rep.pass() ? "pass" : "FAIL",
                  secs);
    out << line;
    if (!rep.pass()) {
      all = false;
      print_failures(rep, err);
    }
  }
  return all ? ok : verification_failed;
}

int cmd_list(std::ostream& out) {
  for (const auto& f : fixture_specs()) out << f.name << "  " << f.description << "\n";
  return ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Timelike minimal surfaces in Lorentz-Minkowski 3-space from Bjorling data", "bjorling"};
  app.require_subcommand(1);
  JobConfig c;

  auto add_common = [&c](CLI::App* sub) {
    sub->add_option("--grid", c.grid, "grid resolution NxM")->capture_default_str();
    sub->add_option("--domain", c.domain, "parameter rectangle t0,t1,s0,s1");
    sub->add_option("--tol", c.tol, "quadrature tolerance (mesh verification: relative tolerance)");
    sub->add_option("--params", c.params, "parameter overrides k=v,...");
    sub->add_option("--out", c.out, "output path (default stdout)");
  };

  CLI::App* solve_cmd = app.add_subcommand("solve", "solve a Bjorling problem and sample the surface");
  solve_cmd->add_option("--data", c.data, "problem JSON");
  solve_cmd->add_option("--fixture", c.fixture, "gallery fixture name");
  solve_cmd->add_option("--format", c.format, "obj, csv or json (default: from --out, else csv)");
  add_common(solve_cmd);

  CLI::App* verify_cmd = app.add_subcommand("verify", "certify a surface and print a JSON report");
  verify_cmd->add_option("--data", c.data, "problem JSON");
  verify_cmd->add_option("--fixture", c.fixture, "gallery fixture name");
  verify_cmd->add_option("--mesh", c.mesh, "CSV mesh as written by solve");
  add_common(verify_cmd);

  CLI::App* gallery_cmd = app.add_subcommand("gallery", "solve every fixture and compare to its closed form");
  gallery_cmd->add_option("--only", c.only, "restrict to these fixtures");
  gallery_cmd->add_option("--export", c.export_dir, "write fixture JSON files to this directory");
  add_common(gallery_cmd);

  app.add_subcommand("list", "list gallery fixtures");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ok : input_error;
  }

  try {
    if (solve_cmd->parsed()) return cmd_solve(c, out, err);
    if (verify_cmd->parsed()) return cmd_verify(c, out, err);
    if (gallery_cmd->parsed()) return cmd_gallery(c, out, err);
    return cmd_list(out);
  } catch (const QuadratureFailure& e) {
    err << "numerical failure: " << e.what() << "\n";
    return numerical_failure;
  } catch (const DegenerateNormal& e) {
    err << "numerical failure: " << e.what() << "\n";
    return numerical_failure;
  } catch (const ZeroDivisor& e) {
    err << "numerical failure: " << e.what() << "\n";
    return numerical_failure;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
}

}  // namespace bjorling::cli
