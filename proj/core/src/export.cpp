#include "bjorling/export.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace bjorling {

namespace {

std::string num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

void write_csv(std::ostream& os, const Mesh& m) {
  os << "t,s,x1,x2,x3\n";
  for (int i = 0; i < m.nt; ++i) {
    const std::string t = num(m.t(i));
    for (int j = 0; j < m.ns; ++j) {
      const LVec3& p = m.at(i, j);
      os << t << ',' << num(m.s(j)) << ',' << num(p.x1) << ',' << num(p.x2) << ',' << num(p.x3)
         << '\n';
    }
  }
}

void write_obj(std::ostream& os, const Mesh& m) {
  os << "# " << m.nt << "x" << m.ns << " grid over [" << num(m.rect.t0) << ", " << num(m.rect.t1)
     << "] x [" << num(m.rect.s0) << ", " << num(m.rect.s1) << "]\n";
  for (const LVec3& p : m.points) {
    os << "v " << num(p.x1) << ' ' << num(p.x2) << ' ' << num(p.x3) << '\n';
  }
  const long M = m.ns;
  for (long i = 0; i + 1 < m.nt; ++i) {
    for (long j = 0; j + 1 < m.ns; ++j) {
      const long a = i * M + j + 1;
      const long b = (i + 1) * M + j + 1;
      const long c = (i + 1) * M + j + 2;
      const long d = i * M + j + 2;
      os << "f " << a << ' ' << b << ' ' << c << '\n';
      os << "f " << a << ' ' << c << ' ' << d << '\n';
    }
  }
}

void write_mesh_json(std::ostream& os, const Mesh& m) {
  nlohmann::ordered_json j;
  j["nt"] = m.nt;
  j["ns"] = m.ns;
  j["domain"] = {m.rect.t0, m.rect.t1, m.rect.s0, m.rect.s1};
  auto pts = nlohmann::ordered_json::array();
  for (int i = 0; i < m.nt; ++i) {
    for (int k = 0; k < m.ns; ++k) {
      const LVec3& p = m.at(i, k);
      pts.push_back({m.t(i), m.s(k), p.x1, p.x2, p.x3});
    }
  }
  j["points"] = std::move(pts);
  os << j.dump() << '\n';
}

Mesh read_csv(std::istream& is) {
  std::string line;
  if (!std::getline(is, line)) throw InputError("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != "t,s,x1,x2,x3") throw InputError("CSV header must be t,s,x1,x2,x3");

  struct Row {
    double v[5];
  };
  std::vector<Row> rows;
  std::size_t lineno = 1;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Row r{};
    const char* p = line.data();
    const char* end = p + line.size();
    for (int k = 0; k < 5; ++k) {
      auto [ptr, ec] = std::from_chars(p, end, r.v[k]);
      if (ec != std::errc()) throw InputError("CSV line " + std::to_string(lineno) + ": bad number");
      p = ptr;
      if (k < 4) {
        if (p == end || *p != ',') throw InputError("CSV line " + std::to_string(lineno) + ": expected 5 columns");
        ++p;
      }
    }
    if (p != end) throw InputError("CSV line " + std::to_string(lineno) + ": trailing characters");
    rows.push_back(r);
  }
  if (rows.empty()) throw InputError("CSV has no data rows");

  // Rows share t in blocks of ns.
  std::size_t ns = 1;
  while (ns < rows.size() && rows[ns].v[0] == rows[0].v[0]) ++ns;
  if (rows.size() % ns != 0) throw InputError("CSV rows do not form a rectangular grid");
  const std::size_t nt = rows.size() / ns;

  Mesh m;
  m.nt = static_cast<int>(nt);
  m.ns = static_cast<int>(ns);
  m.rect = {rows.front().v[0], rows.back().v[0], rows.front().v[1], rows[ns - 1].v[1]};
  m.points.reserve(rows.size());
  for (std::size_t i = 0; i < nt; ++i) {
    for (std::size_t j = 0; j < ns; ++j) {
      const Row& r = rows[i * ns + j];
      if (r.v[0] != rows[i * ns].v[0] || r.v[1] != rows[j].v[1]) {
        throw InputError("CSV rows do not form a rectangular grid");
      }
      m.points.push_back({r.v[2], r.v[3], r.v[4]});
    }
  }
  return m;
}

std::string report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  for (const auto& c : r.checks) {
    nlohmann::ordered_json e;
    e["max_residual"] = c.residual.value;
    e["at"] = {c.residual.t, c.residual.s};
    e["tol"] = c.tol;
    e["pass"] = c.pass;
    if (c.lower_bound) e["kind"] = "lower_bound";
    j[c.name] = std::move(e);
  }
  return j.dump(2) + "\n";
}

}  // namespace bjorling
