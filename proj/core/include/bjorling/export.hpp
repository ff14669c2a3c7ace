#pragma once

#include <iosfwd>
#include <string>

#include "bjorling/surface.hpp"
#include "bjorling/verify.hpp"

namespace bjorling {

/// Header `t,s,x1,x2,x3`, one row per grid point (t outer, s inner), 17
/// significant digits.
void write_csv(std::ostream& os, const Mesh& m);

/// Wavefront OBJ: one vertex per grid point in the same order, two
/// triangles per cell with consistent winding.
void write_obj(std::ostream& os, const Mesh& m);

/// {"nt", "ns", "domain": [t0, t1, s0, s1], "points": [[t, s, x1, x2, x3], ...]}
void write_mesh_json(std::ostream& os, const Mesh& m);

/// Reads the CSV layout written by write_csv. The points must form a
/// complete rectangular grid; throws InputError otherwise.
Mesh read_csv(std::istream& is);

/// {check: {max_residual, at: [t, s], tol, pass}, ...}
std::string report_to_json(const VerificationReport& r);

}  // namespace bjorling
