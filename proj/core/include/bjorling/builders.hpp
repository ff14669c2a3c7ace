#pragma once

#include <optional>

#include "bjorling/curve.hpp"
#include "bjorling/lorentz.hpp"

namespace bjorling {

enum class Frame { canonical, null };

/// Converts a curve given in coordinates of the null frame {L1, L2, L3}
/// to canonical coordinates (value and derivatives).
Curve null_frame_curve(const Curve& c);

/// Data for which gamma is a geodesic of the solution: W = -gamma''/|gamma''|.
/// gamma must be timelike with constant speed and gamma'' spacelike on the
/// interval; otherwise GeodesicDataError. Basepoint defaults to the middle
/// of the interval.
BjorlingData geodesic_data(const Curve& gamma, std::optional<double> basepoint = std::nullopt,
                           int samples = 201);

/// Data whose solution meets the plane orthogonal to `plane_normal`
/// orthogonally along gamma: W = gamma' x e/|.| for timelike gamma and
/// e x gamma'/|.| for spacelike gamma. With Frame::null both gamma and the
/// normal are read in the null frame. Throws PlaneMismatch when gamma
/// leaves the plane and DegenerateNormal when the cross product is not
/// spacelike.
BjorlingData planar_orthogonal_data(const Curve& gamma, const LVec3& plane_normal,
                                    Frame frame = Frame::canonical,
                                    std::optional<double> basepoint = std::nullopt,
                                    int samples = 201);

}  // namespace bjorling
