#pragma once

#include "bjorling/builders.hpp"
#include "bjorling/curve.hpp"
#include "bjorling/domain.hpp"
#include "bjorling/error.hpp"
#include "bjorling/export.hpp"
#include "bjorling/expr.hpp"
#include "bjorling/gallery.hpp"
#include "bjorling/lorentz.hpp"
#include "bjorling/problem.hpp"
#include "bjorling/quadrature.hpp"
#include "bjorling/split_complex.hpp"
#include "bjorling/surface.hpp"
#include "bjorling/verify.hpp"
#include "bjorling/weierstrass.hpp"
