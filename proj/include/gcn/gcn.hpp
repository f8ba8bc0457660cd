#pragma once

// Umbrella header: exact bivariate Lagrange interpolation, GC structure
// analysis, and the verification toolkit.

#include <gcn/errors.hpp>
#include <gcn/rational.hpp>
#include <gcn/geometry.hpp>
#include <gcn/poly.hpp>
#include <gcn/linalg.hpp>
#include <gcn/interp.hpp>
#include <gcn/gc.hpp>
#include <gcn/verify.hpp>
#include <gcn/generate.hpp>
#include <gcn/search.hpp>
