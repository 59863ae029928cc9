#pragma once

// Everything except file formats and reports, which live in io.hpp and need OpenSSL.

#include "weylot/error.hpp"
#include "weylot/limits.hpp"
#include "weylot/rational.hpp"
#include "weylot/matrix.hpp"
#include "weylot/polytope.hpp"
#include "weylot/symmetry.hpp"
#include "weylot/triangulation.hpp"
#include "weylot/root_system.hpp"
#include "weylot/weyl.hpp"
#include "weylot/surface_measure.hpp"
#include "weylot/network_simplex.hpp"
#include "weylot/transport.hpp"
