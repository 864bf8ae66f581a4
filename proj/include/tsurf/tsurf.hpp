#ifndef TSURF_TSURF_HPP
#define TSURF_TSURF_HPP

#include "tsurf/blocking.hpp"
#include "tsurf/constructions.hpp"
#include "tsurf/cut_cover.hpp"
#include "tsurf/errors.hpp"
#include "tsurf/euler_oracle.hpp"
#include "tsurf/geodesics.hpp"
#include "tsurf/geometry.hpp"
#include "tsurf/io/report.hpp"
#include "tsurf/io/surface_format.hpp"
#include "tsurf/io/svg.hpp"
#include "tsurf/origami.hpp"
#include "tsurf/permutation.hpp"
#include "tsurf/rational.hpp"
#include "tsurf/semi_translation.hpp"
#include "tsurf/sl2z.hpp"
#include "tsurf/strata.hpp"

#endif  // TSURF_TSURF_HPP
