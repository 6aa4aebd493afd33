#pragma once

#include "apps.hpp"
#include "contfrac.hpp"
#include "errors.hpp"
#include "geodesic.hpp"
#include "io.hpp"
#include "ladder.hpp"
#include "matrix.hpp"
#include "oracle.hpp"
#include "rational.hpp"
#include "svg.hpp"
#include "verify.hpp"
