#pragma once

// Umbrella header.

#include "kummer/curve.hpp"
#include "kummer/curvespec.hpp"
#include "kummer/ffpoly.hpp"
#include "kummer/intmath.hpp"
#include "kummer/multipoint.hpp"
#include "kummer/numsg.hpp"
#include "kummer/onepoint.hpp"
#include "kummer/prng.hpp"
#include "kummer/report.hpp"
#include "kummer/rroracle.hpp"
