#pragma once

// Umbrella header for the toric patch kernel.

#include "toric/errors.hpp"
#include "toric/linalg.hpp"
#include "toric/geometry.hpp"
#include "toric/blending.hpp"
#include "toric/variety.hpp"
#include "toric/ipf.hpp"
#include "toric/injectivity.hpp"
#include "toric/distance.hpp"
#include "toric/triangulation.hpp"
#include "toric/degeneration.hpp"
#include "toric/io.hpp"
