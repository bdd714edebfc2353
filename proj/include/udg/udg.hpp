#pragma once

// Umbrella header for the unit-disk clique library.

#include "udg/bench.hpp"
#include "udg/bipartite.hpp"
#include "udg/cobipartite.hpp"
#include "udg/convex_randomized.hpp"
#include "udg/convex_sweep.hpp"
#include "udg/general.hpp"
#include "udg/generators.hpp"
#include "udg/geometry.hpp"
#include "udg/grid.hpp"
#include "udg/io.hpp"
#include "udg/lens.hpp"
#include "udg/oracle.hpp"
#include "udg/svg.hpp"
