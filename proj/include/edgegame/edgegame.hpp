#pragma once

#include "edgegame/brt.hpp"
#include "edgegame/embedded_graph.hpp"
#include "edgegame/errors.hpp"
#include "edgegame/fixtures.hpp"
#include "edgegame/format.hpp"
#include "edgegame/gf2.hpp"
#include "edgegame/homology.hpp"
#include "edgegame/invariants.hpp"
#include "edgegame/medial.hpp"
#include "edgegame/numeric.hpp"
#include "edgegame/oracle.hpp"
#include "edgegame/random.hpp"
#include "edgegame/representatives.hpp"
#include "edgegame/spaces.hpp"
