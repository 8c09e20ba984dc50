#pragma once

#include "trireduce/baselines.hpp"
#include "trireduce/bench.hpp"
#include "trireduce/errors.hpp"
#include "trireduce/handles.hpp"
#include "trireduce/mesh.hpp"
#include "trireduce/meshgen.hpp"
#include "trireduce/meshio.hpp"
#include "trireduce/reducer.hpp"
#include "trireduce/stats.hpp"
#include "trireduce/topo.hpp"
#include "trireduce/worklist.hpp"
