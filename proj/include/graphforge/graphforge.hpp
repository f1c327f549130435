#pragma once

#include "graphforge/baselines.hpp"
#include "graphforge/cabam.hpp"
#include "graphforge/dataset.hpp"
#include "graphforge/error.hpp"
#include "graphforge/generators.hpp"
#include "graphforge/graph.hpp"
#include "graphforge/harness.hpp"
#include "graphforge/io.hpp"
#include "graphforge/lfr.hpp"
#include "graphforge/metrics.hpp"
#include "graphforge/params.hpp"
#include "graphforge/rng.hpp"
#include "graphforge/sampling.hpp"
#include "graphforge/sbm.hpp"
