#pragma once

#include "olhgen/catalog.hpp"
#include "olhgen/core.hpp"
#include "olhgen/error.hpp"
#include "olhgen/fold.hpp"
#include "olhgen/hadamard.hpp"
#include "olhgen/io.hpp"
#include "olhgen/kronecker.hpp"
#include "olhgen/matrix.hpp"
#include "olhgen/metrics.hpp"
#include "olhgen/planner.hpp"
#include "olhgen/published_designs.hpp"
#include "olhgen/recipe.hpp"
#include "olhgen/search.hpp"
#include "olhgen/stacking.hpp"
