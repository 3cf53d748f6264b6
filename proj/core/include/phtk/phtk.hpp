#pragma once

#include "phtk/chain.hpp"
#include "phtk/complex.hpp"
#include "phtk/diagram.hpp"
#include "phtk/diagram_io.hpp"
#include "phtk/distance_matrix.hpp"
#include "phtk/distances.hpp"
#include "phtk/errors.hpp"
#include "phtk/filtration.hpp"
#include "phtk/homology.hpp"
#include "phtk/ingest.hpp"
#include "phtk/metrics.hpp"
#include "phtk/persistence.hpp"
#include "phtk/point_cloud.hpp"
#include "phtk/render.hpp"
#include "phtk/rips.hpp"
#include "phtk/simplex.hpp"
