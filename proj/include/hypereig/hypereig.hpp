#pragma once

#include "hypereig/alpha_normal.hpp"
#include "hypereig/bounds.hpp"
#include "hypereig/error.hpp"
#include "hypereig/gap.hpp"
#include "hypereig/generators.hpp"
#include "hypereig/hypergraph.hpp"
#include "hypereig/io.hpp"
#include "hypereig/report.hpp"
#include "hypereig/spectral.hpp"
