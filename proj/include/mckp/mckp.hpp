#ifndef MCKP_MCKP_HPP_
#define MCKP_MCKP_HPP_

// Umbrella header for the multiple-choice knapsack toolkit: data model,
// closed-form scalarized solver, bisection driver with certified bounds,
// exact and greedy baselines, instance generation and file formats.

#include "mckp/baselines.hpp"
#include "mckp/bench.hpp"
#include "mckp/bissa.hpp"
#include "mckp/errors.hpp"
#include "mckp/generate.hpp"
#include "mckp/io.hpp"
#include "mckp/model.hpp"
#include "mckp/numeric.hpp"
#include "mckp/rng.hpp"
#include "mckp/scalarize.hpp"
#include "mckp/tie_scan.hpp"

#endif  // MCKP_MCKP_HPP_
