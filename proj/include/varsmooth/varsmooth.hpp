#pragma once

#include "varsmooth/block_vector.hpp"
#include "varsmooth/errors.hpp"
#include "varsmooth/kernels.hpp"
#include "varsmooth/linops.hpp"
#include "varsmooth/moreau.hpp"
#include "varsmooth/pgm.hpp"
#include "varsmooth/problems.hpp"
#include "varsmooth/prox.hpp"
#include "varsmooth/rng.hpp"
#include "varsmooth/schedules.hpp"
#include "varsmooth/shape.hpp"
#include "varsmooth/solvers.hpp"
