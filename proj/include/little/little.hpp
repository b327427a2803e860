#pragma once

// Umbrella header: the whole library is header-only.

#include "little/bounds.hpp"
#include "little/cli.hpp"
#include "little/errors.hpp"
#include "little/harness.hpp"
#include "little/instance.hpp"
#include "little/persist.hpp"
#include "little/rng.hpp"
#include "little/scalar_opt.hpp"
#include "little/solvers.hpp"
#include "little/special_functions.hpp"
#include "little/stats.hpp"
