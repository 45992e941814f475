#pragma once

// Umbrella header.

#include "congruent/criteria.hpp"
#include "congruent/els.hpp"
#include "congruent/error.hpp"
#include "congruent/gaussian.hpp"
#include "congruent/lattice.hpp"
#include "congruent/modmath.hpp"
#include "congruent/oracles.hpp"
#include "congruent/quartic.hpp"
#include "congruent/report.hpp"
#include "congruent/verify.hpp"
