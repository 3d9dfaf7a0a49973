#pragma once

// Umbrella header for the position-dependent-mass oscillator toolkit.

#include "pdm/coherent.hpp"
#include "pdm/errors.hpp"
#include "pdm/ladder.hpp"
#include "pdm/mass.hpp"
#include "pdm/numerics.hpp"
#include "pdm/oscillators.hpp"
#include "pdm/schrodinger.hpp"
#include "pdm/special_functions.hpp"
#include "pdm/spectra.hpp"
#include "pdm/transform.hpp"
#include "pdm/wave.hpp"
