#ifndef LRC_LRC_HPP
#define LRC_LRC_HPP

// Umbrella header for the whole library.

#include "lrc/code.hpp"
#include "lrc/errors.hpp"
#include "lrc/field.hpp"
#include "lrc/io.hpp"
#include "lrc/linalg.hpp"
#include "lrc/metrics.hpp"
#include "lrc/recovery.hpp"
#include "lrc/rng.hpp"
#include "lrc/sim.hpp"
#include "lrc/tables.hpp"

#endif  // LRC_LRC_HPP
