#ifndef SIXVERTEX_SIXVERTEX_HPP
#define SIXVERTEX_SIXVERTEX_HPP

// Umbrella header for the whole library.

#include "numerics.hpp"
#include "model.hpp"
#include "polybasis.hpp"
#include "detrep.hpp"
#include "qism.hpp"
#include "enumerate.hpp"
#include "io.hpp"
#include "verify.hpp"
#include "bench.hpp"

#endif
