#pragma once

// Banded approximation of operator inverses with certified error bounds,
// plus the Wiener/Sobolev symbol calculus and covariance diagnostics built
// on top of it. Include this to get the whole library.

#include "bandinv/banded_matrix.hpp"
#include "bandinv/covstat.hpp"
#include "bandinv/dense_matrix.hpp"
#include "bandinv/errors.hpp"
#include "bandinv/index_metric.hpp"
#include "bandinv/io.hpp"
#include "bandinv/mixing.hpp"
#include "bandinv/neumann.hpp"
#include "bandinv/operator_norm.hpp"
#include "bandinv/permutation.hpp"
#include "bandinv/spectral.hpp"
#include "bandinv/wiener.hpp"
