#pragma once

// Everything except io.hpp, which additionally needs nlohmann/json.

#include "simspec/analytic.hpp"
#include "simspec/bounds.hpp"
#include "simspec/dynamics.hpp"
#include "simspec/eigen_jacobi.hpp"
#include "simspec/errors.hpp"
#include "simspec/kernel.hpp"
#include "simspec/mixture.hpp"
#include "simspec/quadrature.hpp"
#include "simspec/random.hpp"
#include "simspec/spectra.hpp"
