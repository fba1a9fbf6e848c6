#pragma once

#include "hyperball/coxeter.hpp"
#include "hyperball/lorentz.hpp"
#include "hyperball/optimize.hpp"
#include "hyperball/packing.hpp"
#include "hyperball/quadrature.hpp"
#include "hyperball/report.hpp"
#include "hyperball/specfun.hpp"
#include "hyperball/volume.hpp"
