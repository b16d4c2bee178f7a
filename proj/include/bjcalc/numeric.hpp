#pragma once

#include "bjcalc/numeric/antiwick.hpp"
#include "bjcalc/numeric/apply.hpp"
#include "bjcalc/numeric/grid.hpp"
#include "bjcalc/numeric/quadrature.hpp"
#include "bjcalc/numeric/sampling.hpp"
#include "bjcalc/numeric/shubin.hpp"
#include "bjcalc/numeric/transforms.hpp"
