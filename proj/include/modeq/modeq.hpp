#pragma once

#include "modeq/basel.hpp"
#include "modeq/chebyshev.hpp"
#include "modeq/cramer.hpp"
#include "modeq/json.hpp"
#include "modeq/matrix.hpp"
#include "modeq/modified_equation.hpp"
#include "modeq/polynomial.hpp"
#include "modeq/rational.hpp"
#include "modeq/series.hpp"
#include "modeq/simulate.hpp"
