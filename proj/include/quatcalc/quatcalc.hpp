// Umbrella header: the whole library in one include.
#pragma once

#include "quatcalc/analytic.hpp"
#include "quatcalc/differential.hpp"
#include "quatcalc/errors.hpp"
#include "quatcalc/fueter.hpp"
#include "quatcalc/function_spec.hpp"
#include "quatcalc/integral.hpp"
#include "quatcalc/json_io.hpp"
#include "quatcalc/mat2.hpp"
#include "quatcalc/oracle.hpp"
#include "quatcalc/quaternion.hpp"
#include "quatcalc/random.hpp"
#include "quatcalc/su2.hpp"
#include "quatcalc/verify.hpp"
