#pragma once

#include "arith.hpp"
#include "complex_reps.hpp"
#include "cyclotomic.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "formulas.hpp"
#include "group.hpp"
#include "rational.hpp"
#include "report.hpp"
