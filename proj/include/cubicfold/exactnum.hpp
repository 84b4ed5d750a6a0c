#pragma once

#include "cubicfold/exactnum/arith.hpp"
#include "cubicfold/exactnum/rational.hpp"
#include "cubicfold/exactnum/cyclotomic.hpp"
#include "cubicfold/exactnum/prime_field.hpp"
#include "cubicfold/exactnum/specialization.hpp"
