#pragma once

#include "counting.hpp"
#include "distributions.hpp"
#include "errors.hpp"
#include "numbers.hpp"
#include "polynomial.hpp"
#include "sampler.hpp"
#include "shapes.hpp"
#include "symbolic.hpp"
