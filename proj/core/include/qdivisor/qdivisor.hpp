#pragma once

#include "qdivisor/arithmetic.hpp"
#include "qdivisor/erdos_nicolas.hpp"
#include "qdivisor/errors.hpp"
#include "qdivisor/kr_poly.hpp"
#include "qdivisor/laurent.hpp"
#include "qdivisor/pythagorean.hpp"
#include "qdivisor/series_oracle.hpp"
