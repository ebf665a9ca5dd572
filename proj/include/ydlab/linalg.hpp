#pragma once

#include "ydlab/linalg/field.hpp"
#include "ydlab/linalg/matrix.hpp"
#include "ydlab/linalg/polynomial.hpp"
#include "ydlab/linalg/subspace.hpp"
