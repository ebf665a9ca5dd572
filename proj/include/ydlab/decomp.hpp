#pragma once

#include "ydlab/decomp/complement.hpp"
#include "ydlab/decomp/decompose.hpp"
#include "ydlab/decomp/projective.hpp"
#include "ydlab/decomp/radical.hpp"
#include "ydlab/decomp/report.hpp"
#include "ydlab/decomp/simple.hpp"
#include "ydlab/decomp/structure_algebra.hpp"
