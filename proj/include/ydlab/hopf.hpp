#pragma once

#include "ydlab/hopf/characters.hpp"
#include "ydlab/hopf/constructors.hpp"
#include "ydlab/hopf/dual.hpp"
#include "ydlab/hopf/fixtures.hpp"
#include "ydlab/hopf/hopf_algebra.hpp"
#include "ydlab/hopf/integrals.hpp"
#include "ydlab/hopf/io.hpp"
#include "ydlab/hopf/verify.hpp"
