#pragma once

#include "ydlab/double/drinfeld.hpp"
#include "ydlab/double/long_algebra.hpp"
