#pragma once

#include "ydlab/compat/braiding.hpp"
#include "ydlab/compat/conditions.hpp"
#include "ydlab/compat/constructions.hpp"
#include "ydlab/compat/homs.hpp"
