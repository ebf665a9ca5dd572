#pragma once

#include "ydlab/rep/io.hpp"
#include "ydlab/rep/operations.hpp"
#include "ydlab/rep/structures.hpp"
