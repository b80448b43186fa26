#pragma once

#include "gaussrenyi/cycles.hpp"
#include "gaussrenyi/errors.hpp"
#include "gaussrenyi/exact.hpp"
#include "gaussrenyi/expansion.hpp"
#include "gaussrenyi/maps.hpp"
#include "gaussrenyi/measures.hpp"
#include "gaussrenyi/quadirr.hpp"
