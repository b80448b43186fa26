#pragma once

#include "gaussrenyi/exact/integer.hpp"
#include "gaussrenyi/exact/mobius.hpp"
#include "gaussrenyi/exact/quad_irr.hpp"
#include "gaussrenyi/exact/rational.hpp"
