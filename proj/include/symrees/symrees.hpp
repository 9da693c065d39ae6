#pragma once

#include "symrees/criteria.hpp"
#include "symrees/exact.hpp"
#include "symrees/family.hpp"
#include "symrees/lattice.hpp"
#include "symrees/poly.hpp"
#include "symrees/presentation.hpp"
#include "symrees/record.hpp"
#include "symrees/scan.hpp"
#include "symrees/symbolic_piece.hpp"
