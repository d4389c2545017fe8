#pragma once

// Exact-arithmetic workbench for generalized Jacobian rings of open complete
// intersections: graded pieces and their dimensions, logarithmic Hodge
// numbers, trace/duality pairings, Koszul (symmetrizer) exactness checks and
// Noether-Lefschetz codimension bounds.

#include "config.hpp"
#include "duality.hpp"
#include "family.hpp"
#include "field.hpp"
#include "graded.hpp"
#include "hodge.hpp"
#include "koszul.hpp"
#include "linalg.hpp"
#include "poly.hpp"
#include "quotient.hpp"
#include "util.hpp"
