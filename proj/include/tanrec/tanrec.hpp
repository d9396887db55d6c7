#pragma once

// Exact-arithmetic verification of the tangent-function proof of quadratic
// reciprocity: multiplication formulas, root polynomials of the division
// values, and the Legendre symbol as an exact quotient of integer root
// products, cross-checked against Euler's criterion and Gauss's lemma.

#include "tanrec/errors.hpp"
#include "tanrec/format.hpp"
#include "tanrec/integer.hpp"
#include "tanrec/polynomial.hpp"
#include "tanrec/reciprocity.hpp"
#include "tanrec/resultant.hpp"
#include "tanrec/roots.hpp"
#include "tanrec/tangent.hpp"
