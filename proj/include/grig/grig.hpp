#pragma once

// Exact computations around the Grigorchuk group: the weighted word metric
// over the cubic field Q(eta), ball enumeration, growth, the tree encoding
// of group elements, and desk-scale verification of the identities behind
// the subexponential growth bound.

#include "grig/ball.hpp"
#include "grig/encoding.hpp"
#include "grig/growth_fit.hpp"
#include "grig/interval.hpp"
#include "grig/numberfield.hpp"
#include "grig/portrait.hpp"
#include "grig/rational.hpp"
#include "grig/verify.hpp"
#include "grig/weights.hpp"
#include "grig/words.hpp"
