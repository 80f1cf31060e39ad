#pragma once

#include "sigtile/decide.hpp"
#include "sigtile/groebner.hpp"
#include "sigtile/identities.hpp"
#include "sigtile/intlinalg.hpp"
#include "sigtile/monomial.hpp"
#include "sigtile/numbers.hpp"
#include "sigtile/oracle.hpp"
#include "sigtile/polynomial.hpp"
#include "sigtile/rectcalc.hpp"
#include "sigtile/reduction.hpp"
#include "sigtile/tiles.hpp"
#include "sigtile/version.hpp"
