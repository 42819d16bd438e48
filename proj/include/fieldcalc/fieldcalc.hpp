#pragma once
// Umbrella header for the whole library.

#include "fieldcalc/geometry.hpp"
#include "fieldcalc/errors.hpp"
#include "fieldcalc/domains.hpp"
#include "fieldcalc/calculus.hpp"
#include "fieldcalc/em.hpp"
#include "fieldcalc/theorems.hpp"
#include "fieldcalc/expression.hpp"
#include "fieldcalc/viz.hpp"
#include "fieldcalc/scene.hpp"
