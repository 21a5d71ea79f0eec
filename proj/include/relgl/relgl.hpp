#pragma once

// Umbrella header.

#include "relgl/error.hpp"
#include "relgl/element_set.hpp"
#include "relgl/ring.hpp"
#include "relgl/ideal.hpp"
#include "relgl/ideal_identities.hpp"
#include "relgl/mat.hpp"
#include "relgl/congruence.hpp"
#include "relgl/subgroup.hpp"
#include "relgl/workspace.hpp"
#include "relgl/sampling.hpp"
#include "relgl/lemmas.hpp"
#include "relgl/centraliser.hpp"
#include "relgl/k1.hpp"
#include "relgl/scenario.hpp"
#include "relgl/acceptance.hpp"
