#pragma once

#include "tstar/binomial.hpp"
#include "tstar/canonical.hpp"
#include "tstar/connectivity.hpp"
#include "tstar/counts.hpp"
#include "tstar/enumerate.hpp"
#include "tstar/errors.hpp"
#include "tstar/family.hpp"
#include "tstar/graph.hpp"
#include "tstar/graph6.hpp"
#include "tstar/hamilton.hpp"
#include "tstar/properties.hpp"
#include "tstar/search.hpp"
