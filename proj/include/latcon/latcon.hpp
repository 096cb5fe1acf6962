#pragma once

#include "latcon/build_expr.hpp"
#include "latcon/congruence.hpp"
#include "latcon/constructors.hpp"
#include "latcon/enumeration.hpp"
#include "latcon/error.hpp"
#include "latcon/isomorphism.hpp"
#include "latcon/lat_format.hpp"
#include "latcon/lattice.hpp"
#include "latcon/partition.hpp"
#include "latcon/verify.hpp"
