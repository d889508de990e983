#pragma once

#include "action.hpp"
#include "bigrat.hpp"
#include "catalog.hpp"
#include "cm.hpp"
#include "conjugacy.hpp"
#include "curve.hpp"
#include "group.hpp"
#include "intfactor.hpp"
#include "jmap.hpp"
#include "named_groups.hpp"
#include "parallel.hpp"
#include "parse.hpp"
#include "poly.hpp"
#include "ring2x2.hpp"
#include "roots.hpp"
#include "search.hpp"
#include "verify.hpp"
