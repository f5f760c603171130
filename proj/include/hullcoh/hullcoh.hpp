#pragma once

#include "hullcoh/error.hpp"
#include "hullcoh/rational.hpp"
#include "hullcoh/matrix.hpp"
#include "hullcoh/poly.hpp"
#include "hullcoh/exterior.hpp"
#include "hullcoh/polyform.hpp"
#include "hullcoh/polymatrix.hpp"
#include "hullcoh/hull.hpp"
#include "hullcoh/liecomplex.hpp"
#include "hullcoh/simpclass.hpp"
#include "hullcoh/oracle.hpp"
#include "hullcoh/lefschetz.hpp"
#include "hullcoh/presentation_io.hpp"
#include "hullcoh/reports.hpp"
