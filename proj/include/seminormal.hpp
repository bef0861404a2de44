#pragma once

#include "seminormal/convex_hull.hpp"
#include "seminormal/legendre.hpp"
#include "seminormal/matrix_file.hpp"
#include "seminormal/numrange.hpp"
#include "seminormal/operator_core.hpp"
#include "seminormal/seminormal.hpp"
#include "seminormal/volterra.hpp"
