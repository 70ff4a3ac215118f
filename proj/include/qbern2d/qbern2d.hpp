#pragma once

#include "qbern2d/basis.hpp"
#include "qbern2d/check.hpp"
#include "qbern2d/combinatorics.hpp"
#include "qbern2d/egf.hpp"
#include "qbern2d/error.hpp"
#include "qbern2d/interp.hpp"
#include "qbern2d/operator.hpp"
#include "qbern2d/scalar.hpp"
#include "qbern2d/series.hpp"
