// include/qrpat/qrpat.hpp: umbrella header.

#pragma once

#include "qrpat/arith.hpp"
#include "qrpat/equivalence.hpp"
#include "qrpat/predictor.hpp"
#include "qrpat/rational.hpp"
#include "qrpat/render.hpp"
