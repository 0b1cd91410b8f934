#pragma once

#include "jetlct/branch_bound.hpp"
#include "jetlct/fp.hpp"
#include "jetlct/fp_oracle.hpp"
#include "jetlct/jet.hpp"
#include "jetlct/jet_dim.hpp"
#include "jetlct/newton.hpp"
#include "jetlct/parser.hpp"
#include "jetlct/polynomial.hpp"
#include "jetlct/random.hpp"
#include "jetlct/rational.hpp"
#include "jetlct/simplex.hpp"
#include "jetlct/theorems.hpp"
