#pragma once

#include "mtrank/bignum.hpp"
#include "mtrank/bounds.hpp"
#include "mtrank/landau.hpp"
#include "mtrank/landau_oracle.hpp"
#include "mtrank/lattice.hpp"
#include "mtrank/rootsys.hpp"
#include "mtrank/sharpness.hpp"
