#pragma once

#include "affine_permutation.hpp"
#include "cylindric.hpp"
#include "error.hpp"
#include "memo.hpp"
#include "nilcoxeter.hpp"
#include "partition.hpp"
#include "rational_solve.hpp"
#include "serialize.hpp"
#include "stanley.hpp"
#include "symfunc.hpp"
#include "verify.hpp"
