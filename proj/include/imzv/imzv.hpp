#pragma once

#include "imzv/finite.hpp"
#include "imzv/genfun_checks.hpp"
#include "imzv/index.hpp"
#include "imzv/index_sum.hpp"
#include "imzv/interp_checks.hpp"
#include "imzv/kernels.hpp"
#include "imzv/numeric.hpp"
#include "imzv/polynomial.hpp"
#include "imzv/serialize.hpp"
#include "imzv/suites.hpp"
#include "imzv/verdict.hpp"
#include "imzv/word.hpp"
