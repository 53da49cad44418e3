#pragma once

#include "lerchz/arith.hpp"
#include "lerchz/bernoulli.hpp"
#include "lerchz/characters.hpp"
#include "lerchz/config.hpp"
#include "lerchz/errors.hpp"
#include "lerchz/gamma.hpp"
#include "lerchz/hurwitz_cache.hpp"
#include "lerchz/lerch.hpp"
#include "lerchz/lvalues.hpp"
#include "lerchz/nonvanishing.hpp"
#include "lerchz/numeric.hpp"
#include "lerchz/parallel.hpp"
#include "lerchz/quadrature.hpp"
#include "lerchz/wide_moments.hpp"
