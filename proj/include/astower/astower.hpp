#pragma once

#include "astower/checks.hpp"
#include "astower/factor.hpp"
#include "astower/factor_cache.hpp"
#include "astower/natural.hpp"
#include "astower/order.hpp"
#include "astower/poly.hpp"
#include "astower/tower.hpp"
