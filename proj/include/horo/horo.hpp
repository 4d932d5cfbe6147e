#pragma once

#include "horo/common.hpp"
#include "horo/boundary.hpp"
#include "horo/spinor.hpp"
#include "horo/minkowski.hpp"
#include "horo/hyperbolic.hpp"
#include "horo/lambda.hpp"
#include "horo/applications.hpp"
