#pragma once

#include "any.hpp"
#include "core.hpp"
#include "enumerate.hpp"
#include "finite.hpp"
#include "interval.hpp"
#include "io.hpp"
#include "lm.hpp"
#include "oracle.hpp"
#include "owa.hpp"
#include "property.hpp"
#include "triangular.hpp"
#include "unit.hpp"
