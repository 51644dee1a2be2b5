#pragma once

#include "gorcurve/error.hpp"
#include "gorcurve/gorenstein4.hpp"
#include "gorcurve/integer.hpp"
#include "gorcurve/matrix.hpp"
#include "gorcurve/resolution.hpp"
#include "gorcurve/semigroup.hpp"
