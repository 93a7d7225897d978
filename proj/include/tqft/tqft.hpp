#pragma once

#include "tqft/cochains.hpp"
#include "tqft/dcomplex.hpp"
#include "tqft/errors.hpp"
#include "tqft/euler.hpp"
#include "tqft/gauge.hpp"
#include "tqft/groups.hpp"
#include "tqft/io.hpp"
#include "tqft/pathintegral.hpp"
#include "tqft/phase.hpp"
#include "tqft/presets.hpp"
#include "tqft/rational.hpp"
#include "tqft/verify.hpp"
