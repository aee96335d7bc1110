#pragma once

#include "ads3/eigenfunctions.hpp"
#include "ads3/errors.hpp"
#include "ads3/group.hpp"
#include "ads3/io.hpp"
#include "ads3/oracles.hpp"
#include "ads3/psl2.hpp"
#include "ads3/series.hpp"
#include "ads3/thresholds.hpp"
