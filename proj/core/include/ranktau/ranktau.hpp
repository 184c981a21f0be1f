#pragma once

#include "ranktau/apcorr.hpp"
#include "ranktau/engine.hpp"
#include "ranktau/errors.hpp"
#include "ranktau/oracle.hpp"
#include "ranktau/scores.hpp"
#include "ranktau/weights.hpp"

namespace ranktau {
inline constexpr const char* kVersion = "0.1.0";
}
