#pragma once

#include "setcover/audit.hpp"
#include "setcover/baselines.hpp"
#include "setcover/common.hpp"
#include "setcover/critical_level.hpp"
#include "setcover/decremental.hpp"
#include "setcover/engine.hpp"
#include "setcover/fully_dynamic.hpp"
#include "setcover/induced.hpp"
#include "setcover/metrics.hpp"
#include "setcover/random_cover.hpp"
#include "setcover/rng.hpp"
#include "setcover/runner.hpp"
#include "setcover/set_system.hpp"
#include "setcover/sort_list.hpp"
#include "setcover/trace.hpp"
#include "setcover/workloads.hpp"
