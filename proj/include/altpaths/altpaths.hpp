#pragma once

#include "altpaths/apcp.hpp"
#include "altpaths/benders.hpp"
#include "altpaths/flow.hpp"
#include "altpaths/generator.hpp"
#include "altpaths/json_io.hpp"
#include "altpaths/kpi.hpp"
#include "altpaths/network.hpp"
#include "altpaths/oracle.hpp"
#include "altpaths/rapcp.hpp"
#include "altpaths/solve.hpp"
#include "altpaths/sweep.hpp"
