#pragma once

#include "bcmcf/exact.hpp"
#include "bcmcf/flow.hpp"
#include "bcmcf/fptas.hpp"
#include "bcmcf/generator.hpp"
#include "bcmcf/instance.hpp"
#include "bcmcf/instance_io.hpp"
#include "bcmcf/min_cost_circulation.hpp"
#include "bcmcf/negative_cycle.hpp"
#include "bcmcf/oracle.hpp"
#include "bcmcf/preprocess.hpp"
#include "bcmcf/ratio.hpp"
#include "bcmcf/rational.hpp"
#include "bcmcf/solution_io.hpp"
