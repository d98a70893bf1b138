#pragma once

#include "youngdim/analysis.hpp"
#include "youngdim/config.hpp"
#include "youngdim/diagram.hpp"
#include "youngdim/dimension.hpp"
#include "youngdim/error.hpp"
#include "youngdim/extended_sum.hpp"
#include "youngdim/growth.hpp"
#include "youngdim/io.hpp"
#include "youngdim/max_search.hpp"
#include "youngdim/partition_index.hpp"
#include "youngdim/random.hpp"
