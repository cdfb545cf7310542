#pragma once

#include "checked.hpp"
#include "partition.hpp"
#include "statistics.hpp"
#include "symbol.hpp"
#include "injections.hpp"
#include "series.hpp"
#include "tables.hpp"
#include "reordering.hpp"
#include "verify.hpp"
#include "format.hpp"
