#pragma once

#include "odsk/bitset.hpp"
#include "odsk/completion.hpp"
#include "odsk/concepts.hpp"
#include "odsk/context.hpp"
#include "odsk/dimension.hpp"
#include "odsk/error.hpp"
#include "odsk/factors.hpp"
#include "odsk/guttman.hpp"
#include "odsk/implications.hpp"
#include "odsk/layout.hpp"
#include "odsk/linear_extensions.hpp"
#include "odsk/omspace.hpp"
#include "odsk/order.hpp"
#include "odsk/render.hpp"
#include "odsk/scaling.hpp"
#include "odsk/io/csv.hpp"
#include "odsk/io/cxt.hpp"
#include "odsk/io/distance_csv.hpp"
#include "odsk/io/poset_tsv.hpp"
#include "odsk/io/table_csv.hpp"
#include "odsk/io/text.hpp"
