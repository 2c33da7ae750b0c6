#pragma once

#include "tic/core/algebra.hpp"
#include "tic/core/connectivity.hpp"
#include "tic/core/error.hpp"
#include "tic/core/op_counter.hpp"
#include "tic/core/snapshot.hpp"
#include "tic/hierarchy/interval.hpp"
#include "tic/hierarchy/naive.hpp"
#include "tic/hierarchy/pattern_algebra.hpp"
#include "tic/hierarchy/rowbased.hpp"
#include "tic/io/bench.hpp"
#include "tic/io/digest.hpp"
#include "tic/io/generators.hpp"
#include "tic/io/report.hpp"
#include "tic/io/trace_io.hpp"
#include "tic/ladder/ladder.hpp"
#include "tic/stability/stability.hpp"
#include "tic/walk/online.hpp"
#include "tic/walk/optimal.hpp"
