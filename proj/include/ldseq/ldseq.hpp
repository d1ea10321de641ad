#pragma once

#include "ldseq/baselines.hpp"
#include "ldseq/diagnostics.hpp"
#include "ldseq/discrepancy.hpp"
#include "ldseq/errors.hpp"
#include "ldseq/greedy.hpp"
#include "ldseq/io.hpp"
#include "ldseq/kernels.hpp"
#include "ldseq/minimize.hpp"
#include "ldseq/point_set.hpp"
#include "ldseq/version.hpp"
