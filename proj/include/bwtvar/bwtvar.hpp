#pragma once

#include "collection.hpp"
#include "decimal.hpp"
#include "distances.hpp"
#include "error.hpp"
#include "intervals.hpp"
#include "naive_oracle.hpp"
#include "ordering.hpp"
#include "permutations.hpp"
#include "report.hpp"
#include "run_metrics.hpp"
#include "suffix_sort.hpp"
#include "symbols.hpp"
#include "synth.hpp"
#include "transforms.hpp"
