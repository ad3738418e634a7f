#pragma once

#include "scenario.hpp"

namespace nfbeam::app {

// Each command writes its output files and prints a short human-readable
// summary to stdout. Errors are reported by exception: config_error for
// bad inputs, numeric_error for failed computations.
void run_pattern(scenario s);
void run_eta_sweep(scenario s);
void run_sumrate(scenario s);
void run_table1(scenario s);

}  // namespace nfbeam::app
