#pragma once

#include <string>

#include "json.hpp"

#include "app/config.hpp"

namespace thinscat::app {

/*!
 * Run one experiment and write its artifacts into config.output_dir:
 * manifest.ini (the fully resolved config), summary.json, and the
 * mode-specific tables. Returns the summary that was written.
 *
 * Library errors propagate unchanged; exit_code_for() maps them.
 */
nlohmann::json run(ExperimentConfig const& config);

//! 0 success, 2 configuration or argument error, 3 numerical failure
//! (including singular evaluation points), 4 infeasible design target.
int exit_code_for(std::exception const& error);

}  // namespace thinscat::app
