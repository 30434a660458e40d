#pragma once

#include "unbend/horospherical.hpp"
#include "unbend/parabolic.hpp"
#include "unbend/report.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace unbend {

/// Runs one subcommand (args exclude the program name) and writes its report
/// to `out`. Returns 0 when every finding passes, 1 on a certified
/// violation, 2 on a usage or validation error (diagnostic on `err`).
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// |Phi| from the closed forms per family.
int classical_root_count(const LieType& type);

// Report builders behind the subcommands; exposed for tests and bindings.
Report roots_report(const LieType& type);
Report theta_report(const LieType& type);
Report splitting_report(const LieType& type, const std::vector<int>& marked, const std::string& curve);
Report unbendable_report(const std::vector<LieType>& types, bool per_marking);
Report minimal_contrast_report(const LieType& type, int node);
Report weights_report(const LieType& type, const std::vector<int>& support, const std::vector<int>& labels);
Report horospherical_list_report();
Report horospherical_verify_report(const std::vector<HorosphericalDatum>& data);
Report horospherical_splitting_report(const HorosphericalDatum& datum);

nlohmann::json splitting_to_json(const SplittingType& s);

}  // namespace unbend
