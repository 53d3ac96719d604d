#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace uiverify {

/// Entry point shared by the uiverify binary and the in-process CLI tests.
/// `args` is the command line without the program name, in natural order.
///
/// Exit code contract: 0 = everything clean, 1 = the inputs were processed
/// but produced findings or failed steps, 2 = operational problem (bad
/// invocation, unreadable or malformed file, inconsistent ontology where a
/// usable one is required).
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

} // namespace uiverify
