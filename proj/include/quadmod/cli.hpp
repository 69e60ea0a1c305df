#ifndef QUADMOD_CLI_HPP
#define QUADMOD_CLI_HPP

#include "quadmod/wallfind.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace quadmod::cli {

// Runs the command line given by args (without argv[0]). Exit code 0 on
// success (and no failed verification check), 1 when `verify` reports a
// failure, 2 on usage or parse errors (message on the diagnostic stream).
// The table and facts default to the curated ones; tests inject
// perturbed copies to exercise the failure paths.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const ModuliTable& table = ModuliTable::standard(),
        const HomFacts& facts = HomFacts::standard());

// Parses a space expression for the `poincare` subcommand, e.g.
// "(bundle (proj 11) (hilb 3))" or the bare shorthand "hilb 3".
// Exposed for tests.
std::string space_grammar_help();

} // namespace quadmod::cli

#endif
