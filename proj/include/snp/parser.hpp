#pragma once

// Text format for systems:
//
//   system <name> {
//     neuron <id> { spikes <nat>; rule <id>: [<regex> /] a^<c> -> a^<p> | lambda ; ... }
//     syn <id> -> <id> ; ...
//     out <id> ;  [ in <id> ; ]
//   }
//
// `a` abbreviates `a^1`; omitting the `<regex> /` prefix gives a rule whose
// guard is exactly its consumed amount.

#include <stdexcept>
#include <string>

#include "snp/system.hpp"

namespace snp {

struct ParseError : std::runtime_error {
    int line;
    int column;
    ParseError(int l, int c, const std::string& msg)
        : std::runtime_error("line " + std::to_string(l) + ", col " + std::to_string(c) + ": " +
                             msg),
          line(l),
          column(c) {}
};

// Parses the DSL; throws ParseError on malformed input. Does not run
// validate() -- callers decide how to surface validation findings.
SNPSystem parse_system(const std::string& text);

SNPSystem parse_system_file(const std::string& path);

// Command-line configuration literal "(a1,...,am)".
Config parse_config_literal(const std::string& text);

}  // namespace snp
