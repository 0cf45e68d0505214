#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "supercong/registry.hpp"

namespace sc::report {

enum class Format { JsonLines, Csv, Table };

Format parse_format(const std::string& name);  // throws OutOfRange

// Serialize results in a fixed column set.  Large integers are written as
// decimal strings.  Timings are emitted only when `timings` is set, so that
// identical runs produce byte-identical machine-readable output.
void write(std::ostream& os, const std::vector<registry::VerificationResult>& results,
           Format format, bool timings);

struct Tally {
    size_t pass = 0, fail = 0, not_applicable = 0, precision_error = 0, pole = 0;
};

Tally tally(const std::vector<registry::VerificationResult>& results);

// 0 all good, 1 any Fail, 3 any PrecisionError/Pole among applicable checks.
int exit_code(const Tally& t);

} // namespace sc::report
