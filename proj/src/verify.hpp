#pragma once

#include "arrangement.hpp"
#include "numeric.hpp"

#include <string>

namespace braidlevel::verify {

struct Options {
    BigInt cap = BigInt(100000000);  // 1e8
    unsigned jobs = 1;
    unsigned max_n = 4;  // sweep scale
};

// Runs the cross-method and identity checks for one arrangement; appends one
// line per check to report. Returns true iff everything agreed.
bool verify_spec(const arrangement::ArrangementSpec& spec, const Options& opts,
                 std::string& report);

// Sweep over interval specs and small offset sets at the configured scale:
// shift identities, closed level formulas vs census, root structure,
// symmetry, truncated generating-function identities.
bool verify_sweep(const Options& opts, std::string& report);

} // namespace braidlevel::verify
