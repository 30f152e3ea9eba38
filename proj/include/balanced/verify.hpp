#pragma once

#include <functional>
#include <ostream>
#include <string>
#include <vector>

namespace balanced {

// Named checks behind the `verify` subcommand: the curated set of certified
// examples and identities this library is built around, each runnable on a
// clean install. A check returns true on success and may leave a short
// detail string either way.
struct VerifyCheck {
    std::string name;
    std::function<bool(std::string& detail)> run;
};

std::vector<VerifyCheck> verify_suite();

// Runs every check, prints one "PASS name" / "FAIL name (detail)" line per
// check plus a summary; returns the number of failures.
int run_verify(std::ostream& out);

} // namespace balanced
