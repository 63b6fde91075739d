#pragma once

#include <iosfwd>

namespace hat {

// Runs the verification battery, printing one PASS/FAIL line per criterion.
// Returns the number of failed criteria. Criterion 10 (the 732-vertex
// instance) runs only when include_big is set.
int run_acceptance(std::ostream& out, bool include_big);

}  // namespace hat
