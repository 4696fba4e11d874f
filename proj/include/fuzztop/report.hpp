#pragma once

#include <string>

#include "fuzztop/search.hpp"

namespace fuzztop {

// Fixed-width table in registry order, witnesses expanded below it.
// Includes per-claim wall time; intended for people.
std::string render_human(const AuditReport& report);

// Line-delimited JSON records: one run header, then one record per claim.
// This is the stable machine contract: identical config and seed produce
// byte-identical output, whatever the worker count — so wall times and the
// worker count are deliberately not part of it.
std::string render_machine(const AuditReport& report);

}  // namespace fuzztop
