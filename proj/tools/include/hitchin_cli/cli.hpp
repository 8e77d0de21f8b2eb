#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hitchin/report.hpp"

namespace hitchin::cli {

enum ExitCode : int { success = 0, verification_failed = 1, usage_error = 2 };

struct GenusRange {
  int first = 3;
  int last = 3;
};

/// "a..b" inclusive or a single value. Throws InvalidArgument on malformed
/// text, an empty range, or first < 3.
GenusRange parse_genus_range(const std::string& text);

/// Every invariant of the base and lifted complexes, Psi, the pairing, the
/// monodromy generators and the triangulation cross-check for one genus.
CheckReport verify_genus(int genus);

/// Braid relations (generic, t=-1, t^k=1 and compact k for k = 2, 3),
/// permutation specialization and zeta action for n = 2..max_strands.
CheckReport verify_burau(int max_strands);

/// {"genera": [...], "burau": {...}, "passed": bool}. Genera are evaluated
/// concurrently; the report order is always ascending genus.
nlohmann::json verify_report(const GenusRange& range, int max_strands);

/// Entry point with argv[1..]. Returns an ExitCode.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hitchin::cli
