#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "algebra.hpp"
#include "report.hpp"

namespace qw {

/// Exit codes shared by the commands and the CLI:
/// 0 success / property holds, 1 property fails (check), 2 input error,
/// 3 a theorem check disagreed (falsification diagnostic).
enum ExitCode : int {
  kExitOk = 0,
  kExitPropertyFails = 1,
  kExitInputError = 2,
  kExitFalsified = 3,
};

struct CommandOutput {
  Json report;
  int exit_code = kExitOk;
  std::vector<Algebra> models;  // quotient: the quotient; search: the models
};

/// Axiom verdicts with witnesses; exit 0 iff the algebra is QW.
CommandOutput cmd_check(const Algebra& a);

/// Filters, deductive systems, per-subset classification, linearity and
/// finiteness diagnostics, and both quotient correspondence checks for every
/// deductive system. Exit 3 when any provably-equivalent routes disagree.
CommandOutput cmd_analyze(const Algebra& a);

/// Quotient by the deductive system named by its members. InputError (exit 2)
/// when the subset is not a deductive system, naming the violated condition.
CommandOutput cmd_quotient(const Algebra& a,
                           const std::vector<std::string>& ds_names);

/// All order-n QW algebras up to isomorphism, with search statistics.
CommandOutput cmd_search(int order, std::optional<std::uint64_t> limit);

}  // namespace qw
