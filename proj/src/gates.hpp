#pragma once

namespace qw {

/// Resource gates for the exhaustive enumerations. Above a gate the
/// corresponding enumeration refuses (InputError) instead of hanging.
/// Setting the environment variable QW_GATE_OVERRIDE to an integer raises
/// all three gates to that value.
struct Gates {
  int subset_enumeration = 24;   // max carrier size for filter/DS enumeration
  int partition_enumeration = 8; // max carrier size for congruence enumeration
  int search_order = 8;          // max order for the QW model search
};

Gates active_gates();

}  // namespace qw
