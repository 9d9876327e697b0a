#pragma once

#include <string>

#include "kulsurf/blowup_pic.hpp"
#include "kulsurf/intersection.hpp"
#include "kulsurf/kulikov.hpp"

namespace kulsurf {

/// Version string embedded in every serialized certificate.
std::string tool_version();

/// The serializers below emit canonical JSON: two-space indentation, object
/// keys sorted, a trailing newline, and no floating-point tokens — every
/// number is an integer (arbitrary-precision values that exceed 64 bits are
/// emitted as decimal strings). Equal inputs produce byte-identical text.

/// {"affine", "determinant", "factorial", "picard_invariants",
///  "self_intersection_sum", "spec": {"d1", "d2", "m1", "m2"}}.
std::string classification_json(const ClassificationReport& report);

/// {"conjugate_classes", "distinct_points", "rational_points", "shear",
///  "total_multiplicity"}; points appear as "(a:b:c)" strings.
std::string cycle_json(const IntersectionCycle& cycle);

/// {"failures", "histogram" (distinct-point count, as string keys, to
///  sample count), "pattern_histogram", "requested", "samples", "seed"}.
std::string census_json(const CensusReport& report);

/// Full report envelope of a verification run: {"checks" (in execution
/// order, each {"name", "status": "pass"/"fail", "witness"}),
/// "classification", "command", "inputs_echo", "passed", "samples", "seed",
/// "tool_version"}.
std::string certificate_json(const KulikovCertificate& certificate, const std::string& command,
                             const std::string& inputs_echo);

}  // namespace kulsurf
