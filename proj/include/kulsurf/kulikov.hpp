#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "kulsurf/blowup_pic.hpp"
#include "kulsurf/intersection.hpp"
#include "kulsurf/multipoly.hpp"
#include "kulsurf/plane_curves.hpp"
#include "kulsurf/projective.hpp"
#include "kulsurf/rational.hpp"

namespace kulsurf {

/// A two-dimensional linear system of conics: three linearly independent
/// quadratic forms in X1, X2, X3, spanning the system.
class NetOfConics {
  public:
    /// Throws std::invalid_argument unless all three inputs are quadratic
    /// forms in three variables with linearly independent coefficient
    /// vectors.
    NetOfConics(const MultiPoly& q1, const MultiPoly& q2, const MultiPoly& q3);

    /// Spanning member i (0-based). Throws std::out_of_range.
    const MultiPoly& member(int i) const;
    const std::array<MultiPoly, 3>& members() const { return q_; }

    /// lambda[0]*q1 + lambda[1]*q2 + lambda[2]*q3.
    MultiPoly combination(const std::array<Int, 3>& lambda) const;

  private:
    std::array<MultiPoly, 3> q_;
};

/// The net spanned by q_i = 3*Xi^2 - X1*X2 - X1*X3 - X2*X3, i = 1, 2, 3.
/// Its members are exactly the conics through (1:1:1) invariant under the
/// coordinate permutations fixing their index pattern, and its induced map
/// to the plane is the degree-three cover under study.
NetOfConics standard_net();

/// The nodal cubic X1^2*X2 + X1^2*X3 + X2^2*X1 + X2^2*X3 + X3^2*X1 +
/// X3^2*X2 - 6*X1*X2*X3: the curve over which the map induced by the
/// standard net ramifies.
MultiPoly ramification_cubic_form();

/// Outcome of checking that the jacobian determinant of the three spanning
/// members is a nonzero constant multiple of a given cubic.
struct RamificationIdentity {
    MultiPoly jacobian;  // determinant of the matrix of partial derivatives
    Rat scale{0};        // jacobian == scale * reference cubic when holds
    bool holds = false;
};

/// Verifies that the ramification locus of the net's plane-to-plane map is
/// cut out by `cubic` (second overload) or by ramification_cubic_form()
/// (first overload): the jacobian determinant of the spanning members must
/// equal a nonzero constant times the cubic. Throws std::domain_error when
/// the jacobian vanishes identically, and std::invalid_argument when the
/// reference cubic is zero.
RamificationIdentity verify_ramification_cubic(const NetOfConics& net);
RamificationIdentity verify_ramification_cubic(const NetOfConics& net, const MultiPoly& cubic);

/// Common zeros of the three spanning members, certified finite and fully
/// rational; see certified_rational_zero_set. Sorted ascending.
std::vector<ProjPoint> base_locus(const NetOfConics& net);

/// Names the two affine charts of the plane blown up at (1:1:1).
enum class ChartId { U, V };

/// One blow-up chart, presented through its composition with the blow-down:
/// the three plane coordinates as polynomials in the two chart coordinates
/// (u, v). The exceptional curve is cut out by `exceptional`, which is the
/// coordinate u on chart U and v on chart V.
struct ChartMap {
    ChartId chart_id = ChartId::U;
    std::vector<MultiPoly> substitution;  // size three: the plane coordinates
    MultiPoly exceptional;
};

/// Chart U maps (u, v) to (1 + u, 1 + u*v, 1); chart V maps (u, v) to
/// (1 + u*v, 1 + v, 1). Together they cover a neighbourhood of the
/// exceptional curve. The integer overload accepts 0 for U and 1 for V and
/// throws std::invalid_argument for other values.
ChartMap blowup_chart(ChartId id);
ChartMap blowup_chart(int chart);

/// Components of the net's map composed with the blow-down, in the given
/// chart, with one power of the exceptional equation divided out of each:
/// the coordinates of the lifted map, regular across the exceptional curve.
/// Throws std::domain_error unless every member pulls back with exceptional
/// valuation exactly one and the three components have no common zero on
/// the exceptional curve; throws std::invalid_argument when the chart is
/// malformed.
std::array<MultiPoly, 3> chart_composite_map(const ChartMap& chart, const NetOfConics& net);

/// Factorization certificate for the jacobian of the lifted map in one
/// chart: the cleared jacobian of the two affine ratios equals
/// (unit component) * scale * (strict transform of the ramification cubic),
/// with no power of the exceptional equation left over. A zero exceptional
/// exponent combined with a matching residual certifies that the lifted map
/// is unramified along the exceptional curve away from the strict transform.
struct ChartFactorization {
    ChartId chart_id = ChartId::U;
    int unit_index = 0;              // component nonzero at the chart origin
    int exceptional_exponent = 0;    // power of the exceptional equation in the jacobian
    int ramification_strict_order = 0;  // exceptional valuation of the pulled-back cubic
    Rat scale{0};                    // jacobian / unit == scale * strict transform
    bool residual_matches = false;
    std::array<MultiPoly, 3> composite;
};

/// Verifies the factorization against `cubic` (second overload) or against
/// ramification_cubic_form() (first overload). Throws std::domain_error
/// when no component is nonzero at the chart origin, std::invalid_argument
/// when the cubic is zero or does not vanish at the blown-up point. A
/// residual with extra factors fails the certificate instead of throwing.
ChartFactorization chart_jacobian_factorization(const ChartMap& chart, const NetOfConics& net);
ChartFactorization chart_jacobian_factorization(const ChartMap& chart, const NetOfConics& net,
                                                const MultiPoly& cubic);

/// Position certificate for one member conic of the net relative to the
/// branch cubic (the primitive part of the net's jacobian determinant).
struct ConicGenericity {
    std::array<Int, 3> lambda{Int(0), Int(0), Int(0)};
    MultiPoly form;                      // the candidate conic
    bool smooth_conic = false;           // irreducible, equivalently smooth
    bool through_base_point = false;     // passes through the net's base point
    bool transversal_to_branch = false;  // meets the branch cubic in the base
                                         // point doubly and four simple points
    bool avoids_node_directions = false;  // its tangent at the base point is
                                          // neither branch of the node
    bool in_net = false;                 // a nonzero multiple of the lambda
                                         // combination
    IntersectionCycle branch_cycle;      // full cycle against the branch cubic

    bool all() const {
        return smooth_conic && through_base_point && transversal_to_branch &&
               avoids_node_directions && in_net;
    }
};

/// Evaluates all five conditions for the given curve. The witness
/// combination lambda is recovered by solving the linear system over the
/// net's coefficient matrix (primitive integers, positive multiple); when
/// the curve is not a member, in_net fails and lambda stays zero. The base
/// point is located via base_locus, so the net must have a single rational
/// base point (std::domain_error otherwise, as for a degenerate net).
ConicGenericity conic_genericity_certificate(const PlaneCurve& conic, const NetOfConics& net);

/// Same conditions for an explicit candidate form, witness combination, and
/// base point. Throws std::domain_error when the net's jacobian vanishes
/// identically; a merely degenerate candidate yields failed flags, not an
/// exception.
ConicGenericity conic_genericity_certificate(const NetOfConics& net, const MultiPoly& conic,
                                             const std::array<Int, 3>& lambda,
                                             const ProjPoint& base_point);

/// A member conic passing the full genericity certificate, with the number
/// of candidates tried before success. `curve` is the normalized curve of
/// `certificate.form` (integer-primitive, positive leading coefficient).
struct GenericConicChoice {
    std::array<Int, 3> lambda{Int(0), Int(0), Int(0)};
    PlaneCurve curve;
    ConicGenericity certificate;
    int attempts = 0;
};

/// Draws integer combinations with |lambda_i| <= 20 from the seeded stream
/// until one passes conic_genericity_certificate, trying at most 1000
/// candidates. Throws std::runtime_error when none passes, and
/// std::domain_error when the net's base locus is not a single rational
/// point.
GenericConicChoice pick_generic_conic(const NetOfConics& net, std::uint64_t seed);

/// Fiber of the net's plane-to-plane map over one target point, computed as
/// the intersection of two independent pencil members through the target,
/// with the net's base point (always a spurious solution of multiplicity
/// one) removed. The multiplicity pattern lists one entry per fiber point
/// over the closure, descending; its sum is always three.
struct FiberReport {
    ProjPoint target{Int(0), Int(0), Int(1)};
    std::vector<RationalIntersectionPoint> rational_points;
    std::vector<ConjugatePointClass> conjugate_classes;
    std::vector<int> multiplicity_pattern;
    int distinct_points = 0;
    bool base_point_removed = false;
    bool on_branch_image = false;  // fewer than three distinct points
};

/// Throws std::domain_error when the fiber is not finite, when the base
/// point fails to appear simply, or when the pencil members degenerate.
/// Every rational fiber point is cross-checked against the branch cubic:
/// multiplicity at least two must coincide with branch membership.
FiberReport fiber(const NetOfConics& net, const ProjPoint& target);

/// One sampled source point with its fiber diagnosis. `branch_consistent`
/// records that among the rational fiber members, multiplicity at least two
/// occurs exactly for points on the branch cubic.
struct CensusSample {
    ProjPoint source{Int(0), Int(0), Int(1)};
    ProjPoint target{Int(0), Int(0), Int(1)};
    std::vector<int> pattern;
    bool source_in_fiber = false;
    bool all_simple = false;
    bool branch_consistent = false;

    bool ok() const { return source_in_fiber && all_simple && branch_consistent; }
};

/// Empirical degree check: every sample off the removed locus must sit in a
/// fiber of three simple points, one of them the sample itself.
struct CensusReport {
    std::uint64_t seed = 0;
    int requested = 0;
    std::vector<CensusSample> samples;
    std::map<std::string, int> pattern_histogram;  // e.g. "1+1+1" -> count
    std::map<int, int> distinct_histogram;         // distinct-point count -> count;
                                                   // 0 marks a failed fiber
    int failures = 0;                              // samples with !ok()
};

/// Samples `n_samples` rational points of height at most 100, skipping the
/// base point and points on the branch cubic or on the chosen generic
/// conic, and verifies each fiber. Sample i draws from sample_rng(seed, i),
/// so reports are reproducible and samples independent. Failures are
/// recorded in the report, never thrown.
CensusReport degree_census(const NetOfConics& net, int n_samples, std::uint64_t seed);

/// One named verification step with human-readable witness values.
struct CheckResult {
    std::string name;
    bool passed = false;
    std::map<std::string, std::string> details;
};

/// Complete verification transcript of the construction: the standard net
/// induces a degree-three cover of the plane, ramified exactly over the
/// nodal cubic, whose restriction over the complement of the branch curve
/// is unramified even across the blown-up base point; removing the strict
/// transforms of the cubic and a generic member conic then leaves an affine
/// surface with trivial divisor class group.
struct KulikovCertificate {
    std::uint64_t seed = 0;
    int n_samples = 0;
    std::vector<CheckResult> checks;
    ClassificationReport classification;
    bool passed = false;  // conjunction of all checks

    /// Pointer into `checks`, or nullptr when absent.
    const CheckResult* find(const std::string& name) const;
};

/// Runs every check of the construction in order and returns the
/// transcript. Deterministic for fixed (seed, n_samples).
KulikovCertificate verify_all(std::uint64_t seed, int n_samples);

}  // namespace kulsurf
