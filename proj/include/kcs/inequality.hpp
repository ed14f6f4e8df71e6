#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "kcs/hodge.hpp"
#include "kcs/ring.hpp"

namespace kcs {

enum class Direction { cs, opposite };
enum class Relation { strictly_positive, zero, strictly_negative };
/// How a g = 0 case is classified. Boundary (nef) setups never classify.
enum class EqualityCase { none, proportional, non_proportional, uncharacterized };

const char* to_string(Direction d);
Direction direction_from_string(const std::string& s);
const char* to_string(Relation r);
const char* to_string(EqualityCase e);

/// g(alpha, omega; Omega_p) =
///   (int a abar Omega_p)(int omega^{2p} Omega_p) - (int a omega^p Omega_p)(int abar omega^p Omega_p).
/// Always real; throws std::logic_error if an imaginary part ever appears.
Rational compute_g_direct(const IntersectionRing& r, const ClassVector& alpha, const MixedSetup& setup);

struct GDecomposition {
  Rational value;               // volume * sum(terms)
  Rational volume;              // int omega^{2p} Omega_p
  std::vector<Rational> terms;  // terms[i-1] = int alpha_i abar_i omega^{2(p-i)} Omega_p
  DecompositionResult decomposition;
};

/// g through the mixed Lefschetz decomposition; strict setups only.
GDecomposition compute_g_decomposed(const IntersectionRing& r, const ClassVector& alpha, const MixedSetup& setup);

/// Exact rank test: rank of {alpha, omega^p} <= 1.
bool proportional_to_omega_power(const IntersectionRing& r, const ClassVector& alpha, const MixedSetup& setup);

struct CsVerdict {
  Direction direction = Direction::cs;
  Rational g_value;
  Relation relation = Relation::zero;
  bool satisfied = false;  // g >= 0 for cs, g <= 0 for opposite
  bool proportional = false;
  SetupMode mode = SetupMode::strict;
  EqualityCase equality = EqualityCase::none;
  std::optional<bool> odd_components_vanish;   // strict mode only
  std::optional<bool> even_components_vanish;  // strict mode only
};

CsVerdict check_cs(const IntersectionRing& r, const ClassVector& alpha, const MixedSetup& setup, Direction direction);

struct HodgeCondition {
  Direction kind = Direction::cs;
  bool holds = true;
  /// Index range i = first..last tested (empty when last < first).
  std::size_t first = 0;
  std::ptrdiff_t last = -1;
  std::vector<std::size_t> failing;
};

/// cs:       h^{2i,2i} = h^{2i+1,2i+1} for 0 <= i <= floor((p+1)/2) - 1.
/// opposite: h^{2i-1,2i-1} = h^{2i,2i} for 1 <= i <= floor(p/2); vacuous at p = 1.
HodgeCondition hodge_condition(const IntersectionRing& r, std::size_t p, Direction kind);

struct Counterexample {
  Direction direction = Direction::cs;
  std::size_t i0 = 0;
  std::size_t level = 0;  // 2 i0 + 1 for cs, 2 i0 for opposite
  ClassVector primitive;  // alpha(i0), primitive w.r.t. (omega, omega^{2(p-level)} Omega_p)
  ClassVector theta;      // omega^p + alpha(i0) ^ omega^{p-level}
  Rational g;
};

/// Returns nullopt when the Hodge condition for `kind` holds. Otherwise builds
/// theta from the first failing index; its g lies strictly on the wrong side
/// (checked, std::logic_error if not).
std::optional<Counterexample> construct_counterexample(const IntersectionRing& r, std::size_t p,
                                                       const MixedSetup& setup, Direction kind);

/// omega = omega_1 = ... = the first kahler-flagged generator.
MixedSetup canonical_setup(const IntersectionRing& r, std::size_t p, std::span<const ClassVector> generators);

struct VerifyOptions {
  std::int64_t height = 10;
  /// Every k-th sample (k-1, 2k-1, ...) is a random multiple of omega^p so the
  /// equality branch is exercised; 0 disables.
  std::size_t proportional_every = 10;
  /// Also compare against the decomposition route and check the sign law.
  bool two_route = true;
};

struct Violation {
  std::size_t index = 0;
  std::string reason;
  ClassVector alpha;
  Rational g;
};

struct SampleRecord {
  std::size_t index = 0;
  Rational g;
  Relation relation = Relation::zero;
  bool proportional = false;
};

struct TheoremReport {
  std::size_t p = 0;
  std::uint64_t seed = 0;
  HodgeCondition condition_cs;
  HodgeCondition condition_opp;
  std::size_t samples_tested = 0;
  std::size_t equalities = 0;
  std::size_t proportional_samples = 0;
  std::vector<SampleRecord> samples;
  std::vector<Violation> violations;
  std::vector<Counterexample> counterexamples;
};

/// Random alpha in H^{p,p} (complex at odd indices) against random strict
/// Kahler setups drawn from `generators`; sample k uses the (seed, k) stream.
TheoremReport verify_theorem(const IntersectionRing& r, std::span<const ClassVector> generators, std::size_t p,
                             std::size_t samples, std::uint64_t seed, const VerifyOptions& options = {});

struct KtRow {
  std::size_t k = 0;
  Rational middle;  // [d1^k d2^{n-k}]
  Rational lhs;     // middle^2
  Rational rhs;     // [d1^{k-1} d2^{n-k+1}] [d1^{k+1} d2^{n-k-1}]
  bool holds = false;
  bool strict = false;
};

struct KtReport {
  SetupMode mode = SetupMode::strict;
  bool proportional = false;
  std::vector<KtRow> rows;

  bool holds() const;
  bool strict_everywhere() const;
};

KtReport kt_chain(const IntersectionRing& r, const ClassVector& d1, const ClassVector& d2);

}  // namespace kcs
