#pragma once

#include <cstdint>
#include <optional>

#include "lieosc/rtt.hpp"

namespace lieosc {

/// Defining representation with its completion and invariant tensors.
struct AlgebraContext {
  RepBundle rep;
  CompletionBasis comp;
  StructureTensors st;
};

/// Family A takes the Gell-Mann basis of su(rank + 1).
AlgebraContext make_context(Family family, int rank);

/// True when the oscillator representation of the family is a truncated
/// bosonic one (C and A) and therefore needs a cutoff.
bool needs_cutoff(Family family);

/// Cartan-Weyl relations and trace/transpose rules.
Report rep_checks(const AlgebraContext& ctx);
/// Product laws, completeness, identity suite, derived reps and the v tensor.
Report tensor_checks(const AlgebraContext& ctx);
/// Commutators, hermiticity, n_+ and parity structure; chirality blocks for D.
Report oscillator_checks(const AlgebraContext& ctx, const OperatorRep& op);
/// Quadratic relation with closed form and eigen structure.
Report quadratic_checks(const AlgebraContext& ctx, const OperatorRep& op);
/// Casimir operators and operator product laws.
Report casimir_suite(const AlgebraContext& ctx, const OperatorRep& op);
/// Eigen structure of L on every invariant block.
Report spectrum_report(const AlgebraContext& ctx, const OperatorRep& op);
/// R-matrix algebra and YBE at seeded samples.
Report ybe_suite(const AlgebraContext& ctx, int samples, std::uint64_t seed);
/// RTT at seeded parameter triples, one site.
Report rtt_suite(const AlgebraContext& ctx, const OperatorRep& op, int samples, std::uint64_t seed);

/// Everything above for one algebra. The cutoff is ignored for B and D.
Report verify_all(Family family, int rank, std::optional<int> cutoff, int samples, std::uint64_t seed);

}  // namespace lieosc
