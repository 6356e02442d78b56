#include "lieosc/suite.hpp"

#include "lieosc/error.hpp"
#include "lieosc/sampling.hpp"

namespace lieosc {

AlgebraContext make_context(Family family, int rank) {
  RepBundle rep = make_rep(family, rank);
  CompletionBasis comp = complete_basis(rep);
  StructureTensors st = structure_tensors(rep, comp);
  return {std::move(rep), std::move(comp), std::move(st)};
}

bool needs_cutoff(Family family) { return family == Family::C || family == Family::A; }

namespace {

std::string tag(const AlgebraContext& ctx) {
  return std::string(1, family_letter(ctx.rep.family)) + std::to_string(ctx.rep.rank);
}

}  // namespace

Report rep_checks(const AlgebraContext& ctx) {
  Report r;
  r.subject = "defining representation " + tag(ctx);
  r.merge(check_cartan_weyl(ctx.rep));
  r.merge(check_trace_transpose(ctx.rep));
  return r;
}

Report tensor_checks(const AlgebraContext& ctx) {
  Report r;
  r.subject = "invariant tensors " + tag(ctx);
  r.merge(verify_product_laws(ctx.rep, ctx.comp, ctx.st));
  r.merge(verify_completeness(ctx.rep, ctx.comp));
  r.merge(check_derived_reps(ctx.rep, ctx.st, derived_reps(ctx.st)));
  if (ctx.rep.family != Family::A) {
    r.merge(verify_identities(ctx.rep, ctx.comp, ctx.st));
    r.merge(check_v_tensor(ctx.rep, ctx.st));
  }
  return r;
}

Report oscillator_checks(const AlgebraContext& ctx, const OperatorRep& op) {
  Report r;
  r.subject = "oscillator representation " + tag(ctx);
  r.merge(check_commutators(op, ctx.st));
  r.merge(check_oscillator_structure(op, ctx.rep));
  if (ctx.rep.family == Family::D) {
    ChiralityBlocks cb = chirality_blocks(op);
    const std::size_t half = std::size_t{1} << (ctx.rep.rank - 1);
    r.expect("chirality-dimensions", "both chirality blocks have dimension 2^(n-1)",
             cb.even.size() == half && cb.odd.size() == half,
             std::to_string(cb.even.size()) + " + " + std::to_string(cb.odd.size()));
    Report even = check_commutators(cb.even_rep, ctx.st);
    Report odd = check_commutators(cb.odd_rep, ctx.st);
    even.checks.front().identity = "chirality-even-commutators";
    odd.checks.front().identity = "chirality-odd-commutators";
    r.merge(even);
    r.merge(odd);
  }
  return r;
}

Report quadratic_checks(const AlgebraContext& ctx, const OperatorRep& op) { return check_quadratic(ctx.rep, op); }

Report casimir_suite(const AlgebraContext& ctx, const OperatorRep& op) {
  Report r;
  r.subject = "casimir operators " + tag(ctx);
  LOperator L = build_L(ctx.rep, op);
  r.merge(casimir_checks(ctx.rep, op, ctx.st, L));
  r.merge(operator_product_laws(ctx.rep, op, ctx.st));
  return r;
}

Report spectrum_report(const AlgebraContext& ctx, const OperatorRep& op) {
  Report q = check_quadratic(ctx.rep, op);
  Report r;
  r.subject = "spectrum of L " + tag(ctx);
  r.parameters = q.parameters;
  for (const auto& c : q.checks)
    if (c.identity.rfind("eigen-structure", 0) == 0) r.checks.push_back(c);
  return r;
}

Report ybe_suite(const AlgebraContext& ctx, int samples, std::uint64_t seed) {
  Report r;
  r.subject = "Yang-Baxter equation " + tag(ctx);
  r.merge(check_r_algebra(ctx.rep));
  r.merge(check_ybe_samples(ctx.rep, samples, seed));
  return r;
}

Report rtt_suite(const AlgebraContext& ctx, const OperatorRep& op, int samples, std::uint64_t seed) {
  Report r;
  r.subject = "RTT relation " + tag(ctx);
  r.param("samples", std::to_string(samples));
  r.param("seed", std::to_string(seed));
  LOperator L = build_L(ctx.rep, op);
  const auto states = rtt_states(op);
  RationalSampler rng(seed);
  ResidualTally t;
  std::optional<std::size_t> cols;
  for (int s = 0; s < samples;) {
    Rational u = rng.next(), v = rng.next(), eta = rng.next_nonzero();
    Report one;
    try {
      one = check_rtt(ctx.rep, {L}, u, v, eta, states);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::Pole) continue;
      throw;
    }
    const auto& c = one.checks.front();
    t.add(c.max_residual, c.detail);
    cols = c.interior_columns;
    r.param("sample" + std::to_string(++s), c.detail);
  }
  t.commit(r, "rtt", "R12(u-v) T1(u) T2(v) = T2(v) T1(u) R12(u-v) at seeded samples").interior_columns = cols;
  return r;
}

Report verify_all(Family family, int rank, std::optional<int> cutoff, int samples, std::uint64_t seed) {
  AlgebraContext ctx = make_context(family, rank);
  Report r;
  r.subject = "verify-all " + tag(ctx);
  if (cutoff) r.param("cutoff", std::to_string(*cutoff));
  r.param("samples", std::to_string(samples));
  r.param("seed", std::to_string(seed));
  r.merge(rep_checks(ctx));
  r.merge(tensor_checks(ctx));
  if (family != Family::A) r.merge(check_duality());
  if (needs_cutoff(family) && !cutoff) fail(ErrorCode::InvalidArgument, "a cutoff is required for this family");
  OperatorRep op = oscillator_rep(ctx.rep, cutoff.value_or(0));
  r.merge(oscillator_checks(ctx, op));
  r.merge(quadratic_checks(ctx, op));
  r.merge(casimir_suite(ctx, op));
  r.merge(ybe_suite(ctx, samples, seed));
  r.merge(rtt_suite(ctx, op, samples, seed));
  return r;
}

}  // namespace lieosc
