#include "lieosc/lieosc.h"

#include <cstring>
#include <memory>
#include <new>
#include <string>

#include "lieosc/error.hpp"
#include "lieosc/export.hpp"
#include "lieosc/suite.hpp"

struct lieosc_algebra {
  std::shared_ptr<const lieosc::AlgebraContext> ctx;
};

struct lieosc_oscillator {
  std::shared_ptr<const lieosc::AlgebraContext> ctx;
  lieosc::OperatorRep op;
};

struct lieosc_report {
  lieosc::Report report;
};

namespace {

thread_local std::string g_last_error;

lieosc_status to_status(lieosc::ErrorCode code) {
  return static_cast<lieosc_status>(static_cast<int>(code));
}

// Runs f, translating exceptions into a status and the thread-local message.
template <typename F>
lieosc_status guarded(F&& f) {
  try {
    g_last_error.clear();
    f();
    return LIEOSC_OK;
  } catch (const lieosc::Error& e) {
    g_last_error = e.what();
    return to_status(e.code());
  } catch (const std::bad_alloc&) {
    g_last_error = "out of memory";
    return LIEOSC_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return LIEOSC_INTERNAL;
  }
}

void require(bool ok, const char* what) {
  if (!ok) lieosc::fail(lieosc::ErrorCode::InvalidArgument, what);
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

lieosc::Format format_of(lieosc_format f) {
  require(f == LIEOSC_JSON || f == LIEOSC_CSV, "unknown format");
  return f == LIEOSC_JSON ? lieosc::Format::Json : lieosc::Format::Csv;
}

lieosc::Rational rational_arg(const char* text, const char* name) {
  require(text != nullptr, name);
  return lieosc::Rational::parse(text);
}

lieosc_status make_report(lieosc_report** out, lieosc::Report r) {
  *out = new lieosc_report{std::move(r)};
  return LIEOSC_OK;
}

}  // namespace

extern "C" {

const char* lieosc_version(void) { return "1.0.0"; }

const char* lieosc_status_name(lieosc_status status) {
  switch (status) {
    case LIEOSC_OK: return "ok";
    case LIEOSC_INVALID_ARGUMENT: return "invalid-argument";
    case LIEOSC_INVALID_SCALAR: return "invalid-scalar";
    case LIEOSC_INVALID_RANK: return "invalid-rank";
    case LIEOSC_CUTOFF_TOO_SMALL: return "cutoff-too-small";
    case LIEOSC_FAMILY_MISMATCH: return "family-mismatch";
    case LIEOSC_DIMENSION_MISMATCH: return "dimension-mismatch";
    case LIEOSC_POLE: return "pole";
    case LIEOSC_CONSISTENCY: return "consistency";
    case LIEOSC_IO: return "io";
    case LIEOSC_INTERNAL: return "internal";
  }
  return "unknown";
}

const char* lieosc_last_error(void) { return g_last_error.c_str(); }

void lieosc_string_free(char* s) { std::free(s); }

lieosc_status lieosc_algebra_create(char family, int rank, lieosc_algebra** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    auto f = lieosc::parse_family(std::string(1, family));
    auto ctx = std::make_shared<const lieosc::AlgebraContext>(lieosc::make_context(f, rank));
    *out = new lieosc_algebra{std::move(ctx)};
  });
}

void lieosc_algebra_free(lieosc_algebra* alg) { delete alg; }

lieosc_status lieosc_algebra_info(const lieosc_algebra* alg, int* dim_v, int* dim_g, int* dim_y) {
  return guarded([&] {
    require(alg != nullptr, "null algebra handle");
    if (dim_v) *dim_v = alg->ctx->rep.dim_v;
    if (dim_g) *dim_g = alg->ctx->rep.dim_g();
    if (dim_y) *dim_y = static_cast<int>(alg->ctx->comp.count());
  });
}

int lieosc_algebra_needs_cutoff(const lieosc_algebra* alg) {
  return alg != nullptr && lieosc::needs_cutoff(alg->ctx->rep.family) ? 1 : 0;
}

lieosc_status lieosc_algebra_export(const lieosc_algebra* alg, lieosc_format format, char** out) {
  return guarded([&] {
    require(alg != nullptr && out != nullptr, "null argument");
    *out = dup_string(lieosc::export_rep(alg->ctx->rep, format_of(format)));
  });
}

lieosc_status lieosc_tensor_export(const lieosc_algebra* alg, const char* tensor, lieosc_format format, char** out) {
  return guarded([&] {
    require(alg != nullptr && tensor != nullptr && out != nullptr, "null argument");
    const auto& ctx = *alg->ctx;
    const bool su = ctx.rep.family == lieosc::Family::A;
    const std::string name = tensor;
    const lieosc::Format f = format_of(format);
    std::string text;
    if (name == "c") {
      text = lieosc::export_tensor(ctx.st.c, f);
    } else if (name == "d") {
      text = lieosc::export_tensor(su ? ctx.st.d_xxx : ctx.st.d_xy, f);
    } else if (name == "h" || name == "dyyy" || name == "v") {
      if (su) lieosc::fail(lieosc::ErrorCode::FamilyMismatch, "tensor '" + name + "' needs the completion basis");
      if (name == "h") text = lieosc::export_tensor(ctx.st.h, f);
      if (name == "dyyy") text = lieosc::export_tensor(ctx.st.d_yyy, f);
      if (name == "v") text = lieosc::export_tensor(lieosc::v_tensor_trace(ctx.rep), f);
    } else {
      lieosc::fail(lieosc::ErrorCode::InvalidArgument, "unknown tensor '" + name + "' (c, d, h, dyyy, v)");
    }
    *out = dup_string(text);
  });
}

lieosc_status lieosc_oscillator_create(const lieosc_algebra* alg, int cutoff, lieosc_oscillator** out) {
  return guarded([&] {
    require(alg != nullptr && out != nullptr, "null argument");
    *out = new lieosc_oscillator{alg->ctx, lieosc::oscillator_rep(alg->ctx->rep, cutoff)};
  });
}

void lieosc_oscillator_free(lieosc_oscillator* osc) { delete osc; }

lieosc_status lieosc_oscillator_dim(const lieosc_oscillator* osc, size_t* dim) {
  return guarded([&] {
    require(osc != nullptr && dim != nullptr, "null argument");
    *dim = osc->op.dim();
  });
}

lieosc_status lieosc_oscillator_export(const lieosc_oscillator* osc, lieosc_format format, char** out) {
  return guarded([&] {
    require(osc != nullptr && out != nullptr, "null argument");
    *out = dup_string(lieosc::export_oscillator(osc->op, osc->ctx->rep, format_of(format)));
  });
}

lieosc_status lieosc_check_algebra(const lieosc_algebra* alg, lieosc_report** out) {
  return guarded([&] {
    require(alg != nullptr && out != nullptr, "null argument");
    lieosc::Report r;
    r.subject = "algebra " + std::string(1, lieosc::family_letter(alg->ctx->rep.family)) +
                std::to_string(alg->ctx->rep.rank);
    r.merge(lieosc::rep_checks(*alg->ctx));
    r.merge(lieosc::tensor_checks(*alg->ctx));
    if (alg->ctx->rep.family != lieosc::Family::A) r.merge(lieosc::check_duality());
    make_report(out, std::move(r));
  });
}

lieosc_status lieosc_check_oscillator(const lieosc_oscillator* osc, lieosc_report** out) {
  return guarded([&] {
    require(osc != nullptr && out != nullptr, "null argument");
    make_report(out, lieosc::oscillator_checks(*osc->ctx, osc->op));
  });
}

lieosc_status lieosc_check_quadratic(const lieosc_oscillator* osc, lieosc_report** out) {
  return guarded([&] {
    require(osc != nullptr && out != nullptr, "null argument");
    make_report(out, lieosc::quadratic_checks(*osc->ctx, osc->op));
  });
}

lieosc_status lieosc_check_casimir(const lieosc_oscillator* osc, lieosc_report** out) {
  return guarded([&] {
    require(osc != nullptr && out != nullptr, "null argument");
    make_report(out, lieosc::casimir_suite(*osc->ctx, osc->op));
  });
}

lieosc_status lieosc_spectrum(const lieosc_oscillator* osc, lieosc_report** out) {
  return guarded([&] {
    require(osc != nullptr && out != nullptr, "null argument");
    make_report(out, lieosc::spectrum_report(*osc->ctx, osc->op));
  });
}

lieosc_status lieosc_check_ybe(const lieosc_algebra* alg, int samples, uint64_t seed, lieosc_report** out) {
  return guarded([&] {
    require(alg != nullptr && out != nullptr, "null argument");
    require(samples > 0, "samples must be positive");
    make_report(out, lieosc::ybe_suite(*alg->ctx, samples, seed));
  });
}

lieosc_status lieosc_check_ybe_at(const lieosc_algebra* alg, const char* u, const char* v, const char* eta,
                                  lieosc_report** out) {
  return guarded([&] {
    require(alg != nullptr && out != nullptr, "null argument");
    make_report(out, lieosc::check_ybe(alg->ctx->rep, rational_arg(u, "missing u"), rational_arg(v, "missing v"),
                                       rational_arg(eta, "missing eta")));
  });
}

lieosc_status lieosc_check_rtt(const lieosc_oscillator* osc, const char* u, const char* v, const char* eta, int sites,
                               lieosc_report** out) {
  return guarded([&] {
    require(osc != nullptr && out != nullptr, "null argument");
    require(sites >= 1 && sites <= 3, "sites must be between 1 and 3");
    lieosc::LOperator L = lieosc::build_L(osc->ctx->rep, osc->op);
    std::vector<lieosc::LOperator> chain(static_cast<std::size_t>(sites), L);
    make_report(out, lieosc::check_rtt(osc->ctx->rep, chain, rational_arg(u, "missing u"), rational_arg(v, "missing v"),
                                       rational_arg(eta, "missing eta"), lieosc::chain_states(osc->op, sites)));
  });
}

lieosc_status lieosc_verify_all(char family, int rank, int cutoff, int samples, uint64_t seed, lieosc_report** out) {
  return guarded([&] {
    require(out != nullptr, "null output handle");
    require(samples > 0, "samples must be positive");
    auto f = lieosc::parse_family(std::string(1, family));
    std::optional<int> c;
    if (cutoff > 0) c = cutoff;
    make_report(out, lieosc::verify_all(f, rank, c, samples, seed));
  });
}

int lieosc_report_passed(const lieosc_report* report) { return report != nullptr && report->report.passed() ? 1 : 0; }

size_t lieosc_report_count(const lieosc_report* report) { return report ? report->report.checks.size() : 0; }

lieosc_status lieosc_report_export(const lieosc_report* report, lieosc_format format, char** out) {
  return guarded([&] {
    require(report != nullptr && out != nullptr, "null argument");
    *out = dup_string(lieosc::export_report(report->report, format_of(format)));
  });
}

void lieosc_report_free(lieosc_report* report) { delete report; }

}  // extern "C"
