#include "hilbworst/hilbworst.h"

#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <sstream>
#include <string>

#include "core/based_algebra.hpp"
#include "core/classical.hpp"
#include "core/errors.hpp"
#include "core/gamma_ideal.hpp"
#include "core/linear_geometry.hpp"
#include "core/serialize.hpp"
#include "core/verify.hpp"

using namespace hilbworst;

struct hw_ideal {
  IdealPresentation presentation;
  std::unique_ptr<IdealMembership> membership;
};

struct hw_report {
  VerifyReport report;
};

namespace {

thread_local std::string last_error;

hw_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument: return HW_ERR_INVALID_ARGUMENT;
    case ErrorCode::IndexOutOfRange: return HW_ERR_INDEX_OUT_OF_RANGE;
    case ErrorCode::UniverseMismatch: return HW_ERR_UNIVERSE_MISMATCH;
    case ErrorCode::UnsupportedDegree: return HW_ERR_UNSUPPORTED_DEGREE;
    case ErrorCode::MalformedTable: return HW_ERR_MALFORMED_TABLE;
    case ErrorCode::BasisCriterionFailure: return HW_ERR_BASIS_CRITERION;
    case ErrorCode::Parse: return HW_ERR_PARSE;
    case ErrorCode::CertificateNotFound: return HW_ERR_CERTIFICATE_NOT_FOUND;
  }
  return HW_ERR_INTERNAL;
}

template <class F>
hw_status guarded(F&& f) {
  last_error.clear();
  try {
    f();
    return HW_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  } catch (...) {
    last_error = "unknown failure";
  }
  return HW_ERR_INTERNAL;
}

hw_status null_arg(const char* what) {
  last_error = std::string("null argument: ") + what;
  return HW_ERR_NULL_ARGUMENT;
}

char* dup_string(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (!p) throw std::bad_alloc();
  std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

Flavor flavor_of(const char* f) { return f ? parse_flavor(f) : Flavor::Hilbert; }

TextFormat text_format(hw_format f) { return f == HW_FORMAT_CAS ? TextFormat::Cas : TextFormat::Canonical; }

void check_format(hw_format f) {
  if (f != HW_FORMAT_JSON && f != HW_FORMAT_TEXT && f != HW_FORMAT_CAS)
    fail(ErrorCode::InvalidArgument, "unknown output format " + std::to_string(static_cast<int>(f)));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

extern "C" {

const char* hw_version(void) { return "1.0.0"; }

const char* hw_last_error(void) { return last_error.c_str(); }

void hw_string_free(char* s) { std::free(s); }

hw_status hw_ideal_create(int n, const char* flavor, const char* presentation, hw_ideal** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    Flavor fl = flavor_of(flavor);
    std::string pres = presentation ? presentation : "main";
    auto h = std::make_unique<hw_ideal>();
    if (pres == "alternate") {
      if (fl != Flavor::Hilbert) fail(ErrorCode::InvalidArgument, "the alternate presentation exists for the hilbert flavor only");
      h->presentation = alternate_generators(n);
    } else if (pres == "main") {
      h->presentation = fl == Flavor::BasedAlgebra ? b_ideal_generators(n) : ideal_generators(n, fl);
    } else {
      fail(ErrorCode::InvalidArgument, "unknown presentation '" + pres + "' (expected main or alternate)");
    }
    *out = h.release();
  });
}

void hw_ideal_free(hw_ideal* ideal) { delete ideal; }

hw_status hw_ideal_count(const hw_ideal* ideal, size_t* out) {
  if (!ideal) return null_arg("ideal");
  if (!out) return null_arg("out");
  *out = ideal->presentation.generators.size();
  return HW_OK;
}

hw_status hw_ideal_generator(const hw_ideal* ideal, size_t index, hw_format format, char** out) {
  if (!ideal) return null_arg("ideal");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    const auto& gens = ideal->presentation.generators;
    if (index >= gens.size()) fail(ErrorCode::IndexOutOfRange, "generator index " + std::to_string(index) + " out of range");
    *out = dup_string(gens[index].to_string(format == HW_FORMAT_CAS));
  });
}

hw_status hw_ideal_render(const hw_ideal* ideal, hw_format format, char** out) {
  if (!ideal) return null_arg("ideal");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    const auto& p = ideal->presentation;
    *out = dup_string(format == HW_FORMAT_JSON ? dump(to_json(p)) : to_text(p, text_format(format)));
  });
}

hw_status hw_ideal_contains(const hw_ideal* ideal, const char* poly, int* is_member, char** certificate) {
  if (!ideal) return null_arg("ideal");
  if (!poly) return null_arg("poly");
  if (!is_member) return null_arg("is_member");
  if (certificate) *certificate = nullptr;
  return guarded([&] {
    hw_ideal* self = const_cast<hw_ideal*>(ideal);
    if (self->presentation.flavor == Flavor::BasedAlgebra)
      fail(ErrorCode::InvalidArgument, "membership is decided for ideals in the t-variables");
    if (!self->membership) self->membership = std::make_unique<IdealMembership>(self->presentation);
    auto res = self->membership->membership(parse_poly(poly, self->presentation.n));
    *is_member = res.member ? 1 : 0;
    if (certificate && res.certificate) {
      Json arr = Json::array();
      for (const auto& [g, mult] : res.certificate->terms) arr.push_back({g, mult.to_string()});
      *certificate = dup_string(arr.dump());
    }
  });
}

hw_status hw_family_render(int n, const char* flavor, hw_format format, char** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    Family f = universal_family(n, flavor_of(flavor));
    *out = dup_string(format == HW_FORMAT_JSON ? dump(to_json(f)) : to_text(f, text_format(format)));
  });
}

hw_status hw_export_render(int n, const char* flavor, hw_format format, char** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    Flavor fl = flavor_of(flavor);
    IdealPresentation J = ideal_generators(n, fl);
    Family f = universal_family(n, fl);
    if (format == HW_FORMAT_JSON) {
      Json j;
      j["schema"] = kSchema;
      j["kind"] = "export";
      j["ideal"] = to_json(J);
      j["family"] = to_json(f);
      *out = dup_string(dump(j));
    } else {
      std::ostringstream os;
      os << "# ideal J, n=" << n << ", flavor " << to_string(fl) << ", " << J.generators.size() << " generators\n"
         << to_text(J, text_format(format)) << "# universal family\n"
         << to_text(f, text_format(format));
      *out = dup_string(os.str());
    }
  });
}

hw_status hw_verify(int n, const char* flavor, const char* routes, uint64_t seed, size_t samples, hw_report** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    VerifyOptions opts;
    opts.n = n;
    opts.flavor = flavor_of(flavor);
    opts.routes = parse_routes(routes ? routes : "all");
    opts.seed = seed;
    opts.samples = samples;
    auto h = std::make_unique<hw_report>();
    h->report = verify(opts);
    *out = h.release();
  });
}

void hw_report_free(hw_report* report) { delete report; }

hw_status hw_report_passed(const hw_report* report, int* passed) {
  if (!report) return null_arg("report");
  if (!passed) return null_arg("passed");
  *passed = report->report.ok() ? 1 : 0;
  return HW_OK;
}

hw_status hw_report_render(const hw_report* report, hw_format format, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    *out = dup_string(format == HW_FORMAT_JSON ? dump(to_json(report->report)) : to_text(report->report));
  });
}

hw_status hw_report_first_failure(const hw_report* report, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    const auto* f = report->report.first_failure();
    *out = dup_string(f ? f->route + "/" + f->check + ": " + f->generator + " (residual " + f->residual + ")" : "");
  });
}

hw_status hw_report_sample_lines(const hw_report* report, char** out) {
  if (!report) return null_arg("report");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    std::string lines;
    for (const auto& s : report->report.oracle_samples) lines += to_json(s, report->report.options.n).dump() + "\n";
    *out = dup_string(lines);
  });
}

hw_status hw_subspaces_render(int n, size_t list_cap, hw_format format, char** out) {
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    SubspaceSummary s = subspace_summary(n);
    auto optimal = list_cap ? enumerate_optimal(n, list_cap) : std::vector<LinearSubspaceSpec>{};
    *out = dup_string(format == HW_FORMAT_JSON ? dump(to_json(s, optimal)) : to_text(s, optimal));
  });
}

hw_status hw_table_render(const char* tvals_json, hw_format format, int* associative, char** out) {
  if (!tvals_json) return null_arg("tvals_json");
  if (!out) return null_arg("out");
  *out = nullptr;
  return guarded([&] {
    check_format(format);
    auto [n, tvals] = parse_tvals(tvals_json);
    MulTable T = table_from_point(tvals, n);
    auto residuals = associativity_residual(T);
    Json j = table_json(T, residuals);
    if (associative) *associative = j["associative"].get<bool>() ? 1 : 0;
    if (format == HW_FORMAT_JSON) {
      *out = dup_string(dump(j));
      return;
    }
    std::ostringstream os;
    os << "table of the family at the given point, n=" << n << "\n";
    for (int i = 0; i <= n; ++i)
      for (int k = i; k <= n; ++k) {
        os << "v" << i << "*v" << k << " =";
        bool any = false;
        for (int l = 0; l <= n; ++l) {
          if (T.at(i, k, l) == 0) continue;
          os << (any ? " + " : " ") << "(" << to_string(T.at(i, k, l)) << ")*v" << l;
          any = true;
        }
        os << (any ? "\n" : " 0\n");
      }
    os << (j["associative"].get<bool>() ? "associative" : "not associative") << "\n";
    for (const auto& r : j["residuals"]) os << "residual " << r["triple"].dump() << ": " << r["residual"].dump() << "\n";
    *out = dup_string(os.str());
  });
}

}  // extern "C"
