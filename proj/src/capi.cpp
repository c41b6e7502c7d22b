// extern "C" surface of the shared library: exception -> status mapping,
// opaque handle plumbing, and the job runner entry point.

#include "fatpoints.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <limits>
#include <string>
#include <vector>

#include "divisor.hpp"
#include "jobs.hpp"
#include "oracle.hpp"
#include "positivity.hpp"
#include "secant.hpp"

using namespace fatpoints;

struct fp_divisor {
  DivisorClass value;
};

namespace {

thread_local std::string g_last_error;

fp_status status_of(const error& e) {
  switch (e.kind()) {
    case errc::invalid_argument: return FP_ERR_INVALID;
    case errc::out_of_range: return FP_ERR_RANGE;
    case errc::internal: return FP_ERR_INTERNAL;
  }
  return FP_ERR_INTERNAL;
}

template <typename Fn>
fp_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    return fn();
  } catch (const error& e) {
    g_last_error = e.what();
    return status_of(e);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return FP_ERR_INTERNAL;
  }
}

fp_status copy_to_ll(const Int& v, long long* out) {
  if (v < std::numeric_limits<long long>::min() || v > std::numeric_limits<long long>::max()) {
    g_last_error = "value does not fit in long long";
    return FP_ERR_INVALID;
  }
  *out = v.convert_to<long long>();
  return FP_OK;
}

std::vector<int> index_set_from(const int* I, int len) {
  require(len >= 0 && (I != nullptr || len == 0), errc::invalid_argument,
          "bad index buffer");
  return std::vector<int>(I, I + len);
}

fp_status run_gg(const GGVerdict& v, fp_gg_status* verdict, int* witness, int witness_cap,
                 int* witness_len) {
  if (verdict == nullptr) {
    g_last_error = "verdict output is required";
    return FP_ERR_INVALID;
  }
  *verdict = v.status == GGStatus::GloballyGenerated    ? FP_GG_GENERATED
             : v.status == GGStatus::NotGloballyGenerated ? FP_GG_NOT_GENERATED
                                                           : FP_GG_OUT_OF_RANGE;
  if (witness_len) *witness_len = 0;
  if (v.witness && witness && witness_cap > 0) {
    const int len = std::min<int>(witness_cap, (int)v.witness->size());
    std::memcpy(witness, v.witness->data(), sizeof(int) * (std::size_t)len);
    if (witness_len) *witness_len = len;
  } else if (v.witness && witness_len) {
    *witness_len = (int)v.witness->size();
  }
  return v.status == GGStatus::GloballyGenerated ? FP_OK
         : v.status == GGStatus::NotGloballyGenerated ? FP_NEGATIVE
                                                      : FP_ERR_RANGE;
}

}  // namespace

extern "C" {

const char* fp_version(void) { return "fatpoints 1.0.0"; }

const char* fp_last_error(void) { return g_last_error.c_str(); }

fp_status fp_divisor_create(int n, long long d, const long long* mults, int s,
                            fp_divisor** out) {
  return guarded([&]() {
    require(out != nullptr, errc::invalid_argument, "output handle is required");
    require(mults != nullptr && s >= 1, errc::invalid_argument, "need at least one multiplicity");
    std::vector<Int> m(mults, mults + s);
    *out = new fp_divisor{DivisorClass(n, Int(d), std::move(m))};
    return FP_OK;
  });
}

void fp_divisor_destroy(fp_divisor* divisor) { delete divisor; }

fp_status fp_linear_multiplicity(const fp_divisor* divisor, const int* I, int len,
                                 long long* out) {
  return guarded([&]() {
    require(divisor && out, errc::invalid_argument, "null argument");
    return copy_to_ll(linear_multiplicity(divisor->value, index_set_from(I, len)), out);
  });
}

fp_status fp_join_multiplicity(const fp_divisor* divisor, const int* I, int len, int t,
                               long long* out) {
  return guarded([&]() {
    require(divisor && out, errc::invalid_argument, "null argument");
    CycleIndex c(index_set_from(I, len), t);
    return copy_to_ll(join_multiplicity(divisor->value, c), out);
  });
}

fp_status fp_ldim(const fp_divisor* divisor, long long* out) {
  return guarded([&]() {
    require(divisor && out, errc::invalid_argument, "null argument");
    return copy_to_ll(secant::ldim(divisor->value), out);
  });
}

fp_status fp_sldim(const fp_divisor* divisor, long long* out) {
  return guarded([&]() {
    require(divisor && out, errc::invalid_argument, "null argument");
    return copy_to_ll(secant::sldim(divisor->value), out);
  });
}

fp_status fp_gg_check(const fp_divisor* divisor, int r, fp_gg_status* verdict, int* witness,
                      int witness_cap, int* witness_len) {
  return guarded([&]() {
    require(divisor != nullptr, errc::invalid_argument, "null divisor");
    return run_gg(is_globally_generated(divisor->value, r), verdict, witness, witness_cap,
                  witness_len);
  });
}

fp_status fp_bpf_check(const fp_divisor* divisor, fp_gg_status* verdict, int* witness,
                       int witness_cap, int* witness_len) {
  return guarded([&]() {
    require(divisor != nullptr, errc::invalid_argument, "null divisor");
    return run_gg(is_bpf_full_transform(divisor->value), verdict, witness, witness_cap,
                  witness_len);
  });
}

fp_status fp_oracle_h0(int n, int d, const int* mults, int s, uint64_t seed, uint64_t prime,
                       long long* h0_out, long long* rank_out, long long* ncols_out) {
  return guarded([&]() {
    require(mults != nullptr && s >= 1, errc::invalid_argument, "need at least one multiplicity");
    require(h0_out != nullptr, errc::invalid_argument, "h0 output is required");
    std::vector<int> m(mults, mults + s);
    oracle::PointConfiguration cfg =
        oracle::sample_config(n, s, seed, prime == 0 ? oracle::kPrimeA : prime);
    oracle::InterpolationResult r = oracle::h0(cfg, d, m);
    *h0_out = r.h0;
    if (rank_out) *rank_out = r.rank;
    if (ncols_out) *ncols_out = r.ncols;
    return FP_OK;
  });
}

fp_status fp_run_job(const char* job_json, char** report, int* exit_code) {
  return guarded([&]() {
    require(job_json != nullptr && report != nullptr, errc::invalid_argument, "null argument");
    jobs::Outcome out = jobs::run(std::string(job_json));
    const std::string text = out.report.dump(2);
    char* buf = static_cast<char*>(std::malloc(text.size() + 1));
    require(buf != nullptr, errc::internal, "allocation failure");
    std::memcpy(buf, text.c_str(), text.size() + 1);
    *report = buf;
    if (exit_code) *exit_code = out.exit_code;
    switch (out.exit_code) {
      case 0: return FP_OK;
      case 1: return FP_NEGATIVE;
      case 2: return FP_ERR_INVALID;
      case 3: return FP_ERR_RANGE;
      default: return FP_ERR_INTERNAL;
    }
  });
}

void fp_string_free(char* s) { std::free(s); }

}  // extern "C"
