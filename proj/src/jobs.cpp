#include "jobs.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "divisor.hpp"
#include "logpairs.hpp"
#include "mzero.hpp"
#include "oracle.hpp"
#include "positivity.hpp"
#include "secant.hpp"

namespace fatpoints::jobs {

namespace {

json int_to_json(const Int& v) {
  // Small values as numbers, anything wider as a decimal string; reports
  // stay exact either way.
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

json rat_to_json(const Rat& v) {
  if (boost::multiprecision::denominator(v) == 1) return int_to_json(numerator(v));
  return numerator(v).str() + "/" + denominator(v).str();
}

json cycle_to_json(const CycleIndex& c) {
  json j;
  j["I"] = c.indices;
  j["t"] = c.secant_level;
  j["dim"] = c.dim();
  return j;
}

long long get_ll(const json& job, const char* key) {
  require(job.contains(key), errc::invalid_argument, std::string("missing field: ") + key);
  const auto& v = job.at(key);
  require(v.is_number_integer(), errc::invalid_argument, std::string(key) + " must be an integer");
  return v.get<long long>();
}

long long get_ll_or(const json& job, const char* key, long long def) {
  return job.contains(key) ? get_ll(job, key) : def;
}

bool get_bool_or(const json& job, const char* key, bool def) {
  if (!job.contains(key)) return def;
  require(job.at(key).is_boolean(), errc::invalid_argument,
          std::string(key) + " must be a boolean");
  return job.at(key).get<bool>();
}

std::string get_str_or(const json& job, const char* key, const std::string& def) {
  if (!job.contains(key)) return def;
  require(job.at(key).is_string(), errc::invalid_argument, std::string(key) + " must be a string");
  return job.at(key).get<std::string>();
}

long long parse_ll(const std::string& s) {
  long long v = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  require(ec == std::errc() && p == s.data() + s.size(), errc::invalid_argument,
          "not an integer: '" + s + "'");
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= s.size()) {
    std::size_t end = s.find(sep, start);
    if (end == std::string::npos) end = s.size();
    out.push_back(s.substr(start, end - start));
    start = end + 1;
  }
  return out;
}

std::vector<int> parse_index_list(const std::string& text) {
  std::vector<int> out;
  if (text.empty()) return out;
  for (const auto& part : split(text, ','))
    out.push_back((int)parse_ll(part));
  return out;
}

std::vector<Int> to_int_vec(const std::vector<long long>& v) {
  std::vector<Int> out(v.begin(), v.end());
  return out;
}

std::vector<long long> get_mults(const json& job) {
  require(job.contains("m"), errc::invalid_argument, "missing field: m");
  const auto& v = job.at("m");
  if (v.is_string()) return parse_mult_list(v.get<std::string>());
  require(v.is_array(), errc::invalid_argument, "m must be a list or a shorthand string");
  std::vector<long long> out;
  for (const auto& x : v) {
    require(x.is_number_integer(), errc::invalid_argument, "m entries must be integers");
    out.push_back(x.get<long long>());
  }
  return out;
}

DivisorClass get_divisor(const json& job) {
  return DivisorClass((int)get_ll(job, "n"), Int(get_ll(job, "d")), to_int_vec(get_mults(job)));
}

Rat parse_rational(const std::string& text) {
  const auto parts = split(text, '/');
  require(parts.size() == 1 || parts.size() == 2, errc::invalid_argument,
          "rational must look like p or p/q");
  Int num(parts[0]);
  Int den = parts.size() == 2 ? Int(parts[1]) : Int(1);
  require(den != 0, errc::invalid_argument, "zero denominator");
  return Rat(num, den);
}

std::vector<int> get_index_set(const json& job, const char* key) {
  require(job.contains(key), errc::invalid_argument, std::string("missing field: ") + key);
  const auto& v = job.at(key);
  if (v.is_string()) return parse_index_list(v.get<std::string>());
  require(v.is_array(), errc::invalid_argument, std::string(key) + " must be a list or string");
  std::vector<int> out;
  for (const auto& x : v) out.push_back(x.get<int>());
  return out;
}

json gg_to_json(const GGVerdict& v) {
  json j;
  j["verdict"] = to_string(v.status);
  if (v.witness) j["witness"] = *v.witness;
  return j;
}

json decomposition_to_json(const BaseLocusDecomposition& bl) {
  json entries = json::array();
  for (const auto& e : bl.entries) {
    json j = cycle_to_json(e.cycle);
    j["k"] = int_to_json(e.multiplicity);
    j["divisorial"] = e.divisorial;
    entries.push_back(std::move(j));
  }
  return entries;
}

// ---- command handlers ------------------------------------------------

Outcome cmd_base_locus(const json& job) {
  DivisorClass D = get_divisor(job);
  const bool secants = get_bool_or(job, "secants", false);
  BaseLocusDecomposition bl = base_locus(D, secants);
  Outcome out;
  out.report["cycles"] = decomposition_to_json(bl);
  out.report["max_dim"] = bl.max_dim();
  return out;
}

Outcome cmd_strict_transform(const json& job) {
  DivisorClass D = get_divisor(job);
  const int r = (int)get_ll_or(job, "r", D.n - 1);
  const bool secants = get_bool_or(job, "secants", false);
  StrictTransformClass st = strict_transform(D, r, secants);
  Outcome out;
  json base;
  base["d"] = int_to_json(st.base.d);
  json m = json::array();
  for (const Int& mi : st.base.mults) m.push_back(int_to_json(mi));
  base["m"] = m;
  out.report["base"] = base;
  json exc = json::array();
  for (const auto& [cycle, k] : st.exceptional) {
    json j = cycle_to_json(cycle);
    j["k"] = int_to_json(k);
    exc.push_back(std::move(j));
  }
  out.report["exceptional"] = exc;
  json sub = json::array();
  bool linear_subtracted = false, join_subtracted = false;
  for (const auto& e : st.subtracted) {
    json j = cycle_to_json(e.cycle);
    j["k"] = int_to_json(e.multiplicity);
    sub.push_back(std::move(j));
    (e.cycle.secant_level == 0 ? linear_subtracted : join_subtracted) = true;
  }
  out.report["subtracted"] = sub;
  // Simultaneous linear and join fixed divisors are handled independently;
  // the flag marks reports where that convention is in play.
  out.report["mixed_divisorial_subtraction"] = linear_subtracted && join_subtracted;
  return out;
}

Outcome cmd_gg_check(const json& job) {
  DivisorClass D = get_divisor(job);
  const int r = (int)get_ll_or(job, "r", 0);
  GGVerdict v = is_globally_generated(D, r);
  Outcome out;
  out.report.update(gg_to_json(v));
  out.report["degree_gate"] = gg_degree_bound(D);
  out.report["b0"] = int_to_json(b_zero(D));
  out.exit_code = v.status == GGStatus::GloballyGenerated ? 0
                  : v.status == GGStatus::NotGloballyGenerated ? 1 : 3;
  return out;
}

Outcome cmd_bpf_check(const json& job) {
  DivisorClass D = get_divisor(job);
  GGVerdict v = is_bpf_full_transform(D);
  Outcome out;
  out.report.update(gg_to_json(v));
  out.report["degree_gate"] = gg_degree_bound(D);
  out.report["b0"] = int_to_json(b_zero(D));
  out.exit_code = v.status == GGStatus::GloballyGenerated ? 0
                  : v.status == GGStatus::NotGloballyGenerated ? 1 : 3;
  return out;
}

MZeroDivisor get_mzero(const json& job) {
  const int n = (int)get_ll(job, "n");
  MZeroDivisor M(n, Int(get_ll(job, "d")));
  if (job.contains("m")) {
    const auto mults = get_mults(job);
    require((int)mults.size() == n + 2, errc::invalid_argument,
            "model singleton coefficients need n+2 entries");
    for (int i = 0; i < (int)mults.size(); ++i) M.set_coeff({i + 1}, Int(mults[i]));
  }
  if (job.contains("mI")) {
    const auto& table = job.at("mI");
    require(table.is_object(), errc::invalid_argument, "mI must map index lists to integers");
    for (const auto& [key, value] : table.items()) {
      require(value.is_number_integer(), errc::invalid_argument, "mI values must be integers");
      M.set_coeff(parse_index_list(key), Int(value.get<long long>()));
    }
  }
  return M;
}

json fnef_violation_to_json(const FnefViolation& v) {
  json j;
  j["kind"] = std::string(1, v.kind);
  j["blocks"] = v.blocks;
  j["value"] = int_to_json(v.value);
  return j;
}

Outcome cmd_fnef_check(const json& job) {
  MZeroDivisor M = job.contains("from_transform") && job.at("from_transform").get<bool>()
                       ? embed_strict_transform(get_divisor(job))
                       : get_mzero(job);
  FnefResult r = is_fnef(M);
  Outcome out;
  out.report["fnef"] = r.fnef;
  if (r.violation) out.report["violation"] = fnef_violation_to_json(*r.violation);
  out.exit_code = r.fnef ? 0 : 1;
  return out;
}

Outcome cmd_fulton_certify(const json& job) {
  DivisorClass D = get_divisor(job);
  FultonReport rep = fulton_certify(D);
  Outcome out;
  out.report["globally_generated"] = rep.globally_generated;
  out.report["nef"] = rep.nef;
  out.report["f_nef"] = rep.f_nef;
  out.report["consistent"] = rep.consistent;
  if (rep.gg_witness) out.report["gg_witness"] = *rep.gg_witness;
  if (rep.violation) out.report["violation"] = fnef_violation_to_json(*rep.violation);
  out.exit_code = rep.f_nef && rep.globally_generated ? 0 : 1;
  return out;
}

Outcome cmd_sldim(const json& job) {
  DivisorClass D = get_divisor(job);
  Outcome out;
  out.report["sldim"] = int_to_json(secant::sldim(D));
  return out;
}

Outcome cmd_ldim(const json& job) {
  DivisorClass D = get_divisor(job);
  Outcome out;
  out.report["ldim"] = int_to_json(secant::ldim(D));
  return out;
}

logpairs::LogPair get_pair(const json& job) {
  return logpairs::LogPair(get_divisor(job), parse_rational(get_str_or(job, "epsilon", "0")));
}

Outcome cmd_lc_check(const json& job) {
  logpairs::LogPair p = get_pair(job);
  const bool secants = get_bool_or(job, "secants", p.divisor.s() == p.divisor.n + 3);
  logpairs::DiscrepancyReport rep = logpairs::discrepancies(p, secants);
  Outcome out;
  out.report["lc"] = rep.lc;
  out.report["discrep"] = rat_to_json(rep.discrep);
  json entries = json::array();
  for (const auto& e : rep.entries) {
    json j = cycle_to_json(e.cycle);
    j["k"] = int_to_json(e.multiplicity);
    j["a"] = rat_to_json(e.a);
    entries.push_back(std::move(j));
  }
  out.report["exceptional"] = entries;
  json divisorial = json::array();
  for (const auto& e : rep.divisorial) {
    json j = cycle_to_json(e.cycle);
    j["k"] = int_to_json(e.multiplicity);
    j["one_minus_coeff"] = rat_to_json(e.a);
    divisorial.push_back(std::move(j));
  }
  out.report["divisorial"] = divisorial;
  out.report["boundary_coefficients_ok"] = rep.boundary_coefficients_ok;
  out.exit_code = rep.lc ? 0 : 1;
  return out;
}

Outcome cmd_abundance_check(const json& job) {
  logpairs::LogPair p = get_pair(job);
  logpairs::AbundanceCheck c = logpairs::abundance_condition(p);
  Outcome out;
  out.report["holds"] = c.holds;
  if (c.point_witness) out.report["point_witness"] = *c.point_witness;
  if (c.pair_witness) out.report["pair_witness"] = {c.pair_witness->first, c.pair_witness->second};
  if (c.holds) {
    logpairs::DerivedBoundsReport db = logpairs::derived_bounds(p);
    out.report["derived_bounds"] = {{"cycles_checked", db.cycles_checked},
                                    {"max_point_slack", rat_to_json(db.max_point_slack)}};
  }
  out.exit_code = c.holds ? 0 : 1;
  return out;
}

Outcome cmd_decompose(const json& job) {
  DivisorClass D = get_divisor(job);
  const bool even = D.n % 2 == 0;
  secant::IntInterval range = even ? secant::alpha_interval(D) : secant::beta_interval(D);
  Outcome out;
  out.report["parity"] = even ? "even" : "odd";
  out.report["interval"] = {{"lo", int_to_json(range.lo)}, {"hi", int_to_json(range.hi)}};
  if (range.empty()) {
    out.report["feasible"] = false;
    out.exit_code = 1;
    return out;
  }
  out.report["feasible"] = true;
  const Int a = job.contains("alpha") ? Int(get_ll(job, "alpha")) : range.lo;
  secant::Decomposition dec = secant::decompose(D, a);
  out.report["alpha"] = int_to_json(dec.fixed_coefficient);
  json residual;
  residual["d"] = int_to_json(dec.residual_divisor.d);
  json m = json::array();
  for (const Int& mi : dec.residual_divisor.mults) m.push_back(int_to_json(mi));
  residual["m"] = m;
  out.report["residual_divisor"] = residual;
  json residuals = json::array();
  for (const auto& [cycle, value] : dec.residuals) {
    json j = cycle_to_json(cycle);
    j["residual"] = int_to_json(value);
    residuals.push_back(std::move(j));
  }
  out.report["residuals"] = residuals;
  out.report["k_C_residual"] = 0;  // verified inside decompose
  return out;
}

Outcome cmd_oracle_h0(const json& job) {
  const int n = (int)get_ll(job, "n");
  const int d = (int)get_ll(job, "d");
  const auto mults_ll = get_mults(job);
  std::vector<int> mults(mults_ll.begin(), mults_ll.end());
  const auto seed = (oracle::u64)get_ll_or(job, "seed", 1);
  const auto prime = (oracle::u64)get_ll_or(job, "prime", (long long)oracle::kPrimeA);
  oracle::PointConfiguration cfg = oracle::sample_config(n, (int)mults.size(), seed, prime);
  oracle::InterpolationResult r = oracle::h0(cfg, d, mults);
  Outcome out;
  out.report["h0"] = r.h0;
  out.report["rank"] = r.rank;
  out.report["ncols"] = r.ncols;
  out.report["seed"] = r.seed;
  out.report["prime"] = cfg.prime;
  out.report["retries"] = cfg.retries;
  return out;
}

Outcome cmd_oracle_verify(const json& job) {
  DivisorClass D = get_divisor(job);
  const std::string mode_text = get_str_or(job, "mode", "ldim");
  require(mode_text == "ldim" || mode_text == "sldim", errc::invalid_argument,
          "mode must be ldim or sldim");
  const auto mode =
      mode_text == "ldim" ? oracle::DimFormula::ldim : oracle::DimFormula::sldim;
  const int trials = (int)get_ll_or(job, "trials", 3);
  const auto seed = (oracle::u64)get_ll_or(job, "seed", 1);
  std::vector<oracle::u64> primes;
  primes.push_back((oracle::u64)get_ll_or(job, "prime", (long long)oracle::kPrimeA));
  if (job.contains("prime2")) primes.push_back((oracle::u64)get_ll(job, "prime2"));
  else primes.push_back(oracle::kPrimeB);
  oracle::VerifyReport rep = oracle::verify_dimension(D, trials, mode, seed, primes);
  Outcome out;
  out.report["mode"] = mode_text;
  out.report["expected"] = rep.expected;
  out.report["modal_h0"] = rep.modal_h0;
  out.report["agree"] = rep.agree;
  out.report["primes"] = rep.primes;
  out.report["seeds"] = rep.seeds;
  out.report["h0s"] = rep.h0s;
  out.exit_code = rep.agree ? 0 : 1;
  return out;
}

Outcome cmd_join_intersect(const json& job) {
  const int n = (int)get_ll(job, "n");
  CycleIndex c1(get_index_set(job, "I1"), (int)get_ll_or(job, "t1", 0));
  CycleIndex c2(get_index_set(job, "I2"), (int)get_ll_or(job, "t2", 0));
  secant::JoinIntersection r = secant::join_intersection(c1, c2, n);
  Outcome out;
  json comps = json::array();
  for (const auto& c : r.components) comps.push_back(cycle_to_json(c));
  out.report["components"] = comps;
  out.report["empty"] = r.components.empty();
  return out;
}

}  // namespace

std::vector<long long> parse_mult_list(const std::string& text) {
  std::vector<long long> out;
  require(!text.empty(), errc::invalid_argument, "empty multiplicity list");
  for (const auto& part : split(text, ',')) {
    const auto caret = part.find('^');
    if (caret == std::string::npos) {
      out.push_back(parse_ll(part));
      continue;
    }
    const long long value = parse_ll(part.substr(0, caret));
    const long long count = parse_ll(part.substr(caret + 1));
    require(count >= 1 && count <= 10000, errc::invalid_argument,
            "repetition count out of range in '" + part + "'");
    out.insert(out.end(), (std::size_t)count, value);
  }
  return out;
}

Outcome run(const json& job) {
  require(job.is_object(), errc::invalid_argument, "job must be a JSON object");
  const std::string command = get_str_or(job, "command", "");
  require(!command.empty(), errc::invalid_argument, "missing field: command");

  json inputs = job;
  inputs.erase("command");

  Outcome out;
  try {
    if (command == "base-locus") out = cmd_base_locus(job);
    else if (command == "strict-transform") out = cmd_strict_transform(job);
    else if (command == "gg-check") out = cmd_gg_check(job);
    else if (command == "bpf-check") out = cmd_bpf_check(job);
    else if (command == "fnef-check") out = cmd_fnef_check(job);
    else if (command == "fulton-certify") out = cmd_fulton_certify(job);
    else if (command == "sldim") out = cmd_sldim(job);
    else if (command == "ldim") out = cmd_ldim(job);
    else if (command == "lc-check") out = cmd_lc_check(job);
    else if (command == "abundance-check") out = cmd_abundance_check(job);
    else if (command == "decompose") out = cmd_decompose(job);
    else if (command == "oracle-h0") out = cmd_oracle_h0(job);
    else if (command == "oracle-verify") out = cmd_oracle_verify(job);
    else if (command == "join-intersect") out = cmd_join_intersect(job);
    else fail(errc::invalid_argument, "unknown command: " + command);
  } catch (const error& e) {
    Outcome err;
    err.report["command"] = command;
    err.report["inputs"] = inputs;
    err.report["status"] = "error";
    err.report["error"] = {{"kind", e.kind() == errc::invalid_argument ? "invalid_argument"
                                    : e.kind() == errc::out_of_range  ? "out_of_range"
                                                                      : "internal"},
                           {"message", e.what()}};
    err.exit_code = e.kind() == errc::invalid_argument ? 2
                    : e.kind() == errc::out_of_range   ? 3
                                                       : 4;
    return err;
  }

  json full;
  full["command"] = command;
  full["inputs"] = inputs;
  full["status"] = "ok";
  full.update(out.report);
  full["exit_code"] = out.exit_code;
  out.report = std::move(full);
  return out;
}

Outcome run(const std::string& job_text) {
  json job;
  try {
    job = json::parse(job_text);
  } catch (const nlohmann::json::parse_error& e) {
    Outcome err;
    err.report["status"] = "error";
    err.report["error"] = {{"kind", "invalid_argument"}, {"message", e.what()}};
    err.exit_code = 2;
    return err;
  }
  return run(job);
}

}  // namespace fatpoints::jobs
