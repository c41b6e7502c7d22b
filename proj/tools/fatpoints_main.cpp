// Command-line front door. Parses flags into a JSON job, hands it to the
// shared library through the C interface, prints the report, and exits with
// the library's verdict code.

#include <cstdio>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fatpoints.h"

namespace {

using json = nlohmann::ordered_json;

struct CommonArgs {
  long long n = 0;
  long long d = 0;
  std::string m;
  std::string epsilon;
  std::string mode = "ldim";
  std::string I, I1, I2;
  std::vector<std::string> mI;
  long long r = -2;
  long long t1 = 0, t2 = 0;
  long long alpha = 0;
  bool have_alpha = false;
  long long trials = 3;
  long long seed = 1;
  long long prime = 0;
  long long prime2 = 0;
  bool secants = false;
  bool from_transform = false;
  bool json_output = true;
};

json build_job(const std::string& command, const CommonArgs& a, CLI::App* sub) {
  json job;
  job["command"] = command;
  auto passed = [&](const std::string& flag) {
    return sub->count(flag) > 0;
  };
  if (passed("--n")) job["n"] = a.n;
  if (passed("--d")) job["d"] = a.d;
  if (passed("--m")) job["m"] = a.m;
  if (passed("--r")) job["r"] = a.r;
  if (passed("--secants")) job["secants"] = a.secants;
  if (passed("--epsilon")) job["epsilon"] = a.epsilon;
  if (passed("--mode")) job["mode"] = a.mode;
  if (passed("--trials")) job["trials"] = a.trials;
  if (passed("--seed")) job["seed"] = a.seed;
  if (passed("--prime")) job["prime"] = a.prime;
  if (passed("--prime2")) job["prime2"] = a.prime2;
  if (passed("--alpha")) job["alpha"] = a.alpha;
  if (passed("--from-transform")) job["from_transform"] = a.from_transform;
  if (passed("--I")) job["I"] = a.I;
  if (passed("--I1")) job["I1"] = a.I1;
  if (passed("--I2")) job["I2"] = a.I2;
  if (passed("--t1")) job["t1"] = a.t1;
  if (passed("--t2")) job["t2"] = a.t2;
  if (!a.mI.empty()) {
    json table = json::object();
    for (const std::string& entry : a.mI) {
      const auto eq = entry.find('=');
      if (eq == std::string::npos) {
        std::fprintf(stderr, "bad --mI entry '%s' (expected I=value, e.g. 1,2=3)\n",
                     entry.c_str());
        std::exit(2);
      }
      table[entry.substr(0, eq)] = std::stoll(entry.substr(eq + 1));
    }
    job["mI"] = table;
  }
  return job;
}

int run_and_print(const json& job, bool json_output) {
  char* report = nullptr;
  int exit_code = 4;
  const std::string text = job.dump();
  fp_run_job(text.c_str(), &report, &exit_code);
  if (report == nullptr) {
    std::fprintf(stderr, "internal error: %s\n", fp_last_error());
    return 4;
  }
  if (json_output) {
    std::printf("%s\n", report);
  } else {
    json parsed = json::parse(report);
    std::string line = parsed.value("command", "?");
    for (const char* key : {"verdict", "fnef", "lc", "holds", "agree", "h0", "sldim", "ldim",
                            "feasible", "f_nef", "status"}) {
      if (parsed.contains(key)) {
        line += "  ";
        line += key;
        line += "=";
        line += parsed.at(key).dump();
      }
    }
    std::printf("%s\n", line.c_str());
  }
  fp_string_free(report);
  return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Positivity of divisor classes on blow-ups of projective space "
               "at general points, with an exact interpolation oracle"};
  app.set_version_flag("--version", std::string(fp_version()));
  app.require_subcommand(1);

  CommonArgs a;
  const std::vector<std::string> commands = {
      "base-locus",  "strict-transform", "gg-check",      "bpf-check",     "fnef-check",
      "fulton-certify", "sldim",         "ldim",          "lc-check",      "abundance-check",
      "decompose",   "oracle-h0",        "oracle-verify", "join-intersect"};

  std::vector<CLI::App*> subs;
  for (const auto& name : commands) {
    CLI::App* sub = app.add_subcommand(name);
    sub->add_option("--n", a.n, "ambient dimension");
    sub->add_option("--d", a.d, "degree");
    sub->add_option("--m", a.m, "multiplicities, e.g. 2,1,1 or 2^7 or 3,1^4");
    sub->add_option("--r", a.r, "blow-up level (dimension of largest blown-up cycles)");
    sub->add_flag("--secants", a.secants, "include secant-join cycles (needs s = n+3)");
    sub->add_option("--epsilon", a.epsilon, "exact boundary coefficient, e.g. 1/4");
    sub->add_option("--mode", a.mode, "dimension formula: ldim or sldim");
    sub->add_option("--trials", a.trials, "independent oracle configurations");
    sub->add_option("--seed", a.seed, "reproduction seed");
    sub->add_option("--prime", a.prime, "oracle prime (default 2147483647)");
    sub->add_option("--prime2", a.prime2, "second oracle prime (default 2147483629)");
    sub->add_option("--alpha", a.alpha, "fixed-divisor coefficient for decompose");
    sub->add_flag("--from-transform", a.from_transform,
                  "build the model class from the strict transform of (n,d,m)");
    sub->add_option("--I", a.I, "index set, e.g. 1,2");
    sub->add_option("--I1", a.I1, "first cycle vertex set");
    sub->add_option("--t1", a.t1, "first cycle secant level");
    sub->add_option("--I2", a.I2, "second cycle vertex set");
    sub->add_option("--t2", a.t2, "second cycle secant level");
    sub->add_option("--mI", a.mI, "model coefficient entry I=k, e.g. --mI 1,2=1")
        ->take_all();
    sub->add_flag("!--no-json", a.json_output, "print a one-line summary instead of JSON");
    subs.push_back(sub);
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < subs.size(); ++i) {
    if (subs[i]->parsed()) {
      json job = build_job(commands[i], a, subs[i]);
      return run_and_print(job, a.json_output);
    }
  }
  std::fprintf(stderr, "no subcommand\n");
  return 2;
}
