#pragma once

// Batch front door: a job is one structured request (command + parameters);
// running it yields one structured report and a process exit code.
// Exit codes: 0 success, 1 negative verdict, 2 invalid input,
// 3 out of theorem range, 4 internal assertion (bug).

#include <json.hpp>
#include <string>
#include <vector>

#include "ints.hpp"

namespace fatpoints::jobs {

using json = nlohmann::ordered_json;

struct Outcome {
  json report;
  int exit_code = 0;
};

// Parse a multiplicity list with repetition shorthand: "2^7" means seven
// twos, entries separated by commas ("3,2^4,1").
std::vector<long long> parse_mult_list(const std::string& text);

Outcome run(const json& job);
Outcome run(const std::string& job_text);

}  // namespace fatpoints::jobs
