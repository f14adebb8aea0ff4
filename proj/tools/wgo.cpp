#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "wgo/cli.hpp"

namespace {

struct Help {
  const char* name;
  const char* description;
  int positional;  // number of positional arguments
};

constexpr Help kCommands[] = {
    {"validate", "Check a Plücker weight vector", 1},
    {"solve-wa", "Recover (W, a) with b_lambda = a + sum of W over lambda", 1},
    {"perms", "Enumerate Plücker permutations for (k, n)", 0},
    {"divisive", "Find a permutation presenting b as a divisibility chain", 1},
    {"classify", "Decide whether two weight vectors are equivalent", 2},
    {"torsion", "Torsion certificates and cohomology report", 1},
    {"ring", "Weighted structure constants", 1},
    {"puzzles", "Enumerate equivariant puzzles for three 0/1 boundary words", 3},
    {"poincare", "Poincaré polynomial coefficients in t^2", 0},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations on weighted Grassmann orbifolds"};
  app.require_subcommand(1);
  wgo::JobSpec job;
  int k = 0, n = 0;
  std::string primes;
  // Separate strings: CLI11 would split a "[1,2,3]" argument given to a vector option.
  std::string positional[3];

  for (const auto& c : kCommands) {
    auto* sub = app.add_subcommand(c.name, c.description);
    for (int p = 0; p < c.positional; ++p) {
      const char* label = c.positional == 3 ? "word" : "weights";
      sub->add_option(std::string(label) + std::to_string(p + 1), positional[p],
                      c.positional == 3 ? "Boundary word of 0s and 1s" : "Weight vector as a JSON array")
          ->required();
    }
    sub->add_option("--k", k, "Number of rows");
    sub->add_option("--n", n, "Number of columns");
    sub->add_option("--format", job.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_option("-o,--output", job.output, "Write the result to this file");
    sub->add_option("-j,--jobs", job.jobs, "Worker threads (default: logical cores)")->check(CLI::NonNegativeNumber);
    sub->add_option("--scope", job.scope, "identity, sn-induced or full");
    sub->add_option("--primes", primes, "Comma separated primes");
    sub->add_flag("--equivariant", job.equivariant, "Equivariant structure constants");
    sub->add_flag("--ordinary", job.ordinary, "Ordinary structure constants");
    sub->add_flag("--list", job.list, "List every permutation");
    sub->add_flag("--check-oracle", job.check_oracle, "Compare with the localization oracle");
    sub->callback([&job, &positional, sub, count = c.positional] {
      job.command = sub->get_name();
      job.args.assign(positional, positional + count);
    });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : wgo::kExitInvalid;
  }
  if (k) job.k = k;
  if (n) job.n = n;
  for (std::size_t start = 0; !primes.empty() && start <= primes.size();) {
    auto comma = primes.find(',', start);
    if (comma == std::string::npos) comma = primes.size();
    job.primes.push_back(primes.substr(start, comma - start));
    start = comma + 1;
  }

  auto result = wgo::run_job(job);
  if (!result.error.empty()) std::cerr << "error: " << result.error << "\n";
  if (job.output.empty()) {
    std::cout << result.output;
  } else if (!result.output.empty()) {
    std::ofstream file(job.output, std::ios::binary);
    file << result.output;
    if (!file) {
      std::cerr << "error: cannot write " << job.output << "\n";
      return wgo::kExitFailure;
    }
  }
  return result.exit_code;
}
