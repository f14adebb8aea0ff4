#include "wgo/cli.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "wgo/io.hpp"
#include "wgo/parallel.hpp"

namespace wgo {

namespace {

class NotFound : public std::runtime_error {
 public:
  NotFound(const std::string& what, Json report) : std::runtime_error(what), report(std::move(report)) {}
  Json report;
};

int jobs_of(const JobSpec& job) { return job.jobs > 0 ? job.jobs : default_jobs(); }

std::pair<int, int> shape_for(const JobSpec& job, std::size_t length) {
  if (job.k && job.n) {
    check_parameters(*job.k, *job.n);
    return {*job.k, *job.n};
  }
  if (job.k || job.n) throw ParameterError("give both --k and --n or neither");
  auto shape = infer_shape(length);
  if (!shape) throw ParameterError("cannot infer (k, n) from length " + std::to_string(length) + "; pass --k and --n");
  return *shape;
}

std::pair<int, int> explicit_shape(const JobSpec& job) {
  if (!job.k || !job.n) throw ParameterError("--k and --n are required");
  check_parameters(*job.k, *job.n);
  return {*job.k, *job.n};
}

void expect_args(const JobSpec& job, std::size_t count) {
  if (job.args.size() != count) {
    throw ParameterError(job.command + " expects " + std::to_string(count) + " positional argument(s)");
  }
}

struct Loaded {
  PluckerSpace space;
  WeightVector b;
};

Loaded load(const JobSpec& job, const std::string& text) {
  WeightVector b = parse_weights(text);
  auto [k, n] = shape_for(job, b.size());
  PluckerSpace space(k, n);
  if (b.size() != space.size()) {
    throw ParameterError("weight vector has length " + std::to_string(b.size()) + ", expected " +
                         std::to_string(space.size()));
  }
  return {std::move(space), std::move(b)};
}

Json shape_json(const PluckerSpace& space) { return Json{{"k", space.k()}, {"n", space.n()}}; }

Json symbols_json(const SymbolLattice& lat) {
  Json out = Json::array();
  for (const auto& s : lat.symbols()) out.push_back(s.to_string());
  return out;
}

std::string csv_line(const std::vector<std::string>& cells) {
  std::string out;
  for (std::size_t i = 0; i < cells.size(); ++i) out += (i ? "," : "") + cells[i];
  return out + "\n";
}

std::string integers_csv(std::span<const Integer> xs) {
  std::vector<std::string> cells;
  for (const auto& x : xs) cells.push_back(x.get_str());
  return csv_line(cells);
}

struct Output {
  Json json;
  std::string csv;  // empty when the command has no CSV form
};

Output cmd_validate(const JobSpec& job) {
  expect_args(job, 1);
  auto [space, b] = load(job, job.args[0]);
  Json out{{"valid", true}};
  out.update(shape_json(space));
  try {
    space.require_valid(b);
    PluckerWeightVector pw(space, b);
    out["primitive"] = pw.primitive();
    out["normalized"] = pw.normalized();
  } catch (const InvalidWeightVector& e) {
    out["valid"] = false;
    out["reason"] = e.what();
  }
  return {out, csv_line({"valid", out["valid"].get<bool>() ? "true" : "false"})};
}

Output cmd_solve_wa(const JobSpec& job) {
  expect_args(job, 1);
  auto [space, b] = load(job, job.args[0]);
  auto wa = space.solve_wa(b);
  Json out{{"W", weights_to_json(wa.W)}, {"a", wa.a}};
  std::string csv = "W," + integers_csv(wa.W) + "a," + std::to_string(wa.a) + "\n";
  return {out, csv};
}

Output cmd_perms(const JobSpec& job) {
  if (!job.args.empty()) throw ParameterError("perms takes no positional arguments");
  auto [k, n] = explicit_shape(job);
  PluckerSpace space(k, n);
  auto scope = parse_scope(job.scope);
  auto perms = space.enumerate_permutations(scope, jobs_of(job));
  Json out{{"count", perms.size()}, {"scope", scope_name(scope)}};
  std::string csv = "count," + std::to_string(perms.size()) + "\n";
  if (job.list) {
    Json list = Json::array();
    csv = "sigma,signs\n";
    for (const auto& p : perms) {
      list.push_back(Json{{"sigma", permutation_to_json(p.sigma)}, {"signs", p.signs}});
      std::string sigma, signs;
      for (std::size_t i = 0; i < p.sigma.size(); ++i) {
        sigma += (i ? " " : "") + std::to_string(p.sigma[i]);
        signs += (i ? " " : "") + std::to_string(p.signs[i]);
      }
      csv += sigma + "," + signs + "\n";
    }
    out["permutations"] = std::move(list);
  }
  return {out, csv};
}

Output cmd_divisive(const JobSpec& job) {
  expect_args(job, 1);
  auto [space, b] = load(job, job.args[0]);
  space.require_valid(b);
  auto witness = is_divisive(space, b);
  if (!witness) throw NotFound("no divisive Plücker permutation in scope", Json{{"divisive", false}});
  WeightVector presented = apply_permutation(*witness, b);
  Json out{{"divisive", true}, {"witness", permutation_to_json(*witness)}, {"presented", weights_to_json(presented)}};
  return {out, "presented," + integers_csv(presented)};
}

Output cmd_classify(const JobSpec& job) {
  expect_args(job, 2);
  auto [space, b] = load(job, job.args[0]);
  WeightVector c = parse_weights(job.args[1]);
  if (c.size() != b.size()) throw ParameterError("weight vectors differ in length");
  space.require_valid(b);
  space.require_valid(c);
  auto eq = equivalence(space, b, c);
  Json base{{"normalized", Json::array({weights_to_json(normalize(b)), weights_to_json(normalize(c))})}};
  if (!eq) {
    Json report{{"equivalent", false}};
    report.update(base);
    throw NotFound("no Plücker permutation and scale relate the vectors", report);
  }
  Json out{{"equivalent", true}, {"sigma", permutation_to_json(eq->sigma)}, {"scale", eq->scale.get_str()}};
  out.update(base);
  return {out, "equivalent,true\nscale," + eq->scale.get_str() + "\n"};
}

Output cmd_torsion(const JobSpec& job) {
  expect_args(job, 1);
  auto [space, b] = load(job, job.args[0]);
  space.require_valid(b);
  std::vector<Integer> primes;
  if (job.primes.empty()) {
    primes = prime_factors(b);
  } else {
    for (const auto& s : job.primes) {
      Integer p;
      if (p.set_str(s, 10) != 0 || !is_prime(p)) throw ParameterError("not a prime: " + s);
      primes.push_back(p);
    }
  }
  auto scope = space.full_scope_allowed() ? PermutationScope::kFull : PermutationScope::kSnInduced;
  std::vector<std::optional<Permutation>> certs(primes.size());
  parallel_for(primes.size(), jobs_of(job),
               [&](std::size_t i) { certs[i] = no_p_torsion_certificate(space, b, primes[i], scope); });

  Json prime_report = Json::object();
  std::string csv = "prime,certificate\n";
  bool all_certified = true;
  for (std::size_t i = 0; i < primes.size(); ++i) {
    all_certified = all_certified && certs[i].has_value();
    prime_report[primes[i].get_str()] = certs[i] ? permutation_to_json(*certs[i]) : Json(nullptr);
    csv += primes[i].get_str() + "," + (certs[i] ? permutation_string(*certs[i]) : "none") + "\n";
  }

  std::vector<int> undetermined;
  Json gr24;
  const int top = 2 * space.k() * (space.n() - space.k());
  if (space.k() == 2 && space.n() == 4 && job.primes.empty()) {
    auto report = gr24_torsion_report(space, b);
    Json candidates = Json::array();
    for (const auto& c : report.candidates) {
      candidates.push_back(Json{{"prime", integer_to_json(c.prime)},
                                {"sigma", permutation_to_json(c.sigma)},
                                {"eta", integer_to_json(c.eta)},
                                {"eta_prime", integer_to_json(c.eta_prime)}});
    }
    gr24 = Json{{"torsion_free_outside_degree_3", report.torsion_free_outside_middle},
                {"degree_3_torsion_free", report.middle_torsion_free},
                {"special_rule", report.special_rule},
                {"candidates", candidates}};
    all_certified = all_certified || report.middle_torsion_free;
    if (!report.middle_torsion_free) undetermined.push_back(3);
  } else if (!all_certified) {
    for (int d = 1; d <= top; ++d) undetermined.push_back(d);
  }

  auto poincare = space.lattice().poincare();
  Json degrees = Json::object();
  for (int d = 0; d <= top; ++d) {
    if (std::find(undetermined.begin(), undetermined.end(), d) != undetermined.end()) continue;
    long rank = d % 2 == 0 ? poincare[static_cast<std::size_t>(d / 2)] : 0;
    degrees[std::to_string(d)] = Json{{"rank", rank}, {"torsion", Json::array()}};
  }

  Json stages = Json::array();
  for (const auto& st : building_sequence(space, b)) {
    stages.push_back(Json{{"index", st.index},
                          {"dim", st.dim},
                          {"lens_order", integer_to_json(st.lens.order)},
                          {"lens_weights", weights_to_json(st.lens.weights)},
                          {"lens_cohomology", cohomology_to_json(lens_cohomology(st.lens))}});
  }

  Json out = shape_json(space);
  out["torsion_free"] = all_certified;
  out["certificates"] = std::move(prime_report);
  out["degrees"] = std::move(degrees);
  out["undetermined_degrees"] = undetermined;
  if (!gr24.is_null()) out["gr24"] = std::move(gr24);
  out["building_sequence"] = std::move(stages);
  return {out, csv};
}

Output cmd_ring(const JobSpec& job) {
  expect_args(job, 1);
  if (job.equivariant && job.ordinary) throw ParameterError("choose one of --equivariant and --ordinary");
  auto [space, b] = load(job, job.args[0]);
  space.require_valid(b);
  if (space.size() > kPuzzleTableLimit) throw CapacityError("ring tables limited to C(n,k) <= 15");
  WeightedRing ring(space, b, jobs_of(job));
  Json out = shape_json(space);
  out["weights"] = weights_to_json(b);
  out["presentation"] = permutation_to_json(ring.graph().presentation());
  out["presented"] = weights_to_json(ring.weights());
  out["symbols"] = symbols_json(space.lattice());
  std::string csv;
  if (job.ordinary) {
    auto table = ring.ordinary_table(jobs_of(job));
    out["kind"] = "ordinary";
    out["table"] = table_to_json(table);
    csv = table_to_csv(table);
  } else {
    auto table = ring.equivariant_table(jobs_of(job));
    out["kind"] = "equivariant";
    if (job.check_oracle) out["oracle_agrees"] = table == ring.oracle_table(jobs_of(job));
    out["table"] = table_to_json(table);
    csv = table_to_csv(table);
  }
  return {out, csv};
}

Output cmd_puzzles(const JobSpec& job) {
  expect_args(job, 3);
  auto found = enumerate_puzzles(job.args[0], job.args[1], job.args[2]);
  Json list = Json::array();
  std::string csv = "cells,weight\n";
  for (const auto& p : found) {
    Json pairs = Json::array();
    for (auto [a, c] : weight_pairs(p)) pairs.push_back(Json::array({a, c}));
    std::string w = weight(p).to_string();
    list.push_back(Json{{"cells", p.cells}, {"weight", w}, {"factors", pairs}});
    csv += p.cells + ",\"" + w + "\"\n";
  }
  return {Json{{"count", found.size()}, {"puzzles", list}}, csv};
}

Output cmd_poincare(const JobSpec& job) {
  if (!job.args.empty()) throw ParameterError("poincare takes no positional arguments");
  auto [k, n] = explicit_shape(job);
  auto p = SymbolLattice(k, n).poincare();
  Json out = p;
  std::vector<std::string> cells;
  for (auto x : p) cells.push_back(std::to_string(x));
  return {out, csv_line(cells)};
}

const std::map<std::string, std::function<Output(const JobSpec&)>>& commands() {
  static const std::map<std::string, std::function<Output(const JobSpec&)>> table{
      {"validate", cmd_validate}, {"solve-wa", cmd_solve_wa}, {"perms", cmd_perms},
      {"divisive", cmd_divisive}, {"classify", cmd_classify}, {"torsion", cmd_torsion},
      {"ring", cmd_ring},         {"puzzles", cmd_puzzles},   {"poincare", cmd_poincare}};
  return table;
}

std::string render(const JobSpec& job, const Output& out) {
  if (job.format == "csv") {
    if (out.csv.empty()) throw ParameterError(job.command + " has no CSV output");
    return out.csv;
  }
  return out.json.dump() + "\n";
}

}  // namespace

std::optional<std::pair<int, int>> infer_shape(std::size_t length) {
  std::optional<std::pair<int, int>> found;
  for (int n = 4; static_cast<std::size_t>(n) <= length; ++n) {
    std::size_t c = 1;
    for (int k = 1; 2 * k <= n; ++k) {
      // c = C(n, k), computed incrementally and capped once it exceeds length
      c = c * static_cast<std::size_t>(n - k + 1) / static_cast<std::size_t>(k);
      if (c > length) break;
      if (k >= 2 && c == length) {
        if (found) return std::nullopt;
        found = std::make_pair(k, n);
      }
    }
  }
  return found;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : commands()) out.push_back(name);
    return out;
  }();
  return names;
}

CommandResult run_job(const JobSpec& job) {
  CommandResult result;
  try {
    if (job.format != "json" && job.format != "csv") throw ParameterError("unknown format: " + job.format);
    auto it = commands().find(job.command);
    if (it == commands().end()) throw ParameterError("unknown command: " + job.command);
    result.output = render(job, it->second(job));
  } catch (const NotFound& e) {
    result.exit_code = kExitNotFound;
    result.error = e.what();
    result.output = job.format == "csv" ? std::string() : e.report.dump() + "\n";
  } catch (const CapacityError& e) {
    result.exit_code = kExitCapacity;
    result.error = e.what();
  } catch (const InconsistentComputation& e) {
    result.exit_code = kExitFailure;
    result.error = std::string("internal consistency check failed: ") + e.what();
  } catch (const std::invalid_argument& e) {
    result.exit_code = kExitInvalid;
    result.error = e.what();
  } catch (const nlohmann::json::exception& e) {
    result.exit_code = kExitInvalid;
    result.error = e.what();
  }
  return result;
}

}  // namespace wgo
