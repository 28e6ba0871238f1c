// ordsgp: command-line front end for the finite ordered semigroup library.
//
// Exit codes: 0 success (or every checked equivalence agrees), 1 a
// disagreement or failed condition was found, 2 input error.

#include <algorithm>
#include <iostream>
#include <map>
#include <mutex>
#include <set>
#include <thread>

#include <CLI11.hpp>

#include "ordsgp/ordsgp.hpp"

namespace {

using namespace ordsgp;

constexpr int kOk = 0;
constexpr int kDisagree = 1;
constexpr int kInputError = 2;

OrderedSemigroup load_ordered(const std::string& path, bool close_order) {
  return parse_osg(read_file(path), ParseOptions{.close_order = close_order});
}

int cmd_validate(const std::string& path, bool close_order) {
  auto structure = parse_document(read_file(path), ParseOptions{.close_order = close_order});
  if (auto* s = std::get_if<OrderedSemigroup>(&structure))
    std::cout << "valid ordered semigroup, " << s->size() << " elements, "
              << s->order_pairs().size() << " strict order pairs\n";
  else
    std::cout << "valid semigroup, " << std::get<FiniteSemigroup>(structure).size()
              << " elements\n";
  return kOk;
}

int cmd_classify(const std::string& path, bool close_order, bool as_json) {
  const auto s = load_ordered(path, close_order);
  const auto report = classify(s);
  const auto decomposition = decompose(s, least_csc(s));
  if (as_json)
    std::cout << report_json(s, report, decomposition).dump(2) << '\n';
  else
    std::cout << format_report(s, report, decomposition);
  const bool disagree =
      std::any_of(report.bundles.begin(), report.bundles.end(),
                  [](const BundleResult& b) { return b.disagrees(); }) ||
      !report.implication_violations.empty();
  return disagree ? kDisagree : kOk;
}

int cmd_green(const std::string& path, bool close_order, const std::string& kind, bool as_json) {
  const auto s = load_ordered(path, close_order);
  const auto rho = green_relation(s, parse_green_kind(kind));
  if (as_json)
    std::cout << nlohmann::json{{"kind", kind}, {"relation", to_json(rho)}}.dump(2) << '\n';
  else
    std::cout << kind << ": " << format_relation(s, rho) << '\n';
  return kOk;
}

EquivalenceRelation named_relation(const OrderedSemigroup& s, const std::string& name) {
  if (name == "least-csc") return least_csc(s);
  return green_relation(s, parse_green_kind(name));
}

int cmd_decompose(const std::string& path, bool close_order, const std::string& rho_name,
                  bool as_json) {
  const auto s = load_ordered(path, close_order);
  const auto d = decompose(s, named_relation(s, rho_name));
  if (as_json)
    std::cout << to_json(d).dump(2) << '\n';
  else
    std::cout << "decomposition by " << rho_name << ":\n" << format_decomposition(s, d);
  return d.all_conditions_hold() && d.order_is_partial ? kOk : kDisagree;
}

int cmd_power(const std::string& path) {
  std::cout << serialize_document(power_ordered_semigroup(parse_sgp(read_file(path))));
  return kOk;
}

int report_bundle(const BundleResult& b, bool as_json) {
  if (as_json)
    std::cout << to_json(b).dump(2) << '\n';
  else
    std::cout << format_bundle(b);
  return b.disagrees() ? kDisagree : kOk;
}

int cmd_check(const std::string& path, bool close_order, const std::string& bundle,
              const std::string& theorem, const std::string& power, bool as_json) {
  if (!power.empty())
    return report_bundle(
        power_correspondence_check(parse_sgp(read_file(path)), parse_power_property(power)),
        as_json);
  const auto s = load_ordered(path, close_order);
  if (!bundle.empty()) return report_bundle(equivalence_bundle(s, bundle), as_json);
  return report_bundle(structure_theorem_check(s, theorem), as_json);
}

// ---- enumerate -------------------------------------------------------------

struct SweepPlan {
  std::vector<std::string> bundles;
  std::vector<std::string> theorems;
};

SweepPlan parse_sweep(const std::string& spec) {
  SweepPlan plan;
  if (spec.empty()) return plan;
  if (spec == "all") {
    for (auto id : bundle_ids()) plan.bundles.emplace_back(id);
    for (auto id : structure_theorem_ids()) plan.theorems.emplace_back(id);
    return plan;
  }
  std::stringstream in(spec);
  std::string id;
  while (std::getline(in, id, ',')) {
    const auto& b = bundle_ids();
    const auto& t = structure_theorem_ids();
    if (std::find(b.begin(), b.end(), id) != b.end())
      plan.bundles.push_back(id);
    else if (std::find(t.begin(), t.end(), id) != t.end())
      plan.theorems.push_back(id);
    else
      throw UnknownNameError("bundle or theorem", id);
  }
  return plan;
}

struct IdTally {
  std::size_t applicable = 0;
  std::size_t disagreements = 0;
};

// Position of a structure in the global stream: table cells, then the index
// of its order among the compatible ones. Parsed from the resume token.
using StreamPosition = std::pair<std::string, std::size_t>;

StreamPosition stream_position(const std::string& token) {
  const auto slash = token.find('/');
  return {token.substr(0, slash), std::stoul(token.substr(slash + 1))};
}

struct WorkerResult {
  std::vector<std::pair<StreamPosition, std::string>> transcript;
  std::map<std::string, IdTally> tallies;
  std::vector<std::string> disagreement_reports;
  std::set<std::string> canonical;
  std::string last_token;
  std::size_t count = 0;
};

struct EnumerateOptions {
  std::size_t order = 0;
  std::size_t workers = 1;
  std::string resume;
  std::size_t max_count = 0;  // 0 = unbounded
  bool list = false;
  bool dedup = false;
  SweepPlan sweep;
};

void run_worker(const EnumerateOptions& options, WorkerSlice slice, WorkerResult& out) {
  auto stream = options.resume.empty()
                    ? OrderedSemigroupStream(options.order, slice)
                    : OrderedSemigroupStream(options.order, options.resume, slice);
  auto record = [&](const BundleResult& b, const OrderedSemigroup& s) {
    auto& tally = out.tallies[b.id];
    if (b.applicable) ++tally.applicable;
    if (b.disagrees()) {
      ++tally.disagreements;
      out.disagreement_reports.push_back("structure " + transcript_line(s) + "\n" +
                                         serialize_document(s) + format_bundle(b));
    }
  };
  while (auto s = stream.next()) {
    const std::string line = transcript_line(*s);
    out.last_token = stream.token();
    out.transcript.emplace_back(stream_position(out.last_token), line);
    ++out.count;
    for (const auto& id : options.sweep.bundles) record(equivalence_bundle(*s, id), *s);
    for (const auto& id : options.sweep.theorems) record(structure_theorem_check(*s, id), *s);
    if (options.dedup) out.canonical.insert(canonical_form(*s));
    if (options.max_count && out.count == options.max_count) break;
  }
}

int cmd_enumerate(const EnumerateOptions& options) {
  if (options.workers == 0) throw Error("--workers must be positive");
  if (options.workers > 1 && options.max_count)
    throw Error("--max-count needs a single worker");

  std::vector<WorkerResult> results(options.workers);
  std::vector<std::thread> threads;
  std::mutex error_mutex;
  std::exception_ptr error;
  for (std::size_t w = 0; w < options.workers; ++w)
    threads.emplace_back([&, w] {
      try {
        run_worker(options, WorkerSlice{w, options.workers}, results[w]);
      } catch (...) {
        std::lock_guard lock(error_mutex);
        if (!error) error = std::current_exception();
      }
    });
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);

  std::vector<std::pair<StreamPosition, std::string>> transcript;
  std::map<std::string, IdTally> tallies;
  std::set<std::string> canonical;
  std::size_t count = 0;
  for (auto& r : results) {
    transcript.insert(transcript.end(), r.transcript.begin(), r.transcript.end());
    for (const auto& [id, t] : r.tallies) {
      tallies[id].applicable += t.applicable;
      tallies[id].disagreements += t.disagreements;
    }
    canonical.merge(r.canonical);
    count += r.count;
    for (const auto& report : r.disagreement_reports) std::cout << "DISAGREE " << report;
  }
  // Restore the single-worker order so the hash does not depend on --workers.
  if (options.workers > 1) std::sort(transcript.begin(), transcript.end());

  TranscriptHash hash;
  for (const auto& [position, line] : transcript) {
    hash.add(line);
    if (options.list) std::cout << line << '\n';
  }

  std::cout << "order: " << options.order << '\n'
            << "structures: " << count << '\n';
  if (options.dedup) std::cout << "up to isomorphism: " << canonical.size() << '\n';
  std::cout << "transcript hash: " << hash.hex() << '\n';
  if (options.workers == 1 && !results[0].last_token.empty())
    std::cout << "last token: " << results[0].last_token << '\n';

  std::size_t disagreements = 0;
  for (const auto& [id, t] : tallies) {
    std::cout << id << ": applicable " << t.applicable << ", disagreements " << t.disagreements
              << '\n';
    disagreements += t.disagreements;
  }
  return disagreements ? kDisagree : kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite ordered semigroups: validation, classification, decompositions"};
  app.require_subcommand(1);

  std::string path;
  bool close_order = false;
  bool as_json = false;
  auto add_file = [&](CLI::App* sub) {
    sub->add_option("file", path, "structure document (.osg or .sgp)")->required();
    sub->add_flag("--close-order", close_order, "take the transitive closure of the order pairs");
  };

  auto* validate = app.add_subcommand("validate", "parse and validate a document");
  add_file(validate);

  auto* classify_cmd = app.add_subcommand("classify", "evaluate every predicate and bundle");
  add_file(classify_cmd);
  classify_cmd->add_flag("--json", as_json, "emit the JSON report");

  std::string kind;
  auto* green = app.add_subcommand("green", "print a Green's relation");
  add_file(green);
  green->add_option("--kind", kind, "L, R, J or H")->required();
  green->add_flag("--json", as_json, "emit JSON");

  std::string rho = "least-csc";
  auto* decompose_cmd = app.add_subcommand("decompose", "complete semilattice decomposition");
  add_file(decompose_cmd);
  decompose_cmd->add_option("--rho", rho, "least-csc, L, R, J or H")->capture_default_str();
  decompose_cmd->add_flag("--json", as_json, "emit JSON");

  auto* power = app.add_subcommand("power", "print P_f(F) for an .sgp document");
  power->add_option("file", path, "unordered semigroup (.sgp)")->required();

  std::string bundle, theorem, property;
  auto* check = app.add_subcommand("check", "evaluate one bundle or structure theorem");
  add_file(check);
  auto* bundle_opt = check->add_option("--bundle", bundle, "equivalence bundle id");
  auto* theorem_opt = check->add_option("--theorem", theorem, "structure theorem id");
  auto* power_opt =
      check->add_option("--power", property, "t_simple, left_group_like or completely_regular");
  bundle_opt->excludes(theorem_opt)->excludes(power_opt);
  theorem_opt->excludes(power_opt);
  check->add_flag("--json", as_json, "emit JSON");

  EnumerateOptions enumerate_options;
  std::string sweep;
  auto* enumerate = app.add_subcommand("enumerate", "enumerate labelled ordered semigroups");
  enumerate->add_option("--order", enumerate_options.order, "number of elements")->required();
  enumerate->add_option("--sweep", sweep, "'all' or a comma-separated list of ids");
  enumerate->add_option("--workers", enumerate_options.workers, "worker threads");
  enumerate->add_option("--resume", enumerate_options.resume, "continue after this token");
  enumerate->add_option("--max-count", enumerate_options.max_count, "stop after this many");
  enumerate->add_flag("--list", enumerate_options.list, "print every transcript line");
  enumerate->add_flag("--dedup", enumerate_options.dedup, "count isomorphism classes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*validate) return cmd_validate(path, close_order);
    if (*classify_cmd) return cmd_classify(path, close_order, as_json);
    if (*green) return cmd_green(path, close_order, kind, as_json);
    if (*decompose_cmd) return cmd_decompose(path, close_order, rho, as_json);
    if (*power) return cmd_power(path);
    if (*check) {
      if (bundle.empty() && theorem.empty() && property.empty())
        throw Error("check needs --bundle, --theorem or --power");
      return cmd_check(path, close_order, bundle, theorem, property, as_json);
    }
    if (*enumerate) {
      enumerate_options.sweep = parse_sweep(sweep);
      return cmd_enumerate(enumerate_options);
    }
  } catch (const ordsgp::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}
