#include "cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "tdom/composites.hpp"
#include "tdom/families.hpp"
#include "tdom/graph6.hpp"
#include "tdom/invariants.hpp"
#include "tdom/quasitree.hpp"
#include "tdom/verifier.hpp"

namespace tdom::cli {

namespace {

/// Operational failure: reported on stderr, exit code 1.
class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

constexpr const char* kOutputDirEnv = "TDOM_OUTPUT_DIR";

std::string slurp(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
  } else {
    std::ifstream file(path);
    if (!file) throw Failure("cannot open '" + path + "'");
    buf << file.rdbuf();
  }
  return buf.str();
}

Graph read_graph(const std::string& path, std::istream& in) { return parse_graph_text(slurp(path, in)); }

// Resolves an output path: explicit value, else $TDOM_OUTPUT_DIR/<fallback>, else empty.
std::string resolve_output(const std::string& explicit_path, const std::string& fallback) {
  if (!explicit_path.empty()) return explicit_path;
  if (const char* dir = std::getenv(kOutputDirEnv); dir && *dir) {
    std::filesystem::create_directories(dir);
    return (std::filesystem::path(dir) / fallback).string();
  }
  return {};
}

// Writes via `emit` to `path`, or to `out` when path is "-".
template <typename Emit>
void write_to(const std::string& path, std::ostream& out, Emit emit) {
  if (path == "-") {
    emit(out);
    return;
  }
  std::ofstream file(path);
  if (!file) throw Failure("cannot write '" + path + "'");
  emit(file);
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Failure("invalid integer '" + item + "' in list '" + text + "'");
    }
  }
  return out;
}

struct ComputeOptions {
  std::string input = "-";
  bool json = false;
};

int compute(const ComputeOptions& o, std::istream& in, std::ostream& out, std::ostream& err) {
  const Graph g = read_graph(o.input, in);
  const AnnihilationResult ann = annihilation_number(g);
  DomResult dom;
  try {
    dom = total_domination_number(g);
  } catch (const UndefinedInvariant& e) {
    if (o.json) {
      out << Json{{"graph6", write_graph6(g)}, {"n", g.order()}, {"m", g.size()}, {"a", ann.a},
                  {"error", e.what()}}
                 .dump()
          << '\n';
    }
    err << "tdom: " << e.what() << '\n';
    return kExitError;
  }
  const int slack = ann.a + 1 - dom.gamma_t;
  if (o.json) {
    Json j;
    j["graph6"] = write_graph6(g);
    j["n"] = g.order();
    j["m"] = g.size();
    j["gamma_t"] = dom.gamma_t;
    j["a"] = ann.a;
    j["slack"] = slack;
    j["equality"] = slack == 0;
    j["dominating_set"] = dom.witness.to_vector();
    j["annihilation_set"] = ann.set.to_vector();
    j["annihilation_degree_sum"] = ann.degree_sum;
    out << j.dump() << '\n';
  } else {
    out << "n=" << g.order() << " m=" << g.size() << " gamma_t=" << dom.gamma_t << " a=" << ann.a
        << " slack=" << slack << '\n'
        << "total_dominating_set=" << to_string(dom.witness) << '\n'
        << "annihilation_set=" << to_string(ann.set) << " degree_sum=" << ann.degree_sum << '\n';
  }
  return kExitOk;
}

struct TransformOptions {
  std::string kind;
  std::vector<std::string> inputs;
  std::string perm;
  int v = 0;
  int u = -1;
};

int transform(const TransformOptions& o, std::istream& in, std::ostream& out) {
  const bool binary = o.kind == "bijection" || o.kind == "identify";
  const std::size_t want = binary ? 2 : 1;
  std::vector<std::string> inputs = o.inputs;
  if (inputs.empty()) inputs.push_back("-");
  if (inputs.size() != want) {
    throw Failure("transform " + o.kind + " takes " + std::to_string(want) + " input(s)");
  }
  if (binary && inputs[0] == "-" && inputs[1] == "-") throw Failure("only one input may be read from stdin");

  const Graph g = read_graph(inputs[0], in);
  Graph result;
  if (o.kind == "triangulate") {
    result = triangulate(g);
  } else if (o.kind == "double") {
    result = double_graph(g);
  } else if (o.kind == "mycielskian") {
    result = mycielskian(g);
  } else if (o.kind == "bijection") {
    const Graph h = read_graph(inputs[1], in);
    BijectionSpec f = o.perm.empty() ? BijectionSpec::identity(g.order()) : BijectionSpec(parse_int_list(o.perm));
    result = bijection_graph(g, h, f);
  } else {
    const Graph h = read_graph(inputs[1], in);
    int u = o.u;
    if (u < 0) {
      VertexSet uni = universal_vertices(h);
      if (uni.empty()) throw Failure("identify: H has no universal vertex");
      u = uni.first();
    }
    result = universally_identify(g, o.v, h, u);
  }
  out << write_graph6(result) << '\n';
  return kExitOk;
}

struct GenerateOptions {
  std::string family = "trees";
  int min_n = 1;
  int max_n = 8;
  int cls = 0;
  int count = 10;
  std::uint64_t seed = kDefaultSeed;
  std::string output;
  std::string sidecar;
};

int generate(const GenerateOptions& o, std::ostream& out) {
  std::vector<std::string> lines;
  Json sidecar = Json::array();
  if (o.family == "trees") {
    for (int n = std::max(o.min_n, 1); n <= o.max_n; ++n) {
      for (const Graph& t : enumerate_free_trees(n)) lines.push_back(write_graph6(t));
    }
  } else if (o.family == "gamma") {
    for (const GammaTree& t : enumerate_gamma(o.max_n)) {
      if (t.tree().order() < o.min_n) continue;
      lines.push_back(write_graph6(t.tree()));
      Json trace = Json::array();
      for (const GammaStep& s : t.trace()) {
        trace.push_back({{"op", s.op == GammaOp::O1 ? "o1" : "o2"}, {"at", s.at}, {"added", s.added}});
      }
      sidecar.push_back({{"graph6", lines.back()}, {"status", t.status_string()}, {"trace", std::move(trace)}});
    }
  } else if (o.family == "quasi-trees") {
    for (int n = std::max(o.min_n, 3); n <= o.max_n; ++n) {
      for (const Graph& g : enumerate_quasi_trees(n)) lines.push_back(write_graph6(g));
    }
  } else if (o.family == "qt-class") {
    Rng rng(o.seed);
    for (int k = 1; k <= 6; ++k) {
      if (o.cls != 0 && o.cls != k) continue;
      for (int i = 0; i < o.count; ++i) {
        QTInstance q = random_qt(static_cast<QTClass>(k), rng, uniform_int(rng, 1, 3));
        lines.push_back(write_graph6(q.graph));
        sidecar.push_back(to_json(q));
      }
    }
  } else {
    throw Failure("unknown generate family '" + o.family + "' (trees, gamma, quasi-trees, qt-class)");
  }

  const std::string path = o.output.empty() ? "-" : o.output;
  write_to(path, out, [&](std::ostream& os) {
    for (const std::string& l : lines) os << l << '\n';
  });
  if (!o.sidecar.empty()) {
    write_to(o.sidecar, out, [&](std::ostream& os) {
      for (const Json& j : sidecar) os << j.dump() << '\n';
    });
  }
  return kExitOk;
}

struct CampaignOptions {
  std::string family = "trees";
  int min_n = 2;
  int max_n = 10;
  std::uint64_t seed = kDefaultSeed;
  int count = 200;
  int jobs = 1;
  std::string output;
  std::string csv;
  std::string summary;
};

Campaign to_campaign(const CampaignOptions& o) {
  Campaign c;
  c.family = parse_family(o.family);
  c.min_n = o.min_n;
  c.max_n = o.max_n;
  c.seed = o.seed;
  c.count = o.count;
  c.jobs = o.jobs;
  return c;
}

int verify(const CampaignOptions& o, std::ostream& out, std::ostream& err) {
  if (o.family == "lemmas") {
    LemmaReport r = replay_lemmas(o.seed, o.count);
    const std::string path = resolve_output(o.output, "lemmas.json");
    write_to(path.empty() ? "-" : path, out, [&](std::ostream& os) { os << to_json(r).dump(2) << '\n'; });
    if (!r.clean()) {
      err << "tdom: " << r.violations.size() << " lemma inequality violation(s)\n";
      return kExitCounterexample;
    }
    return kExitOk;
  }

  const CampaignReport report = verify_conjecture(to_campaign(o));
  const std::string records = resolve_output(o.output, o.family + ".jsonl");
  if (!records.empty()) write_to(records, out, [&](std::ostream& os) { write_jsonl(report, os); });
  if (!o.csv.empty()) write_to(o.csv, out, [&](std::ostream& os) { write_csv(report, os); });
  const std::string summary = resolve_output(o.summary, o.family + ".summary.json");
  const Json sj = summary_json(report);
  if (!summary.empty() && summary != "-") {
    write_to(summary, out, [&](std::ostream& os) { os << sj.dump(2) << '\n'; });
  }
  if (records != "-") out << sj.dump() << '\n';

  for (const VerificationRecord& r : report.records) {
    if (r.counterexample) err << "tdom: COUNTEREXAMPLE " << r.graph6 << " (" << r.family << ")\n";
    if (r.error) err << "tdom: solver failure on " << r.graph6 << ": " << *r.error << '\n';
  }
  if (report.summary.counterexample_count > 0) return kExitCounterexample;
  if (report.summary.error_count > 0) return kExitError;
  return kExitOk;
}

int catalog(const CampaignOptions& o, std::ostream& out, std::ostream& err) {
  const CampaignReport report = verify_conjecture(to_campaign(o));
  const std::vector<CatalogEntry> entries = equality_catalog(report);
  const std::string path = resolve_output(o.output, o.family + ".catalog.jsonl");
  write_to(path.empty() ? "-" : path, out, [&](std::ostream& os) {
    for (const CatalogEntry& e : entries) os << to_json(e).dump() << '\n';
  });
  if (!o.csv.empty()) {
    write_to(o.csv, out, [&](std::ostream& os) {
      os << "graph6,n,m,gamma_t,a,family,type,girth,min_degree,leaves,quasi_vertices\n";
      for (const CatalogEntry& e : entries) {
        const Json& f = e.features;
        os << e.record.graph6 << ',' << e.record.n << ',' << e.record.m << ',' << e.record.gamma_t << ','
           << e.record.a << ',' << e.record.family << ',' << f["type"].get<std::string>() << ','
           << (f["girth"].is_null() ? std::string() : std::to_string(f["girth"].get<int>())) << ','
           << f["min_degree"] << ',' << f["leaves"] << ',' << f["quasi_vertices"] << '\n';
      }
    });
  }
  if (report.summary.counterexample_count > 0) {
    err << "tdom: campaign produced counterexamples\n";
    return kExitCounterexample;
  }
  return report.summary.error_count > 0 ? kExitError : kExitOk;
}

void add_campaign_flags(CLI::App* sub, CampaignOptions& o, bool allow_lemmas) {
  std::string families = "trees, gamma, quasi-trees, qt-classes, composites";
  if (allow_lemmas) families += ", lemmas";
  sub->add_option("--family", o.family, "Instance family: " + families)->capture_default_str();
  sub->add_option("--min-n", o.min_n, "Smallest order")->capture_default_str();
  sub->add_option("--max-n", o.max_n, "Largest order")->capture_default_str();
  sub->add_option("--seed", o.seed, "Seed for random families")->capture_default_str();
  sub->add_option("--count", o.count, "Instances per class or construction")->capture_default_str();
  sub->add_option("--jobs", o.jobs, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  sub->add_option("-o,--output", o.output, "Records file ('-' for stdout; default $TDOM_OUTPUT_DIR)");
  sub->add_option("--csv", o.csv, "Also write a CSV projection here");
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Total domination and annihilation numbers: compute, transform, generate, verify"};
  app.name("tdom");
  app.require_subcommand(1);

  ComputeOptions compute_opts;
  auto* compute_cmd = app.add_subcommand("compute", "Compute n, m, gamma_t, a and witnesses for one graph");
  compute_cmd->add_option("input", compute_opts.input, "graph6 or edge-list file ('-' for stdin)")
      ->capture_default_str();
  compute_cmd->add_flag("--json", compute_opts.json, "Emit one JSON object");

  TransformOptions transform_opts;
  auto* transform_cmd = app.add_subcommand("transform", "Apply a graph construction; writes graph6");
  transform_cmd->add_option("kind", transform_opts.kind, "triangulate | double | mycielskian | bijection | identify")
      ->required()
      ->check(CLI::IsMember({"triangulate", "double", "mycielskian", "bijection", "identify"}));
  transform_cmd->add_option("inputs", transform_opts.inputs, "Input graph(s); two for bijection and identify");
  transform_cmd->add_option("--perm", transform_opts.perm, "Bijection as comma-separated images (default identity)");
  transform_cmd->add_option("--v", transform_opts.v, "identify: vertex of G")->capture_default_str();
  transform_cmd->add_option("--u", transform_opts.u, "identify: universal vertex of H (default: smallest)");

  GenerateOptions gen_opts;
  auto* gen_cmd = app.add_subcommand("generate", "Emit a family as graph6 lines");
  gen_cmd->add_option("--family", gen_opts.family, "trees | gamma | quasi-trees | qt-class")->capture_default_str();
  gen_cmd->add_option("--min-n", gen_opts.min_n)->capture_default_str();
  gen_cmd->add_option("--max-n", gen_opts.max_n)->capture_default_str();
  gen_cmd->add_option("--class", gen_opts.cls, "qt-class: 1..6, 0 for all")->capture_default_str()->check(CLI::Range(0, 6));
  gen_cmd->add_option("--count", gen_opts.count, "qt-class: instances per class")->capture_default_str();
  gen_cmd->add_option("--seed", gen_opts.seed)->capture_default_str();
  gen_cmd->add_option("-o,--output", gen_opts.output, "graph6 output file (default stdout)");
  gen_cmd->add_option("--sidecar", gen_opts.sidecar, "gamma / qt-class: JSON-lines provenance file");

  CampaignOptions verify_opts;
  auto* verify_cmd = app.add_subcommand("verify", "Run a verification campaign (exit 2 on counterexample)");
  add_campaign_flags(verify_cmd, verify_opts, true);
  verify_cmd->add_option("--summary", verify_opts.summary, "Summary JSON file");

  CampaignOptions catalog_opts;
  auto* catalog_cmd = app.add_subcommand("catalog", "List equality cases with structural features");
  add_campaign_flags(catalog_cmd, catalog_opts, false);

  std::vector<const char*> argv{"tdom"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitError;
  }

  try {
    if (*compute_cmd) return compute(compute_opts, in, out, err);
    if (*transform_cmd) return transform(transform_opts, in, out);
    if (*gen_cmd) return generate(gen_opts, out);
    if (*verify_cmd) return verify(verify_opts, out, err);
    if (*catalog_cmd) return catalog(catalog_opts, out, err);
  } catch (const std::exception& e) {
    err << "tdom: " << e.what() << '\n';
    return kExitError;
  }
  return kExitError;
}

}  // namespace tdom::cli
