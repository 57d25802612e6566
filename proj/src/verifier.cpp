#include "tdom/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <mutex>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "tdom/composites.hpp"
#include "tdom/families.hpp"
#include "tdom/graph6.hpp"

namespace tdom {

Json to_json(const VerificationRecord& r) {
  Json j;
  j["graph6"] = r.graph6;
  j["n"] = r.n;
  j["m"] = r.m;
  j["gamma_t"] = r.gamma_t;
  j["a"] = r.a;
  j["slack"] = r.slack;
  j["equality"] = r.equality;
  j["family"] = r.family;
  j["counterexample"] = r.counterexample;
  if (!r.provenance.is_null()) j["provenance"] = r.provenance;
  if (r.error) j["error"] = *r.error;
  return j;
}

VerificationRecord record_from_json(const Json& j) {
  VerificationRecord r;
  r.graph6 = j.at("graph6").get<std::string>();
  r.n = j.at("n").get<int>();
  r.m = j.at("m").get<int>();
  r.gamma_t = j.at("gamma_t").get<int>();
  r.a = j.at("a").get<int>();
  r.slack = j.at("slack").get<int>();
  r.equality = j.at("equality").get<bool>();
  r.family = j.at("family").get<std::string>();
  r.counterexample = j.value("counterexample", false);
  if (j.contains("provenance")) r.provenance = j.at("provenance");
  if (j.contains("error")) r.error = j.at("error").get<std::string>();
  return r;
}

std::vector<std::string> sanity_violations(const Graph& g, const DomResult& dom,
                                           const AnnihilationResult& ann) {
  std::vector<std::string> out;
  const int n = g.order();
  if (ann.a < n / 2) out.push_back("a(G) < floor(n/2)");
  if (ann.degree_sum > g.size() || ann.set.size() != ann.a) out.push_back("annihilation set inconsistent");
  if (!is_total_dominating(dom.witness, g) || dom.witness.size() != dom.gamma_t) {
    out.push_back("domination witness inconsistent");
  }
  if (n >= 3 && is_connected(g) && 3 * dom.gamma_t > 2 * n) out.push_back("gamma_t > 2n/3");
  if (g.min_degree() >= 3 && dom.gamma_t > n / 2) out.push_back("min degree >= 3 but gamma_t > floor(n/2)");
  return out;
}

namespace {

struct Solved {
  VerificationRecord record;
  std::vector<std::string> sanity;
};

Solved solve(const Instance& inst) {
  Solved s;
  VerificationRecord& r = s.record;
  const Graph& g = inst.graph;
  r.graph6 = write_graph6(g);
  r.n = g.order();
  r.m = g.size();
  r.family = inst.family;
  r.provenance = inst.provenance;
  try {
    DomResult dom = total_domination_number(g);
    AnnihilationResult ann = annihilation_number(g);
    if (ann.a + 1 - dom.gamma_t < 0) {
      if (g.order() <= kOracleMaxOrder) {
        DomResult check = total_domination_oracle(g);
        if (check.gamma_t != dom.gamma_t) {
          r.error = "branch-and-bound disagrees with oracle (" + std::to_string(dom.gamma_t) + " vs " +
                    std::to_string(check.gamma_t) + ")";
        }
        dom = check;
      }
      r.counterexample = ann.a + 1 - dom.gamma_t < 0;
    }
    r.gamma_t = dom.gamma_t;
    r.a = ann.a;
    r.slack = r.a + 1 - r.gamma_t;
    r.equality = r.slack == 0;
    s.sanity = sanity_violations(g, dom, ann);
  } catch (const std::exception& e) {
    r.error = e.what();
  }
  return s;
}

}  // namespace

VerificationRecord verify_instance(const Graph& g, std::string family, Json provenance) {
  return solve(Instance{g, std::move(family), std::move(provenance)}).record;
}

std::vector<Graph> enumerate_quasi_trees(int n) {
  if (n < 3 || n > 12) throw GraphError("quasi-tree enumeration supports 3 <= n <= 12");
  std::vector<std::pair<CanonicalForm, Graph>> found;
  std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
  const std::uint64_t subsets = std::uint64_t{1} << (n - 1);
  for (const Graph& tree : enumerate_free_trees(n - 1)) {
    for (std::uint64_t mask = 3; mask < subsets; ++mask) {
      if (std::popcount(mask) < 2) continue;
      Graph g = tree.with_vertex(VertexSet(mask));
      CanonicalForm f = canonical_form(g);
      if (seen.insert(f).second) found.emplace_back(std::move(f), std::move(g));
    }
  }
  std::ranges::sort(found, [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Graph> out;
  out.reserve(found.size());
  for (auto& [f, g] : found) out.push_back(std::move(g));
  return out;
}

std::string to_string(FamilySelector f) {
  switch (f) {
    case FamilySelector::Trees: return "trees";
    case FamilySelector::Gamma: return "gamma";
    case FamilySelector::QuasiTrees: return "quasi-trees";
    case FamilySelector::QTClasses: return "qt-classes";
    case FamilySelector::Composites: return "composites";
  }
  return "?";
}

FamilySelector parse_family(const std::string& name) {
  for (auto f : {FamilySelector::Trees, FamilySelector::Gamma, FamilySelector::QuasiTrees,
                 FamilySelector::QTClasses, FamilySelector::Composites}) {
    if (to_string(f) == name) return f;
  }
  throw std::invalid_argument("unknown family '" + name +
                              "' (expected trees, gamma, quasi-trees, qt-classes or composites)");
}

Json to_json(const QTInstance& q) {
  Json j;
  j["class"] = to_string(q.cls);
  j["graph6"] = write_graph6(q.graph);
  j["base_graph6"] = write_graph6(q.base.tree());
  j["base_status"] = q.base.status_string();
  Json trace = Json::array();
  for (const GammaStep& s : q.base.trace()) {
    trace.push_back({{"op", s.op == GammaOp::O1 ? "o1" : "o2"}, {"at", s.at}, {"added", s.added}});
  }
  j["base_trace"] = std::move(trace);
  j["last_op_vertices"] = q.last_op_vertices.to_vector();
  j["y"] = q.y;
  j["hub"] = q.hub;
  j["near"] = q.near.to_vector();
  j["far"] = q.far.to_vector();
  return j;
}

namespace {

Json gamma_provenance(const GammaTree& t) {
  Json trace = Json::array();
  for (const GammaStep& s : t.trace()) {
    trace.push_back({{"op", s.op == GammaOp::O1 ? "o1" : "o2"}, {"at", s.at}, {"added", s.added}});
  }
  return {{"status", t.status_string()}, {"trace", std::move(trace)}};
}

// Random graph on k vertices whose vertex 0 is universal.
Graph random_with_universal(Rng& rng, int k) {
  GraphBuilder b(k);
  for (int x = 1; x < k; ++x) b.add_edge(0, x);
  for (int x = 1; x < k; ++x) {
    for (int y = x + 1; y < k; ++y) {
      if (uniform_int(rng, 0, 3) == 0) b.add_edge(x, y);
    }
  }
  return b.build();
}

void composite_instances(const Campaign& c, Rng& rng, std::vector<Instance>& out) {
  const int lo = std::max(c.min_n, 2);
  const int hi = std::min(c.max_n, 12);
  if (lo > hi) return;
  for (int i = 0; i < c.count; ++i) {
    const int n = uniform_int(rng, lo, hi);
    const double p = uniform_int(rng, 1, 5) / 10.0;
    const Graph g = random_connected_graph(rng, n, p, Graph::kMaxOrder - n);
    const std::string base = write_graph6(g);

    out.push_back({triangulate(g), "composite:triangulate", {{"base", base}}});
    out.push_back({double_graph(g), "composite:double", {{"base", base}}});

    const Graph h = random_connected_graph(rng, n, p);
    BijectionSpec f(random_permutation(rng, n));
    out.push_back({bijection_graph(g, h, f), "composite:bijection",
                   {{"base", base}, {"other", write_graph6(h)}, {"bijection", f.image()}}});

    out.push_back({mycielskian(g), "composite:mycielskian", {{"base", base}}});

    const int threshold = identify_order_threshold(n);
    const int n_h = std::min(uniform_int(rng, threshold, threshold + 3), Graph::kMaxOrder + 1 - n);
    const Graph hub_graph = random_with_universal(rng, n_h);
    const int v = uniform_int(rng, 0, n - 1);
    out.push_back({universally_identify(g, v, hub_graph, 0), "composite:identify",
                   {{"base", base},
                    {"v", v},
                    {"other", write_graph6(hub_graph)},
                    {"u", 0},
                    // Within one of the order threshold: flagged for readers of the report.
                    {"near_threshold", n_h <= threshold + 1}}});

    const int side = uniform_int(rng, 2, 8);
    int delta = side + 1;
    while (delta < (side + delta) / 4 + 4) ++delta;
    delta += uniform_int(rng, 0, 2);
    out.push_back({cut_vertex_instance(rng, side, delta), "composite:cut-vertex",
                   {{"side", side}, {"delta", delta}}});
  }
}

}  // namespace

std::vector<Instance> campaign_instances(const Campaign& c) {
  std::vector<Instance> out;
  Rng rng(c.seed);
  switch (c.family) {
    case FamilySelector::Trees:
      for (int n = std::max(c.min_n, 2); n <= c.max_n; ++n) {
        for (Graph& t : enumerate_free_trees(n)) out.push_back({std::move(t), "tree", {}});
      }
      break;
    case FamilySelector::Gamma:
      for (const GammaTree& t : enumerate_gamma(c.max_n)) {
        if (t.tree().order() >= c.min_n) out.push_back({t.tree(), "tree", gamma_provenance(t)});
      }
      break;
    case FamilySelector::QuasiTrees:
      for (int n = std::max(c.min_n, 3); n <= c.max_n; ++n) {
        for (Graph& g : enumerate_quasi_trees(n)) {
          QuasiTreeType type = classify_type(g);
          Json prov;
          if (type.witness) prov["witness"] = *type.witness;
          out.push_back({std::move(g),
                         type.kind == QuasiTreeType::Type1 ? "quasi-tree-type1" : "quasi-tree-type2",
                         std::move(prov)});
        }
      }
      break;
    case FamilySelector::QTClasses:
      for (int k = 1; k <= 6; ++k) {
        const auto cls = static_cast<QTClass>(k);
        for (int i = 0; i < c.count; ++i) {
          QTInstance q = random_qt(cls, rng, uniform_int(rng, 1, 3));
          out.push_back({q.graph, "qt-class:" + std::to_string(k), to_json(q)});
        }
      }
      break;
    case FamilySelector::Composites:
      composite_instances(c, rng, out);
      break;
  }
  return out;
}

CampaignReport run_instances(const Campaign& c, const std::vector<Instance>& instances) {
  const auto start = std::chrono::steady_clock::now();
  std::vector<Solved> solved(instances.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < instances.size(); i = next++) solved[i] = solve(instances[i]);
  };
  {
    std::vector<std::jthread> pool;
    for (int j = 1; j < std::max(c.jobs, 1); ++j) pool.emplace_back(worker);
    worker();
  }

  CampaignReport report;
  report.campaign = c;
  report.records.reserve(solved.size());
  for (Solved& s : solved) {
    for (const std::string& msg : s.sanity) {
      report.sanity_failures.push_back(s.record.graph6 + " (" + s.record.family + "): " + msg);
    }
    report.records.push_back(std::move(s.record));
  }
  std::ranges::sort(report.records, [](const VerificationRecord& x, const VerificationRecord& y) {
    return std::tie(x.graph6, x.family) < std::tie(y.graph6, y.family) ||
           (std::tie(x.graph6, x.family) == std::tie(y.graph6, y.family) &&
            x.provenance.dump() < y.provenance.dump());
  });
  std::ranges::sort(report.sanity_failures);

  CampaignSummary& sum = report.summary;
  sum.instances = report.records.size();
  sum.sanity_violation_count = report.sanity_failures.size();
  for (const VerificationRecord& r : report.records) {
    if (r.error) {
      ++sum.error_count;
      continue;
    }
    sum.equality_count += r.equality;
    sum.counterexample_count += r.counterexample;
    if (!sum.min_slack || r.slack < *sum.min_slack) sum.min_slack = r.slack;
  }
  sum.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

CampaignReport verify_conjecture(const Campaign& c) { return run_instances(c, campaign_instances(c)); }

void write_jsonl(const CampaignReport& r, std::ostream& out) {
  for (const VerificationRecord& rec : r.records) {
    Json j = to_json(rec);
    if (rec.counterexample) j["flag"] = "COUNTEREXAMPLE";
    out << j.dump() << '\n';
  }
}

void write_csv(const CampaignReport& r, std::ostream& out) {
  out << "graph6,n,m,gamma_t,a,slack,equality,family,counterexample,error\n";
  for (const VerificationRecord& rec : r.records) {
    // graph6 bytes lie in '?'..'~', so the field never needs quoting.
    out << rec.graph6 << ',' << rec.n << ',' << rec.m << ',' << rec.gamma_t << ',' << rec.a << ','
        << rec.slack << ',' << (rec.equality ? 1 : 0) << ',' << rec.family << ','
        << (rec.counterexample ? 1 : 0) << ',' << (rec.error ? "\"" + *rec.error + "\"" : "") << '\n';
  }
}

Json summary_json(const CampaignReport& r) {
  const Campaign& c = r.campaign;
  const CampaignSummary& s = r.summary;
  Json j;
  j["family"] = to_string(c.family);
  j["min_n"] = c.min_n;
  j["max_n"] = c.max_n;
  j["seed"] = c.seed;
  j["count"] = c.count;
  j["instances"] = s.instances;
  j["equality_count"] = s.equality_count;
  j["counterexample_count"] = s.counterexample_count;
  j["error_count"] = s.error_count;
  j["sanity_violation_count"] = s.sanity_violation_count;
  j["min_slack"] = s.min_slack ? Json(*s.min_slack) : Json(nullptr);
  j["sanity_failures"] = r.sanity_failures;
  j["elapsed_seconds"] = s.elapsed_seconds;
  return j;
}

std::vector<CatalogEntry> equality_catalog(const CampaignReport& report) {
  std::vector<CatalogEntry> out;
  for (const VerificationRecord& r : report.records) {
    if (r.error || !r.equality) continue;
    const Graph g = parse_graph6(r.graph6);
    CatalogEntry e{r, Json{}, std::nullopt};
    std::string type = "other";
    if (is_tree(g)) {
      type = "tree";
    } else if (is_nontrivial_quasi_tree(g)) {
      type = classify_type(g).kind == QuasiTreeType::Type1 ? "type1" : "type2";
    }
    e.features["type"] = type;
    const auto gir = girth(g);
    e.features["girth"] = gir ? Json(*gir) : Json(nullptr);
    e.features["min_degree"] = g.min_degree();
    e.features["leaves"] = g.leaf_count();
    e.features["quasi_vertices"] = quasi_vertices(g).size();
    if (g.order() <= kOracleMaxOrder) {
      e.oracle_confirmed = annihilation_number(g).a + 1 - total_domination_oracle(g).gamma_t == 0;
    }
    out.push_back(std::move(e));
  }
  return out;
}

std::vector<CatalogEntry> equality_catalog(const Campaign& c) { return equality_catalog(verify_conjecture(c)); }

Json to_json(const CatalogEntry& e) {
  Json j = to_json(e.record);
  j["features"] = e.features;
  j["oracle_confirmed"] = e.oracle_confirmed ? Json(*e.oracle_confirmed) : Json(nullptr);
  return j;
}

namespace {

int lemma_edge_offset(const QTInstance& q) {
  switch (q.cls) {
    case QTClass::QT1: return 4;
    case QTClass::QT2: return 3;
    case QTClass::QT3: return q.t() + 4;
    case QTClass::QT4: return q.t() + 3;
    case QTClass::QT5: return q.t1() + 4;
    case QTClass::QT6: return q.t1() + 3;
  }
  return 0;
}

// Position of the attachment vertex y once the removed vertices are gone.
int reduced_index(int v, VertexSet removed) { return v - (removed & VertexSet::first_n(v)).size(); }

void replay_one(const QTInstance& q, LemmaReport& report, ClassReplay& tally) {
  auto fail = [&](std::string check) { report.violations.push_back({q.cls, std::move(check), to_json(q)}); };
  const Graph& g = q.graph;
  const Graph reduced = lemma_reduction(q);
  const VertexSet removed = lemma_removed(q);

  if (!quasi_vertices(g).contains(q.hub)) fail("hub is not a quasi-vertex");
  if (classify_type(g).kind != QuasiTreeType::Type1) fail("instance is not type-1");
  if (g.size() != reduced.size() + lemma_edge_offset(q)) fail("edge-count identity");

  const DomResult dom = total_domination_number(g);
  const DomResult dom_r = total_domination_number(reduced);
  const int a = annihilation_number(g).a;
  const int a_r = annihilation_number(reduced).a;

  if (a < a_r + 2) fail("a(G) >= a(G') + 2");
  if (a + 1 < dom.gamma_t) fail("gamma_t(G) <= a(G) + 1");
  if (a_r + 1 < dom_r.gamma_t) fail("gamma_t(G') <= a(G') + 1");

  const bool unicyclic = q.cls == QTClass::QT3 && q.t() == 2;
  if (unicyclic) {
    ++tally.unicyclic_routed;
    if (g.size() != g.order()) fail("QT3 with t = 2 is not unicyclic");
  } else if (dom.gamma_t > dom_r.gamma_t + 2) {
    fail("gamma_t(G) <= gamma_t(G') + 2");
  }

  const int y_deg = reduced.degree(reduced_index(q.y, removed));
  switch (q.cls) {
    case QTClass::QT1:
    case QTClass::QT5:
      if (y_deg < 1) fail("d_G'(y) >= 1");
      break;
    case QTClass::QT3:
      if (y_deg != 1) fail("y is a leaf of G'");
      break;
    default:
      if (y_deg < 2) fail("d_G'(y) >= 2");
  }
  if ((q.cls == QTClass::QT3 || q.cls == QTClass::QT4) && !gamma_membership(reduced)) {
    fail("G' is a family tree");
  }
}

}  // namespace

LemmaReport replay_lemmas(std::uint64_t seed, int count_per_class, int max_base_ops) {
  LemmaReport report;
  Rng rng(seed);
  for (int k = 1; k <= 6; ++k) {
    ClassReplay tally{static_cast<QTClass>(k)};
    for (int i = 0; i < count_per_class; ++i) {
      QTInstance q = random_qt(tally.cls, rng, uniform_int(rng, 1, std::max(max_base_ops, 1)));
      replay_one(q, report, tally);
      ++tally.instances;
    }
    report.classes.push_back(tally);
  }

  // Type-2 reduction: gamma_t(G) <= gamma_t(G - h) + 1 for any quasi-vertex h.
  int attempts = 0;
  while (report.type2_instances < count_per_class && attempts < 100 * count_per_class) {
    ++attempts;
    const int n = uniform_int(rng, 4, 14);
    const Graph tree = random_connected_graph(rng, n - 1, 0.0);
    const Graph g = tree.with_vertex(random_subset(rng, tree.vertices(), uniform_int(rng, 2, n - 1)));
    if (classify_type(g).kind != QuasiTreeType::Type2) continue;
    ++report.type2_instances;
    const int gt = total_domination_number(g).gamma_t;
    for (int h : quasi_vertices(g)) {
      if (gt > total_domination_number(g.without(h)).gamma_t + 1) {
        report.violations.push_back({QTClass::QT1, "type-2: gamma_t(G) <= gamma_t(G - h) + 1",
                                     {{"graph6", write_graph6(g)}, {"h", h}}});
      }
    }
  }
  return report;
}

Json to_json(const LemmaReport& r) {
  Json j;
  Json classes = Json::array();
  for (const ClassReplay& c : r.classes) {
    classes.push_back({{"class", to_string(c.cls)}, {"instances", c.instances}, {"unicyclic_routed", c.unicyclic_routed}});
  }
  j["classes"] = std::move(classes);
  j["type2_instances"] = r.type2_instances;
  Json v = Json::array();
  for (const LemmaViolation& x : r.violations) {
    v.push_back({{"class", to_string(x.cls)}, {"check", x.check}, {"provenance", x.provenance}});
  }
  j["violations"] = std::move(v);
  return j;
}

TreeEqualityCheck check_tree_equality(int max_n, int jobs) {
  TreeEqualityCheck out;
  out.max_n = max_n;
  Campaign c{.family = FamilySelector::Trees, .min_n = 2, .max_n = max_n, .jobs = jobs};
  CampaignReport report = verify_conjecture(c);
  out.trees = report.records.size();

  std::set<CanonicalForm> equal;
  for (const VerificationRecord& r : report.records) {
    if (r.error || r.slack < 0) ++out.violations;
    if (!r.error && r.equality) equal.insert(canonical_form(parse_graph6(r.graph6)));
  }
  std::set<CanonicalForm> gamma;
  for (const GammaTree& t : enumerate_gamma(max_n)) gamma.insert(canonical_form(t.tree()));

  out.equality_set.assign(equal.begin(), equal.end());
  out.gamma_set.assign(gamma.begin(), gamma.end());
  std::ranges::set_difference(equal, gamma, std::back_inserter(out.only_equality));
  std::ranges::set_difference(gamma, equal, std::back_inserter(out.only_gamma));
  return out;
}

}  // namespace tdom
