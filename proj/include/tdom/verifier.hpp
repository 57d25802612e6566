#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"
#include "tdom/canonical.hpp"
#include "tdom/graph.hpp"
#include "tdom/invariants.hpp"
#include "tdom/quasitree.hpp"
#include "tdom/random.hpp"

namespace tdom {

using Json = nlohmann::ordered_json;

/// One verified instance. slack = a + 1 - gamma_t.
struct VerificationRecord {
  std::string graph6;
  int n = 0;
  int m = 0;
  int gamma_t = 0;
  int a = 0;
  int slack = 0;
  bool equality = false;
  /// tree | quasi-tree-type1 | quasi-tree-type2 | composite:<kind> | qt-class:<i>
  std::string family;
  /// Negative slack confirmed by the subset-enumeration oracle.
  bool counterexample = false;
  Json provenance;
  /// Set when a solver threw; the invariants are then meaningless.
  std::optional<std::string> error;
};

Json to_json(const VerificationRecord& r);
VerificationRecord record_from_json(const Json& j);

/// Global sanity properties on a solved instance. Returns one message per
/// violated property (empty when all hold).
std::vector<std::string> sanity_violations(const Graph& g, const DomResult& dom,
                                           const AnnihilationResult& ann);

/// Solves both invariants and assembles a record. Negative slack triggers
/// recomputation with the oracle before the record is marked.
VerificationRecord verify_instance(const Graph& g, std::string family, Json provenance = {});

/// Connected non-trivial quasi-trees on n vertices, one per isomorphism
/// class: every free tree on n-1 vertices plus a vertex joined to at least
/// two of its vertices. Sorted by canonical form. Requires 3 <= n <= 12.
std::vector<Graph> enumerate_quasi_trees(int n);

enum class FamilySelector { Trees, Gamma, QuasiTrees, QTClasses, Composites };

std::string to_string(FamilySelector f);
/// Throws std::invalid_argument for an unknown name.
FamilySelector parse_family(const std::string& name);

/// A reproducible verification run. Instances depend only on
/// (family, min_n, max_n, seed, count).
struct Campaign {
  FamilySelector family = FamilySelector::Trees;
  int min_n = 2;
  int max_n = 10;
  std::uint64_t seed = kDefaultSeed;
  /// Random families: instances per class or per construction.
  int count = 200;
  int jobs = 1;
};

struct CampaignSummary {
  std::size_t instances = 0;
  std::size_t equality_count = 0;
  std::size_t counterexample_count = 0;
  std::size_t error_count = 0;
  std::size_t sanity_violation_count = 0;
  std::optional<int> min_slack;
  double elapsed_seconds = 0.0;
};

struct CampaignReport {
  Campaign campaign;
  /// Sorted by (graph6, family, provenance).
  std::vector<VerificationRecord> records;
  std::vector<std::string> sanity_failures;
  CampaignSummary summary;

  bool clean() const { return summary.counterexample_count == 0 && summary.error_count == 0; }
};

struct Instance {
  Graph graph;
  std::string family;
  Json provenance;
};

/// The campaign's instances in generation order.
std::vector<Instance> campaign_instances(const Campaign& c);

/// Solves `instances` on `jobs` worker threads; the result is independent of `jobs`.
CampaignReport run_instances(const Campaign& c, const std::vector<Instance>& instances);

CampaignReport verify_conjecture(const Campaign& c);

void write_jsonl(const CampaignReport& r, std::ostream& out);
/// Header plus one row per record; provenance is omitted.
void write_csv(const CampaignReport& r, std::ostream& out);
Json summary_json(const CampaignReport& r);

struct CatalogEntry {
  VerificationRecord record;
  /// type, girth, min_degree, leaves, quasi_vertices.
  Json features;
  /// The oracle recomputed gamma_t and found slack 0 again
  /// (nullopt when n exceeds the oracle limit).
  std::optional<bool> oracle_confirmed;
};

/// Every equality instance of the campaign with structural features.
std::vector<CatalogEntry> equality_catalog(const Campaign& c);
std::vector<CatalogEntry> equality_catalog(const CampaignReport& report);
Json to_json(const CatalogEntry& e);

struct LemmaViolation {
  QTClass cls;
  std::string check;
  Json provenance;
};

struct ClassReplay {
  QTClass cls;
  int instances = 0;
  /// QT3 instances with t = 2 (unicyclic), which are checked only against the conjecture.
  int unicyclic_routed = 0;
};

struct LemmaReport {
  std::vector<ClassReplay> classes;
  int type2_instances = 0;
  std::vector<LemmaViolation> violations;

  bool clean() const { return violations.empty(); }
};

/// Builds `count_per_class` seeded instances of each class and checks the
/// intermediate inequalities the reduction relies on:
///   a(G) >= a(G') + 2, gamma_t(G) <= gamma_t(G') + 2 (QT3 only for t >= 3),
///   the class's m(G) identity, slack(G) >= 0, and the degree of the last
///   attachment vertex y in G'.
/// Also samples `count_per_class` type-2 quasi-trees and checks
/// gamma_t(G) <= gamma_t(G - h) + 1 for every quasi-vertex h.
LemmaReport replay_lemmas(std::uint64_t seed, int count_per_class, int max_base_ops = 3);

Json to_json(const QTInstance& q);
Json to_json(const LemmaReport& r);

struct TreeEqualityCheck {
  int max_n = 0;
  std::size_t trees = 0;
  std::size_t violations = 0;
  std::vector<CanonicalForm> equality_set;
  std::vector<CanonicalForm> gamma_set;
  /// Equality trees missing from the generator output, and vice versa.
  std::vector<CanonicalForm> only_equality;
  std::vector<CanonicalForm> only_gamma;
};

/// Solves every free tree with 2 <= n <= max_n and compares its equality
/// cases with enumerate_gamma(max_n).
TreeEqualityCheck check_tree_equality(int max_n, int jobs = 1);

}  // namespace tdom
