#include <algorithm>
#include <cctype>
#include <chrono>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "report.hpp"
#include "roughalg/cli.hpp"
#include "roughalg/gas.hpp"
#include "roughalg/ideals.hpp"
#include "roughalg/io.hpp"
#include "roughalg/rough.hpp"
#include "roughalg/search.hpp"
#include "roughalg/sweep.hpp"

namespace roughalg::cli {

namespace {

struct Context {
  bool json = false;
  Exec exec = Exec::parallel;
  std::ostream& out;
};

// Every command fills a structured document and a human-readable rendering;
// only one of them is written.
struct Output {
  Json doc;
  std::ostringstream text;
  int code = kExitOk;
};

int emit(const Context& ctx, Output& o) {
  if (ctx.json) {
    ctx.out << o.doc.dump(2) << '\n';
  } else {
    ctx.out << o.text.str();
  }
  return o.code;
}

std::string lower_case(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

std::optional<Label> parse_label(const std::string& s) {
  const std::string l = lower_case(s);
  if (l == "b") return Label::B;
  if (l == "bh") return Label::BH;
  if (l == "bo") return Label::BO;
  if (l == "z") return Label::Z;
  return std::nullopt;
}

// A named group of axioms to check together: a label, or loose axioms.
struct AxiomGroup {
  std::string name;
  std::vector<AxiomId> axioms;
};

std::vector<AxiomGroup> parse_axiom_groups(const std::string& spec, ZAxioms z) {
  std::vector<AxiomGroup> groups;
  AxiomGroup loose{"axioms", {}};
  for (const std::string& tok : split(spec, ',')) {
    if (lower_case(tok) == "all") {
      for (Label l : kAllLabels) {
        const auto ax = axioms_of(l, z);
        groups.push_back({std::string(to_string(l)), {ax.begin(), ax.end()}});
      }
    } else if (const auto label = parse_label(tok)) {
      const auto ax = axioms_of(*label, z);
      groups.push_back({std::string(to_string(*label)), {ax.begin(), ax.end()}});
    } else if (const auto a = parse_axiom(tok)) {
      loose.axioms.push_back(*a);
    } else {
      throw DomainError("unknown axiom or label '" + tok + "'");
    }
  }
  if (!loose.axioms.empty()) groups.push_back(std::move(loose));
  if (groups.empty()) throw DomainError("empty axiom list");
  return groups;
}

// Union of all axioms in the groups, sorted and deduplicated.
std::vector<AxiomId> flatten(const std::vector<AxiomGroup>& groups) {
  std::vector<AxiomId> out;
  for (const auto& g : groups) out.insert(out.end(), g.axioms.begin(), g.axioms.end());
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Json axioms_json(const std::vector<AxiomId>& axioms) {
  Json out = Json::array();
  for (AxiomId a : axioms) out.push_back(std::string(to_string(a)));
  return out;
}

std::optional<RelationScope> parse_scope(const std::string& s) {
  if (s == "partitions") return RelationScope::partitions;
  if (s == "congruences") return RelationScope::congruences;
  if (s == "complete-congruences" || s == "complete") return RelationScope::complete_congruences;
  return std::nullopt;
}

// ---- check ---------------------------------------------------------------

struct CheckOpts {
  std::string file;
  std::string axioms;
  bool z_relaxed = false;
  std::size_t witness_limit = 0;
};

int cmd_check(const Context& ctx, const CheckOpts& opt) {
  const io::AlgebraFile file = io::load_algebra(opt.file);
  const FiniteAlgebra& alg = file.algebra;
  const ZAxioms z = opt.z_relaxed ? ZAxioms::relaxed : ZAxioms::literal;
  const bool explicit_axioms = !opt.axioms.empty();
  const auto groups = parse_axiom_groups(explicit_axioms ? opt.axioms : "all", z);
  const auto labels = classify(alg, z);

  Output o;
  o.doc["command"] = "check";
  o.doc["algebra"] = algebra_json(alg, file.name);
  o.doc["z_axioms"] = opt.z_relaxed ? "relaxed" : "literal";
  o.doc["labels"] = labels_json(labels);
  o.doc["groups"] = Json::array();
  o.text << *file.name << " (order " << alg.order() << ", zero " << alg.zero() << ")\n";

  bool all = true;
  for (const AxiomGroup& g : groups) {
    Json gj;
    gj["name"] = g.name;
    gj["axioms"] = Json::array();
    bool group_ok = true;
    std::ostringstream detail;
    o.text << g.name << ':';
    for (AxiomId a : g.axioms) {
      const AxiomReport r = check_axiom(alg, a, opt.witness_limit);
      group_ok = group_ok && r.holds;
      o.text << ' ' << to_string(a) << ' ' << mark(r.holds);
      if (!r.holds) {
        detail << "  " << to_string(a) << " (" << statement(a) << ") fails at "
               << witnesses_text(r.witnesses);
        if (r.witnesses.size() < r.violations) {
          detail << " ... (" << r.violations << " violations)";
        }
        detail << '\n';
      }
      gj["axioms"].push_back(to_json(r));
    }
    gj["holds"] = group_ok;
    o.text << '\n' << detail.str();
    o.doc["groups"].push_back(std::move(gj));
    all = all && group_ok;
  }
  o.text << "labels: " << labels_text(labels) << '\n';
  o.doc["holds"] = all;
  o.code = explicit_axioms && !all ? kExitViolated : kExitOk;
  return emit(ctx, o);
}

// ---- identities ------------------------------------------------------------

int cmd_identities(const Context& ctx, const std::string& path) {
  const io::AlgebraFile file = io::load_algebra(path);
  const Identities ids = find_identities(file.algebra);
  Output o;
  o.doc["command"] = "identities";
  o.doc["algebra"] = algebra_json(file.algebra, file.name);
  o.doc["left"] = to_json(ids.left);
  o.doc["right"] = to_json(ids.right);
  o.doc["two_sided"] = to_json(ids.two_sided);
  o.text << "left identities:      " << ids.left << '\n'
         << "right identities:     " << ids.right << '\n'
         << "two-sided identities: " << ids.two_sided << '\n';
  return emit(ctx, o);
}

// ---- ideals ----------------------------------------------------------------

struct IdealsOpts {
  std::string file;
  std::size_t max_order = kDefaultIdealOrderLimit;
};

int cmd_ideals(const Context& ctx, const IdealsOpts& opt) {
  const io::AlgebraFile file = io::load_algebra(opt.file);
  const auto ideals = enumerate_ideals(file.algebra, IdealKind::ideal, ctx.exec, opt.max_order);
  const auto strong = enumerate_ideals(file.algebra, IdealKind::strong, ctx.exec, opt.max_order);
  const bool strong_within = std::all_of(strong.begin(), strong.end(), [&](const Subset& s) {
    return std::find(ideals.begin(), ideals.end(), s) != ideals.end();
  });

  Output o;
  o.doc["command"] = "ideals";
  o.doc["algebra"] = algebra_json(file.algebra, file.name);
  o.doc["ideals"] = Json::array();
  for (const Subset& s : ideals) o.doc["ideals"].push_back(to_json(s));
  o.doc["strong_ideals"] = Json::array();
  for (const Subset& s : strong) o.doc["strong_ideals"].push_back(to_json(s));
  o.doc["strong_ideals_are_ideals"] = strong_within;

  o.text << "ideals (" << ideals.size() << "):\n";
  for (const Subset& s : ideals) o.text << "  " << s << '\n';
  o.text << "strong ideals (" << strong.size() << "):\n";
  for (const Subset& s : strong) o.text << "  " << s << '\n';
  o.text << "every strong ideal is an ideal: " << (strong_within ? "yes" : "no") << '\n';
  return emit(ctx, o);
}

// ---- congruences -----------------------------------------------------------

int cmd_congruences(const Context& ctx, const std::string& path, bool complete_only) {
  const io::AlgebraFile file = io::load_algebra(path);
  const auto congs = enumerate_congruences(file.algebra, ctx.exec);
  Output o;
  o.doc["command"] = "congruences";
  o.doc["algebra"] = algebra_json(file.algebra, file.name);
  o.doc["congruences"] = Json::array();
  std::size_t shown = 0;
  std::ostringstream body;
  for (const Partition& p : congs) {
    const bool complete = is_complete_congruence(file.algebra, p).holds;
    if (complete_only && !complete) continue;
    ++shown;
    o.doc["congruences"].push_back({{"classes", to_json(p)}, {"complete", complete}});
    body << "  " << p.to_string() << (complete ? "  (complete)" : "") << '\n';
  }
  o.doc["count"] = shown;
  o.text << (complete_only ? "complete congruences (" : "congruences (") << shown << "):\n"
         << body.str();
  return emit(ctx, o);
}

// ---- shared partition selection ------------------------------------------

struct PartitionChoice {
  Partition partition;
  Json source;
};

// Resolves --partition or --ideal into a partition. Returns nullopt (after
// filling `o` with the failure) when the ideal-induced relation is not an
// equivalence.
std::optional<PartitionChoice> choose_partition(const FiniteAlgebra& alg,
                                                const std::string& partition,
                                                const std::string& ideal, Output& o) {
  if (!partition.empty()) {
    Partition p = io::parse_partition(partition, alg.order());
    return PartitionChoice{p, {{"partition", to_json(p)}}};
  }
  const Subset i = io::parse_subset(ideal, alg.order());
  const RelationPairs rel = relation_from_ideal(alg, i);
  const EquivalenceReport eq = is_equivalence(rel);
  if (!eq.holds()) {
    o.doc["ideal"] = to_json(i);
    o.doc["equivalence"] = to_json(eq);
    o.text << "relation induced by " << i << " is not an equivalence\n";
    if (eq.reflexivity) o.text << "  reflexivity fails at " << *eq.reflexivity << '\n';
    if (eq.symmetry) o.text << "  symmetry fails at " << *eq.symmetry << '\n';
    if (eq.transitivity) o.text << "  transitivity fails at " << *eq.transitivity << '\n';
    o.code = kExitViolated;
    return std::nullopt;
  }
  Partition p = to_partition(rel);
  return PartitionChoice{p, {{"ideal", to_json(i)}, {"partition", to_json(p)}}};
}

// ---- approx ----------------------------------------------------------------

struct ApproxOpts {
  std::string file;
  std::string partition;
  std::string ideal;
  std::string set;
  bool lower = false;
  bool upper = false;
  bool boundary = false;
  bool pair = false;
};

int cmd_approx(const Context& ctx, const ApproxOpts& opt) {
  const io::AlgebraFile file = io::load_algebra(opt.file);
  Output o;
  o.doc["command"] = "approx";
  o.doc["algebra"] = algebra_json(file.algebra, file.name);
  const auto choice = choose_partition(file.algebra, opt.partition, opt.ideal, o);
  if (!choice) return emit(ctx, o);

  const ApproximationSpace space(choice->partition);
  const Subset a = io::parse_subset(opt.set, file.algebra.order());
  const bool all = !(opt.lower || opt.upper || opt.boundary || opt.pair);
  o.doc.update(choice->source);
  o.doc["set"] = to_json(a);
  o.text << "partition " << choice->partition.to_string() << ", A = " << a << '\n';
  if (all || opt.lower || opt.pair) {
    o.doc["lower"] = to_json(lower(space, a));
    o.text << "lower:    " << lower(space, a) << '\n';
  }
  if (all || opt.upper || opt.pair) {
    o.doc["upper"] = to_json(upper(space, a));
    o.text << "upper:    " << upper(space, a) << '\n';
  }
  if (all || opt.boundary) {
    o.doc["boundary"] = to_json(boundary(space, a));
    o.text << "boundary: " << boundary(space, a) << '\n';
  }
  o.doc["rough"] = is_rough(space, a);
  o.text << (is_rough(space, a) ? "rough" : "definable") << '\n';
  return emit(ctx, o);
}

// ---- verify ----------------------------------------------------------------

struct VerifyOpts {
  std::string file;
  std::string prop;
  bool exhaustive = false;
  std::string scope;
  std::string items;
  std::string claim;
  std::string partition;
  std::string ideal;
  std::string set;
  std::string set2;
};

std::vector<Law> select_laws(const std::string& prop, const std::string& items) {
  std::vector<Law> laws = law_group(prop);
  if (laws.empty()) throw DomainError("unknown law group '" + prop + "' (use 2-1, 3-1 or 3-2)");
  if (items.empty()) return laws;
  std::vector<Law> chosen;
  for (const std::string& item : split(items, ',')) {
    const auto law = parse_law(prop + "." + item);
    if (!law) throw DomainError("unknown item '" + item + "' in group " + prop);
    chosen.push_back(*law);
  }
  return chosen;
}

void law_results(Output& o, const std::vector<LawResult>& results) {
  o.doc["items"] = Json::array();
  bool ok = true;
  for (const LawResult& r : results) {
    o.doc["items"].push_back(to_json(r));
    ok = ok && r.outcome.verdict != Verdict::violated;
    o.text << "  " << info(r.law).id << "  "
           << (r.outcome.verdict == Verdict::not_applicable ? "-" : mark(r.outcome.verdict == Verdict::holds))
           << "  " << info(r.law).statement << "  [" << outcome_text(r.outcome) << "]";
    if (!r.note.empty()) o.text << "  (" << r.note << ")";
    o.text << '\n';
  }
  o.doc["holds"] = ok;
  if (!ok) o.code = kExitViolated;
}

int verify_instance(const Context& ctx, const io::AlgebraFile& file, const VerifyOpts& opt,
                    Output& o) {
  const FiniteAlgebra& alg = file.algebra;
  if (opt.partition.empty() && opt.ideal.empty()) {
    throw DomainError("verify needs --exhaustive, or --partition/--ideal with --set");
  }
  if (opt.set.empty()) throw DomainError("verify needs --set");
  const auto choice = choose_partition(alg, opt.partition, opt.ideal, o);
  if (!choice) return emit(ctx, o);
  const Subset a = io::parse_subset(opt.set, alg.order());
  const Subset b = io::parse_subset(opt.set2.empty() ? opt.set : opt.set2, alg.order());
  o.doc.update(choice->source);
  o.doc["a"] = to_json(a);
  o.doc["b"] = to_json(b);
  o.text << "law group " << opt.prop << " on partition " << choice->partition.to_string()
         << ", A = " << a << ", B = " << b << '\n';

  if (opt.prop == "3-2") {
    const ProductLawReport r = check_prop32(alg, choice->partition, a, b);
    o.doc["complete_congruence"] = r.complete;
    o.text << "congruence is " << (r.complete ? "complete" : "not complete") << '\n';
    law_results(o, {r.part1, r.part2});
    return emit(ctx, o);
  }
  const ApproximationSpace space(choice->partition, alg);
  const LawReport r = opt.prop == "2-1" ? check_pawlak(space, a, b) : check_prop31(space, a, b);
  std::vector<LawResult> wanted;
  const auto laws = select_laws(opt.prop, opt.items);
  for (const LawResult& lr : r.items) {
    if (std::find(laws.begin(), laws.end(), lr.law) != laws.end()) wanted.push_back(lr);
  }
  law_results(o, wanted);
  return emit(ctx, o);
}

int verify_exhaustive(const Context& ctx, const io::AlgebraFile& file, const VerifyOpts& opt,
                      Output& o) {
  SweepSpec spec;
  spec.algebra = file.algebra;
  spec.laws = select_laws(opt.prop, opt.items);
  spec.scope = opt.prop == "3-2" ? RelationScope::congruences : RelationScope::partitions;
  if (!opt.scope.empty()) {
    const auto s = parse_scope(opt.scope);
    if (!s) throw DomainError("unknown scope '" + opt.scope + "'");
    spec.scope = *s;
  }
  const SweepResult r = sweep_laws(spec, ctx.exec);

  o.doc["exhaustive"] = true;
  o.doc["scope"] = std::string(to_string(spec.scope));
  o.doc["partitions"] = r.partitions;
  o.doc["subset_pairs"] = r.subset_pairs;
  o.doc["laws"] = Json::array();
  o.text << "law group " << opt.prop << ", exhaustive over " << r.partitions << ' '
         << to_string(spec.scope) << " x " << r.subset_pairs << " subset pairs\n";
  for (const LawTally& t : r.tallies) {
    o.doc["laws"].push_back(to_json(t));
    o.text << "  " << info(t.law).id << "  " << mark(t.violations == 0) << "  "
           << info(t.law).statement << "  checked " << t.checked << ", vacuous " << t.vacuous
           << ", violations " << t.violations << '\n';
    if (t.first) {
      std::istringstream lines(finding_text(*t.first));
      for (std::string line; std::getline(lines, line);) o.text << "      " << line << '\n';
    }
  }
  o.doc["holds"] = r.clean();
  if (!r.clean()) o.code = kExitViolated;
  return emit(ctx, o);
}

int verify_claim(const Context& ctx, const io::AlgebraFile& file, const VerifyOpts& opt,
                 Output& o) {
  const FiniteAlgebra& alg = file.algebra;
  const std::string claim = lower_case(opt.claim);
  o.doc["claim"] = claim;
  bool holds = false;

  auto need_set = [&]() {
    if (opt.set.empty()) throw DomainError("claim '" + claim + "' needs --set");
    return io::parse_subset(opt.set, alg.order());
  };
  auto need_partition = [&]() {
    if (opt.partition.empty()) throw DomainError("claim '" + claim + "' needs --partition");
    return io::parse_partition(opt.partition, alg.order());
  };

  if (claim == "ideal" || claim == "bo-ideal" || claim == "bh-ideal" || claim == "z-ideal" ||
      claim == "strong-ideal") {
    const Subset s = need_set();
    const IdealReport r = claim == "strong-ideal" ? is_strong_ideal(alg, s) : is_ideal(alg, s);
    holds = claim == "strong-ideal" ? r.is_strong : r.is_ideal;
    o.doc["set"] = to_json(s);
    o.doc["labels"] = labels_json(classify(alg));
    o.doc["details"] = to_json(r);
    o.text << "claim " << claim << " for " << s << ": " << mark(holds) << '\n';
    if (!r.contains_zero) o.text << "  condition (1) fails: zero " << alg.zero() << " not in set\n";
    if (!r.closure_witnesses.empty()) {
      o.text << "  condition (2) fails at " << witnesses_text(r.closure_witnesses) << '\n';
    }
    if (!r.strong_witnesses.empty()) {
      o.text << "  condition (3) fails at " << witnesses_text(r.strong_witnesses) << '\n';
    }
    o.text << "  algebra labels: " << labels_text(classify(alg)) << '\n';
  } else if (claim.size() > 8 && claim.ends_with("-algebra")) {
    const auto label = parse_label(claim.substr(0, claim.size() - 8));
    if (!label) throw DomainError("unknown claim '" + claim + "'");
    o.doc["axioms"] = Json::array();
    holds = true;
    o.text << "claim " << claim << ":";
    std::ostringstream detail;
    for (AxiomId a : axioms_of(*label)) {
      const AxiomReport r = check_axiom(alg, a);
      holds = holds && r.holds;
      o.doc["axioms"].push_back(to_json(r));
      o.text << ' ' << to_string(a) << ' ' << mark(r.holds);
      if (!r.holds) detail << "  " << to_string(a) << " fails at " << witnesses_text(r.witnesses) << '\n';
    }
    o.text << '\n' << detail.str();
  } else if (claim == "congruence") {
    const Partition p = need_partition();
    const CongruenceReport r = is_congruence(alg, p);
    holds = r.holds;
    o.doc["partition"] = to_json(p);
    o.text << "claim congruence for " << p.to_string() << ": " << mark(holds) << '\n';
    if (r.witness) {
      const auto& w = *r.witness;
      const bool right = w.side == CongruenceWitness::Side::right;
      o.doc["witness"] = {{"x", w.x}, {"y", w.y}, {"z", w.z}, {"side", right ? "right" : "left"}};
      o.text << "  " << w.x << " ~ " << w.y << " but "
             << (right ? "x*z, y*z" : "z*x, z*y") << " unrelated at z=" << w.z << '\n';
    }
  } else if (claim == "complete-congruence") {
    const Partition p = need_partition();
    const ClassProductReport r = is_complete_congruence(alg, p);
    holds = r.holds;
    o.doc["partition"] = to_json(p);
    o.doc["pair"] = r.pair ? to_json(*r.pair) : Json(nullptr);
    o.doc["element"] = r.element ? Json(*r.element) : Json(nullptr);
    o.text << "claim complete-congruence for " << p.to_string() << ": " << mark(holds) << '\n';
    if (r.pair) {
      o.text << "  [x]*[y] differs from [x*y] at " << *r.pair << ", element " << *r.element << '\n';
    }
  } else if (claim == "equivalence-from-ideal") {
    const Subset s = need_set();
    const EquivalenceReport r = is_equivalence(relation_from_ideal(alg, s));
    holds = r.holds();
    o.doc["set"] = to_json(s);
    o.doc["equivalence"] = to_json(r);
    o.text << "claim equivalence-from-ideal for " << s << ": " << mark(holds) << '\n';
  } else if (claim == "definable") {
    const Partition p = need_partition();
    const Subset s = need_set();
    const ApproximationSpace space(p);
    holds = is_definable(space, s);
    o.doc["partition"] = to_json(p);
    o.doc["set"] = to_json(s);
    o.doc["boundary"] = to_json(boundary(space, s));
    o.text << "claim definable for " << s << ": " << mark(holds) << ", boundary "
           << boundary(space, s) << '\n';
  } else {
    throw DomainError("unknown claim '" + claim + "'");
  }
  o.doc["holds"] = holds;
  if (!holds) o.code = kExitViolated;
  return emit(ctx, o);
}

int cmd_verify(const Context& ctx, const VerifyOpts& opt) {
  const io::AlgebraFile file = io::load_algebra(opt.file);
  Output o;
  o.doc["command"] = "verify";
  o.doc["algebra"] = algebra_json(file.algebra, file.name);
  if (!opt.claim.empty()) return verify_claim(ctx, file, opt, o);
  if (opt.prop.empty()) throw DomainError("verify needs --prop or --claim");
  select_laws(opt.prop, "");
  o.doc["prop"] = opt.prop;
  if (opt.exhaustive) return verify_exhaustive(ctx, file, opt, o);
  return verify_instance(ctx, file, opt, o);
}

// ---- search ----------------------------------------------------------------

struct SearchOpts {
  std::size_t order = 0;
  std::string axioms;
  bool z_relaxed = false;
  bool count = false;
  bool list = false;
  std::string find;
  std::string scope;
  std::vector<std::string> fixtures;
  std::size_t max_models = 0;
  std::size_t time_budget_ms = 0;
};

int cmd_search(const Context& ctx, const SearchOpts& opt) {
  SearchSpec spec;
  spec.order = opt.order;
  const ZAxioms z = opt.z_relaxed ? ZAxioms::relaxed : ZAxioms::literal;
  if (!opt.axioms.empty()) spec.axioms = flatten(parse_axiom_groups(opt.axioms, z));
  spec.limits.max_models = opt.max_models;
  spec.limits.time_budget = std::chrono::milliseconds(opt.time_budget_ms);

  Output o;
  o.doc["command"] = "search";
  o.doc["order"] = opt.order;
  o.doc["axioms"] = axioms_json(spec.axioms);

  if (opt.find.empty()) {
    if (opt.order == 0) throw DomainError("search needs --order");
    std::vector<FiniteAlgebra> models;
    const std::size_t count = enumerate_algebras(
        spec, opt.list ? ModelSink([&](const FiniteAlgebra& a) { models.push_back(a); }) : ModelSink{},
        ctx.exec);
    o.doc["count"] = count;
    o.text << "order " << opt.order << ", axioms";
    for (AxiomId a : spec.axioms) o.text << ' ' << to_string(a);
    o.text << ": " << count << " model" << (count == 1 ? "" : "s") << '\n';
    if (opt.list) {
      o.doc["models"] = Json::array();
      for (const FiniteAlgebra& m : models) {
        o.doc["models"].push_back(table_json(m));
        o.text << '\n' << io::render_algebra(m);
      }
    }
    return emit(ctx, o);
  }

  const auto law = parse_law(opt.find);
  if (!law) throw DomainError("unknown property id '" + opt.find + "'");
  spec.target = law;
  if (!opt.scope.empty()) {
    const auto s = parse_scope(opt.scope);
    if (!s) throw DomainError("unknown scope '" + opt.scope + "'");
    spec.scope = *s;
  }
  Json fixtures = Json::array();
  for (const std::string& f : opt.fixtures) {
    io::AlgebraFile file = io::load_algebra(f);
    fixtures.push_back(*file.name);
    spec.algebras.push_back(std::move(file.algebra));
  }
  if (spec.algebras.empty() && spec.order == 0) throw DomainError("search needs --order or --fixture");
  if (spec.algebras.empty() && info(*law).needs_algebra && spec.axioms.empty()) {
    throw DomainError("law " + opt.find + " needs an algebra: give --axioms or --fixture");
  }

  const auto finding = find_counterexample(spec, ctx.exec);
  o.doc["target"] = opt.find;
  o.doc["statement"] = std::string(info(*law).statement);
  o.doc["scope"] = std::string(to_string(spec.scope));
  o.doc["fixtures"] = std::move(fixtures);
  o.doc["finding"] = finding ? to_json(*finding) : Json(nullptr);
  if (finding) {
    o.text << finding_text(*finding);
    o.code = kExitViolated;
  } else {
    o.text << "no counterexample to " << opt.find << " (" << info(*law).statement << ")\n";
  }
  return emit(ctx, o);
}

// ---- morphism --------------------------------------------------------------

struct MorphismOpts {
  std::string source;
  std::string target;
  std::string map;
  bool strong = false;
};

int cmd_morphism(const Context& ctx, const MorphismOpts& opt) {
  const io::AlgebraFile src = io::load_algebra(opt.source);
  const io::AlgebraFile tgt = opt.target.empty() ? src : io::load_algebra(opt.target);
  const SetValuedMap f = io::parse_svmap(opt.map, src.algebra.order(), tgt.algebra.order());
  const MorphismReport r = opt.strong ? is_strong_sv_morphism(f, src.algebra, tgt.algebra)
                                      : is_sv_morphism(f, src.algebra, tgt.algebra);
  Output o;
  o.doc["command"] = "morphism";
  o.doc["source"] = algebra_json(src.algebra, src.name);
  o.doc["target"] = algebra_json(tgt.algebra, tgt.name);
  o.doc["strong"] = opt.strong;
  o.doc.update(to_json(r));
  o.text << (opt.strong ? "strong set-valued morphism: " : "set-valued morphism: ") << mark(r.holds)
         << '\n';
  if (r.witness) {
    const auto& w = *r.witness;
    if (w.direction == MorphismWitness::Direction::missing) {
      o.text << "  F(" << w.x << ")*F(" << w.y << ") contains " << w.element << ", F(" << w.x
             << "*" << w.y << ") does not\n";
    } else {
      o.text << "  F(" << w.x << "*" << w.y << ") contains " << w.element << ", F(" << w.x
             << ")*F(" << w.y << ") does not\n";
    }
  }
  o.text << "  source labels: " << labels_text(r.source_labels)
         << "; target labels: " << labels_text(r.target_labels) << '\n';
  if (!r.holds) o.code = kExitViolated;
  return emit(ctx, o);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite BO/BH/Z-algebras and rough-set approximations over them"};
  app.name("roughalg");
  app.require_subcommand(1);

  std::string format = "text";
  std::string exec = "parallel";
  app.add_option("--format", format, "Report format")
      ->check(CLI::IsMember({"text", "json"}))
      ->envname("ROUGHALG_FORMAT");
  app.add_option("--exec", exec, "Kernel variant")->check(CLI::IsMember({"serial", "parallel"}));

  CheckOpts check;
  auto* c_check = app.add_subcommand("check", "Check axioms and classify an algebra");
  c_check->add_option("file", check.file, "Algebra file")->required();
  c_check->add_option("--axioms", check.axioms, "Labels (b,bh,bo,z,all) and/or axioms C1..C7");
  c_check->add_flag("--z-relaxed", check.z_relaxed, "Back the Z label with C2,C6,C7");
  c_check->add_option("--witness-limit", check.witness_limit, "Witnesses kept per axiom (0: all)");

  std::string identities_file;
  auto* c_ids = app.add_subcommand("identities", "Left, right and two-sided identities");
  c_ids->add_option("file", identities_file, "Algebra file")->required();

  IdealsOpts ideals;
  auto* c_ideals = app.add_subcommand("ideals", "Enumerate ideals and strong ideals");
  c_ideals->add_option("file", ideals.file, "Algebra file")->required();
  c_ideals->add_option("--max-order", ideals.max_order, "Refuse larger algebras");

  std::string congruences_file;
  bool complete_only = false;
  auto* c_congs = app.add_subcommand("congruences", "Enumerate congruences");
  c_congs->add_option("file", congruences_file, "Algebra file")->required();
  c_congs->add_flag("--complete", complete_only, "Only complete congruences");

  ApproxOpts approx;
  auto* c_approx = app.add_subcommand("approx", "Lower/upper approximations of a set");
  c_approx->add_option("file", approx.file, "Algebra file")->required();
  auto* a_part = c_approx->add_option("--partition", approx.partition, "Classes, e.g. 0,1|2|3");
  auto* a_ideal = c_approx->add_option("--ideal", approx.ideal, "Induce the partition from a subset");
  a_part->excludes(a_ideal);
  c_approx->add_option("--set", approx.set, "Subset to approximate")->required();
  c_approx->add_flag("--lower", approx.lower);
  c_approx->add_flag("--upper", approx.upper);
  c_approx->add_flag("--boundary", approx.boundary);
  c_approx->add_flag("--pair", approx.pair);

  VerifyOpts verify;
  auto* c_verify = app.add_subcommand("verify", "Evaluate approximation laws or named claims");
  c_verify->add_option("file", verify.file, "Algebra file")->required();
  auto* v_prop = c_verify->add_option("--prop", verify.prop, "Law group: 2-1, 3-1 or 3-2");
  auto* v_claim = c_verify->add_option("--claim", verify.claim, "Named claim, e.g. z-ideal");
  v_prop->excludes(v_claim);
  c_verify->add_flag("--exhaustive", verify.exhaustive, "All partitions in scope, all subset pairs");
  c_verify->add_option("--scope", verify.scope, "partitions, congruences or complete-congruences");
  c_verify->add_option("--items", verify.items, "Comma-separated items within the group");
  auto* v_part = c_verify->add_option("--partition", verify.partition);
  auto* v_ideal = c_verify->add_option("--ideal", verify.ideal);
  v_part->excludes(v_ideal);
  c_verify->add_option("--set", verify.set, "Subset A");
  c_verify->add_option("--set2", verify.set2, "Subset B (defaults to A)");

  SearchOpts search;
  auto* c_search = app.add_subcommand("search", "Enumerate models or hunt counterexamples");
  c_search->add_option("--order", search.order, "Carrier size");
  c_search->add_option("--axioms", search.axioms, "Labels and/or axioms");
  c_search->add_flag("--z-relaxed", search.z_relaxed);
  c_search->add_flag("--count", search.count, "Count models (default)");
  c_search->add_flag("--list", search.list, "Print every model");
  c_search->add_option("--find", search.find, "Property id to refute, e.g. 2-1.11");
  c_search->add_option("--scope", search.scope, "partitions, congruences or complete-congruences");
  c_search->add_option("--fixture", search.fixtures, "Search these algebras instead");
  c_search->add_option("--max-models", search.max_models);
  c_search->add_option("--time-budget-ms", search.time_budget_ms);

  MorphismOpts morph;
  auto* c_morph = app.add_subcommand("morphism", "Check a (strong) set-valued morphism");
  c_morph->add_option("source", morph.source, "Source algebra file")->required();
  c_morph->add_option("target", morph.target, "Target algebra file (defaults to source)");
  c_morph->add_option("--map", morph.map, "Images, e.g. 0:0;1:0,1")->required();
  c_morph->add_flag("--strong", morph.strong);

  for (CLI::App* sub : app.get_subcommands({})) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitInput;
  }

  Context ctx{format == "json", exec == "serial" ? Exec::serial : Exec::parallel, out};
  try {
    if (c_check->parsed()) return cmd_check(ctx, check);
    if (c_ids->parsed()) return cmd_identities(ctx, identities_file);
    if (c_ideals->parsed()) return cmd_ideals(ctx, ideals);
    if (c_congs->parsed()) return cmd_congruences(ctx, congruences_file, complete_only);
    if (c_approx->parsed()) {
      if (approx.partition.empty() && approx.ideal.empty()) {
        throw DomainError("approx needs --partition or --ideal");
      }
      return cmd_approx(ctx, approx);
    }
    if (c_verify->parsed()) return cmd_verify(ctx, verify);
    if (c_search->parsed()) return cmd_search(ctx, search);
    if (c_morph->parsed()) return cmd_morphism(ctx, morph);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitInput;
  }
  err << app.help();
  return kExitInput;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::vector<std::string> args;
  for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
  return run(args, out, err);
}

}  // namespace roughalg::cli
