#include "report.hpp"

#include <sstream>

namespace roughalg::cli {

Json to_json(const Subset& s) {
  Json out = Json::array();
  s.for_each([&](Element x) { out.push_back(x); });
  return out;
}

Json to_json(const Partition& p) {
  Json out = Json::array();
  for (const Subset& c : p.classes()) out.push_back(to_json(c));
  return out;
}

Json to_json(const Witness& w) {
  Json out = Json::array();
  for (int i = 0; i < w.arity; ++i) out.push_back(w.at[i]);
  return out;
}

namespace {

Json witness_list(const std::vector<Witness>& ws) {
  Json out = Json::array();
  for (const Witness& w : ws) out.push_back(to_json(w));
  return out;
}

template <typename T>
Json optional_json(const std::optional<T>& v) {
  return v ? to_json(*v) : Json(nullptr);
}

}  // namespace

Json to_json(const AxiomReport& r) {
  Json out;
  out["axiom"] = std::string(to_string(r.axiom));
  out["statement"] = std::string(statement(r.axiom));
  out["holds"] = r.holds;
  out["violations"] = r.violations;
  out["witnesses"] = witness_list(r.witnesses);
  return out;
}

Json to_json(const IdealReport& r) {
  Json out;
  out["subset"] = to_json(r.subset);
  out["contains_zero"] = r.contains_zero;
  out["is_ideal"] = r.is_ideal;
  out["closure_witnesses"] = witness_list(r.closure_witnesses);
  if (r.strong_checked) {
    out["is_strong"] = r.is_strong;
    out["strong_witnesses"] = witness_list(r.strong_witnesses);
  }
  return out;
}

Json to_json(const EquivalenceReport& r) {
  Json out;
  out["holds"] = r.holds();
  out["reflexivity"] = optional_json(r.reflexivity);
  out["symmetry"] = optional_json(r.symmetry);
  out["transitivity"] = optional_json(r.transitivity);
  return out;
}

Json to_json(const LawOutcome& o) {
  Json out;
  out["verdict"] = std::string(to_string(o.verdict));
  if (o.verdict == Verdict::violated) {
    out["lhs"] = optional_json(o.lhs);
    out["relation"] = std::string(o.relation);
    out["rhs"] = optional_json(o.rhs);
    out["element"] = o.element ? Json(*o.element) : Json(nullptr);
  }
  return out;
}

Json to_json(const LawResult& r) {
  Json out;
  out["id"] = std::string(info(r.law).id);
  out["statement"] = std::string(info(r.law).statement);
  out.update(to_json(r.outcome));
  if (!r.note.empty()) out["note"] = r.note;
  return out;
}

Json to_json(const Finding& f) {
  Json out;
  out["law"] = std::string(info(f.law).id);
  out["statement"] = std::string(info(f.law).statement);
  out["algebra"] = f.algebra ? table_json(*f.algebra) : Json(nullptr);
  out["partition"] = to_json(f.partition);
  out["a"] = to_json(f.a);
  out["b"] = to_json(f.b);
  out["outcome"] = to_json(f.outcome);
  return out;
}

Json to_json(const LawTally& t) {
  Json out;
  out["id"] = std::string(info(t.law).id);
  out["statement"] = std::string(info(t.law).statement);
  out["checked"] = t.checked;
  out["vacuous"] = t.vacuous;
  out["violations"] = t.violations;
  out["first_violation"] = t.first ? to_json(*t.first) : Json(nullptr);
  return out;
}

Json to_json(const MorphismReport& r) {
  Json out;
  out["holds"] = r.holds;
  if (r.witness) {
    const auto& w = *r.witness;
    out["witness"] = {{"x", w.x},
                      {"y", w.y},
                      {"element", w.element},
                      {"direction", w.direction == MorphismWitness::Direction::missing
                                        ? "product-not-in-image"
                                        : "image-not-in-product"}};
  } else {
    out["witness"] = nullptr;
  }
  out["source_labels"] = labels_json(r.source_labels);
  out["target_labels"] = labels_json(r.target_labels);
  return out;
}

Json labels_json(const std::vector<Label>& labels) {
  Json out = Json::array();
  for (Label l : labels) out.push_back(std::string(to_string(l)));
  return out;
}

Json algebra_json(const FiniteAlgebra& alg, const std::optional<std::string>& name) {
  Json out;
  out["name"] = name ? Json(*name) : Json(nullptr);
  out["order"] = alg.order();
  out["zero"] = alg.zero();
  return out;
}

Json table_json(const FiniteAlgebra& alg) {
  Json rows = Json::array();
  for (Element x = 0; x < alg.order(); ++x) {
    Json row = Json::array();
    for (Element v : alg.row(x)) row.push_back(v);
    rows.push_back(std::move(row));
  }
  return {{"order", alg.order()}, {"zero", alg.zero()}, {"rows", std::move(rows)}};
}

std::string labels_text(const std::vector<Label>& labels) {
  if (labels.empty()) return "(none)";
  std::string out;
  for (Label l : labels) {
    if (!out.empty()) out += ", ";
    out += to_string(l);
  }
  return out;
}

std::string witnesses_text(const std::vector<Witness>& ws) {
  std::string out;
  for (const Witness& w : ws) {
    if (!out.empty()) out += ", ";
    out += to_string(w);
  }
  return out;
}

std::string outcome_text(const LawOutcome& o) {
  std::ostringstream out;
  out << to_string(o.verdict);
  if (o.verdict == Verdict::violated && o.lhs && o.rhs) {
    out << ": " << *o.lhs << ' ' << o.relation << ' ' << *o.rhs << " fails";
    if (o.element) out << " at element " << *o.element;
  }
  return out.str();
}

std::string finding_text(const Finding& f) {
  std::ostringstream out;
  out << "law " << info(f.law).id << " (" << info(f.law).statement << ") fails\n";
  if (f.algebra) {
    out << "  algebra (order " << f.algebra->order() << ", zero " << f.algebra->zero() << "):\n";
    for (Element x = 0; x < f.algebra->order(); ++x) {
      out << "   ";
      for (Element v : f.algebra->row(x)) out << ' ' << v;
      out << '\n';
    }
  }
  out << "  partition " << f.partition.to_string() << '\n';
  out << "  A = " << f.a << ", B = " << f.b << '\n';
  out << "  " << outcome_text(f.outcome) << '\n';
  return out.str();
}

}  // namespace roughalg::cli
