#include "roughalg/algebra.hpp"

#include <ostream>
#include <sstream>

namespace roughalg {

FiniteAlgebra::FiniteAlgebra(std::size_t order, std::vector<Element> table, Element zero)
    : n_(order), table_(std::move(table)), zero_(zero) {
  if (n_ == 0) throw DomainError("carrier must be non-empty");
  if (n_ > Subset::kMaxCarrier) {
    throw DomainError("order " + std::to_string(n_) + " exceeds " +
                      std::to_string(Subset::kMaxCarrier));
  }
  if (table_.size() != n_ * n_) {
    throw DomainError("table has " + std::to_string(table_.size()) + " entries, expected " +
                      std::to_string(n_ * n_));
  }
  if (zero_ >= n_) {
    throw DomainError("zero element " + std::to_string(zero_) + " outside carrier");
  }
  for (std::size_t i = 0; i < table_.size(); ++i) {
    if (table_[i] >= n_) {
      throw ClosureError(static_cast<Element>(i / n_), static_cast<Element>(i % n_), table_[i]);
    }
  }
}

FiniteAlgebra FiniteAlgebra::from_rows(const std::vector<std::vector<Element>>& rows,
                                       Element zero) {
  const std::size_t n = rows.size();
  std::vector<Element> flat;
  flat.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      throw DomainError("row " + std::to_string(r) + " has " + std::to_string(rows[r].size()) +
                        " entries, expected " + std::to_string(n));
    }
    flat.insert(flat.end(), rows[r].begin(), rows[r].end());
  }
  return FiniteAlgebra(n, std::move(flat), zero);
}

std::string_view to_string(AxiomId a) noexcept {
  switch (a) {
    case AxiomId::C1: return "C1";
    case AxiomId::C2: return "C2";
    case AxiomId::C3: return "C3";
    case AxiomId::C4: return "C4";
    case AxiomId::C5: return "C5";
    case AxiomId::C6: return "C6";
    case AxiomId::C7: return "C7";
  }
  return "?";
}

std::optional<AxiomId> parse_axiom(std::string_view s) noexcept {
  for (AxiomId a : kAllAxioms) {
    const std::string_view name = to_string(a);
    if (s.size() == name.size() && (s[0] == 'C' || s[0] == 'c') && s.substr(1) == name.substr(1)) {
      return a;
    }
  }
  return std::nullopt;
}

int arity(AxiomId a) noexcept {
  switch (a) {
    case AxiomId::C1:
    case AxiomId::C2:
    case AxiomId::C6: return 1;
    case AxiomId::C4:
    case AxiomId::C7: return 2;
    case AxiomId::C3:
    case AxiomId::C5: return 3;
  }
  return 0;
}

std::string_view statement(AxiomId a) noexcept {
  switch (a) {
    case AxiomId::C1: return "x*x = 0";
    case AxiomId::C2: return "x*0 = x";
    case AxiomId::C3: return "(x*y)*z = x*(z*(0*y))";
    case AxiomId::C4: return "x*y = y*x = 0 => x = y";
    case AxiomId::C5: return "x*(y*z) = (x*y)*(0*z)";
    case AxiomId::C6: return "x*x = x";
    case AxiomId::C7: return "x*y = y*x for x != 0, y != 0";
  }
  return "";
}

std::string to_string(const Witness& w) {
  static constexpr char kNames[3] = {'x', 'y', 'z'};
  std::string out = "(";
  for (int i = 0; i < w.arity; ++i) {
    if (i > 0) out += ", ";
    out += kNames[i];
    out += '=';
    out += std::to_string(w.at[i]);
  }
  out += ')';
  return out;
}

std::ostream& operator<<(std::ostream& os, const Witness& w) { return os << to_string(w); }

bool axiom_holds_at(const FiniteAlgebra& alg, AxiomId axiom, const Witness& w) {
  const Element z0 = alg.zero();
  const Element x = w.at[0];
  const Element y = w.at[1];
  const Element z = w.at[2];
  auto m = [&](Element a, Element b) { return alg.op(a, b); };
  switch (axiom) {
    case AxiomId::C1: return m(x, x) == z0;
    case AxiomId::C2: return m(x, z0) == x;
    case AxiomId::C3: return m(m(x, y), z) == m(x, m(z, m(z0, y)));
    case AxiomId::C4: return !(m(x, y) == z0 && m(y, x) == z0) || x == y;
    case AxiomId::C5: return m(x, m(y, z)) == m(m(x, y), m(z0, z));
    case AxiomId::C6: return m(x, x) == x;
    case AxiomId::C7: return x == z0 || y == z0 || m(x, y) == m(y, x);
  }
  return false;
}

AxiomReport check_axiom(const FiniteAlgebra& alg, AxiomId axiom, std::size_t witness_limit) {
  AxiomReport report{axiom, true, {}, 0};
  const auto n = static_cast<Element>(alg.order());
  auto visit = [&](const Witness& w) {
    if (axiom_holds_at(alg, axiom, w)) return;
    report.holds = false;
    ++report.violations;
    if (witness_limit == 0 || report.witnesses.size() < witness_limit) {
      report.witnesses.push_back(w);
    }
  };
  switch (arity(axiom)) {
    case 1:
      for (Element x = 0; x < n; ++x) visit(Witness::of(x));
      break;
    case 2:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y) visit(Witness::of(x, y));
      break;
    default:
      for (Element x = 0; x < n; ++x)
        for (Element y = 0; y < n; ++y)
          for (Element z = 0; z < n; ++z) visit(Witness::of(x, y, z));
      break;
  }
  return report;
}

std::string_view to_string(Label l) noexcept {
  switch (l) {
    case Label::B: return "B";
    case Label::BH: return "BH";
    case Label::BO: return "BO";
    case Label::Z: return "Z";
  }
  return "?";
}

namespace {

constexpr std::array<AxiomId, 3> kB = {AxiomId::C1, AxiomId::C2, AxiomId::C3};
constexpr std::array<AxiomId, 3> kBH = {AxiomId::C1, AxiomId::C2, AxiomId::C4};
constexpr std::array<AxiomId, 3> kBO = {AxiomId::C1, AxiomId::C2, AxiomId::C5};
constexpr std::array<AxiomId, 4> kZLiteral = {AxiomId::C1, AxiomId::C2, AxiomId::C6, AxiomId::C7};
constexpr std::array<AxiomId, 3> kZRelaxed = {AxiomId::C2, AxiomId::C6, AxiomId::C7};

}  // namespace

std::span<const AxiomId> axioms_of(Label label, ZAxioms z) noexcept {
  switch (label) {
    case Label::B: return kB;
    case Label::BH: return kBH;
    case Label::BO: return kBO;
    case Label::Z: return z == ZAxioms::literal ? std::span<const AxiomId>(kZLiteral)
                                                : std::span<const AxiomId>(kZRelaxed);
  }
  return {};
}

std::vector<Label> classify(const FiniteAlgebra& alg, ZAxioms z) {
  std::array<std::optional<bool>, 7> cache;
  auto holds = [&](AxiomId a) {
    auto& slot = cache[static_cast<std::size_t>(a)];
    if (!slot) slot = check_axiom(alg, a, 1).holds;
    return *slot;
  };
  std::vector<Label> out;
  for (Label l : kAllLabels) {
    bool all = true;
    for (AxiomId a : axioms_of(l, z)) all = all && holds(a);
    if (all) out.push_back(l);
  }
  return out;
}

Identities find_identities(const FiniteAlgebra& alg) {
  const std::size_t n = alg.order();
  Identities ids{Subset(n), Subset(n), Subset(n)};
  for (Element e = 0; e < n; ++e) {
    bool right = true;
    bool left = true;
    for (Element x = 0; x < n; ++x) {
      right = right && alg.op(x, e) == x;
      left = left && alg.op(e, x) == x;
    }
    if (right) ids.right.insert(e);
    if (left) ids.left.insert(e);
    if (right && left) ids.two_sided.insert(e);
  }
  return ids;
}

Subset product_set(const FiniteAlgebra& alg, const Subset& a, const Subset& b) {
  if (a.carrier() != alg.order() || b.carrier() != alg.order()) {
    throw DomainError("product_set: subset carrier does not match algebra order");
  }
  std::uint64_t out = 0;
  a.for_each([&](Element x) {
    const auto r = alg.row(x);
    b.for_each([&](Element y) { out |= std::uint64_t{1} << r[y]; });
  });
  return Subset::from_mask(alg.order(), out);
}

}  // namespace roughalg
