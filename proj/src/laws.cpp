#include "roughalg/laws.hpp"

#include <array>

namespace roughalg {

std::string_view to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::violated: return "violated";
    case Verdict::not_applicable: return "not-applicable";
  }
  return "?";
}

namespace {

constexpr std::array<LawInfo, 22> kLaws = {{
    {Law::pawlak_1, "2-1.1", "lower(A) <= A <= upper(A)", false},
    {Law::pawlak_2, "2-1.2", "lower(0) = upper(0) = 0 and lower(U) = upper(U) = U", false},
    {Law::pawlak_3, "2-1.3", "lower(A u B) >= lower(A) u lower(B)", false},
    {Law::pawlak_4, "2-1.4", "lower(A n B) = lower(A) n lower(B)", false},
    {Law::pawlak_5, "2-1.5", "upper(A u B) = upper(A) u upper(B)", false},
    {Law::pawlak_6, "2-1.6", "upper(A n B) <= upper(A) n upper(B)", false},
    {Law::pawlak_7, "2-1.7", "upper(A^c) = lower(A)^c", false},
    {Law::pawlak_8, "2-1.8", "lower(A^c) = upper(A)^c", false},
    {Law::pawlak_9, "2-1.9", "lower(lower(A)) = upper(lower(A)) = lower(A)", false},
    {Law::pawlak_10, "2-1.10", "upper(upper(A)) = lower(upper(A)) = upper(A)", false},
    {Law::pawlak_11, "2-1.11", "upper(A)*upper(B) = upper(A*B)", true},
    {Law::pawlak_11_sub, "2-1.11-sub", "upper(A)*upper(B) <= upper(A*B)", true},
    {Law::pawlak_11_sup, "2-1.11-sup", "upper(A)*upper(B) >= upper(A*B)", true},
    {Law::pawlak_12, "2-1.12", "lower(A)*lower(B) <= lower(A*B)", true},
    {Law::approx_1, "3-1.1", "lower(A) <= A <= upper(A)", false},
    {Law::approx_2, "3-1.2", "upper(A u B) = upper(A) u upper(B)", false},
    {Law::approx_3, "3-1.3", "lower(A n B) = lower(A) n lower(B)", false},
    {Law::approx_4, "3-1.4", "A <= B implies lower(A) <= lower(B) and upper(A) <= upper(B)", false},
    {Law::approx_5, "3-1.5", "lower(A) u lower(B) <= lower(A u B)", false},
    {Law::approx_6, "3-1.6", "upper(A n B) <= upper(A) n upper(B)", false},
    {Law::product_1, "3-2.1", "upper(A)*upper(B) <= upper(A*B)", true},
    {Law::product_2, "3-2.2", "lower(A*B) != 0 implies lower(A)*lower(B) <= lower(A*B)", true},
}};

LawOutcome pass() { return {}; }

LawOutcome not_applicable() {
  LawOutcome o;
  o.verdict = Verdict::not_applicable;
  return o;
}

LawOutcome fail(const Subset& lhs, const Subset& rhs, std::string_view rel) {
  LawOutcome o;
  o.verdict = Verdict::violated;
  o.lhs = lhs;
  o.rhs = rhs;
  o.relation = rel;
  const Subset diff = rel == ">=" ? rhs - lhs : (lhs - rhs).empty() ? rhs - lhs : lhs - rhs;
  if (!diff.empty()) o.element = diff.min();
  return o;
}

// Each check either passes or returns the failing comparison; a law is a
// sequence of checks evaluated left to right.
struct Checker {
  std::optional<LawOutcome> failed;

  Checker& sub(const Subset& l, const Subset& r) {
    if (!failed && !l.is_subset_of(r)) failed = fail(l, r, "<=");
    return *this;
  }
  Checker& sup(const Subset& l, const Subset& r) {
    if (!failed && !r.is_subset_of(l)) failed = fail(l, r, ">=");
    return *this;
  }
  Checker& eq(const Subset& l, const Subset& r) {
    if (!failed && l != r) failed = fail(l, r, "=");
    return *this;
  }
  LawOutcome done() const { return failed ? *failed : pass(); }
};

}  // namespace

std::span<const LawInfo> all_laws() noexcept { return kLaws; }

const LawInfo& info(Law law) noexcept { return kLaws[static_cast<std::size_t>(law)]; }

std::optional<Law> parse_law(std::string_view id) noexcept {
  for (const LawInfo& li : kLaws) {
    if (li.id == id) return li.law;
  }
  return std::nullopt;
}

std::vector<Law> law_group(std::string_view group) {
  std::vector<Law> out;
  if (group == "2-1") {
    // The combined equality of item 11 is reported through its two halves.
    for (const LawInfo& li : kLaws) {
      if (li.id.starts_with("2-1.") && li.law != Law::pawlak_11) out.push_back(li.law);
    }
  } else if (group == "3-1" || group == "3-2") {
    const std::string prefix = std::string(group) + ".";
    for (const LawInfo& li : kLaws) {
      if (li.id.starts_with(prefix)) out.push_back(li.law);
    }
  }
  return out;
}

LawOutcome evaluate(Law law, const Partition& p, const FiniteAlgebra* alg, const Subset& a,
                    const Subset& b) {
  const std::size_t n = p.carrier();
  auto lo = [&](const Subset& s) { return lower(p, s); };
  auto up = [&](const Subset& s) { return upper(p, s); };
  Checker c;
  switch (law) {
    case Law::pawlak_1:
    case Law::approx_1:
      return c.sub(lo(a), a).sub(a, up(a)).done();
    case Law::pawlak_2: {
      const Subset empty(n);
      const Subset full = Subset::full(n);
      return c.eq(lo(empty), empty).eq(up(empty), empty).eq(lo(full), full).eq(up(full), full).done();
    }
    case Law::pawlak_3:
      return c.sup(lo(a | b), lo(a) | lo(b)).done();
    case Law::approx_5:
      return c.sub(lo(a) | lo(b), lo(a | b)).done();
    case Law::pawlak_4:
    case Law::approx_3:
      return c.eq(lo(a & b), lo(a) & lo(b)).done();
    case Law::pawlak_5:
    case Law::approx_2:
      return c.eq(up(a | b), up(a) | up(b)).done();
    case Law::pawlak_6:
    case Law::approx_6:
      return c.sub(up(a & b), up(a) & up(b)).done();
    case Law::pawlak_7:
      return c.eq(up(a.complement()), lo(a).complement()).done();
    case Law::pawlak_8:
      return c.eq(lo(a.complement()), up(a).complement()).done();
    case Law::pawlak_9: {
      const Subset l = lo(a);
      return c.eq(lo(l), l).eq(up(l), l).done();
    }
    case Law::pawlak_10: {
      const Subset u = up(a);
      return c.eq(up(u), u).eq(lo(u), u).done();
    }
    case Law::approx_4:
      if (!a.is_subset_of(b)) return not_applicable();
      return c.sub(lo(a), lo(b)).sub(up(a), up(b)).done();
    case Law::pawlak_11:
    case Law::pawlak_11_sub:
    case Law::pawlak_11_sup:
    case Law::product_1: {
      if (alg == nullptr) return not_applicable();
      const Subset lhs = product_set(*alg, up(a), up(b));
      const Subset rhs = up(product_set(*alg, a, b));
      if (law == Law::pawlak_11) return c.eq(lhs, rhs).done();
      if (law == Law::pawlak_11_sup) return c.sup(lhs, rhs).done();
      return c.sub(lhs, rhs).done();
    }
    case Law::pawlak_12:
    case Law::product_2: {
      if (alg == nullptr) return not_applicable();
      const Subset rhs = lo(product_set(*alg, a, b));
      if (law == Law::product_2 && rhs.empty()) return not_applicable();
      return c.sub(product_set(*alg, lo(a), lo(b)), rhs).done();
    }
  }
  return not_applicable();
}

bool LawReport::all_hold() const noexcept {
  for (const LawResult& r : items) {
    if (r.outcome.verdict == Verdict::violated) return false;
  }
  return true;
}

bool ProductLawReport::all_hold() const noexcept {
  return part1.outcome.verdict != Verdict::violated && part2.outcome.verdict != Verdict::violated;
}

namespace {

LawReport run_laws(const ApproximationSpace& space, const Subset& a, const Subset& b,
                   const std::vector<Law>& laws) {
  const FiniteAlgebra* alg = space.algebra() ? &*space.algebra() : nullptr;
  std::optional<bool> complete;
  if (alg != nullptr) {
    complete = is_congruence(*alg, space.partition()).holds &&
               is_complete_congruence(*alg, space.partition()).holds;
  }
  LawReport report;
  for (Law law : laws) {
    LawResult r{law, evaluate(law, space.partition(), alg, a, b), {}};
    if (info(law).needs_algebra) {
      if (!alg) {
        r.note = "requires an algebra";
      } else if (!*complete) {
        r.note = r.outcome.verdict == Verdict::violated
                     ? "partition is not a complete congruence"
                     : "holds here; not guaranteed without a complete congruence";
      }
    }
    report.items.push_back(std::move(r));
  }
  return report;
}

}  // namespace

LawReport check_pawlak(const ApproximationSpace& space, const Subset& a, const Subset& b) {
  return run_laws(space, a, b, law_group("2-1"));
}

LawReport check_prop31(const ApproximationSpace& space, const Subset& a, const Subset& b) {
  return run_laws(space, a, b, law_group("3-1"));
}

ProductLawReport check_prop32(const FiniteAlgebra& alg, const Partition& p, const Subset& a,
                              const Subset& b) {
  const CongruenceReport cong = is_congruence(alg, p);
  if (!cong.holds) {
    const auto& w = *cong.witness;
    throw PreconditionError("product laws need a congruence; compatibility fails at (x=" +
                            std::to_string(w.x) + ", y=" + std::to_string(w.y) +
                            ", z=" + std::to_string(w.z) + ")");
  }
  ProductLawReport report;
  report.complete = is_complete_congruence(alg, p).holds;
  report.part1 = {Law::product_1, evaluate(Law::product_1, p, &alg, a, b), {}};
  report.part2 = {Law::product_2, evaluate(Law::product_2, p, &alg, a, b), {}};
  if (report.part2.outcome.verdict == Verdict::not_applicable) {
    report.part2.note = "lower(A*B) is empty";
  } else if (!report.complete) {
    report.part2.note = "congruence is not complete; inclusion is not guaranteed";
  }
  return report;
}

}  // namespace roughalg
