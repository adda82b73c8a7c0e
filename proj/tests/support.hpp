#pragma once

// Fixture loading and naive reference implementations. The oracles here use
// plain std::set and nested loops and share no code with the library beyond
// the FiniteAlgebra accessor, so agreement between the two is meaningful.

#include <filesystem>
#include <set>
#include <string>
#include <vector>

#include "roughalg/io.hpp"
#include "roughalg/relations.hpp"

namespace testing_support {

using roughalg::Element;
using roughalg::FiniteAlgebra;

inline std::filesystem::path table_path(int k) {
  return std::filesystem::path(ROUGHALG_TABLES_DIR) / ("t" + std::to_string(k) + ".alg");
}

inline FiniteAlgebra table(int k) { return roughalg::io::load_algebra(table_path(k)).algebra; }

namespace oracle {

using Set = std::set<Element>;
using Classes = std::vector<Set>;

inline Set to_set(const roughalg::Subset& s) {
  auto e = s.elements();
  return Set(e.begin(), e.end());
}

inline Classes to_classes(const roughalg::Partition& p) {
  Classes out;
  for (const auto& c : p.classes()) out.push_back(to_set(c));
  return out;
}

inline const Set& class_of(const Classes& cs, Element x) {
  for (const Set& c : cs) {
    if (c.count(x)) return c;
  }
  throw std::logic_error("element not covered");
}

inline bool includes(const Set& big, const Set& small) {
  for (Element x : small) {
    if (!big.count(x)) return false;
  }
  return true;
}

inline Set lower(const Classes& cs, std::size_t n, const Set& a) {
  Set out;
  for (Element x = 0; x < n; ++x) {
    if (includes(a, class_of(cs, x))) out.insert(x);
  }
  return out;
}

inline Set upper(const Classes& cs, std::size_t n, const Set& a) {
  Set out;
  for (Element x = 0; x < n; ++x) {
    for (Element y : class_of(cs, x)) {
      if (a.count(y)) {
        out.insert(x);
        break;
      }
    }
  }
  return out;
}

inline Set product(const FiniteAlgebra& alg, const Set& a, const Set& b) {
  Set out;
  for (Element x : a) {
    for (Element y : b) out.insert(alg.op(x, y));
  }
  return out;
}

inline bool is_ideal(const FiniteAlgebra& alg, const Set& s) {
  const std::size_t n = alg.order();
  if (!s.count(alg.zero())) return false;
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (s.count(alg.op(x, y)) && s.count(y) && !s.count(x)) return false;
    }
  }
  return true;
}

inline bool is_strong_ideal(const FiniteAlgebra& alg, const Set& s) {
  if (!is_ideal(alg, s)) return false;
  const std::size_t n = alg.order();
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      for (Element z = 0; z < n; ++z) {
        if (s.count(alg.op(alg.op(x, y), z)) && s.count(y) && !s.count(alg.op(x, z))) return false;
      }
    }
  }
  return true;
}

inline bool is_congruence(const FiniteAlgebra& alg, const Classes& cs) {
  const std::size_t n = alg.order();
  auto same = [&](Element a, Element b) { return class_of(cs, a).count(b) > 0; };
  for (Element x = 0; x < n; ++x) {
    for (Element y = 0; y < n; ++y) {
      if (!same(x, y)) continue;
      for (Element z = 0; z < n; ++z) {
        if (!same(alg.op(x, z), alg.op(y, z)) || !same(alg.op(z, x), alg.op(z, y))) return false;
      }
    }
  }
  return true;
}

inline bool is_complete(const FiniteAlgebra& alg, const Classes& cs) {
  for (Element x = 0; x < alg.order(); ++x) {
    for (Element y = 0; y < alg.order(); ++y) {
      if (product(alg, class_of(cs, x), class_of(cs, y)) != class_of(cs, alg.op(x, y))) return false;
    }
  }
  return true;
}

/// Every set partition of {0..n-1}, by recursive insertion.
inline std::vector<Classes> partitions(std::size_t n) {
  std::vector<Classes> out{{}};
  for (Element x = 0; x < n; ++x) {
    std::vector<Classes> next;
    for (const Classes& p : out) {
      for (std::size_t i = 0; i < p.size(); ++i) {
        Classes q = p;
        q[i].insert(x);
        next.push_back(q);
      }
      Classes q = p;
      q.push_back({x});
      next.push_back(q);
    }
    out = std::move(next);
  }
  return out;
}

}  // namespace oracle
}  // namespace testing_support
