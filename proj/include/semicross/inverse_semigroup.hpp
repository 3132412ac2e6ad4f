#pragma once

#include <optional>
#include <string>
#include <vector>

#include "semicross/errors.hpp"

namespace semicross {

/// A finite inverse semigroup given by its multiplication table. Elements are
/// dense indices 0..n-1; the involution table is derived during verification,
/// never supplied.
class FiniteInverseSemigroup {
 public:
  FiniteInverseSemigroup() = default;

  int size() const { return n_; }
  int mul(int s, int t) const { return table_[s][t]; }
  int star(int s) const { return star_[s]; }
  std::optional<int> unit() const { return unit_; }
  const std::vector<std::vector<int>>& table() const { return table_; }

  bool is_idempotent(int s) const { return mul(s, s) == s; }

  std::vector<int> idempotents() const {
    std::vector<int> out;
    for (int s = 0; s < n_; ++s)
      if (is_idempotent(s)) out.push_back(s);
    return out;
  }

  /// Natural partial order: s <= t iff s = f t for some idempotent f.
  bool leq(int s, int t) const {
    for (int f = 0; f < n_; ++f)
      if (is_idempotent(f) && mul(f, t) == s) return true;
    return false;
  }

  bool is_semilattice() const {
    for (int s = 0; s < n_; ++s) {
      if (!is_idempotent(s)) return false;
      for (int t = 0; t < n_; ++t)
        if (mul(s, t) != mul(t, s)) return false;
    }
    return true;
  }

  /// Zero element z with z s = s z = z for all s, if present.
  std::optional<int> zero() const {
    for (int z = 0; z < n_; ++z) {
      bool is_zero = true;
      for (int s = 0; s < n_ && is_zero; ++s)
        is_zero = mul(z, s) == z && mul(s, z) == z;
      if (is_zero) return z;
    }
    return std::nullopt;
  }

  int product_of_word(const std::vector<int>& word) const {
    int acc = word.at(0);
    for (std::size_t i = 1; i < word.size(); ++i) acc = mul(acc, word[i]);
    return acc;
  }

  friend FiniteInverseSemigroup verify_inverse_semigroup(
      const std::vector<std::vector<int>>& table);

 private:
  int n_ = 0;
  std::vector<std::vector<int>> table_;
  std::vector<int> star_;
  std::optional<int> unit_;
};

/// Validates a multiplication table as an inverse semigroup: associativity is
/// checked exhaustively and the generalized inverse of each element is found
/// by exhaustive search and must be unique.
inline FiniteInverseSemigroup verify_inverse_semigroup(
    const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  if (n == 0) throw Error(ErrorKind::Precondition, "empty table");
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != n)
      throw Error(ErrorKind::Precondition, "table is not square");
    for (int v : row)
      if (v < 0 || v >= n)
        throw Error(ErrorKind::Precondition, "table entry out of range");
  }
  auto mul = [&](int a, int b) { return table[a][b]; };

  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      for (int r = 0; r < n; ++r)
        if (mul(mul(s, t), r) != mul(s, mul(t, r)))
          throw Error(ErrorKind::NotAssociative,
                      "(" + std::to_string(s) + "," + std::to_string(t) + "," +
                          std::to_string(r) + ")");

  std::vector<int> star(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int t = 0; t < n; ++t) {
      if (mul(mul(s, t), s) == s && mul(mul(t, s), t) == t) {
        if (star[s] != -1)
          throw Error(ErrorKind::NonUniqueInverse,
                      "element " + std::to_string(s) + " has inverses " +
                          std::to_string(star[s]) + " and " +
                          std::to_string(t));
        star[s] = t;
      }
    }
    if (star[s] == -1)
      throw Error(ErrorKind::NoInverse, "element " + std::to_string(s));
  }

  FiniteInverseSemigroup S;
  S.n_ = n;
  S.table_ = table;
  S.star_ = star;
  for (int e = 0; e < n; ++e) {
    bool is_unit = true;
    for (int s = 0; s < n && is_unit; ++s)
      is_unit = mul(e, s) == s && mul(s, e) == s;
    if (is_unit) {
      S.unit_ = e;
      break;
    }
  }
  return S;
}

struct IdempotentOrder {
  std::vector<int> idempotents;
  std::vector<std::vector<bool>> leq;  // leq[s][t] iff s <= t
  bool is_semilattice = false;
};

inline IdempotentOrder idempotents_and_order(const FiniteInverseSemigroup& S) {
  IdempotentOrder out;
  out.idempotents = S.idempotents();
  const int n = S.size();
  out.leq.assign(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t) out.leq[s][t] = S.leq(s, t);
  out.is_semilattice = S.is_semilattice();
  return out;
}

/// Partition of S by the minimum group congruence together with the group
/// quotient. `class_of[s]` is the quotient index of s.
struct CongruenceClasses {
  std::vector<int> class_of;
  std::vector<int> representative;  // first element of each class
  FiniteInverseSemigroup quotient;
};

/// Minimum group congruence: s ~ t iff f s = f t for some idempotent f. The
/// quotient is the maximal group homomorphic image of S.
inline CongruenceClasses min_group_congruence(const FiniteInverseSemigroup& S) {
  if (!S.unit())
    throw Error(ErrorKind::Precondition, "semigroup has no unit");
  const int n = S.size();
  const auto idem = S.idempotents();
  auto related = [&](int s, int t) {
    for (int f : idem)
      if (S.mul(f, s) == S.mul(f, t)) return true;
    return false;
  };

  CongruenceClasses out;
  out.class_of.assign(n, -1);
  for (int s = 0; s < n; ++s) {
    for (int c = 0; c < static_cast<int>(out.representative.size()); ++c) {
      if (related(s, out.representative[c])) {
        out.class_of[s] = c;
        break;
      }
    }
    if (out.class_of[s] == -1) {
      out.class_of[s] = static_cast<int>(out.representative.size());
      out.representative.push_back(s);
    }
  }

  const int m = static_cast<int>(out.representative.size());
  std::vector<std::vector<int>> qtable(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      qtable[a][b] =
          out.class_of[S.mul(out.representative[a], out.representative[b])];

  // The congruence must be well defined (class of product independent of
  // representatives) and the quotient a group: one idempotent only.
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      if (qtable[out.class_of[s]][out.class_of[t]] != out.class_of[S.mul(s, t)])
        throw Error(ErrorKind::QuotientNotGroup, "congruence not respected");
  out.quotient = verify_inverse_semigroup(qtable);
  if (static_cast<int>(out.quotient.idempotents().size()) != 1 ||
      !out.quotient.unit())
    throw Error(ErrorKind::QuotientNotGroup, "quotient has extra idempotents");
  return out;
}

/// Invariant bundle used by property tests: s s* s = s, s** = s, (st)* = t*s*,
/// idempotents commute.
inline bool check_inverse_semigroup_laws(const FiniteInverseSemigroup& S) {
  const int n = S.size();
  for (int s = 0; s < n; ++s) {
    if (S.mul(S.mul(s, S.star(s)), s) != s) return false;
    if (S.star(S.star(s)) != s) return false;
    for (int t = 0; t < n; ++t)
      if (S.star(S.mul(s, t)) != S.mul(S.star(t), S.star(s))) return false;
  }
  for (int f : S.idempotents())
    for (int g : S.idempotents())
      if (S.mul(f, g) != S.mul(g, f)) return false;
  return true;
}

}  // namespace semicross
