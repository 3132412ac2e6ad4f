#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "semicross/errors.hpp"

namespace semicross {

/// Discrete group oracle. Two encodings cover every example: the integers
/// (elements are their own values) and finite groups by table (elements are
/// row indices). Table groups are verified exhaustively on construction.
class GroupOracle {
 public:
  using Elem = std::int64_t;

  /// Defaults to the integers.
  GroupOracle() = default;

  static GroupOracle integers() { return GroupOracle(); }

  static GroupOracle from_table(const std::vector<std::vector<int>>& table) {
    GroupOracle g;
    g.finite_ = true;
    g.table_ = table;
    const int n = static_cast<int>(table.size());
    if (n == 0) throw Error(ErrorKind::Precondition, "empty group table");
    for (const auto& row : table)
      if (static_cast<int>(row.size()) != n)
        throw Error(ErrorKind::Precondition, "group table not square");
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (table[table[a][b]][c] != table[a][table[b][c]])
            throw Error(ErrorKind::Precondition, "group table not associative");
    g.unit_ = -1;
    for (int e = 0; e < n; ++e) {
      bool ok = true;
      for (int a = 0; a < n && ok; ++a)
        ok = table[e][a] == a && table[a][e] == a;
      if (ok) g.unit_ = e;
    }
    if (g.unit_ < 0) throw Error(ErrorKind::Precondition, "no identity");
    g.inverse_.assign(n, -1);
    for (int a = 0; a < n; ++a) {
      for (int b = 0; b < n; ++b)
        if (table[a][b] == g.unit_ && table[b][a] == g.unit_) g.inverse_[a] = b;
      if (g.inverse_[a] < 0)
        throw Error(ErrorKind::Precondition, "element without inverse");
    }
    return g;
  }

  static GroupOracle cyclic(int n) {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    return from_table(t);
  }

  /// S3 as permutations of three points, indexed 0..5 in lexicographic
  /// one-line order.
  static GroupOracle symmetric3() {
    const int perms[6][3] = {{0, 1, 2}, {0, 2, 1}, {1, 0, 2},
                             {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    auto index_of = [&](const int p[3]) {
      for (int i = 0; i < 6; ++i)
        if (perms[i][0] == p[0] && perms[i][1] == p[1] && perms[i][2] == p[2])
          return i;
      return -1;
    };
    std::vector<std::vector<int>> t(6, std::vector<int>(6));
    for (int a = 0; a < 6; ++a)
      for (int b = 0; b < 6; ++b) {
        int comp[3];
        for (int x = 0; x < 3; ++x) comp[x] = perms[a][perms[b][x]];
        t[a][b] = index_of(comp);
      }
    return from_table(t);
  }

  static GroupOracle by_name(const std::string& name) {
    if (name == "Z") return integers();
    if (name == "Z2") return cyclic(2);
    if (name == "Z3") return cyclic(3);
    if (name == "S3") return symmetric3();
    throw Error(ErrorKind::UnresolvedReference, "unknown group " + name);
  }

  bool is_finite() const { return finite_; }
  int order() const { return finite_ ? static_cast<int>(table_.size()) : -1; }

  Elem identity() const { return finite_ ? unit_ : 0; }

  Elem product(Elem a, Elem b) const {
    if (!finite_) return a + b;
    return table_[check(a)][check(b)];
  }

  Elem inverse(Elem a) const {
    if (!finite_) return -a;
    return inverse_[check(a)];
  }

  bool operator==(const GroupOracle& o) const {
    return finite_ == o.finite_ && table_ == o.table_;
  }

 private:
  int check(Elem a) const {
    if (a < 0 || a >= static_cast<Elem>(table_.size()))
      throw Error(ErrorKind::Precondition, "group element out of range");
    return static_cast<int>(a);
  }

  bool finite_ = false;
  std::vector<std::vector<int>> table_;
  std::vector<int> inverse_;
  int unit_ = 0;
};

}  // namespace semicross
