#pragma once

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "semicross/errors.hpp"

namespace semicross {

struct CheckItem {
  std::string name;
  bool pass = true;
  double residual = 0.0;
  std::string detail;
};

/// Flat list of named checks with residuals, shared by every validator and
/// verifier. Validators call `require` (throws on failure so the error kind of
/// the spec surfaces); verifiers that aggregate use `add` and inspect `ok()`.
struct CheckReport {
  std::vector<CheckItem> items;

  void add(std::string name, bool pass, double residual = 0.0,
           std::string detail = {}) {
    items.push_back({std::move(name), pass, residual, std::move(detail)});
  }

  void require(std::string name, bool pass, double residual, ErrorKind kind,
               std::string detail = {}) {
    items.push_back({name, pass, residual, detail});
    if (!pass) {
      char buf[64];
      std::snprintf(buf, sizeof buf, " (residual=%.3e)", residual);
      throw Error(kind, name + (detail.empty() ? "" : ": " + detail) + buf);
    }
  }

  void merge(const CheckReport& other, const std::string& prefix = {}) {
    for (const auto& it : other.items) {
      items.push_back({prefix.empty() ? it.name : prefix + "/" + it.name,
                       it.pass, it.residual, it.detail});
    }
  }

  bool ok() const {
    return std::all_of(items.begin(), items.end(),
                       [](const CheckItem& i) { return i.pass; });
  }

  double max_residual() const {
    double r = 0.0;
    for (const auto& i : items) r = std::max(r, i.residual);
    return r;
  }
};

}  // namespace semicross
