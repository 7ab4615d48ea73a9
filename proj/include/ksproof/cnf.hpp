#pragma once

// DIMACS CNF encoding of a coloring instance. Variable i is "ray i is Green".
// Each triad (a,b,c) gives (a|b|c), (-a|-b), (-a|-c), (-b|-c); each
// at-most-one pair (a,b) gives (-a|-b). Triad clauses come first, in
// constraint order, then the pair clauses.

#include "ksproof/kscolor.hpp"

#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ksproof {

struct Cnf {
  int variables = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<std::string> comments;
};

inline Cnf encode_cnf(const ConstraintSet& cs, std::string_view catalog_name = "peres") {
  Cnf cnf;
  cnf.variables = cs.vertex_count;
  cnf.comments.push_back("ksproof coloring instance");
  cnf.comments.push_back("catalog: " + std::string(catalog_name));
  cnf.comments.push_back("deleted ray: " + (cs.deleted ? std::to_string(*cs.deleted) : std::string("none")));
  cnf.comments.push_back("variable i <=> ray i is Green");
  for (const Triad& t : cs.triads) {
    cnf.clauses.push_back({t[0], t[1], t[2]});
    cnf.clauses.push_back({-t[0], -t[1]});
    cnf.clauses.push_back({-t[0], -t[2]});
    cnf.clauses.push_back({-t[1], -t[2]});
  }
  for (const Dyad& p : cs.pairs) cnf.clauses.push_back({-p[0], -p[1]});
  return cnf;
}

inline std::string to_dimacs(const Cnf& cnf) {
  std::ostringstream os;
  for (const std::string& c : cnf.comments) os << "c " << c << '\n';
  os << "p cnf " << cnf.variables << ' ' << cnf.clauses.size() << '\n';
  for (const auto& clause : cnf.clauses) {
    for (int lit : clause) os << lit << ' ';
    os << "0\n";
  }
  return os.str();
}

inline Cnf parse_dimacs(std::string_view text) {
  Cnf cnf;
  std::istringstream in{std::string(text)};
  std::string line;
  bool header = false;
  std::size_t declared = 0;
  std::vector<int> current;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    if (line[0] == 'c') {
      cnf.comments.push_back(line.size() > 2 ? line.substr(2) : "");
      continue;
    }
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> cnf.variables >> declared) || fmt != "cnf") {
        throw std::invalid_argument("DIMACS: bad header '" + line + "'");
      }
      header = true;
      continue;
    }
    if (!header) throw std::invalid_argument("DIMACS: clause before header");
    int lit = 0;
    while (ls >> lit) {
      if (lit == 0) {
        cnf.clauses.push_back(std::move(current));
        current.clear();
      } else {
        if (std::abs(lit) > cnf.variables) throw std::invalid_argument("DIMACS: literal out of range");
        current.push_back(lit);
      }
    }
  }
  if (!header) throw std::invalid_argument("DIMACS: missing header");
  if (!current.empty()) throw std::invalid_argument("DIMACS: unterminated clause");
  if (cnf.clauses.size() != declared) throw std::invalid_argument("DIMACS: clause count does not match header");
  return cnf;
}

/// Every clause has a true literal; `green[i]` is variable i (index 0 unused).
inline bool satisfies(const Cnf& cnf, const std::vector<bool>& green) {
  for (const auto& clause : cnf.clauses) {
    bool sat = false;
    for (int lit : clause) {
      const bool value = green.at(static_cast<std::size_t>(std::abs(lit)));
      if ((lit > 0) == value) {
        sat = true;
        break;
      }
    }
    if (!sat) return false;
  }
  return true;
}

inline std::vector<bool> assignment_of(const Coloring& c) {
  std::vector<bool> green(static_cast<std::size_t>(c.vertex_count() + 1), false);
  for (int v : c.greens()) green[v] = true;
  return green;
}

}  // namespace ksproof
