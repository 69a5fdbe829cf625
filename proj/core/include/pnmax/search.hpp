#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pnmax/graph.hpp"
#include "pnmax/kinds.hpp"

namespace pnmax {

// Comparison target over graph invariants, e.g. "2*ALPHA_STAR < IPN",
// "SPN > ESPN", "ESPN/n < 4/5". Grammar:
//   TARGET := EXPR CMP EXPR
//   EXPR   := FACTOR { ('*' | '/') FACTOR }
//   FACTOR := <kind name> | 'n' | <integer>
// evaluated exactly over rationals; candidates whose expressions are
// undefined (division by zero, infeasible kinds) are skipped.
struct SearchTarget {
  struct Factor {
    enum class Type { Kind, Order, Constant } type = Type::Constant;
    ParameterKind kind = ParameterKind::Spn;
    long value = 0;
    bool divide = false;
  };
  enum class Cmp { Lt, Le, Gt, Ge, Eq, Ne };

  std::vector<Factor> lhs;
  std::vector<Factor> rhs;
  Cmp cmp = Cmp::Lt;
  std::string source;

  static SearchTarget parse(const std::string& text);
};

enum class SearchGenerator { RandomGraph, RandomTree, AllGraphs };

SearchGenerator parse_generator(const std::string& name);
std::string generator_name(SearchGenerator g);

struct SearchOptions {
  SearchGenerator generator = SearchGenerator::RandomGraph;
  int max_n = 8;
  long budget = 1000;    // candidates to examine (random generators)
  std::uint64_t seed = 1;
  int limit_hits = 10;   // stop after this many hits; 0 = never stop early
  int threads = 1;
};

struct SearchHit {
  std::string graph6;
  int order = 0;
  std::string detail;  // "lhs=a/b rhs=c/d"
};

struct SearchReport {
  long examined = 0;
  long skipped = 0;  // candidates with an undefined expression
  std::vector<SearchHit> hits;
  bool exhausted = false;  // an exhaustive generator ran to completion
  bool have_extremes = false;
  long long min_lhs_num = 0, min_lhs_den = 1;
  std::string min_lhs_graph6;
  std::string text;  // deterministic
};

SearchReport run_search(const SearchTarget& target, const SearchOptions& opts);

}  // namespace pnmax
