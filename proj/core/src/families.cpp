#include "pnmax/families.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>

namespace pnmax {

namespace {

struct FamilyName {
  Family family;
  const char* name;
  int arity;
};

constexpr FamilyName kFamilies[] = {
    {Family::Path, "path", 1},
    {Family::Cycle, "cycle", 1},
    {Family::Star, "star", 1},
    {Family::DoubleStar, "double_star", 2},
    {Family::Complete, "complete", 1},
    {Family::CompleteBipartite, "complete_bipartite", 2},
    {Family::Grid, "grid", 2},
    {Family::CoronaPath, "corona_path", 1},
    {Family::EspnTree, "espn_tree", 1},
    {Family::Cartesian, "cartesian", 0},
};

const FamilyName& family_info(Family f) {
  for (const auto& e : kFamilies) {
    if (e.family == f) return e;
  }
  throw std::logic_error("unknown family");
}

long parse_long(const std::string& s) {
  std::size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("bad integer '" + s + "'");
  return v;
}

void check_bound(const char* family, const char* what, long v, long lo) {
  if (v < lo) {
    throw std::invalid_argument(std::string(family) + ": parameter " + what + "=" +
                                std::to_string(v) + " below minimum " +
                                std::to_string(lo));
  }
}

}  // namespace

FamilySpec FamilySpec::parse(const std::string& text) {
  auto colon = text.find(':');
  std::string name = text.substr(0, colon);
  std::string rest = colon == std::string::npos ? "" : text.substr(colon + 1);

  FamilySpec spec;
  bool known = false;
  for (const auto& e : kFamilies) {
    if (name == e.name) {
      spec.family = e.family;
      known = true;
      break;
    }
  }
  if (!known) throw std::invalid_argument("unknown family '" + name + "'");

  if (spec.family == Family::Cartesian) {
    // "(spec),(spec)" with balanced parentheses
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : rest) {
      if (c == '(') {
        if (depth++ > 0) cur += c;
      } else if (c == ')') {
        if (--depth == 0) {
          parts.push_back(cur);
          cur.clear();
        } else {
          cur += c;
        }
        if (depth < 0) throw std::invalid_argument("unbalanced ')' in '" + text + "'");
      } else if (depth > 0) {
        cur += c;
      } else if (c != ',') {
        throw std::invalid_argument("expected '(spec),(spec)' after cartesian:");
      }
    }
    if (depth != 0 || parts.size() != 2) {
      throw std::invalid_argument("cartesian expects exactly two parenthesized specs");
    }
    spec.factors.push_back(parse(parts[0]));
    spec.factors.push_back(parse(parts[1]));
    return spec;
  }

  const int arity = family_info(spec.family).arity;
  std::string cur;
  for (char c : rest) {
    if (c == ',') {
      spec.params.push_back(parse_long(cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) spec.params.push_back(parse_long(cur));
  if (static_cast<int>(spec.params.size()) != arity) {
    throw std::invalid_argument(std::string(family_info(spec.family).name) +
                                " expects " + std::to_string(arity) +
                                " parameter(s), got " +
                                std::to_string(spec.params.size()));
  }
  return spec;
}

std::string FamilySpec::to_string() const {
  std::string out = family_info(family).name;
  if (family == Family::Cartesian) {
    out += ":(" + factors[0].to_string() + "),(" + factors[1].to_string() + ")";
    return out;
  }
  for (std::size_t i = 0; i < params.size(); ++i) {
    out += (i == 0 ? ":" : ",") + std::to_string(params[i]);
  }
  return out;
}

Graph path_graph(int n) {
  check_bound("path", "n", n, 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  return Graph(n, edges, "path:" + std::to_string(n));
}

Graph cycle_graph(int n) {
  check_bound("cycle", "n", n, 3);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
  edges.emplace_back(n - 1, 0);
  return Graph(n, edges, "cycle:" + std::to_string(n));
}

Graph star_graph(int leaves) {
  check_bound("star", "n", leaves, 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 1; i <= leaves; ++i) edges.emplace_back(0, i);
  return Graph(leaves + 1, edges, "star:" + std::to_string(leaves));
}

Graph double_star(int p, int q) {
  check_bound("double_star", "p", p, 1);
  check_bound("double_star", "q", q, 1);
  std::vector<std::pair<int, int>> edges = {{0, 1}};
  for (int i = 0; i < p; ++i) edges.emplace_back(0, 2 + i);
  for (int i = 0; i < q; ++i) edges.emplace_back(1, 2 + p + i);
  return Graph(p + q + 2, edges,
               "double_star:" + std::to_string(p) + "," + std::to_string(q));
}

Graph complete_graph(int n) {
  check_bound("complete", "n", n, 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  }
  return Graph(n, edges, "complete:" + std::to_string(n));
}

Graph complete_bipartite(int p, int q) {
  check_bound("complete_bipartite", "p", p, 1);
  check_bound("complete_bipartite", "q", q, 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < q; ++j) edges.emplace_back(i, p + j);
  }
  return Graph(p + q, edges,
               "complete_bipartite:" + std::to_string(p) + "," + std::to_string(q));
}

Graph grid_graph(int cols, int rows) {
  check_bound("grid", "n", cols, 1);
  check_bound("grid", "m", rows, 1);
  Graph g = cartesian_product(path_graph(cols), path_graph(rows));
  return g.with_label("grid:" + std::to_string(cols) + "," + std::to_string(rows));
}

Graph corona_path(int m) {
  check_bound("corona_path", "m", m, 1);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < m; ++i) {
    edges.emplace_back(2 * i, 2 * i + 1);
    if (i + 1 < m) edges.emplace_back(2 * i, 2 * (i + 1));
  }
  return Graph(2 * m, edges, "corona_path:" + std::to_string(m));
}

Graph espn_tree(int k) {
  check_bound("espn_tree", "k", k, 2);
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < k; ++i) {
    const int s = 5 * i;
    edges.emplace_back(s, s + 1);
    edges.emplace_back(s, s + 2);
    edges.emplace_back(s, s + 3);
    edges.emplace_back(s + 3, s + 4);
    if (i + 1 < k) edges.emplace_back(s, s + 5);
  }
  return Graph(5 * k, edges, "espn_tree:" + std::to_string(k));
}

Graph generate(const FamilySpec& spec) {
  switch (spec.family) {
    case Family::Path:
      return path_graph(static_cast<int>(spec.params[0]));
    case Family::Cycle:
      return cycle_graph(static_cast<int>(spec.params[0]));
    case Family::Star:
      return star_graph(static_cast<int>(spec.params[0]));
    case Family::DoubleStar:
      return double_star(static_cast<int>(spec.params[0]),
                         static_cast<int>(spec.params[1]));
    case Family::Complete:
      return complete_graph(static_cast<int>(spec.params[0]));
    case Family::CompleteBipartite:
      return complete_bipartite(static_cast<int>(spec.params[0]),
                                static_cast<int>(spec.params[1]));
    case Family::Grid:
      return grid_graph(static_cast<int>(spec.params[0]),
                        static_cast<int>(spec.params[1]));
    case Family::CoronaPath:
      return corona_path(static_cast<int>(spec.params[0]));
    case Family::EspnTree:
      return espn_tree(static_cast<int>(spec.params[0]));
    case Family::Cartesian:
      return cartesian_product(generate(spec.factors[0]), generate(spec.factors[1]))
          .with_label(spec.to_string());
  }
  throw std::logic_error("unreachable");
}

}  // namespace pnmax
