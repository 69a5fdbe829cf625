#include "pnmax/search.hpp"

#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "pnmax/formats.hpp"
#include "pnmax/generators.hpp"
#include "pnmax/routing.hpp"
#include "pnmax/solver.hpp"

namespace pnmax {

namespace {

struct Token {
  enum class Type { Ident, Number, Star, Slash, Cmp, End } type;
  std::string text;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
      out.push_back({Token::Type::Number, s.substr(i, j - i)});
      i = j;
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < s.size() && (std::isalnum(static_cast<unsigned char>(s[j])) ||
                              s[j] == '_')) {
        ++j;
      }
      out.push_back({Token::Type::Ident, s.substr(i, j - i)});
      i = j;
    } else if (c == '*') {
      out.push_back({Token::Type::Star, "*"});
      ++i;
    } else if (c == '/') {
      out.push_back({Token::Type::Slash, "/"});
      ++i;
    } else if (c == '<' || c == '>' || c == '=' || c == '!') {
      std::string op(1, c);
      if (i + 1 < s.size() && s[i + 1] == '=') {
        op += '=';
        ++i;
      }
      out.push_back({Token::Type::Cmp, op});
      ++i;
    } else {
      throw std::invalid_argument(std::string("target: unexpected character '") + c +
                                  "'");
    }
  }
  out.push_back({Token::Type::End, ""});
  return out;
}

SearchTarget::Factor parse_factor(const Token& t, bool divide) {
  SearchTarget::Factor f;
  f.divide = divide;
  if (t.type == Token::Type::Number) {
    f.type = SearchTarget::Factor::Type::Constant;
    f.value = std::stol(t.text);
    return f;
  }
  if (t.type != Token::Type::Ident) {
    throw std::invalid_argument("target: expected kind, 'n' or integer");
  }
  if (t.text == "n" || t.text == "N") {
    f.type = SearchTarget::Factor::Type::Order;
    return f;
  }
  f.type = SearchTarget::Factor::Type::Kind;
  f.kind = parse_kind(t.text);
  return f;
}

std::vector<SearchTarget::Factor> parse_expr(const std::vector<Token>& toks,
                                             std::size_t& i) {
  std::vector<SearchTarget::Factor> out;
  out.push_back(parse_factor(toks[i++], false));
  while (toks[i].type == Token::Type::Star || toks[i].type == Token::Type::Slash) {
    const bool divide = toks[i].type == Token::Type::Slash;
    ++i;
    out.push_back(parse_factor(toks[i++], divide));
  }
  return out;
}

struct Rational {
  long long num = 0;
  long long den = 1;  // always positive

  void reduce() {
    const long long g = std::gcd(num < 0 ? -num : num, den);
    if (g > 1) {
      num /= g;
      den /= g;
    }
  }
  std::string to_string() const {
    if (den == 1) return std::to_string(num);
    return std::to_string(num) + "/" + std::to_string(den);
  }
};

int compare(const Rational& a, const Rational& b) {
  const __int128 l = static_cast<__int128>(a.num) * b.den;
  const __int128 r = static_cast<__int128>(b.num) * a.den;
  if (l < r) return -1;
  if (l > r) return 1;
  return 0;
}

// Lazily solved invariant values for one candidate graph.
struct Evaluator {
  const Graph& g;
  SolveOptions opts;
  std::array<int, 22> value{};
  std::array<char, 22> state{};  // 0 unknown, 1 known, 2 infeasible

  Evaluator(const Graph& graph, int threads) : g(graph) {
    opts.parallel_shards = threads;
  }

  bool get(ParameterKind k, long long& out) {
    const int idx = static_cast<int>(k);
    if (state[idx] == 0) {
      const SolveResult r = solve_auto(g, k, opts);
      state[idx] = r.feasible ? 1 : 2;
      value[idx] = r.value;
    }
    if (state[idx] == 2) return false;
    out = value[idx];
    return true;
  }

  bool eval(const std::vector<SearchTarget::Factor>& expr, Rational& out) {
    Rational r{1, 1};
    for (const auto& f : expr) {
      long long v = 0;
      switch (f.type) {
        case SearchTarget::Factor::Type::Constant:
          v = f.value;
          break;
        case SearchTarget::Factor::Type::Order:
          v = g.order();
          break;
        case SearchTarget::Factor::Type::Kind:
          if (!get(f.kind, v)) return false;
          break;
      }
      if (f.divide) {
        if (v <= 0) return false;
        r.den *= v;
      } else {
        if (v < 0) return false;
        r.num *= v;
      }
    }
    r.reduce();
    out = r;
    return true;
  }
};

bool cmp_holds(SearchTarget::Cmp cmp, int c) {
  switch (cmp) {
    case SearchTarget::Cmp::Lt:
      return c < 0;
    case SearchTarget::Cmp::Le:
      return c <= 0;
    case SearchTarget::Cmp::Gt:
      return c > 0;
    case SearchTarget::Cmp::Ge:
      return c >= 0;
    case SearchTarget::Cmp::Eq:
      return c == 0;
    case SearchTarget::Cmp::Ne:
      return c != 0;
  }
  return false;
}

}  // namespace

SearchTarget SearchTarget::parse(const std::string& text) {
  const auto toks = lex(text);
  std::size_t i = 0;
  SearchTarget t;
  t.source = text;
  t.lhs = parse_expr(toks, i);
  if (toks[i].type != Token::Type::Cmp) {
    throw std::invalid_argument("target: expected a comparison operator");
  }
  const std::string op = toks[i++].text;
  if (op == "<") {
    t.cmp = Cmp::Lt;
  } else if (op == "<=") {
    t.cmp = Cmp::Le;
  } else if (op == ">") {
    t.cmp = Cmp::Gt;
  } else if (op == ">=") {
    t.cmp = Cmp::Ge;
  } else if (op == "==" || op == "=") {
    t.cmp = Cmp::Eq;
  } else if (op == "!=") {
    t.cmp = Cmp::Ne;
  } else {
    throw std::invalid_argument("target: bad comparison '" + op + "'");
  }
  t.rhs = parse_expr(toks, i);
  if (toks[i].type != Token::Type::End) {
    throw std::invalid_argument("target: trailing tokens");
  }
  return t;
}

SearchGenerator parse_generator(const std::string& name) {
  if (name == "random-graph") return SearchGenerator::RandomGraph;
  if (name == "random-tree") return SearchGenerator::RandomTree;
  if (name == "all-graphs") return SearchGenerator::AllGraphs;
  throw std::invalid_argument("unknown generator '" + name +
                              "' (random-graph, random-tree, all-graphs)");
}

std::string generator_name(SearchGenerator g) {
  switch (g) {
    case SearchGenerator::RandomGraph:
      return "random-graph";
    case SearchGenerator::RandomTree:
      return "random-tree";
    case SearchGenerator::AllGraphs:
      return "all-graphs";
  }
  return "?";
}

SearchReport run_search(const SearchTarget& target, const SearchOptions& opts) {
  SearchReport rep;
  Rational min_lhs;
  bool stop = false;

  auto consider = [&](const Graph& g) {
    if (stop) return;
    ++rep.examined;
    Evaluator ev(g, opts.threads);
    Rational lhs, rhs;
    if (!ev.eval(target.lhs, lhs) || !ev.eval(target.rhs, rhs)) {
      ++rep.skipped;
      return;
    }
    if (!rep.have_extremes || compare(lhs, min_lhs) < 0) {
      rep.have_extremes = true;
      min_lhs = lhs;
      rep.min_lhs_num = lhs.num;
      rep.min_lhs_den = lhs.den;
      rep.min_lhs_graph6 = emit_graph6(g);
    }
    if (cmp_holds(target.cmp, compare(lhs, rhs))) {
      SearchHit hit;
      hit.graph6 = emit_graph6(g);
      hit.order = g.order();
      hit.detail = "lhs=" + lhs.to_string() + " rhs=" + rhs.to_string();
      rep.hits.push_back(std::move(hit));
      if (opts.limit_hits > 0 &&
          static_cast<int>(rep.hits.size()) >= opts.limit_hits) {
        stop = true;
      }
    }
  };

  switch (opts.generator) {
    case SearchGenerator::RandomGraph: {
      Rng rng(opts.seed);
      for (long i = 0; i < opts.budget && !stop; ++i) {
        const int n = rng.range(2, opts.max_n);
        std::vector<std::pair<int, int>> edges;
        const double p = 0.10 + 0.60 * (rng.below(1000) / 1000.0);
        for (int u = 0; u < n; ++u) {
          for (int v = u + 1; v < n; ++v) {
            if (rng.chance(p)) edges.emplace_back(u, v);
          }
        }
        consider(Graph(n, edges));
      }
      rep.exhausted = false;
      break;
    }
    case SearchGenerator::RandomTree: {
      Rng rng(opts.seed);
      for (long i = 0; i < opts.budget && !stop; ++i) {
        consider(random_tree(rng.range(2, opts.max_n), rng));
      }
      rep.exhausted = false;
      break;
    }
    case SearchGenerator::AllGraphs: {
      bool truncated = false;
      for (int n = 1; n <= opts.max_n && !stop && !truncated; ++n) {
        const int pairs = n * (n - 1) / 2;
        std::vector<std::pair<int, int>> pair_list;
        for (int v = 1; v < n; ++v) {
          for (int u = 0; u < v; ++u) pair_list.emplace_back(u, v);
        }
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << pairs); ++mask) {
          if (stop) break;
          if (opts.budget > 0 && rep.examined >= opts.budget) {
            truncated = true;
            break;
          }
          std::vector<std::pair<int, int>> edges;
          for (int i = 0; i < pairs; ++i) {
            if ((mask >> i) & 1) edges.push_back(pair_list[i]);
          }
          consider(Graph(n, edges));
        }
      }
      rep.exhausted = !stop && !truncated;
      break;
    }
  }

  std::ostringstream out;
  out << "search: target \"" << target.source << "\" generator "
      << generator_name(opts.generator) << " max_n=" << opts.max_n
      << " seed=" << opts.seed << "\n";
  out << "  examined=" << rep.examined << " skipped=" << rep.skipped
      << " hits=" << rep.hits.size()
      << (rep.exhausted ? " exhausted" : "") << "\n";
  for (const auto& h : rep.hits) {
    out << "  HIT graph6=" << h.graph6 << " n=" << h.order << " " << h.detail << "\n";
  }
  if (rep.have_extremes) {
    out << "  min lhs=" << min_lhs.to_string() << " at graph6=" << rep.min_lhs_graph6
        << "\n";
  }
  rep.text = out.str();
  return rep;
}

}  // namespace pnmax
