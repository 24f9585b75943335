#include "qhs/graphs.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qhs {

namespace {

// ---------- structural analysis of a kappa table ----------

struct Component {
  std::vector<int> cycle;     // cycle vertices in kappa order
  std::vector<int> vertices;  // all vertices
};

struct Analysis {
  std::vector<Component> components;
  std::vector<char> on_cycle;
  std::vector<std::vector<int>> children;  // incoming non-cycle arrows
  std::vector<int> component_of;
};

Analysis analyze(const std::vector<int>& kappa) {
  const int n = static_cast<int>(kappa.size());
  for (int j : kappa) {
    if (j < 0 || j >= n) throw std::invalid_argument("kappa table entry out of range");
  }
  Analysis a;
  a.on_cycle.assign(n, 0);
  a.children.assign(n, {});
  a.component_of.assign(n, -1);

  for (int s = 0; s < n; ++s) {
    int x = s;
    for (int i = 0; i < n; ++i) x = kappa[x];  // lands on the cycle
    int y = x;
    do {
      a.on_cycle[y] = 1;
      y = kappa[y];
    } while (y != x);
  }
  for (int j = 0; j < n; ++j) {
    if (!a.on_cycle[j]) a.children[kappa[j]].push_back(j);
  }
  for (int s = 0; s < n; ++s) {
    if (a.component_of[s] >= 0 || !a.on_cycle[s]) continue;
    int id = static_cast<int>(a.components.size());
    Component comp;
    int y = s;
    do {
      comp.cycle.push_back(y);
      a.component_of[y] = id;
      y = kappa[y];
    } while (y != s);
    // collect the hanging trees
    std::vector<int> stack = comp.cycle;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      comp.vertices.push_back(v);
      for (int c : a.children[v]) {
        a.component_of[c] = id;
        stack.push_back(c);
      }
    }
    a.components.push_back(std::move(comp));
  }
  return a;
}

std::string tree_code(int root, const Analysis& a) {
  std::vector<std::string> kids;
  for (int c : a.children[root]) kids.push_back(tree_code(c, a));
  std::sort(kids.begin(), kids.end());
  std::string out = "(";
  for (const auto& k : kids) out += k;
  out += ")";
  return out;
}

std::string component_code(const Component& comp, const Analysis& a) {
  const int m = static_cast<int>(comp.cycle.size());
  std::vector<std::string> trees;
  trees.reserve(m);
  for (int c : comp.cycle) trees.push_back(tree_code(c, a));
  // minimal rotation; tree codes are prefix-free, so comparing the
  // concatenations is the same as comparing the tuples
  std::string best;
  for (int r = 0; r < m; ++r) {
    std::string cand;
    for (int i = 0; i < m; ++i) cand += trees[(r + i) % m];
    if (r == 0 || cand < best) best = std::move(cand);
  }
  return "c" + std::to_string(m) + "[" + best + "]";
}

// ---------- constructive enumeration of shapes ----------

// rooted tree codes by vertex count
std::vector<std::vector<std::string>> tree_catalog(int maxn) {
  std::vector<std::vector<std::string>> trees(maxn + 1);
  if (maxn >= 1) trees[1] = {"()"};
  for (int k = 2; k <= maxn; ++k) {
    std::set<std::string> out;
    // multisets of child subtrees totaling k-1, nondecreasing (size, code)
    std::vector<std::string> acc;
    std::function<void(int, std::pair<int, std::string>)> rec =
        [&](int remaining, std::pair<int, std::string> min_key) {
          if (remaining == 0) {
            std::vector<std::string> sorted = acc;
            std::sort(sorted.begin(), sorted.end());
            std::string code = "(";
            for (const auto& s : sorted) code += s;
            code += ")";
            out.insert(code);
            return;
          }
          for (int s = 1; s <= remaining; ++s) {
            for (const auto& t : trees[s]) {
              std::pair<int, std::string> key{s, t};
              if (key < min_key) continue;
              acc.push_back(t);
              rec(remaining - s, key);
              acc.pop_back();
            }
          }
        };
    rec(k - 1, {0, ""});
    trees[k].assign(out.begin(), out.end());
  }
  return trees;
}

std::vector<std::vector<std::string>> component_catalog(int maxn) {
  auto trees = tree_catalog(maxn);
  std::vector<std::vector<std::string>> comps(maxn + 1);
  for (int size = 1; size <= maxn; ++size) {
    std::set<std::string> out;
    for (int m = 1; m <= size; ++m) {
      // sequences of m trees totaling `size`, kept when rotation-minimal
      std::vector<std::string> seq;
      std::function<void(int, int)> rec = [&](int pos, int remaining) {
        if (pos == m) {
          if (remaining != 0) return;
          std::string flat;
          for (const auto& s : seq) flat += s;
          for (int r = 1; r < m; ++r) {
            std::string rot;
            for (int i = 0; i < m; ++i) rot += seq[(r + i) % m];
            if (rot < flat) return;  // not the canonical rotation
          }
          out.insert("c" + std::to_string(m) + "[" + flat + "]");
          return;
        }
        int slack = remaining - (m - pos - 1);
        for (int s = 1; s <= slack; ++s) {
          for (const auto& t : trees[s]) {
            seq.push_back(t);
            rec(pos + 1, remaining - s);
            seq.pop_back();
          }
        }
      };
      rec(0, size);
    }
    comps[size].assign(out.begin(), out.end());
  }
  return comps;
}

// ---------- classical labels for n <= 4 ----------

struct LabelTable {
  std::vector<std::string> labels;         // by canonical index
  std::map<std::string, int> code_index;   // type code -> canonical index
};

const LabelTable& label_table(int n) {
  static std::mutex mu;
  static std::map<int, LabelTable> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  LabelTable t;
  if (n >= 1 && n <= 4) {
    // representatives in the classical order
    static const std::vector<std::vector<std::vector<int>>> reps = {
        {{0}},
        {{0, 1}, {0, 0}, {1, 0}},
        {{0, 1, 2}, {0, 0, 2}, {0, 0, 0}, {1, 0, 2}, {0, 0, 1}, {1, 0, 0}, {1, 2, 0}},
        {{0, 1, 2, 3}, {0, 0, 2, 3}, {1, 0, 2, 3}, {0, 0, 2, 2}, {0, 0, 0, 3},
         {0, 0, 1, 3}, {1, 2, 0, 3}, {1, 0, 0, 3}, {1, 0, 2, 2}, {0, 0, 1, 2},
         {0, 0, 1, 1}, {0, 0, 1, 0}, {0, 0, 0, 0}, {1, 0, 3, 2}, {1, 2, 0, 0},
         {1, 0, 0, 2}, {1, 0, 0, 1}, {1, 2, 3, 0}, {1, 0, 0, 0}}};
    static const char* const roman[] = {"I",    "II",  "III",  "IV",  "V",    "VI",  "VII",
                                        "VIII", "IX",  "X",    "XI",  "XII",  "XIII", "XIV",
                                        "XV",   "XVI", "XVII", "XVIII", "XIX"};
    const auto& list = reps[n - 1];
    for (std::size_t i = 0; i < list.size(); ++i) {
      t.labels.push_back(roman[i]);
      t.code_index.emplace(type_of(list[i]).code, static_cast<int>(i));
    }
    if (t.code_index.size() != list.size()) {
      throw std::logic_error("label table representatives are not pairwise distinct");
    }
  }
  return cache.emplace(n, std::move(t)).first->second;
}

}  // namespace

Int rho_chain(const std::vector<Int>& xs) {
  const std::size_t k = xs.size();
  Int result = (k % 2 == 0) ? 1 : -1;  // the trailing (-1)^k
  Int suffix = 1;
  for (std::size_t i = k; i-- > 0;) {
    suffix *= xs[i];
    result += (i % 2 == 0) ? suffix : -suffix;
  }
  return result;
}

TypeClass type_of(const std::vector<int>& kappa) {
  Analysis a = analyze(kappa);
  std::vector<std::string> codes;
  codes.reserve(a.components.size());
  for (const auto& comp : a.components) codes.push_back(component_code(comp, a));
  std::sort(codes.begin(), codes.end());
  std::string out;
  for (std::size_t i = 0; i < codes.size(); ++i) {
    if (i) out += "+";
    out += codes[i];
  }
  return {out};
}

std::vector<TypeClass> enumerate_types(int n) {
  if (n < 1 || n > 8) throw std::domain_error("enumerate_types: n must be in 1..8");
  auto comps = component_catalog(n);
  std::set<std::string> graphs;
  std::vector<std::pair<int, std::string>> acc;
  std::function<void(int, std::pair<int, std::string>)> rec =
      [&](int remaining, std::pair<int, std::string> min_key) {
        if (remaining == 0) {
          std::vector<std::string> parts;
          for (const auto& [sz, c] : acc) {
            (void)sz;
            parts.push_back(c);
          }
          std::sort(parts.begin(), parts.end());
          std::string code;
          for (std::size_t i = 0; i < parts.size(); ++i) {
            if (i) code += "+";
            code += parts[i];
          }
          graphs.insert(code);
          return;
        }
        for (int s = 1; s <= remaining; ++s) {
          for (const auto& c : comps[s]) {
            std::pair<int, std::string> key{s, c};
            if (key < min_key) continue;
            acc.push_back(key);
            rec(remaining - s, key);
            acc.pop_back();
          }
        }
      };
  rec(n, {0, ""});

  std::vector<TypeClass> out;
  out.reserve(graphs.size());
  for (const auto& code : graphs) out.push_back({code});
  if (n <= 4) {
    const auto& table = label_table(n);
    std::sort(out.begin(), out.end(), [&](const TypeClass& x, const TypeClass& y) {
      return table.code_index.at(x.code) < table.code_index.at(y.code);
    });
  }
  return out;
}

std::vector<int> representative_kappa(const TypeClass& t) {
  std::vector<int> kappa;
  const std::string& s = t.code;

  // parse one tree "(...)" rooted at `parent`, starting at s[pos] == '('
  std::function<std::size_t(std::size_t, int)> parse_tree = [&](std::size_t pos, int parent) {
    if (pos >= s.size() || s[pos] != '(') throw std::invalid_argument("bad type code");
    ++pos;
    while (pos < s.size() && s[pos] == '(') {
      int child = static_cast<int>(kappa.size());
      kappa.push_back(parent);
      pos = parse_tree(pos, child);
    }
    if (pos >= s.size() || s[pos] != ')') throw std::invalid_argument("bad type code");
    return pos + 1;
  };

  std::size_t pos = 0;
  while (pos < s.size()) {
    if (s[pos] == '+') ++pos;
    if (s[pos] != 'c') throw std::invalid_argument("bad type code");
    ++pos;
    std::size_t mstart = pos;
    while (pos < s.size() && isdigit(s[pos])) ++pos;
    int m = std::stoi(s.substr(mstart, pos - mstart));
    if (pos >= s.size() || s[pos] != '[') throw std::invalid_argument("bad type code");
    ++pos;
    int first = static_cast<int>(kappa.size());
    for (int i = 0; i < m; ++i) {
      int root = static_cast<int>(kappa.size());
      kappa.push_back(i + 1 < m ? root + 1 : first);  // fixed up after subtree parse
      // kappa[root] must point at the *next cycle vertex*, whose index we only
      // know after this subtree is parsed; remember and patch below
      std::size_t next_patch = kappa.size() - 1;
      pos = parse_tree(pos, root);
      if (i + 1 < m) {
        kappa[next_patch] = static_cast<int>(kappa.size());
      } else {
        kappa[next_patch] = first;
      }
    }
    if (pos >= s.size() || s[pos] != ']') throw std::invalid_argument("bad type code");
    ++pos;
  }
  if (type_of(kappa).code != s) throw std::logic_error("type code round-trip failed");
  return kappa;
}

std::string type_label(const TypeClass& t, int n) {
  if (n >= 1 && n <= 4) {
    const auto& table = label_table(n);
    auto it = table.code_index.find(t.code);
    if (it != table.code_index.end()) return table.labels[it->second];
  }
  return t.code;
}

int type_order_index(const TypeClass& t, int n) {
  if (n >= 1 && n <= 4) {
    const auto& table = label_table(n);
    auto it = table.code_index.find(t.code);
    if (it != table.code_index.end()) return it->second;
  }
  return -1;
}

std::vector<int> min_relabeling(const std::vector<int>& kappa) {
  const int n = static_cast<int>(kappa.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<int> best;
  do {
    std::vector<int> relabeled(n);
    for (int old = 0; old < n; ++old) relabeled[perm[old]] = perm[kappa[old]];
    if (best.empty() || relabeled < best) best = std::move(relabeled);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

CycleValidity validate_even_cycles(const KappaGraph& g) {
  Analysis an = analyze(g.kappa);
  bool family = false;
  for (const auto& comp : an.components) {
    const auto& cyc = comp.cycle;
    if (cyc.size() % 2 != 0 || cyc.size() < 2) continue;
    bool odd_half_ones = true, even_half_ones = true, all_ones = true;
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      bool one = g.a[cyc[i]] == 1;
      if (!one) {
        all_ones = false;
        (i % 2 == 0 ? even_half_ones : odd_half_ones) = false;
      }
    }
    bool ec1 = !odd_half_ones && !even_half_ones;
    if (all_ones) {
      family = true;  // EC2
    } else if (!ec1) {
      return CycleValidity::Invalid;
    }
  }
  return family ? CycleValidity::Family : CycleValidity::Unique;
}

WeightSolution solve_weights(const KappaGraph& g) {
  if (g.a.size() != g.kappa.size()) throw std::invalid_argument("solve_weights: size mismatch");
  for (const Int& e : g.a) {
    if (e < 1) throw std::invalid_argument("solve_weights: exponents must be positive");
  }
  CycleValidity validity = validate_even_cycles(g);
  WeightSolution sol;
  sol.status = validity;
  if (validity != CycleValidity::Unique) return sol;

  const int n = g.n();
  Analysis an = analyze(g.kappa);
  std::vector<Rat> w(n, Rat(0));
  std::vector<char> done(n, 0);

  for (const auto& comp : an.components) {
    const auto& cyc = comp.cycle;
    const int m = static_cast<int>(cyc.size());
    Int prod = 1;
    for (int c : cyc) prod *= g.a[c];
    Int denom = prod - ((m % 2 == 0) ? 1 : -1);
    for (int i = 0; i < m; ++i) {
      // numerator: rho of the exponents strictly after cyc[i], wrapping around
      std::vector<Int> rest;
      rest.reserve(m - 1);
      for (int s = 1; s < m; ++s) rest.push_back(g.a[cyc[(i + s) % m]]);
      Rat wi(rho_chain(rest), denom);
      if (!(wi > 0 && wi < 1)) throw std::logic_error("cycle weight out of range");
      w[cyc[i]] = wi;
      done[cyc[i]] = 1;
    }
    // tree vertices outward from the cycle
    std::vector<int> frontier = cyc;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int p : frontier) {
        for (int c : an.children[p]) {
          w[c] = (Rat(1) - w[p]) / Rat(g.a[c]);
          done[c] = 1;
          next.push_back(c);
        }
      }
      frontier = std::move(next);
    }
  }
  for (int j = 0; j < n; ++j) {
    if (!done[j]) throw std::logic_error("solve_weights: vertex missed");
  }

  Int scale = 1;
  for (const Rat& wi : w) scale = lcm(scale, denominator(wi));
  std::vector<Int> v;
  v.reserve(n);
  for (const Rat& wi : w) v.push_back(numerator(wi) * (scale / denominator(wi)));
  sol.system = reduce(WeightSystem(std::move(v), scale));
  sol.normalized = std::move(w);
  return sol;
}

bool is_fcc(const std::vector<int>& kappa) {
  std::vector<int> indeg(kappa.size(), 0);
  for (std::size_t j = 0; j < kappa.size(); ++j) {
    if (kappa[j] != static_cast<int>(j) && ++indeg[kappa[j]] > 1) return false;
  }
  return true;
}

GraphStructure graph_structure(const std::vector<int>& kappa) {
  Analysis a = analyze(kappa);
  GraphStructure gs;
  gs.children = a.children;
  for (const auto& comp : a.components) {
    gs.component_vertices.push_back(comp.vertices);
    gs.component_cycles.push_back(comp.cycle);
  }
  return gs;
}

std::vector<KappaGraph> kappa_choices(const WeightSystem& ws) {
  const int n = ws.n();
  if (n > 6) throw std::domain_error("kappa_choices: n > 6 is not supported");
  std::vector<std::vector<std::pair<int, Int>>> cands(n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      Int need = ws.degree() - ws.weight(k);
      if (need % ws.weight(j) == 0) {
        Int a = need / ws.weight(j);
        if (a >= 1) cands[j].emplace_back(k, a);
      }
    }
  }
  std::vector<KappaGraph> out;
  KappaGraph g;
  g.kappa.assign(n, 0);
  g.a.assign(n, Int(1));
  std::function<void(int)> rec = [&](int j) {
    if (j == n) {
      out.push_back(g);
      return;
    }
    for (const auto& [k, a] : cands[j]) {
      g.kappa[j] = k;
      g.a[j] = a;
      rec(j + 1);
    }
  };
  rec(0);
  return out;
}

}  // namespace qhs
