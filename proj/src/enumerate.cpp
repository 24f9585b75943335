#include "qhs/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "qhs/bounds.hpp"
#include "qhs/conditions.hpp"

namespace qhs {

namespace {

constexpr const char* kArtifactVersion = "qhsing-1";

// ---------- exponent search over one shape ----------

// Slot kinds drive the running lower bound on mu: ordinary vertices (Fermat
// points, pure-cycle members, interior tree vertices) contribute a factor a;
// leaves contribute a - 1; the root-or-cycle of a component with trees
// contributes jointly prod(a) - (-1)^m once its last member is assigned.
struct Slot {
  int vertex;
  int kind;  // 0 = factor a, 1 = leaf, 2 = joint root/cycle member
  bool group_last = false;
  int group_sign = 0;  // (-1)^m for kind 2
};

std::vector<Slot> build_schedule(const std::vector<int>& kappa) {
  GraphStructure gs = graph_structure(kappa);
  std::vector<Slot> slots;
  for (std::size_t c = 0; c < gs.component_cycles.size(); ++c) {
    const auto& cyc = gs.component_cycles[c];
    const auto& verts = gs.component_vertices[c];
    if (verts.size() == cyc.size()) {
      for (int v : cyc) slots.push_back({v, 0, false, 0});
      continue;
    }
    const int m = static_cast<int>(cyc.size());
    const int sign = (m % 2 == 0) ? 1 : -1;
    for (int i = 0; i < m; ++i) slots.push_back({cyc[i], 2, i == m - 1, sign});
    std::vector<int> middles, leaves, frontier = cyc;
    while (!frontier.empty()) {
      std::vector<int> next;
      for (int p : frontier) {
        for (int ch : gs.children[p]) {
          (gs.children[ch].empty() ? leaves : middles).push_back(ch);
          next.push_back(ch);
        }
      }
      frontier = std::move(next);
    }
    for (int v : middles) slots.push_back({v, 0, false, 0});
    for (int v : leaves) slots.push_back({v, 1, false, 0});
  }
  return slots;
}

struct SearchContext {
  const Int& mu_max;
  long long budget;
  std::atomic<long long>& nodes;
  std::map<WeightSystem, Int>& candidates;
};

void exponent_dfs(const std::vector<int>& kappa, const std::vector<Slot>& slots, std::size_t idx,
                  std::vector<Int>& assignment, const Int& lb, const Int& group_partial,
                  SearchContext& ctx) {
  if (ctx.budget > 0 && ++ctx.nodes > ctx.budget) {
    throw BudgetExceeded("enumeration node budget exceeded");
  } else if (ctx.budget <= 0) {
    ++ctx.nodes;
  }
  if (idx == slots.size()) {
    KappaGraph g{kappa, assignment};
    WeightSolution sol = solve_weights(g);
    if (sol.status != CycleValidity::Unique) {
      throw std::logic_error("exponent search produced a degenerate cycle");
    }
    const WeightSystem& ws = *sol.system;
    Rat mu = milnor_number(ws);
    if (denominator(mu) != 1) return;
    Int mu_int = numerator(mu);
    if (mu_int > ctx.mu_max) return;
    if (!ws.all_below_half_degree()) {
      throw std::logic_error("exponent search produced a weight >= d/2");
    }
    ctx.candidates.emplace(ws, mu_int);
    return;
  }
  const Slot& slot = slots[idx];
  for (Int a = 2;; ++a) {
    assignment[slot.vertex] = a;
    if (slot.kind == 0) {
      Int f = lb * a;
      if (f > ctx.mu_max) break;
      exponent_dfs(kappa, slots, idx + 1, assignment, f, 1, ctx);
    } else if (slot.kind == 1) {
      Int f = lb * (a - 1);
      if (f > ctx.mu_max) break;
      exponent_dfs(kappa, slots, idx + 1, assignment, f, 1, ctx);
    } else if (!slot.group_last) {
      Int partial = group_partial * a;
      if (lb * (partial - 1) > ctx.mu_max) break;
      exponent_dfs(kappa, slots, idx + 1, assignment, lb, partial, ctx);
    } else {
      Int f = lb * (group_partial * a - slot.group_sign);
      if (f > ctx.mu_max) break;
      exponent_dfs(kappa, slots, idx + 1, assignment, f, 1, ctx);
    }
  }
}

// ---------- per-type survivors, with optional checkpointing ----------

using Survivor = std::pair<WeightSystem, Int>;  // (reduced sorted system, mu)

std::vector<Survivor> search_type(const TypeClass& type, const EnumerateOptions& opts,
                                  std::atomic<long long>& nodes) {
  std::vector<int> kappa = representative_kappa(type);
  std::vector<Slot> slots = build_schedule(kappa);
  if (slots.size() != kappa.size()) {
    throw std::logic_error("exponent schedule does not cover every vertex");
  }
  std::map<WeightSystem, Int> candidates;
  SearchContext ctx{opts.mu_max, opts.budget, nodes, candidates};
  std::vector<Int> assignment(kappa.size(), Int(2));
  exponent_dfs(kappa, slots, 0, assignment, 1, 1, ctx);

  std::vector<Survivor> out;
  for (auto& [ws, mu] : candidates) {
    if (is_IS3(ws)) out.emplace_back(ws, mu);
  }
  return out;
}

struct Cache {
  bool active = false;
  std::filesystem::path dir;
  std::string stem;
  bool manifest_ok = false;

  Cache(const EnumerateOptions& opts, std::size_t type_count) {
    if (opts.cache_dir.empty()) return;
    active = true;
    dir = opts.cache_dir;
    std::filesystem::create_directories(dir);
    stem = "n" + std::to_string(opts.n) + "_mu" + opts.mu_max.str();
    auto mpath = dir / ("manifest_" + stem + ".json");
    std::ifstream in(mpath);
    if (!in) return;
    try {
      nlohmann::json m = nlohmann::json::parse(in);
      manifest_ok = m.at("version") == kArtifactVersion && m.at("n") == opts.n &&
                    m.at("mu_max") == opts.mu_max.str() &&
                    m.at("types") == type_count;
    } catch (...) {
      manifest_ok = false;
    }
  }

  std::filesystem::path shard_path(std::size_t idx) const {
    return dir / (stem + "_t" + std::to_string(idx) + ".shard");
  }

  std::optional<std::vector<Survivor>> load(std::size_t idx, int n) const {
    if (!active || !manifest_ok) return std::nullopt;
    std::ifstream in(shard_path(idx));
    if (!in) return std::nullopt;
    std::string tag, version;
    std::size_t count = 0;
    if (!(in >> tag >> version >> count) || tag != "qhs-shard" || version != kArtifactVersion) {
      return std::nullopt;
    }
    std::vector<Survivor> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::vector<Int> v(n);
      std::string tok;
      for (int j = 0; j < n; ++j) {
        if (!(in >> tok)) return std::nullopt;
        v[j] = Int(tok);
      }
      std::string dtok, mtok;
      if (!(in >> dtok >> mtok)) return std::nullopt;
      out.emplace_back(WeightSystem(std::move(v), Int(dtok)), Int(mtok));
    }
    return out;
  }

  void store(std::size_t idx, const std::vector<Survivor>& survivors) const {
    if (!active) return;
    auto tmp = shard_path(idx);
    tmp += ".tmp";
    {
      std::ofstream out(tmp);
      out << "qhs-shard " << kArtifactVersion << " " << survivors.size() << "\n";
      for (const auto& [ws, mu] : survivors) {
        for (const Int& w : ws.weights()) out << w.str() << " ";
        out << ws.degree().str() << " " << mu.str() << "\n";
      }
    }
    std::filesystem::rename(tmp, shard_path(idx));
  }

  void write_manifest(const EnumerateOptions& opts, std::size_t type_count) const {
    if (!active) return;
    nlohmann::json m;
    m["version"] = kArtifactVersion;
    m["n"] = opts.n;
    m["mu_max"] = opts.mu_max.str();
    m["types"] = type_count;
    std::vector<std::string> shards;
    for (std::size_t i = 0; i < type_count; ++i) shards.push_back(shard_path(i).filename().string());
    m["shards"] = shards;
    auto mpath = dir / ("manifest_" + stem + ".json");
    auto tmp = mpath;
    tmp += ".tmp";
    std::ofstream(tmp) << m.dump(2) << "\n";
    std::filesystem::rename(tmp, mpath);
  }
};

void run_workers(int jobs, std::size_t task_count, const std::function<void(std::size_t)>& task) {
  jobs = std::max(1, jobs);
  if (jobs == 1 || task_count <= 1) {
    for (std::size_t i = 0; i < task_count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&]() {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= task_count) return;
      try {
        task(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (!error) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const std::size_t nthreads = std::min<std::size_t>(jobs, task_count);
  for (std::size_t t = 0; t < nthreads; ++t) pool.emplace_back(body);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace

EnumerationRecord make_record(const WeightSystem& ws, const Int& mu) {
  std::set<TypeClass> shapes;
  for (const KappaGraph& g : kappa_choices(ws)) shapes.insert(type_of(g));
  if (shapes.empty()) throw std::logic_error("record admits no kappa choice");

  std::vector<TypeClass> ordered(shapes.begin(), shapes.end());
  std::sort(ordered.begin(), ordered.end(), [&](const TypeClass& a, const TypeClass& b) {
    int ia = type_order_index(a, ws.n()), ib = type_order_index(b, ws.n());
    if (ia != ib) return ia < ib;
    return a.code < b.code;
  });
  EnumerationRecord rec{ws, mu, {}, {}};
  for (const TypeClass& t : ordered) rec.kappa_types.push_back(type_label(t, ws.n()));

  auto cp = charpoly_milnor_orlik(ws);
  if (!cp) throw std::logic_error("charpoly has non-integral multiplicities for " + ws.to_string());
  if (cp->degree() != mu) {
    throw std::logic_error("charpoly degree does not match mu for " + ws.to_string());
  }
  rec.charpoly = std::move(*cp);
  return rec;
}

std::vector<EnumerationRecord> enumerate_systems(const EnumerateOptions& opts) {
  if (opts.n < 1 || opts.n > 4) throw std::invalid_argument("enumerate: n must be in 1..4");
  if (opts.mu_max < 1) throw std::invalid_argument("enumerate: mu_max must be >= 1");

  const std::vector<TypeClass> types = enumerate_types(opts.n);
  Cache cache(opts, types.size());

  std::atomic<long long> nodes{0};
  std::mutex merge_mu;
  std::vector<Survivor> merged;

  run_workers(opts.jobs, types.size(), [&](std::size_t idx) {
    std::vector<Survivor> survivors;
    if (auto loaded = cache.load(idx, opts.n)) {
      survivors = std::move(*loaded);
    } else {
      survivors = search_type(types[idx], opts, nodes);
      cache.store(idx, survivors);
    }
    std::lock_guard<std::mutex> lock(merge_mu);
    merged.insert(merged.end(), survivors.begin(), survivors.end());
  });
  cache.write_manifest(opts, types.size());

  std::sort(merged.begin(), merged.end(),
            [](const Survivor& a, const Survivor& b) { return a.first < b.first; });
  merged.erase(std::unique(merged.begin(), merged.end(),
                           [](const Survivor& a, const Survivor& b) { return a.first == b.first; }),
               merged.end());

  std::vector<std::optional<EnumerationRecord>> slots(merged.size());
  run_workers(opts.jobs, merged.size(),
              [&](std::size_t i) { slots[i] = make_record(merged[i].first, merged[i].second); });
  std::vector<EnumerationRecord> records;
  records.reserve(slots.size());
  for (auto& slot : slots) records.push_back(std::move(*slot));

  std::sort(records.begin(), records.end(), [](const EnumerationRecord& a, const EnumerationRecord& b) {
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.ws < b.ws;
  });
  return records;
}

std::vector<EnumerationRecord> enumerate_systems(int n, const Int& mu_max) {
  EnumerateOptions opts;
  opts.n = n;
  opts.mu_max = mu_max;
  return enumerate_systems(opts);
}

std::vector<EnumerationRecord> brute_force_enumerate(int n, const Int& mu_max) {
  if (n < 1 || n > 3) throw std::invalid_argument("brute_force_enumerate: n must be in 1..3");
  if (mu_max > 60) throw std::invalid_argument("brute_force_enumerate: mu_max must be <= 60");

  std::vector<EnumerationRecord> out;
  const long long cap = to_i64_checked(enumeration_degree_cap(n, mu_max), "degree cap");
  std::vector<Int> v(n);
  for (long long d = 2; d <= cap; ++d) {
    Int di(d);
    std::function<void(int, long long, const Rat&)> rec = [&](int i, long long lo, const Rat& partial) {
      if (partial > mu_max) return;  // remaining factors only grow the product
      if (i == n) {
        if (denominator(partial) != 1) return;
        Int g = di;
        for (const Int& w : v) g = gcd(g, w);
        if (g != 1) return;
        WeightSystem ws(v, di);
        if (!is_IS3(ws)) return;
        out.push_back(make_record(ws, numerator(partial)));
        return;
      }
      for (long long w = lo; 2 * w < d; ++w) {
        v[i] = w;
        rec(i + 1, w, partial * Rat(d - w, w));
      }
    };
    rec(0, 1, Rat(1));
  }
  std::sort(out.begin(), out.end(), [](const EnumerationRecord& a, const EnumerationRecord& b) {
    if (a.mu != b.mu) return a.mu < b.mu;
    return a.ws < b.ws;
  });
  return out;
}

GapReport find_gaps(const std::vector<EnumerationRecord>& records, int n, const Int& mu_max) {
  std::set<Int> present;
  for (const auto& rec : records) present.insert(rec.mu);
  GapReport report;
  report.n = n;
  report.mu_max = mu_max;
  Int start = Int(1) << n;
  const int sign = (n % 2 == 0) ? 1 : -1;
  for (Int g = start + 1; g <= mu_max; ++g) {
    if (present.count(g)) continue;
    report.gaps.push_back(g);
    bool sg = false;
    Int twop = g - sign;
    if (twop % 2 == 0 && is_prime(g) && is_prime(twop / 2)) sg = true;
    report.sophie_germain.push_back(sg);
  }
  return report;
}

GapReport find_gaps(int n, const Int& mu_max) {
  return find_gaps(enumerate_systems(n, mu_max), n, mu_max);
}

ChainSystem chain_weight_system(const std::vector<Int>& a) {
  if (a.empty()) throw std::invalid_argument("chain_weight_system: empty exponent tuple");
  for (const Int& ai : a) {
    if (ai < 2) throw std::invalid_argument("chain_weight_system: exponents must be >= 2");
  }
  const int n = static_cast<int>(a.size());
  std::vector<Int> t(n), s(n);
  t[0] = a[0] + 1;
  s[0] = 1;
  for (int i = 1; i < n; ++i) {
    t[i] = t[i - 1] * a[i];
    s[i] = t[i - 1] - s[i - 1];
  }
  std::vector<Int> v(n);
  for (int i = 0; i < n; ++i) v[i] = s[i] * (t[n - 1] / t[i]);

  std::vector<Int> xs;  // (a_n, ..., a_2, a_1 + 1)
  for (int i = n - 1; i >= 1; --i) xs.push_back(a[i]);
  xs.push_back(a[0] + 1);
  Int mu = rho_chain(xs);

  ChainSystem cs{a, reduce(WeightSystem(std::move(v), t[n - 1])), mu};
  if (milnor_number(cs.ws) != Rat(mu)) {
    throw std::logic_error("chain closed forms disagree with the Milnor product");
  }
  return cs;
}

DivisorElement chain_charpoly(const std::vector<Int>& a) {
  if (a.empty()) throw std::invalid_argument("chain_charpoly: empty exponent tuple");
  for (const Int& ai : a) {
    if (ai < 2) throw std::invalid_argument("chain_charpoly: exponents must be >= 2");
  }
  const int n = static_cast<int>(a.size());
  std::vector<Int> t(n + 1);  // t[0] = 1
  t[0] = 1;
  t[1] = a[0] + 1;
  for (int i = 2; i <= n; ++i) t[i] = t[i - 1] * a[i - 1];

  // divisors of t_n from the factorizations of the (small) individual factors
  std::map<std::uint64_t, int> primes;
  for (auto [p, e] : factorize_u64(to_u64_checked(a[0] + 1, "chain exponent"))) primes[p] += e;
  for (int i = 1; i < n; ++i) {
    for (auto [p, e] : factorize_u64(to_u64_checked(a[i], "chain exponent"))) primes[p] += e;
  }
  std::vector<Int> divs{1};
  for (auto [p, e] : primes) {
    std::size_t sz = divs.size();
    if (sz * (e + 1) > 2'000'000) throw std::domain_error("chain_charpoly: too many divisors");
    Int pk = 1;
    for (int i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < sz; ++j) divs.push_back(divs[j] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());

  DivisorElement out;
  for (const Int& m : divs) {
    int first = -1;
    for (int i = 0; i <= n; ++i) {
      if (t[i] % m == 0) {
        first = i;
        break;
      }
    }
    if (first >= 0 && first % 2 == n % 2) out.add(m, 1);
  }
  return out;
}

namespace {

// Chain order of a chain-type graph: root first. Empty result if not a chain.
std::vector<int> chain_order(const std::vector<int>& kappa) {
  const int n = static_cast<int>(kappa.size());
  std::vector<int> child(n, -1);
  int root = -1;
  for (int j = 0; j < n; ++j) {
    if (kappa[j] == j) {
      if (root >= 0) return {};
      root = j;
    } else {
      if (child[kappa[j]] >= 0) return {};
      child[kappa[j]] = j;
    }
  }
  if (root < 0) return {};
  std::vector<int> order{root};
  while (static_cast<int>(order.size()) < n) {
    int nxt = child[order.back()];
    if (nxt < 0) return {};
    order.push_back(nxt);
  }
  return order;
}

}  // namespace

PrimeMuReport classify_prime_mu(const std::vector<EnumerationRecord>& records) {
  PrimeMuReport report;
  for (const auto& rec : records) {
    if (!is_prime(rec.mu)) continue;
    auto fail = [&](const std::string& why) {
      report.violations.push_back(rec.ws.to_string() + " (mu=" + rec.mu.str() + "): " + why);
    };
    auto choices = kappa_choices(rec.ws);
    if (choices.size() != 1) {
      fail("expected exactly one kappa choice, found " + std::to_string(choices.size()));
      continue;
    }
    const KappaGraph& g = choices.front();
    std::vector<int> order = chain_order(g.kappa);
    if (order.empty()) {
      fail("unique kappa choice is not of chain type");
      continue;
    }
    std::vector<Int> tuple;
    tuple.reserve(order.size());
    for (int j : order) tuple.push_back(g.a[j]);

    ChainSystem cs = chain_weight_system(tuple);
    if (cs.ws != rec.ws || cs.mu != rec.mu) fail("chain closed forms do not reproduce the system");
    bool squarefree = true;
    for (const auto& [m, c] : rec.charpoly.multiplicities()) {
      (void)m;
      if (c != 1) squarefree = false;
    }
    if (!squarefree) fail("characteristic polynomial has a multiplicity > 1");
    if (chain_charpoly(tuple) != rec.charpoly) fail("chain charpoly disagrees with Milnor-Orlik");

    report.entries.push_back({rec.mu, rec.ws, std::move(tuple)});
  }
  return report;
}

PrimeMuReport classify_prime_mu(int n, const Int& mu_max) {
  return classify_prime_mu(enumerate_systems(n, mu_max));
}

std::vector<Int> sophie_germain_gap_set(int n, const Int& mu_max) {
  if (n < 3) throw std::invalid_argument("sophie_germain_gap_set: n must be >= 3");
  const int sign = (n % 2 == 0) ? 1 : -1;
  std::vector<Int> out;
  for (Int g = (Int(1) << n) + 1; g <= mu_max; ++g) {
    Int twop = g - sign;
    if (twop % 2 == 0 && is_prime(g) && is_prime(twop / 2)) out.push_back(g);
  }
  return out;
}

bool kreuzer_skarke_injection_exists(const WeightSystem& ws) {
  std::map<Int, int> big, all;
  for (const Int& v : ws.weights()) {
    ++all[v];
    if (3 * v > ws.degree()) ++big[v];
  }
  for (const auto& [u, count] : big) {
    Int target = ws.degree() - 2 * u;  // automatically below d/3
    auto it = all.find(target);
    if (it == all.end() || it->second < count) return false;
  }
  return true;
}

}  // namespace qhs
