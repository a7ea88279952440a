#include "pmod/distances.hpp"

#include <algorithm>
#include <cstdlib>
#include <future>
#include <limits>

namespace pmod {

namespace {

unsigned thread_cap() {
  if (const char* env = std::getenv("PMOD_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<unsigned>(v);
  }
  return 1;
}

}  // namespace

std::vector<std::vector<epsilon_t>> pair_distance_matrix(const barcode& m, const barcode& n) {
  std::vector<std::vector<epsilon_t>> d(m.size(), std::vector<epsilon_t>(n.size(), 0));
  auto fill_row = [&](std::size_t i) {
    for (std::size_t j = 0; j < n.size(); ++j) d[i][j] = pair_distance(m[i], n[j]);
  };
  const unsigned threads = std::min<unsigned>(thread_cap(), std::max<std::size_t>(m.size(), 1));
  if (threads <= 1 || m.size() <= 1) {
    for (std::size_t i = 0; i < m.size(); ++i) fill_row(i);
  } else {
    std::vector<std::future<void>> tasks;
    for (unsigned t = 0; t < threads; ++t) {
      tasks.push_back(std::async(std::launch::async, [&, t]() {
        for (std::size_t i = t; i < m.size(); i += threads) fill_row(i);
      }));
    }
    for (auto& task : tasks) task.get();
  }
  return d;
}

epsilon_t hausdorff(const barcode& m, const barcode& n) {
  if (m.empty() && n.empty()) return 0;
  auto d = pair_distance_matrix(m, n);
  epsilon_t worst = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    epsilon_t best = pair_distance_to_zero(m[i]);
    for (std::size_t j = 0; j < n.size(); ++j) best = std::min(best, d[i][j]);
    worst = std::max(worst, best);
  }
  for (std::size_t j = 0; j < n.size(); ++j) {
    epsilon_t best = pair_distance_to_zero(n[j]);
    for (std::size_t i = 0; i < m.size(); ++i) best = std::min(best, d[i][j]);
    worst = std::max(worst, best);
  }
  return worst;
}

// ---------------------------------------------------------------------------
// Flow with lower bounds, for matching feasibility.

namespace {

struct dinic {
  struct edge {
    int to;
    long long cap;
    std::size_t rev;
  };
  std::vector<std::vector<edge>> g;
  std::vector<int> level, it;

  explicit dinic(int n) : g(static_cast<std::size_t>(n)) {}

  void add_edge(int u, int v, long long cap) {
    g[static_cast<std::size_t>(u)].push_back({v, cap, g[static_cast<std::size_t>(v)].size()});
    g[static_cast<std::size_t>(v)].push_back(
        {u, 0, g[static_cast<std::size_t>(u)].size() - 1});
  }

  bool bfs(int s, int t) {
    level.assign(g.size(), -1);
    std::vector<int> queue{s};
    level[static_cast<std::size_t>(s)] = 0;
    for (std::size_t h = 0; h < queue.size(); ++h) {
      int u = queue[h];
      for (const auto& e : g[static_cast<std::size_t>(u)]) {
        if (e.cap > 0 && level[static_cast<std::size_t>(e.to)] < 0) {
          level[static_cast<std::size_t>(e.to)] = level[static_cast<std::size_t>(u)] + 1;
          queue.push_back(e.to);
        }
      }
    }
    return level[static_cast<std::size_t>(t)] >= 0;
  }

  long long dfs(int u, int t, long long f) {
    if (u == t) return f;
    for (int& i = it[static_cast<std::size_t>(u)];
         i < static_cast<int>(g[static_cast<std::size_t>(u)].size()); ++i) {
      edge& e = g[static_cast<std::size_t>(u)][static_cast<std::size_t>(i)];
      if (e.cap <= 0 || level[static_cast<std::size_t>(e.to)] !=
                            level[static_cast<std::size_t>(u)] + 1)
        continue;
      long long got = dfs(e.to, t, std::min(f, e.cap));
      if (got > 0) {
        e.cap -= got;
        g[static_cast<std::size_t>(e.to)][e.rev].cap += got;
        return got;
      }
    }
    return 0;
  }

  long long max_flow(int s, int t) {
    long long flow = 0;
    while (bfs(s, t)) {
      it.assign(g.size(), 0);
      while (long long f = dfs(s, t, std::numeric_limits<long long>::max())) flow += f;
    }
    return flow;
  }
};

// Feasibility of a flow network with per-edge lower bounds, via the usual
// excess/deficit reduction to plain max flow.
struct lb_flow {
  int n;
  dinic inner;
  std::vector<long long> excess;
  int super_s, super_t;

  explicit lb_flow(int nodes)
      : n(nodes), inner(nodes + 2), excess(static_cast<std::size_t>(nodes), 0),
        super_s(nodes), super_t(nodes + 1) {}

  void add_edge(int u, int v, long long lo, long long hi) {
    inner.add_edge(u, v, hi - lo);
    excess[static_cast<std::size_t>(v)] += lo;
    excess[static_cast<std::size_t>(u)] -= lo;
  }

  bool feasible(int s, int t) {
    // Close the circulation.
    inner.add_edge(t, s, std::numeric_limits<long long>::max() / 4);
    long long need = 0;
    for (int v = 0; v < n; ++v) {
      if (excess[static_cast<std::size_t>(v)] > 0) {
        inner.add_edge(super_s, v, excess[static_cast<std::size_t>(v)]);
        need += excess[static_cast<std::size_t>(v)];
      } else if (excess[static_cast<std::size_t>(v)] < 0) {
        inner.add_edge(v, super_t, -excess[static_cast<std::size_t>(v)]);
      }
    }
    return inner.max_flow(super_s, super_t) == need;
  }
};

// An eps-matching exists iff the following network admits a feasible flow:
// every left bar emits one unit (to a partner or, if droppable, to a slack
// sink) and every right bar absorbs one unit (from a partner or, if
// droppable, from a slack source).
bool matching_feasible(const std::vector<std::vector<char>>& edge,
                       const std::vector<char>& drop_left,
                       const std::vector<char>& drop_right) {
  const int nl = static_cast<int>(drop_left.size());
  const int nr = static_cast<int>(drop_right.size());
  const int s = 0, t = 1, die = 2, born = 3;
  auto left = [&](int i) { return 4 + i; };
  auto right = [&](int j) { return 4 + nl + j; };
  lb_flow net(4 + nl + nr);
  for (int i = 0; i < nl; ++i) {
    net.add_edge(s, left(i), 1, 1);
    if (drop_left[static_cast<std::size_t>(i)]) net.add_edge(left(i), die, 0, 1);
    for (int j = 0; j < nr; ++j)
      if (edge[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)])
        net.add_edge(left(i), right(j), 0, 1);
  }
  for (int j = 0; j < nr; ++j) {
    net.add_edge(right(j), t, 1, 1);
    if (drop_right[static_cast<std::size_t>(j)]) net.add_edge(born, right(j), 0, 1);
  }
  net.add_edge(die, t, 0, nl);
  net.add_edge(s, born, 0, nr);
  return net.feasible(s, t);
}

}  // namespace

bool eps_matching_exists(const barcode& m, const barcode& n, epsilon_t eps) {
  std::vector<std::vector<char>> edge(m.size(), std::vector<char>(n.size(), 0));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < n.size(); ++j)
      edge[i][j] = pair_interleaved(m[i], n[j], eps) ? 1 : 0;
  std::vector<char> drop_left(m.size()), drop_right(n.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    drop_left[i] = pair_interleaved_with_zero(m[i], eps) ? 1 : 0;
  for (std::size_t j = 0; j < n.size(); ++j)
    drop_right[j] = pair_interleaved_with_zero(n[j], eps) ? 1 : 0;
  return matching_feasible(edge, drop_left, drop_right);
}

epsilon_t bottleneck(const barcode& m, const barcode& n) {
  if (m.empty() && n.empty()) return 0;
  const epsilon_t bound = module_search_bound(m, n);
  for (epsilon_t eps = 0; eps <= bound; ++eps)
    if (eps_matching_exists(m, n, eps)) return eps;
  throw error("bottleneck scan exceeded its bound");  // unreachable
}

hb_report check_hausdorff_le_bottleneck(const barcode& m, const barcode& n) {
  hb_report r{hausdorff(m, n), bottleneck(m, n)};
  if (r.hausdorff > r.bottleneck)
    throw error("hausdorff exceeds bottleneck: " + std::to_string(r.hausdorff) + " > " +
                std::to_string(r.bottleneck));
  return r;
}

std::string to_string(stability_status s) {
  switch (s) {
    case stability_status::pass: return "PASS";
    case stability_status::fail: return "FAIL";
    default: return "INCONCLUSIVE";
  }
}

stability_report verify_stability(const barcode& m, const barcode& n,
                                  const oracle_options& opts) {
  stability_report rep;
  rep.hausdorff = hausdorff(m, n);
  try {
    epsilon_t d = oracle_module_distance(m, n, opts);
    rep.interleaving = d;
    rep.interleaving_lower = d;
    rep.interleaving_upper = d;
    rep.status =
        (rep.hausdorff <= 2 * d) ? stability_status::pass : stability_status::fail;
    rep.ratio = (rep.hausdorff == 0 && d == 0)
                    ? 0.0
                    : static_cast<double>(rep.hausdorff) / static_cast<double>(d);
  } catch (const budget_exceeded&) {
    // No pairwise lower bound is available for the module-level distance,
    // so the bracket is [0, bottleneck]: an interleaving never beats the
    // best matching.
    rep.interleaving = std::nullopt;
    rep.interleaving_lower = 0;
    rep.interleaving_upper = bottleneck(m, n);
    if (rep.hausdorff == 0)
      rep.status = stability_status::pass;
    else if (rep.hausdorff > 2 * rep.interleaving_upper)
      rep.status = stability_status::fail;
    else
      rep.status = stability_status::inconclusive;
    rep.ratio = rep.interleaving_upper == 0
                    ? 0.0
                    : static_cast<double>(rep.hausdorff) /
                          static_cast<double>(rep.interleaving_upper);
  }
  return rep;
}

}  // namespace pmod
