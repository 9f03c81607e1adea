#include "whanoi/oracle.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <ostream>
#include <queue>
#include <string>
#include <utility>

#include "whanoi/errors.hpp"

namespace whanoi::oracle {

namespace {

constexpr std::array<std::pair<int, int>, 3> kPegPairs{{{0, 1}, {0, 2}, {1, 2}}};
constexpr std::uint64_t kNone = std::numeric_limits<std::uint64_t>::max();

void check_cap(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw CapExceededError("graph search limited to " + std::to_string(cap) + " discs, got " + std::to_string(n));
  }
}

void check_state(const State& s, std::size_t n, const char* what) {
  if (s.discs() != n) {
    throw std::invalid_argument(std::string(what) + " state has " + std::to_string(s.discs()) + " discs, expected " +
                                std::to_string(n));
  }
}

// Edge between codes, expressed without materializing State objects.
struct CodeEdge {
  std::uint64_t target;
  Cost cost;
  Move move;
};

class Graph {
 public:
  Graph(const WeightTable& weights, std::size_t n) : n_(n), count_(state_count(n)), pow3_(n + 1, 1) {
    if (!weights.covers(n)) {
      throw std::out_of_range("weight table defines " + std::to_string(*weights.max_disc()) + " discs, need " +
                              std::to_string(n));
    }
    for (std::size_t i = 1; i <= n; ++i) pow3_[i] = pow3_[i - 1] * 3;
    rows_ = weights.rows(n);
  }

  [[nodiscard]] std::uint64_t size() const noexcept { return count_; }

  void edges(std::uint64_t code, std::vector<CodeEdge>& out) const {
    out.clear();
    std::array<unsigned, 3> top{0, 0, 0};
    std::uint64_t c = code;
    for (std::size_t m = 0; m < n_; ++m) {
      const auto peg = static_cast<std::size_t>(c % 3);
      c /= 3;
      if (top[peg] == 0) top[peg] = static_cast<unsigned>(m + 1);
    }
    for (const auto& [i, j] : kPegPairs) {
      unsigned ti = top[static_cast<std::size_t>(i)];
      unsigned tj = top[static_cast<std::size_t>(j)];
      if (ti == 0 && tj == 0) continue;
      int from = i;
      int to = j;
      unsigned disc = ti;
      if (ti == 0 || (tj != 0 && tj < ti)) {
        std::swap(from, to);
        disc = tj;
      }
      const int idle = 3 - from - to;
      const Cost& w = rows_[disc - 1][static_cast<std::size_t>(idle)];
      if (w.is_infinite()) continue;
      const std::uint64_t digit = pow3_[disc - 1];
      const std::uint64_t target = code - digit * static_cast<std::uint64_t>(from) + digit * static_cast<std::uint64_t>(to);
      out.push_back({target, w, Move{disc, Peg{from}, Peg{to}}});
    }
  }

 private:
  std::size_t n_;
  std::uint64_t count_;
  std::vector<std::uint64_t> pow3_;
  std::vector<WeightRow> rows_;
};

struct Settled {
  std::vector<std::optional<Cost>> dist;
  std::vector<std::uint64_t> parent;
  std::vector<Move> via;
};

// Label-setting search from `source`; stops early once `stop` is settled.
Settled search(const Graph& g, std::uint64_t source, std::uint64_t stop) {
  Settled out;
  out.dist.assign(g.size(), std::nullopt);
  out.parent.assign(g.size(), kNone);
  out.via.assign(g.size(), Move{0, Peg{0}, Peg{0}});
  std::vector<bool> done(g.size(), false);

  using Label = std::pair<Cost, std::uint64_t>;
  std::priority_queue<Label, std::vector<Label>, std::greater<>> queue;
  out.dist[source] = Cost{};
  queue.emplace(Cost{}, source);
  std::vector<CodeEdge> edges;
  while (!queue.empty()) {
    auto [d, u] = queue.top();
    queue.pop();
    if (done[u]) continue;
    done[u] = true;
    if (u == stop) break;
    g.edges(u, edges);
    for (auto& e : edges) {
      if (done[e.target]) continue;
      Cost candidate = d + e.cost;
      auto& slot = out.dist[e.target];
      if (!slot || candidate < *slot || (candidate == *slot && u < out.parent[e.target])) {
        const bool improved = !slot || candidate < *slot;
        slot = candidate;
        out.parent[e.target] = u;
        out.via[e.target] = e.move;
        if (improved) queue.emplace(std::move(candidate), e.target);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<Edge> neighbors(const State& state, const WeightTable& weights) {
  std::vector<Edge> out;
  for (const auto& [i, j] : kPegPairs) {
    const Peg a{i};
    const Peg b{j};
    const unsigned ta = state.top(a);
    const unsigned tb = state.top(b);
    if (ta == 0 && tb == 0) continue;
    const bool a_moves = tb == 0 || (ta != 0 && ta < tb);
    const Move move = a_moves ? Move{ta, a, b} : Move{tb, b, a};
    const Cost w = weights.at(move.disc - 1, Peg{idle_peg(a, b)});
    if (w.is_infinite()) continue;
    State next = state;
    next.apply(move);
    out.push_back({std::move(next), w, move});
  }
  return out;
}

ShortestPath dijkstra(const WeightTable& weights, std::size_t n, const State& from, const State& to, std::size_t cap) {
  check_cap(n, cap);
  check_state(from, n, "start");
  check_state(to, n, "target");
  const Graph g(weights, n);
  const std::uint64_t source = from.encode();
  const std::uint64_t target = to.encode();
  const Settled s = search(g, source, target);
  if (!s.dist[target]) {
    throw DisconnectedError("target state is unreachable with the allowed moves");
  }
  ShortestPath out{*s.dist[target], {}};
  for (std::uint64_t v = target; v != source; v = s.parent[v]) out.plan.moves.push_back(s.via[v]);
  std::reverse(out.plan.moves.begin(), out.plan.moves.end());
  return out;
}

CostVector oracle_cost_vector(const WeightTable& weights, std::size_t n, std::size_t cap) {
  CostVector out;
  for (int idle = 0; idle < 3; ++idle) {
    const auto [from, to] = outer_pegs(Peg{idle});
    out[static_cast<std::size_t>(idle)] = dijkstra(weights, n, State::perfect(n, from), State::perfect(n, to), cap).cost;
  }
  return out;
}

PathCount count_shortest_paths(const WeightTable& weights, std::size_t n, const State& from, const State& to,
                               std::size_t cap) {
  check_cap(n, cap);
  check_state(from, n, "start");
  check_state(to, n, "target");
  const Graph g(weights, n);
  const std::uint64_t source = from.encode();
  const std::uint64_t target = to.encode();
  const Settled s = search(g, source, kNone);
  if (!s.dist[target]) {
    throw DisconnectedError("target state is unreachable with the allowed moves");
  }

  // Tight edges u -> v satisfy dist(u) + w = dist(v); every optimal walk uses
  // only those, and only between states that can still reach the target.
  std::vector<std::vector<std::pair<std::uint64_t, bool>>> tight_in(g.size());
  std::vector<CodeEdge> edges;
  for (std::uint64_t u = 0; u < g.size(); ++u) {
    if (!s.dist[u] || *s.dist[u] > *s.dist[target]) continue;
    g.edges(u, edges);
    for (const auto& e : edges) {
      if (s.dist[e.target] && *s.dist[u] + e.cost == *s.dist[e.target]) {
        tight_in[e.target].emplace_back(u, e.cost.is_zero());
      }
    }
  }
  std::vector<bool> useful(g.size(), false);
  std::vector<std::uint64_t> pending{target};
  useful[target] = true;
  while (!pending.empty()) {
    const std::uint64_t v = pending.back();
    pending.pop_back();
    for (const auto& [u, zero] : tight_in[v]) {
      if (zero) return {Integer(0), true};
      if (!useful[u]) {
        useful[u] = true;
        pending.push_back(u);
      }
    }
  }

  std::vector<std::uint64_t> order;
  for (std::uint64_t u = 0; u < g.size(); ++u) {
    if (useful[u]) order.push_back(u);
  }
  std::sort(order.begin(), order.end(),
            [&](std::uint64_t a, std::uint64_t b) { return *s.dist[a] < *s.dist[b]; });
  std::vector<Integer> ways(g.size(), 0);
  ways[source] = 1;
  for (const std::uint64_t v : order) {
    for (const auto& [u, zero] : tight_in[v]) ways[v] += ways[u];
  }
  return {ways[target], false};
}

void export_edges_csv(std::ostream& os, const WeightTable& weights, std::size_t n, std::size_t cap) {
  check_cap(n, cap);
  const Graph g(weights, n);
  os << "u,v,disc,idle,cost\n";
  std::vector<CodeEdge> edges;
  for (std::uint64_t u = 0; u < g.size(); ++u) {
    g.edges(u, edges);
    for (const auto& e : edges) {
      if (e.target <= u) continue;
      os << u << ',' << e.target << ',' << e.move.disc << ',' << idle_peg(e.move.from, e.move.to).index() << ','
         << e.cost << '\n';
    }
  }
}

}  // namespace whanoi::oracle
