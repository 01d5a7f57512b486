#include "skeinlab/skein_eval.hpp"

#include <algorithm>
#include <cstdlib>
#include <memory>
#include <mutex>
#include <numeric>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>

#include "skeinlab/errors.hpp"
#include "skeinlab/quantum.hpp"
#include "skeinlab/temperley_lieb.hpp"

namespace skeinlab {

// ---------------------------------------------------------------------------
// DecoratedDiagram

DecoratedDiagram::DecoratedDiagram(int boundary_points) : boundary_(boundary_points) {
  if (boundary_points < 0) throw DomainError("negative boundary size");
  link_.assign(boundary_points, -1);
  owner_.assign(boundary_points, -1);
}

int DecoratedDiagram::add_crossing(int group) {
  const int id = node_count();
  nodes_.push_back({NodeKind::Crossing, 1, group, static_cast<int>(link_.size())});
  link_.resize(link_.size() + 4, -1);
  owner_.resize(owner_.size() + 4, id);
  return id;
}

int DecoratedDiagram::add_projector(int color, int group) {
  if (color < 1) throw DomainError("projector color must be positive");
  const int id = node_count();
  nodes_.push_back({NodeKind::Projector, color, group, static_cast<int>(link_.size())});
  link_.resize(link_.size() + 2 * color, -1);
  owner_.resize(owner_.size() + 2 * color, id);
  return id;
}

int DecoratedDiagram::port_count(int node) const {
  const Node& n = nodes_.at(node);
  return n.kind == NodeKind::Crossing ? 4 : 2 * n.color;
}

PortRef DecoratedDiagram::from_global(int id) const {
  const int owner = owner_.at(id);
  if (owner < 0) return {PortRef::kBoundary, id};
  return {owner, id - nodes_[owner].first_port};
}

void DecoratedDiagram::connect(PortRef a, PortRef b) {
  auto check = [&](PortRef p) {
    if (p.node == PortRef::kBoundary) {
      if (p.port < 0 || p.port >= boundary_) throw DomainError("boundary index out of range");
    } else if (p.node < 0 || p.node >= node_count() || p.port < 0 || p.port >= port_count(p.node)) {
      throw DomainError("port out of range");
    }
  };
  check(a);
  check(b);
  const int ga = global_id(a);
  const int gb = global_id(b);
  if (ga == gb) throw DomainError("cannot join a port to itself");
  if (link_[ga] >= 0 || link_[gb] >= 0) throw DomainError("port joined twice");
  link_[ga] = gb;
  link_[gb] = ga;
}

PortRef DecoratedDiagram::partner(PortRef p) const {
  const int q = link_.at(global_id(p));
  if (q < 0) throw InternalError("open port");
  return from_global(q);
}

int DecoratedDiagram::crossing_count() const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(),
                                        [](const Node& n) { return n.kind == NodeKind::Crossing; }));
}

int DecoratedDiagram::projector_count(int min_color) const {
  return static_cast<int>(std::count_if(nodes_.begin(), nodes_.end(), [&](const Node& n) {
    return n.kind == NodeKind::Projector && n.color >= min_color;
  }));
}

void DecoratedDiagram::validate() const {
  for (std::size_t i = 0; i < link_.size(); ++i)
    if (link_[i] < 0) throw InternalError("decorated diagram has an unjoined port");
}

DecoratedDiagram DecoratedDiagram::without_wires() const {
  validate();
  DecoratedDiagram out(boundary_);
  out.free_loops_ = free_loops_;
  std::vector<int> remap(nodes_.size(), -1);
  for (int i = 0; i < node_count(); ++i) {
    const Node& n = nodes_[i];
    if (n.kind == NodeKind::Projector && n.color == 1) continue;
    remap[i] = n.kind == NodeKind::Crossing ? out.add_crossing(n.group) : out.add_projector(n.color, n.group);
  }
  auto is_wire = [&](int g) {
    const int o = owner_[g];
    return o >= 0 && nodes_[o].kind == NodeKind::Projector && nodes_[o].color == 1;
  };
  auto other_end = [&](int g) { return g == nodes_[owner_[g]].first_port ? g + 1 : g - 1; };
  auto translate = [&](int g) {
    PortRef p = from_global(g);
    if (p.node != PortRef::kBoundary) p.node = remap[p.node];
    return p;
  };
  std::vector<char> seen(link_.size(), 0);
  for (int g = 0; g < static_cast<int>(link_.size()); ++g) {
    if (seen[g] || is_wire(g)) continue;
    // follow the strand from g through any wires
    int q = link_[g];
    seen[g] = 1;
    while (is_wire(q)) {
      seen[q] = 1;
      const int r = other_end(q);
      seen[r] = 1;
      q = link_[r];
    }
    seen[q] = 1;
    out.connect(translate(g), translate(q));
  }
  for (int g = 0; g < static_cast<int>(link_.size()); ++g) {
    if (seen[g]) continue;
    // a cycle made only of wires
    ++out.free_loops_;
    int q = g;
    while (!seen[q]) {
      seen[q] = 1;
      const int r = other_end(q);
      seen[r] = 1;
      q = link_[r];
    }
  }
  return out;
}

int DecoratedDiagram::identity_circles(std::vector<int>* boundary_pairing) const {
  validate();
  const int total = static_cast<int>(link_.size());
  std::vector<char> seen(total, 0);
  auto through = [&](int g) {
    const int o = owner_[g];
    const Node& n = nodes_[o];
    if (n.kind == NodeKind::Crossing) throw DomainError("diagram has crossings");
    const int p = g - n.first_port;
    return n.first_port + (p < n.color ? p + n.color : p - n.color);
  };
  if (boundary_pairing) boundary_pairing->assign(boundary_, -1);
  for (int t = 0; t < boundary_; ++t) {
    if (seen[t]) continue;
    seen[t] = 1;
    int q = link_[t];
    while (owner_[q] >= 0) {
      seen[q] = 1;
      const int r = through(q);
      seen[r] = 1;
      q = link_[r];
    }
    seen[q] = 1;
    if (boundary_pairing) {
      (*boundary_pairing)[t] = q;
      (*boundary_pairing)[q] = t;
    }
  }
  int circles = free_loops_;
  for (int g = boundary_; g < total; ++g) {
    if (seen[g]) continue;
    ++circles;
    int q = g;
    while (!seen[q]) {
      seen[q] = 1;
      const int r = through(q);
      seen[r] = 1;
      q = link_[r];
    }
  }
  return circles;
}

// ---------------------------------------------------------------------------
// Planning

int EvalOptions::default_max_width() {
  if (const char* env = std::getenv("SKEINLAB_MAX_WIDTH")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0 && v < 256) return static_cast<int>(v);
  }
  return 24;
}

namespace {

struct Adjacency {
  int n = 0;
  std::vector<int> degree;    // non-self ports
  std::vector<int> boundary;  // ports joined to boundary points
  std::vector<std::vector<int>> count;
  std::vector<std::vector<int>> neighbors;

  explicit Adjacency(const DecoratedDiagram& s) : n(s.node_count()) {
    degree.assign(n, 0);
    boundary.assign(n, 0);
    count.assign(n, std::vector<int>(n, 0));
    neighbors.resize(n);
    for (int u = 0; u < n; ++u)
      for (int p = 0; p < s.port_count(u); ++p) {
        const PortRef q = s.partner({u, p});
        if (q.node == u) continue;
        ++degree[u];
        if (q.node == PortRef::kBoundary) {
          ++boundary[u];
        } else {
          if (count[u][q.node]++ == 0) neighbors[u].push_back(q.node);
        }
      }
  }
  int initial_width() const { return std::accumulate(boundary.begin(), boundary.end(), 0); }
};

MorsePlan simulate(const Adjacency& adj, std::vector<int> order) {
  MorsePlan plan;
  plan.initial_width = adj.initial_width();
  std::vector<char> in(adj.n, 0);
  int width = plan.initial_width;
  plan.peak_width = width;
  for (int v : order) {
    if (v < 0 || v >= adj.n || in[v]) throw DomainError("plan is not a permutation of the nodes");
    int glued = adj.boundary[v];
    for (int u : adj.neighbors[v])
      if (in[u]) glued += adj.count[v][u];
    width += adj.degree[v] - 2 * glued;
    in[v] = 1;
    plan.widths.push_back(width);
    plan.peak_width = std::max(plan.peak_width, width);
  }
  if (static_cast<int>(order.size()) != adj.n) throw DomainError("plan is not a permutation of the nodes");
  plan.order = std::move(order);
  return plan;
}

bool better(const MorsePlan& a, const MorsePlan& b) {
  if (a.peak_width != b.peak_width) return a.peak_width < b.peak_width;
  const long sa = std::accumulate(a.widths.begin(), a.widths.end(), 0L);
  const long sb = std::accumulate(b.widths.begin(), b.widths.end(), 0L);
  return sa < sb;
}

// Minimizes (peak, sum of widths) over all orders of a weighted graph.
// weight[u][v] counts edges, ext[u] edges to the outside (already absorbed).
std::vector<int> subset_dp(const std::vector<std::vector<int>>& weight, const std::vector<int>& ext,
                           const std::vector<int>& degree) {
  const int n = static_cast<int>(ext.size());
  const std::size_t full = std::size_t{1} << n;
  std::vector<int> width(full, 0);
  width[0] = std::accumulate(ext.begin(), ext.end(), 0);
  for (std::size_t s = 1; s < full; ++s) {
    const int v = __builtin_ctzll(s);
    const std::size_t rest = s & (s - 1);
    int glued = ext[v];
    for (int u = 0; u < n; ++u)
      if (rest >> u & 1) glued += weight[v][u];
    width[s] = width[rest] + degree[v] - 2 * glued;
  }
  std::vector<int> peak(full, 0);
  std::vector<long> sum(full, 0);
  std::vector<std::int8_t> last(full, -1);
  peak[0] = width[0];
  for (std::size_t s = 1; s < full; ++s) {
    int best_peak = 1 << 30;
    long best_sum = 0;
    int best_v = -1;
    for (int v = 0; v < n; ++v) {
      if (!(s >> v & 1)) continue;
      const std::size_t r = s & ~(std::size_t{1} << v);
      if (peak[r] < best_peak || (peak[r] == best_peak && sum[r] < best_sum)) {
        best_peak = peak[r];
        best_sum = sum[r];
        best_v = v;
      }
    }
    peak[s] = std::max(best_peak, width[s]);
    sum[s] = best_sum + width[s];
    last[s] = static_cast<std::int8_t>(best_v);
  }
  std::vector<int> order;
  for (std::size_t s = full - 1; s != 0; s &= ~(std::size_t{1} << last[s])) order.push_back(last[s]);
  std::reverse(order.begin(), order.end());
  return order;
}

std::vector<int> greedy_from(const Adjacency& adj, int start, const std::vector<char>& preabsorbed) {
  std::vector<char> in = preabsorbed;
  std::vector<int> glued(adj.n, 0);
  for (int v = 0; v < adj.n; ++v) {
    glued[v] = adj.boundary[v];
    for (int u : adj.neighbors[v])
      if (in[u]) glued[v] += adj.count[v][u];
  }
  std::vector<int> order;
  auto take = [&](int v) {
    in[v] = 1;
    order.push_back(v);
    for (int u : adj.neighbors[v]) glued[u] += adj.count[u][v];
  };
  if (start >= 0) take(start);
  while (true) {
    int best = -1;
    int best_score = 0;
    for (int v = 0; v < adj.n; ++v) {
      if (in[v]) continue;
      const int score = 2 * glued[v] - adj.degree[v];
      // prefer nodes touching the absorbed region
      const int touch = glued[v] > 0 ? 1 : 0;
      if (best < 0 || touch > (glued[best] > 0) || (touch == (glued[best] > 0) && score > best_score)) {
        best = v;
        best_score = score;
      }
    }
    if (best < 0) break;
    take(best);
  }
  return order;
}

MorsePlan greedy_plan(const Adjacency& adj) {
  MorsePlan best;
  bool have = false;
  const int starts = adj.n <= 160 ? adj.n : 1;
  const std::vector<char> none(adj.n, 0);
  for (int s = 0; s < starts; ++s) {
    MorsePlan p = simulate(adj, greedy_from(adj, s, none));
    if (!have || better(p, best)) {
      best = std::move(p);
      have = true;
    }
  }
  return best;
}

// Base order over groups, computed on the network with every ungrouped
// projector replaced by the identity, then expanded with a local greedy.
std::optional<MorsePlan> grouped_plan(const DecoratedDiagram& s, const Adjacency& adj) {
  int groups = 0;
  for (int v = 0; v < s.node_count(); ++v) {
    const auto& node = s.node(v);
    if (node.group >= 0) {
      groups = std::max(groups, node.group + 1);
    } else if (node.kind != DecoratedDiagram::NodeKind::Projector) {
      return std::nullopt;
    }
  }
  if (groups < 2) return std::nullopt;
  std::vector<std::vector<int>> members(groups);
  for (int v = 0; v < s.node_count(); ++v)
    if (s.node(v).group >= 0) members[s.node(v).group].push_back(v);
  std::vector<int> gid;  // compact ids of nonempty groups
  std::vector<int> compact(groups, -1);
  for (int g = 0; g < groups; ++g)
    if (!members[g].empty()) {
      compact[g] = static_cast<int>(gid.size());
      gid.push_back(g);
    }
  const int n = static_cast<int>(gid.size());

  std::vector<std::vector<int>> weight(n, std::vector<int>(n, 0));
  std::vector<int> ext(n, 0);
  std::vector<int> degree(n, 0);
  for (int v = 0; v < s.node_count(); ++v) {
    const auto& node = s.node(v);
    if (node.group < 0) continue;
    const int g = compact[node.group];
    for (int p = 0; p < s.port_count(v); ++p) {
      PortRef q = s.partner({v, p});
      while (q.node != PortRef::kBoundary && s.node(q.node).group < 0) {
        const int k = s.node(q.node).color;
        q = s.partner({q.node, q.port < k ? q.port + k : q.port - k});
      }
      if (q.node == PortRef::kBoundary) {
        ++ext[g];
        ++degree[g];
      } else {
        const int h = compact[s.node(q.node).group];
        if (h != g) {
          ++weight[g][h];
          ++degree[g];
        }
      }
    }
  }
  if (n > 16) return std::nullopt;
  const std::vector<int> group_order = subset_dp(weight, ext, degree);

  std::vector<char> in(adj.n, 0);
  std::vector<int> glued(adj.n, 0);
  for (int v = 0; v < adj.n; ++v) glued[v] = adj.boundary[v];
  std::vector<int> order;
  auto take = [&](int v) {
    in[v] = 1;
    order.push_back(v);
    for (int u : adj.neighbors[v]) glued[u] += adj.count[u][v];
  };
  auto absorb_cheap = [&] {
    bool again = true;
    while (again) {
      again = false;
      for (int v = 0; v < adj.n; ++v)
        if (!in[v] && s.node(v).group < 0 && glued[v] > 0 && 2 * glued[v] >= adj.degree[v]) {
          take(v);
          again = true;
        }
    }
  };
  absorb_cheap();
  for (int c : group_order) {
    std::vector<int> rest = members[gid[c]];
    while (!rest.empty()) {
      auto it = std::max_element(rest.begin(), rest.end(), [&](int a, int b) {
        const int sa = 2 * glued[a] - adj.degree[a];
        const int sb = 2 * glued[b] - adj.degree[b];
        if (sa != sb) return sa < sb;
        return a > b;
      });
      take(*it);
      rest.erase(it);
      absorb_cheap();
    }
  }
  std::vector<int> tail = greedy_from(adj, -1, in);
  order.insert(order.end(), tail.begin(), tail.end());
  return simulate(adj, std::move(order));
}

}  // namespace

MorsePlan plan_from_order(const DecoratedDiagram& s, std::vector<int> order) {
  return simulate(Adjacency(s), std::move(order));
}

MorsePlan morse_decompose(const DecoratedDiagram& s) {
  const Adjacency adj(s);
  if (adj.n == 0) return simulate(adj, {});
  if (adj.n <= 16) {
    std::vector<std::vector<int>> weight = adj.count;
    return simulate(adj, subset_dp(weight, adj.boundary, adj.degree));
  }
  MorsePlan best = greedy_plan(adj);
  if (auto g = grouped_plan(s, adj); g && better(*g, best)) best = std::move(*g);
  return best;
}

MorsePlan random_plan(const DecoratedDiagram& s, std::uint64_t seed) {
  const Adjacency adj(s);
  std::mt19937_64 rng(seed);
  std::vector<char> in(adj.n, 0);
  std::vector<int> order;
  while (static_cast<int>(order.size()) < adj.n) {
    std::vector<int> frontier;
    for (int v = 0; v < adj.n; ++v) {
      if (in[v]) continue;
      bool touches = adj.boundary[v] > 0;
      for (int u : adj.neighbors[v]) touches = touches || in[u];
      if (touches) frontier.push_back(v);
    }
    if (frontier.empty())
      for (int v = 0; v < adj.n; ++v)
        if (!in[v]) frontier.push_back(v);
    const int v = frontier[std::uniform_int_distribution<std::size_t>(0, frontier.size() - 1)(rng)];
    in[v] = 1;
    order.push_back(v);
  }
  return simulate(adj, std::move(order));
}

// ---------------------------------------------------------------------------
// Sweep engine

namespace {

struct NodeTerms {
  std::vector<std::vector<std::uint8_t>> pairings;
  std::vector<LaurentPolynomial> weights;
  std::vector<LaurentPolynomial> denominator;  // factors, multiplicities repeated
};

const NodeTerms& crossing_terms() {
  static const NodeTerms t{{{3, 2, 1, 0}, {1, 0, 3, 2}}, {LaurentPolynomial::A(1), LaurentPolynomial::A(-1)}, {}};
  return t;
}

// Splits the common denominator of f^(k) into factors Phi_d(A^2) times a unit,
// and folds the unit into the numerators.
std::unique_ptr<NodeTerms> build_projector_terms(int k) {
  const JonesWenzl& jw = jones_wenzl(k);
  auto t = std::make_unique<NodeTerms>();
  LaurentPolynomial rest = jw.common_denominator;
  for (int d = 1; d <= 4 * k + 4 && !rest.is_unit(); ++d) {
    const LaurentPolynomial& phi = QuantumScalarTable::instance().cyclotomic_in_a2(d);
    while (true) {
      auto q = divide_exact(rest, phi);
      if (!q) break;
      t->denominator.push_back(phi);
      rest = std::move(*q);
    }
  }
  LaurentPolynomial unit_inverse(1);
  if (rest.is_unit()) {
    unit_inverse = LaurentPolynomial::monomial(rest.lowest_coefficient(), -rest.min_degree());
  } else {
    t->denominator.push_back(rest);
  }
  for (const auto& [m, p] : jw.numerators) {
    t->pairings.push_back(m.partners());
    t->weights.push_back(p * unit_inverse);
  }
  return t;
}

const NodeTerms& projector_terms(int k) {
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<NodeTerms>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[k];
  if (!slot) slot = build_projector_terms(k);
  return *slot;
}

const LaurentPolynomial& delta_power(int k) {
  static std::mutex mutex;
  static std::vector<std::unique_ptr<LaurentPolynomial>> powers;
  std::lock_guard lock(mutex);
  if (powers.empty()) powers.push_back(std::make_unique<LaurentPolynomial>(1));
  while (static_cast<int>(powers.size()) <= k) powers.push_back(std::make_unique<LaurentPolynomial>(*powers.back() * loop_value()));
  return *powers[k];
}

void accumulate(LaurentPolynomial& target, const LaurentPolynomial& coef, const LaurentPolynomial& factor) {
  if (factor.term_count() <= 3) {
    for (const auto& t : factor.terms()) target.add_scaled(coef, t.coeff, t.exponent);
  } else {
    target += coef * factor;
  }
}

struct SweepResult {
  std::unordered_map<std::string, LaurentPolynomial> states;
  std::vector<LaurentPolynomial> denominator;
};

// Cancels pending denominator factors that divide every coefficient.
void cancel_factors(SweepResult& r) {
  if (r.denominator.empty() || r.states.empty()) return;
  std::vector<LaurentPolynomial> kept;
  std::vector<LaurentPolynomial> pending = std::move(r.denominator);
  for (auto& f : pending) {
    std::vector<LaurentPolynomial> quotients;
    quotients.reserve(r.states.size());
    bool divisible = true;
    for (const auto& [key, c] : r.states) {
      auto q = divide_exact(c, f);
      if (!q) {
        divisible = false;
        break;
      }
      quotients.push_back(std::move(*q));
    }
    if (!divisible) {
      kept.push_back(std::move(f));
      continue;
    }
    std::size_t i = 0;
    for (auto& [key, c] : r.states) c = std::move(quotients[i++]);
  }
  r.denominator = std::move(kept);
}

SweepResult sweep(const DecoratedDiagram& s, const MorsePlan& plan, const EvalOptions& opts) {
  if (plan.peak_width > opts.max_width)
    throw ResourceLimitError("peak width " + std::to_string(plan.peak_width) + " exceeds the cap of " +
                             std::to_string(opts.max_width));
  const int T = s.boundary_points();
  const int ports_total = T + [&] {
    int c = 0;
    for (int v = 0; v < s.node_count(); ++v) c += s.port_count(v);
    return c;
  }();
  if (T + plan.peak_width > 255) throw ResourceLimitError("frontier too wide for the state encoding");

  std::vector<int> outer;              // position -> unabsorbed global port at its far end (-1 for boundary slots)
  std::vector<int> pos_of(ports_total, -1);
  std::string init(T, '\0');
  outer.assign(T, -1);
  for (int t = 0; t < T; ++t) {
    const PortRef q = s.partner({PortRef::kBoundary, t});
    if (q.node == PortRef::kBoundary) {
      init[t] = static_cast<char>(q.port);
      continue;
    }
    const int f = static_cast<int>(outer.size());
    outer.push_back(s.global_id(q));
    pos_of[s.global_id(q)] = f;
    init.push_back(static_cast<char>(t));
    init[t] = static_cast<char>(f);
  }

  SweepResult r;
  r.states.emplace(std::move(init), LaurentPolynomial(1));
  std::vector<char> visited;
  std::string next_key;

  for (int v : plan.order) {
    const auto& node = s.node(v);
    const NodeTerms& terms = node.kind == DecoratedDiagram::NodeKind::Crossing ? crossing_terms() : projector_terms(node.color);
    const int P = static_cast<int>(outer.size());
    const int ports = s.port_count(v);
    const int V = P + ports;

    // Static wiring of this step.
    std::vector<int> link2(V, -1);
    std::vector<int> new_index(V, -1);
    std::vector<int> new_outer;
    for (int p = 0; p < ports; ++p) {
      const int g = s.global_id({v, p});
      const int pos = pos_of[g];
      if (pos >= 0) {
        link2[P + p] = pos;
        link2[pos] = P + p;
        continue;
      }
      const PortRef q = s.partner({v, p});
      if (q.node == v) link2[P + p] = P + q.port;
    }
    int count = 0;
    for (int x = 0; x < P; ++x)
      if (link2[x] < 0) {
        new_index[x] = count++;
        new_outer.push_back(outer[x]);
      }
    for (int p = 0; p < ports; ++p)
      if (link2[P + p] < 0) {
        new_index[P + p] = count++;
        new_outer.push_back(s.global_id(s.partner({v, p})));
      }
    std::vector<int> endpoints;
    for (int x = 0; x < V; ++x)
      if (link2[x] < 0) endpoints.push_back(x);

    // factor cache per term and loop count
    std::vector<std::vector<std::unique_ptr<LaurentPolynomial>>> factors(terms.pairings.size());
    auto factor = [&](std::size_t term, int loops) -> const LaurentPolynomial& {
      auto& row = factors[term];
      if (static_cast<int>(row.size()) <= loops) row.resize(loops + 1);
      if (!row[loops]) row[loops] = std::make_unique<LaurentPolynomial>(terms.weights[term] * delta_power(loops));
      return *row[loops];
    };

    std::unordered_map<std::string, LaurentPolynomial> next;
    next.reserve(r.states.size() * 2);
    visited.assign(V, 0);
    next_key.assign(count, '\0');
    for (const auto& [key, coef] : r.states) {
      for (std::size_t ti = 0; ti < terms.pairings.size(); ++ti) {
        const auto& tau = terms.pairings[ti];
        auto link1 = [&](int x) { return x < P ? static_cast<unsigned char>(key[x]) : P + tau[x - P]; };
        std::fill(visited.begin(), visited.end(), 0);
        for (int e : endpoints) {
          if (visited[e]) continue;
          visited[e] = 1;
          int x = link1(e);
          while (true) {
            visited[x] = 1;
            const int y = link2[x];
            if (y < 0) break;
            visited[y] = 1;
            x = link1(y);
          }
          next_key[new_index[e]] = static_cast<char>(new_index[x]);
          next_key[new_index[x]] = static_cast<char>(new_index[e]);
        }
        int loops = 0;
        for (int x = 0; x < V; ++x) {
          if (visited[x]) continue;
          ++loops;
          int cur = x;
          while (!visited[cur]) {
            visited[cur] = 1;
            const int y = link2[cur];
            visited[y] = 1;
            cur = link1(y);
          }
        }
        accumulate(next[next_key], coef, factor(ti, loops));
      }
    }
    for (auto it = next.begin(); it != next.end();) it = it->second.is_zero() ? next.erase(it) : std::next(it);
    if (next.size() > opts.max_terms)
      throw ResourceLimitError("state count " + std::to_string(next.size()) + " exceeds the cap of " +
                               std::to_string(opts.max_terms));
    r.states = std::move(next);

    for (int x = 0; x < P; ++x)
      if (outer[x] >= 0) pos_of[outer[x]] = -1;
    outer = std::move(new_outer);
    for (int x = 0; x < static_cast<int>(outer.size()); ++x)
      if (outer[x] >= 0) pos_of[outer[x]] = x;

    if (!terms.denominator.empty()) {
      r.denominator.insert(r.denominator.end(), terms.denominator.begin(), terms.denominator.end());
    }
    cancel_factors(r);
    if (r.states.empty()) break;
  }
  return r;
}

}  // namespace

LaurentPolynomial evaluate_with_plan(const DecoratedDiagram& s, const MorsePlan& plan, const EvalOptions& opts) {
  const DecoratedDiagram w = s.without_wires();
  if (!w.closed()) throw DomainError("evaluate requires a closed diagram");
  SweepResult r = sweep(w, plan, opts);
  if (r.states.empty()) return {};
  LaurentPolynomial value = std::move(r.states.begin()->second);
  for (const auto& f : r.denominator) {
    auto q = divide_exact(value, f);
    if (!q) throw InternalError("closed diagram value does not demote to a Laurent polynomial");
    value = std::move(*q);
  }
  return value * delta_power(w.free_loops());
}

RationalFunction evaluate_rational(const DecoratedDiagram& s, const EvalOptions& opts) {
  const DecoratedDiagram w = s.without_wires();
  if (!w.closed()) throw DomainError("evaluate requires a closed diagram");
  SweepResult r = sweep(w, morse_decompose(w), opts);
  if (r.states.empty()) return {};
  LaurentPolynomial den(1);
  for (const auto& f : r.denominator) den *= f;
  return RationalFunction(r.states.begin()->second * delta_power(w.free_loops()), den);
}

LaurentPolynomial evaluate(const DecoratedDiagram& s, const EvalOptions& opts) {
  const DecoratedDiagram w = s.without_wires();
  return evaluate_with_plan(w, morse_decompose(w), opts);
}

TangleVector evaluate_open(const DecoratedDiagram& s, const EvalOptions& opts) {
  const DecoratedDiagram w = s.without_wires();
  SweepResult r = sweep(w, morse_decompose(w), opts);
  LaurentPolynomial den(1);
  for (const auto& f : r.denominator) den *= f;
  TangleVector out;
  for (auto& [key, c] : r.states) {
    std::vector<std::uint8_t> pairing(key.begin(), key.end());
    out.emplace(std::move(pairing), RationalFunction(c * delta_power(w.free_loops()), den));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Builders

namespace detail {

GridPorts add_grid(DecoratedDiagram& s, int columns, int rows, int group) {
  GridPorts g;
  if (columns == 0 || rows == 0) return g;
  std::vector<std::vector<int>> id(columns, std::vector<int>(rows));
  for (int y = 0; y < rows; ++y)
    for (int x = 0; x < columns; ++x) id[x][y] = s.add_crossing(group);
  for (int x = 0; x < columns; ++x)
    for (int y = 0; y < rows; ++y) {
      if (y + 1 < rows) s.connect({id[x][y], kSlotC}, {id[x][y + 1], kSlotA});
      if (x + 1 < columns) s.connect({id[x][y], kSlotB}, {id[x + 1][y], kSlotD});
    }
  for (int x = 0; x < columns; ++x) {
    g.south.push_back({id[x][0], kSlotA});
    g.north.push_back({id[x][rows - 1], kSlotC});
  }
  for (int y = 0; y < rows; ++y) {
    g.west.push_back({id[0][y], kSlotD});
    g.east.push_back({id[columns - 1][y], kSlotB});
  }
  return g;
}

CableAssembler::CableAssembler(const LinkDiagram& d, DecoratedDiagram& out, int m)
    : d_(d), out_(out), m_(m), bound_(static_cast<std::size_t>(d.crossing_count()) * 4 * m), is_bound_(bound_.size(), 0) {}

void CableAssembler::bind(int crossing, int side, int t, PortRef p) {
  const int i = index(crossing, side, t);
  if (is_bound_[i]) throw InternalError("side port bound twice");
  bound_[i] = p;
  is_bound_[i] = 1;
}

void CableAssembler::wire(int crossing, int side1, int t1, int side2, int t2) {
  const int w = out_.add_projector(1);
  bind(crossing, side1, t1, {w, 0});
  bind(crossing, side2, t2, {w, 1});
}

void CableAssembler::place_grid(int crossing) {
  const GridPorts g = add_grid(out_, m_, m_, crossing);
  for (int t = 0; t < m_; ++t) {
    bind(crossing, kSlotA, t, g.south[t]);
    bind(crossing, kSlotC, t, g.north[t]);
    bind(crossing, kSlotD, t, g.west[t]);
    bind(crossing, kSlotB, t, g.east[t]);
  }
}

void CableAssembler::join_arcs(const std::vector<bool>& box_on_arc, bool box_free_loops) {
  for (int a = 1; a <= d_.arc_count(); ++a) {
    const Endpoint tail = d_.arc_tail(a);
    const Endpoint head = d_.arc_head(a);
    const bool boxed = a - 1 < static_cast<int>(box_on_arc.size()) && box_on_arc[a - 1] && m_ > 1;
    const int box = boxed ? out_.add_projector(m_) : -1;
    for (int i = 0; i < m_; ++i) {
      const int ti = index(tail.crossing, tail.slot, geometric_index(d_, tail.crossing, tail.slot, i, m_));
      const int hi = index(head.crossing, head.slot, geometric_index(d_, head.crossing, head.slot, i, m_));
      if (!is_bound_[ti] || !is_bound_[hi]) throw InternalError("unbound side port");
      if (boxed) {
        out_.connect(bound_[ti], {box, i});
        out_.connect({box, m_ + i}, bound_[hi]);
      } else {
        out_.connect(bound_[ti], bound_[hi]);
      }
    }
  }
  for (int l = 0; l < d_.free_loops(); ++l) {
    if (box_free_loops && m_ > 1) {
      const int box = out_.add_projector(m_);
      for (int i = 0; i < m_; ++i) out_.connect({box, m_ + i}, {box, i});
    } else {
      out_.add_free_loops(m_);
    }
  }
}

}  // namespace detail

DecoratedDiagram decorate(const LinkDiagram& d) {
  DecoratedDiagram s;
  detail::CableAssembler assembler(d, s, 1);
  for (int c = 0; c < d.crossing_count(); ++c) assembler.place_grid(c);
  assembler.join_arcs({}, false);
  return s;
}

DecoratedDiagram colored_diagram(const LinkDiagram& d, int n) {
  if (n < 0) throw DomainError("color must be nonnegative");
  DecoratedDiagram s;
  if (n == 0) return s;
  detail::CableAssembler assembler(d, s, n);
  for (int c = 0; c < d.crossing_count(); ++c) assembler.place_grid(c);
  std::vector<bool> boxes(d.arc_count(), false);
  for (const auto& component : d.components()) boxes[component.front() - 1] = true;
  assembler.join_arcs(boxes, true);
  return s;
}

LaurentPolynomial bracket(const LinkDiagram& d, const EvalOptions& opts) { return evaluate(decorate(d), opts); }

LaurentPolynomial colored_jones(const LinkDiagram& d, int n, const EvalOptions& opts) {
  if (n == 0) return LaurentPolynomial(1);
  return evaluate(colored_diagram(d, n), opts);
}

LaurentPolynomial bracket_bruteforce(const LinkDiagram& d) {
  const int k = d.crossing_count();
  if (k > 24)
    throw ResourceLimitError("brute-force state sum is limited to 24 crossings; use the sweep engine");
  const int arcs = d.arc_count();
  // tally[(#A - #B + k)][circles]
  std::vector<std::vector<unsigned long long>> tally(2 * k + 1, std::vector<unsigned long long>(arcs + 1, 0));
  std::vector<int> parent(arcs);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::iota(parent.begin(), parent.end(), 0);
    int components = arcs;
    auto unite = [&](int a, int b) {
      a = find(a);
      b = find(b);
      if (a != b) {
        parent[a] = b;
        --components;
      }
    };
    int a_count = 0;
    for (int c = 0; c < k; ++c) {
      const auto& x = d.crossings()[c];
      if (mask >> c & 1) {  // B
        unite(x[kSlotA] - 1, x[kSlotB] - 1);
        unite(x[kSlotC] - 1, x[kSlotD] - 1);
      } else {
        ++a_count;
        unite(x[kSlotA] - 1, x[kSlotD] - 1);
        unite(x[kSlotB] - 1, x[kSlotC] - 1);
      }
    }
    ++tally[2 * a_count][components];
  }
  LaurentPolynomial out;
  for (int i = 0; i <= 2 * k; ++i)
    for (int c = 0; c <= arcs; ++c)
      if (tally[i][c]) {
        out.add_scaled(delta_power(c + d.free_loops()), Integer(static_cast<unsigned long>(tally[i][c])), i - k);
      }
  return out;
}

}  // namespace skeinlab
