#include "skeinlab/diagram.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>

#include "skeinlab/errors.hpp"

namespace skeinlab {

namespace {

[[noreturn]] void malformed(const std::string& why) { throw InputError("malformed PD: " + why); }

struct UnionFind {
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

bool is_under_slot(int slot) { return slot % 2 == 0; }

}  // namespace

LinkDiagram LinkDiagram::from_crossings(std::vector<Crossing> crossings, int free_loops, std::string name) {
  if (free_loops < 0) malformed("negative loop count");
  LinkDiagram d;
  d.free_loops_ = free_loops;
  d.name_ = std::move(name);

  std::map<int, int> occurrences;
  for (const auto& x : crossings)
    for (int label : x) {
      if (label <= 0) malformed("arc labels must be positive integers");
      ++occurrences[label];
    }
  for (const auto& [label, count] : occurrences)
    if (count != 2) malformed("arc " + std::to_string(label) + " appears " + std::to_string(count) + " times");

  std::map<int, int> relabel;
  for (auto& x : crossings)
    for (int& label : x) {
      auto [it, inserted] = relabel.emplace(label, static_cast<int>(relabel.size()) + 1);
      label = it->second;
    }
  d.crossings_ = std::move(crossings);

  const int arcs = d.arc_count();
  std::vector<std::vector<Endpoint>> ends(arcs);
  for (int c = 0; c < d.crossing_count(); ++c)
    for (int s = 0; s < 4; ++s) ends[d.crossings_[c][s] - 1].push_back({c, s});

  d.arc_component_.assign(arcs, -1);
  d.arc_tail_.assign(arcs, {});
  d.arc_head_.assign(arcs, {});
  d.over_d_to_b_.assign(d.crossing_count(), false);

  for (int start = 0; start < arcs; ++start) {
    if (d.arc_component_[start] >= 0) continue;
    const int comp = static_cast<int>(d.components_.size());
    std::vector<int> arc_seq;
    std::vector<Endpoint> departures;
    std::vector<Endpoint> arrivals;
    int arc = start;
    Endpoint from = ends[start][0];
    while (true) {
      if (d.arc_component_[arc] >= 0) malformed("inconsistent arc connectivity");
      d.arc_component_[arc] = comp;
      const Endpoint to = ends[arc][0] == from ? ends[arc][1] : ends[arc][0];
      arc_seq.push_back(arc);
      departures.push_back(from);
      arrivals.push_back(to);
      from = {to.crossing, to.slot ^ 2};
      arc = d.crossings_[from.crossing][from.slot] - 1;
      if (arc == start && from == ends[start][0]) break;
    }
    // The traversal direction must agree with every under-passage (a -> c).
    int forward = 0;
    int backward = 0;
    for (const auto& e : arrivals) {
      if (!is_under_slot(e.slot)) continue;
      (e.slot == kSlotA ? forward : backward)++;
    }
    if (forward > 0 && backward > 0) malformed("under-strand orientations are inconsistent along a component");
    if (backward > 0) {
      std::reverse(arc_seq.begin(), arc_seq.end());
      std::reverse(departures.begin(), departures.end());
      std::reverse(arrivals.begin(), arrivals.end());
      std::swap(departures, arrivals);
    }
    for (std::size_t i = 0; i < arc_seq.size(); ++i) {
      d.arc_tail_[arc_seq[i]] = departures[i];
      d.arc_head_[arc_seq[i]] = arrivals[i];
      if (!is_under_slot(arrivals[i].slot)) d.over_d_to_b_[arrivals[i].crossing] = arrivals[i].slot == kSlotD;
    }
    std::vector<int> labels;
    for (int a : arc_seq) labels.push_back(a + 1);
    d.components_.push_back(std::move(labels));
  }
  return d;
}

int LinkDiagram::writhe() const {
  int w = 0;
  for (int c = 0; c < crossing_count(); ++c) w += crossing_sign(c);
  return w;
}

LinkDiagram parse_pd(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  auto flush = [&] {
    if (!cur.empty()) tokens.push_back(cur);
    cur.clear();
  };
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch)) || ch == '/' || ch == ';' || ch == ',' || ch == '[' ||
        ch == ']' || ch == '(' || ch == ')') {
      flush();
    } else if ((ch == 'X' || ch == 'O') && !cur.empty()) {
      flush();
      cur.push_back(ch);
      flush();
    } else {
      cur.push_back(ch);
      if (cur == "X" || cur == "O") flush();
    }
  }
  flush();

  std::vector<LinkDiagram::Crossing> crossings;
  int loops = 0;
  std::size_t i = 0;
  while (i < tokens.size()) {
    const std::string& t = tokens[i];
    if (t == "PD") {
      ++i;
    } else if (t == "O") {
      ++loops;
      ++i;
    } else if (t == "X") {
      ++i;
      std::vector<int> labels;
      while (i < tokens.size() && tokens[i] != "X" && tokens[i] != "O") {
        const std::string& num = tokens[i];
        if (num.empty() || !std::all_of(num.begin(), num.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
          malformed("unexpected token '" + num + "'");
        labels.push_back(std::stoi(num));
        ++i;
      }
      if (labels.empty()) malformed("empty crossing tuple");
      if (labels.size() != 4) malformed("crossing tuple with " + std::to_string(labels.size()) + " entries");
      crossings.push_back({labels[0], labels[1], labels[2], labels[3]});
    } else {
      malformed("unexpected token '" + t + "'");
    }
  }
  return LinkDiagram::from_crossings(std::move(crossings), loops);
}

LinkDiagram parse_pd_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("pd") || !j["pd"].is_array()) malformed("JSON form needs a \"pd\" array");
  std::vector<LinkDiagram::Crossing> crossings;
  for (const auto& x : j["pd"]) {
    if (!x.is_array() || x.empty()) malformed("empty crossing tuple");
    if (x.size() != 4) malformed("crossing tuple with " + std::to_string(x.size()) + " entries");
    LinkDiagram::Crossing c{};
    for (int s = 0; s < 4; ++s) {
      if (!x[s].is_number_integer()) malformed("arc labels must be integers");
      c[s] = x[s].get<int>();
    }
    crossings.push_back(c);
  }
  const int loops = j.value("loops", 0);
  return LinkDiagram::from_crossings(std::move(crossings), loops, j.value("name", std::string{}));
}

std::string to_pd_string(const LinkDiagram& d) {
  std::string out;
  for (const auto& x : d.crossings()) {
    if (!out.empty()) out += " / ";
    out += "X " + std::to_string(x[0]) + " " + std::to_string(x[1]) + " " + std::to_string(x[2]) + " " +
           std::to_string(x[3]);
  }
  for (int i = 0; i < d.free_loops(); ++i) out += out.empty() ? "O" : " / O";
  return out;
}

nlohmann::json to_pd_json(const LinkDiagram& d) {
  nlohmann::json pd = nlohmann::json::array();
  for (const auto& x : d.crossings()) pd.push_back({x[0], x[1], x[2], x[3]});
  nlohmann::json j{{"pd", pd}};
  if (!d.name().empty()) j["name"] = d.name();
  if (d.free_loops() > 0) j["loops"] = d.free_loops();
  return j;
}

bool StateGraph::has_loop() const {
  return std::any_of(edges.begin(), edges.end(), [](const auto& e) { return e.first == e.second; });
}

StateResult apply_state(const LinkDiagram& d, const KauffmanState& s) {
  if (static_cast<int>(s.size()) != d.crossing_count()) throw DomainError("state is not total on the crossings");
  UnionFind uf(d.arc_count());
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossings()[c];
    if (s[c] == Smoothing::A) {
      uf.unite(x[kSlotA] - 1, x[kSlotD] - 1);
      uf.unite(x[kSlotB] - 1, x[kSlotC] - 1);
    } else {
      uf.unite(x[kSlotA] - 1, x[kSlotB] - 1);
      uf.unite(x[kSlotC] - 1, x[kSlotD] - 1);
    }
  }
  std::map<int, int> circle_of_root;
  for (int a = 0; a < d.arc_count(); ++a) circle_of_root.emplace(uf.find(a), static_cast<int>(circle_of_root.size()));
  StateResult r;
  r.circles = static_cast<int>(circle_of_root.size()) + d.free_loops();
  r.graph.vertex_count = r.circles;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossings()[c];
    // The dashed segment joins the two arcs on opposite sides of the smoothing.
    const int u = circle_of_root.at(uf.find(x[kSlotA] - 1));
    const int v = circle_of_root.at(uf.find((s[c] == Smoothing::A ? x[kSlotB] : x[kSlotD]) - 1));
    r.graph.edges.emplace_back(u, v);
  }
  return r;
}

KauffmanState all_A_state(const LinkDiagram& d) { return KauffmanState(d.crossing_count(), Smoothing::A); }
KauffmanState all_B_state(const LinkDiagram& d) { return KauffmanState(d.crossing_count(), Smoothing::B); }

bool is_A_adequate(const LinkDiagram& d) { return !apply_state(d, all_A_state(d)).graph.has_loop(); }
bool is_B_adequate(const LinkDiagram& d) { return !apply_state(d, all_B_state(d)).graph.has_loop(); }
bool is_adequate(const LinkDiagram& d) { return is_A_adequate(d) && is_B_adequate(d); }

bool is_alternating(const LinkDiagram& d) {
  for (const auto& comp : d.components()) {
    const std::size_t n = comp.size();
    for (std::size_t i = 0; i < n; ++i) {
      const bool under_here = is_under_slot(d.arc_head(comp[i]).slot);
      const bool under_next = is_under_slot(d.arc_head(comp[(i + 1) % n]).slot);
      if (under_here == under_next) return false;
    }
  }
  return true;
}

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<LinkDiagram::Crossing> out;
  for (int c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossings()[c];
    if (d.over_runs_d_to_b(c))
      out.push_back({x[kSlotD], x[kSlotA], x[kSlotB], x[kSlotC]});
    else
      out.push_back({x[kSlotB], x[kSlotC], x[kSlotD], x[kSlotA]});
  }
  LinkDiagram m = LinkDiagram::from_crossings(std::move(out), d.free_loops(), d.name().empty() ? "" : d.name() + "*");
  return m;
}

namespace detail {

int strand_index(const LinkDiagram& d, int crossing, int side, int t, int m) {
  if (side == kSlotA || side == kSlotC) return t;
  return d.over_runs_d_to_b(crossing) ? m - 1 - t : t;
}

int geometric_index(const LinkDiagram& d, int crossing, int side, int strand, int m) {
  return strand_index(d, crossing, side, strand, m);
}

}  // namespace detail

LinkDiagram cable(const LinkDiagram& d, int m) {
  if (m < 1) throw DomainError("cable multiplicity must be positive");
  const int k = d.crossing_count();
  // Labels for cable strand i of arc a: (a-1)*m + i + 1. Internal grid
  // segments are numbered after those.
  int next_label = d.arc_count() * m + 1;
  auto port = [&](int c, int side, int t) {
    const int arc = d.crossings()[c][side];
    return (arc - 1) * m + detail::strand_index(d, c, side, t, m) + 1;
  };
  std::vector<LinkDiagram::Crossing> out;
  out.reserve(static_cast<std::size_t>(k) * m * m);
  for (int c = 0; c < k; ++c) {
    // col[x][y]: segment of column x below row y; row[y][x]: segment of row y west of column x
    std::vector<std::vector<int>> col(m, std::vector<int>(m + 1));
    std::vector<std::vector<int>> row(m, std::vector<int>(m + 1));
    for (int x = 0; x < m; ++x) {
      col[x][0] = port(c, kSlotA, x);
      col[x][m] = port(c, kSlotC, x);
      for (int y = 1; y < m; ++y) col[x][y] = next_label++;
    }
    for (int y = 0; y < m; ++y) {
      row[y][0] = port(c, kSlotD, y);
      row[y][m] = port(c, kSlotB, y);
      for (int x = 1; x < m; ++x) row[y][x] = next_label++;
    }
    for (int y = 0; y < m; ++y)
      for (int x = 0; x < m; ++x) out.push_back({col[x][y], row[y][x + 1], col[x][y + 1], row[y][x]});
  }
  return LinkDiagram::from_crossings(std::move(out), d.free_loops() * m,
                                     d.name().empty() ? "" : d.name() + "^" + std::to_string(m));
}

}  // namespace skeinlab
