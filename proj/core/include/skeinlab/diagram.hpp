#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

namespace skeinlab {

/// PD slot positions around a crossing, counterclockwise from the incoming
/// under-strand: a (under in), b, c (under out), d.
enum Slot : int { kSlotA = 0, kSlotB = 1, kSlotC = 2, kSlotD = 3 };

enum class Smoothing : std::uint8_t { A, B };

/// Total assignment crossing index -> smoothing.
using KauffmanState = std::vector<Smoothing>;

struct Endpoint {
  int crossing;
  int slot;
  friend bool operator==(const Endpoint&, const Endpoint&) = default;
};

/**
 * Oriented planar diagram given by a PD code.
 *
 * Each crossing lists four arc labels counterclockwise starting at the
 * incoming under-strand. Arcs are relabeled 1..2k in order of first
 * appearance. Zero-crossing unknotted components are tracked as free loops.
 */
class LinkDiagram {
 public:
  using Crossing = std::array<int, 4>;

  LinkDiagram() = default;
  /// Validates and canonicalizes. Throws InputError("malformed PD: ...").
  static LinkDiagram from_crossings(std::vector<Crossing> crossings, int free_loops = 0, std::string name = {});

  const std::vector<Crossing>& crossings() const { return crossings_; }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  int arc_count() const { return 2 * crossing_count(); }
  int free_loops() const { return free_loops_; }
  bool empty() const { return crossings_.empty() && free_loops_ == 0; }
  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  /// Components with at least one crossing; free loops are not listed.
  int crossed_component_count() const { return static_cast<int>(components_.size()); }
  int component_count() const { return crossed_component_count() + free_loops_; }
  /// Arcs of each component in traversal order along the orientation.
  const std::vector<std::vector<int>>& components() const { return components_; }
  int component_of_arc(int arc) const { return arc_component_.at(arc - 1); }

  /// Endpoint where the arc leaves a crossing.
  Endpoint arc_tail(int arc) const { return arc_tail_.at(arc - 1); }
  /// Endpoint where the arc enters a crossing.
  Endpoint arc_head(int arc) const { return arc_head_.at(arc - 1); }
  /// True when the over-strand runs from slot d to slot b.
  bool over_runs_d_to_b(int crossing) const { return over_d_to_b_.at(crossing); }
  /// +1 or -1 with the usual right-hand convention.
  int crossing_sign(int crossing) const { return over_d_to_b_.at(crossing) ? -1 : 1; }
  int writhe() const;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
    return a.crossings_ == b.crossings_ && a.free_loops_ == b.free_loops_;
  }

 private:
  std::vector<Crossing> crossings_;
  int free_loops_ = 0;
  std::string name_;
  std::vector<std::vector<int>> components_;
  std::vector<int> arc_component_;
  std::vector<Endpoint> arc_tail_;
  std::vector<Endpoint> arc_head_;
  std::vector<bool> over_d_to_b_;
};

/// "X 1 4 2 5 / X 3 6 4 1 / X 5 2 6 3"; crossings separated by '/', ';',
/// newlines or commas. "O" adds a zero-crossing unknotted component. Empty
/// text is the empty diagram.
LinkDiagram parse_pd(std::string_view text);
/// {"pd": [[a,b,c,d], ...], "name": "...", "loops": 0}
LinkDiagram parse_pd_json(const nlohmann::json& j);
std::string to_pd_string(const LinkDiagram& d);
nlohmann::json to_pd_json(const LinkDiagram& d);

/// Circles of a state as vertices, one edge per crossing.
struct StateGraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;
  bool has_loop() const;
};

struct StateResult {
  int circles = 0;
  StateGraph graph;
};

/// Smooths every crossing per the state and counts circles (free loops included).
StateResult apply_state(const LinkDiagram& d, const KauffmanState& s);
KauffmanState all_A_state(const LinkDiagram& d);
KauffmanState all_B_state(const LinkDiagram& d);

bool is_A_adequate(const LinkDiagram& d);
bool is_B_adequate(const LinkDiagram& d);
bool is_adequate(const LinkDiagram& d);
bool is_alternating(const LinkDiagram& d);

/// Swaps over and under at every crossing.
LinkDiagram mirror(const LinkDiagram& d);
/// Blackboard m-parallel; k crossings become k*m^2.
LinkDiagram cable(const LinkDiagram& d, int m);

namespace detail {

/**
 * Geometry shared by every cabling construction.
 *
 * Around a crossing the four sides are S (slot a), E (b), N (c), W (d). The
 * under-strand runs S to N. Ports on a side are indexed by a geometric
 * coordinate t: west-to-east on S/N, south-to-north on E/W. strand_index maps
 * t to the parallel index counted from the left of the arc orientation.
 */
int strand_index(const LinkDiagram& d, int crossing, int side, int t, int m);
int geometric_index(const LinkDiagram& d, int crossing, int side, int strand, int m);

}  // namespace detail

}  // namespace skeinlab
