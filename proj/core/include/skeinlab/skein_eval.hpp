#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <vector>

#include "skeinlab/diagram.hpp"
#include "skeinlab/laurent.hpp"
#include "skeinlab/rational.hpp"

namespace skeinlab {

/// A node port, or boundary point `port` of an open tangle when node == kBoundary.
struct PortRef {
  static constexpr int kBoundary = -1;
  int node = kBoundary;
  int port = 0;
  friend bool operator==(const PortRef&, const PortRef&) = default;
};

/**
 * Planar network of single strands meeting crossings and Jones-Wenzl boxes.
 *
 * A crossing node has ports 0..3 in PD slot order (a, b, c, d). A projector
 * node of color k has bottom ports 0..k-1 and top ports k..2k-1, both read left
 * to right, so its terms use the same point numbering as PlanarMatching. A
 * color-1 projector is a plain strand segment, used as a wire by the builders.
 * Cabled edges are bundles of parallel strands rather than single colored edges.
 */
class DecoratedDiagram {
 public:
  enum class NodeKind : std::uint8_t { Crossing, Projector };
  struct Node {
    NodeKind kind;
    int color;  // 1 for crossings
    int group;  // planning hint, e.g. the base crossing a cable grid came from; -1 if none
    int first_port;
  };

  explicit DecoratedDiagram(int boundary_points = 0);

  int add_crossing(int group = -1);
  int add_projector(int color, int group = -1);
  /// Joins two ports by a strand. Each port is joined exactly once.
  void connect(PortRef a, PortRef b);
  void add_free_loops(int count) { free_loops_ += count; }

  int boundary_points() const { return boundary_; }
  int free_loops() const { return free_loops_; }
  int node_count() const { return static_cast<int>(nodes_.size()); }
  const Node& node(int i) const { return nodes_[i]; }
  int port_count(int node) const;
  PortRef partner(PortRef p) const;
  int crossing_count() const;
  int projector_count(int min_color = 2) const;
  bool is_crossingless() const { return crossing_count() == 0; }
  bool closed() const { return boundary_ == 0; }

  /// Throws InternalError when some port is left unjoined.
  void validate() const;
  /// Splices out color-1 projectors; wire-only cycles become free loops.
  DecoratedDiagram without_wires() const;
  /// Replaces every projector by the identity and traces the resulting strands.
  /// Returns the number of closed circles (free loops included) and stores
  /// the boundary pairing of an open diagram in `boundary_pairing` if given.
  int identity_circles(std::vector<int>* boundary_pairing = nullptr) const;

  int global_id(PortRef p) const { return p.node == PortRef::kBoundary ? p.port : nodes_[p.node].first_port + p.port; }
  PortRef from_global(int id) const;

 private:
  int boundary_;
  int free_loops_ = 0;
  std::vector<Node> nodes_;
  std::vector<int> link_;  // global port id -> partner global id, -1 while open
  std::vector<int> owner_; // global id -> node, -1 for boundary
};

/// Absorption order of the nodes; widths[i] is the frontier size after the
/// (i+1)-th absorption, boundary points not counted.
struct MorsePlan {
  std::vector<int> order;
  std::vector<int> widths;
  int initial_width = 0;
  int peak_width = 0;
};

/// Resource guards; exceeding either throws ResourceLimitError.
struct EvalOptions {
  int max_width = default_max_width();
  std::size_t max_terms = 4'000'000;
  /// Cap on enumerated colored states or expansion indices.
  std::size_t max_states = std::size_t{1} << 20;

  /// SKEINLAB_MAX_WIDTH if set and positive, else 24.
  static int default_max_width();
};

/// Plan for `s` (which must have no color-1 projectors). Exact search over
/// absorption orders for small networks, base-crossing order plus local greedy
/// for grouped ones, greedy otherwise.
MorsePlan morse_decompose(const DecoratedDiagram& s);
/// A connected random order, for plan-independence testing.
MorsePlan random_plan(const DecoratedDiagram& s, std::uint64_t seed);
/// Widths of an arbitrary order; throws DomainError unless it is a permutation.
MorsePlan plan_from_order(const DecoratedDiagram& s, std::vector<int> order);

/// Coefficient of each boundary pairing (partner array over boundary points).
using TangleVector = std::map<std::vector<std::uint8_t>, RationalFunction>;

/// Value of a closed diagram in Z[A, A^-1]. Throws InternalError when the
/// value is not a Laurent polynomial; use evaluate_rational for networks of
/// projectors whose value may have a denominator.
LaurentPolynomial evaluate(const DecoratedDiagram& s, const EvalOptions& opts = {});
/// Value of a closed diagram in Q(A).
RationalFunction evaluate_rational(const DecoratedDiagram& s, const EvalOptions& opts = {});
/// Same with an explicit plan for the wire-free diagram s.without_wires().
LaurentPolynomial evaluate_with_plan(const DecoratedDiagram& s, const MorsePlan& plan, const EvalOptions& opts = {});
/// Expansion of an open diagram over crossingless boundary pairings.
TangleVector evaluate_open(const DecoratedDiagram& s, const EvalOptions& opts = {});

/// The diagram itself as a network of crossing nodes.
DecoratedDiagram decorate(const LinkDiagram& d);
/// n-cable with one f^(n) box per component on its first arc.
DecoratedDiagram colored_diagram(const LinkDiagram& d, int n);

LaurentPolynomial bracket(const LinkDiagram& d, const EvalOptions& opts = {});
/// Full 2^k state sum. Throws ResourceLimitError above 24 crossings.
LaurentPolynomial bracket_bruteforce(const LinkDiagram& d);
/// Unreduced colored Jones polynomial in blackboard framing; n = 0 gives 1.
LaurentPolynomial colored_jones(const LinkDiagram& d, int n, const EvalOptions& opts = {});

namespace detail {

/// Boundary ports of an nx-by-ny grid of crossings: columns run under, S to N;
/// rows run over, W to E.
struct GridPorts {
  std::vector<PortRef> south, north, west, east;
};
GridPorts add_grid(DecoratedDiagram& s, int columns, int rows, int group);

/**
 * Glue local pieces placed at the crossings of a base diagram along its arcs.
 *
 * Pieces bind their side ports by geometric index (see detail::strand_index);
 * join_arcs then runs each arc's m strands from tail to head, optionally
 * through an f^(m) box.
 */
class CableAssembler {
 public:
  CableAssembler(const LinkDiagram& d, DecoratedDiagram& out, int m);

  void bind(int crossing, int side, int t, PortRef p);
  /// Strand segment joining two side ports of the same piece.
  void wire(int crossing, int side1, int t1, int side2, int t2);
  void place_grid(int crossing);
  /// box_on_arc is indexed by arc label - 1; free loops of d become closed boxes when box_free_loops.
  void join_arcs(const std::vector<bool>& box_on_arc, bool box_free_loops);

 private:
  const LinkDiagram& d_;
  DecoratedDiagram& out_;
  int m_;
  std::vector<PortRef> bound_;
  std::vector<char> is_bound_;
  int index(int crossing, int side, int t) const { return (crossing * 4 + side) * m_ + t; }
};

}  // namespace detail

}  // namespace skeinlab
