#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "scrollkit/rnc_geometry.hpp"
#include "scrollkit/scroll_families.hpp"

namespace scrollkit {

/// A node seen from both components: parameter r on the first, s on the second.
struct NodePair {
  P1Point r;
  P1Point s;
};
using NodeData = std::vector<NodePair>;

/// Two rational normal curves of P^n through the standard frame, meeting at
/// its n+2 points. Arithmetic genus n+1.
class BinaryCurve {
 public:
  /// Throws kInvalidArgument if the components live in different spaces or
  /// fields, or if their parameter multisets agree.
  BinaryCurve(StandardRNC comp1, StandardRNC comp2);

  int n() const { return comp1_.n(); }
  int arithmetic_genus() const { return n() + 1; }
  int node_count() const { return n() + 2; }
  const Field& field() const { return comp1_.field(); }
  const StandardRNC& comp1() const { return comp1_; }
  const StandardRNC& comp2() const { return comp2_; }
  /// Node j sits at comp1.frame_parameter(j) and comp2.frame_parameter(j).
  NodeData nodes() const;

  friend bool operator==(const BinaryCurve&, const BinaryCurve&) = default;

 private:
  StandardRNC comp1_, comp2_;
};

/// Two independent uniform components. Requires n >= 3; throws kFieldTooSmall
/// over Z/p with p < 4n.
BinaryCurve random_binary_curve(int n, const Field& k, std::uint64_t seed);

using FormPair = std::pair<BinaryForm, BinaryForm>;

/// Maps (q1 : q2) of the given degree with (q1(r) : q2(r)) = s at every node:
/// rows q1(r_j) s_j1 - q2(r_j) s_j0 = 0, unknowns the coefficients of q1 then q2.
struct PencilSystem {
  Matrix matrix;
  std::size_t rank;
  std::vector<FormPair> kernel;
};
PencilSystem pencil_system(const NodeData& nodes, int degree);

/// True iff (q1(r_j) : q2(r_j)) is a point equal to s_j for every node.
bool certifies_nodes(const FormPair& q, const NodeData& nodes);

struct GonalityWitness {
  BinaryForm q1, q2;
  /// Degree of the map q1 : q2.
  int degree;
  /// degree + 1: the map on the first component plus the identity on the second.
  int total_degree;
  /// The kernel element had a common factor that was divided out.
  bool reduced;
  /// Integer combination of the kernel basis that produced the witness.
  std::vector<int> combination;
};

struct GonalityResult {
  int form_degree;
  std::size_t equations;
  std::size_t unknowns;
  std::size_t kernel_dim;
  std::vector<FormPair> kernel;
  GonalityWitness witness;
  int bound;
};

/// Degree floor(n/2)+1 system. The witness is the first coprime kernel element
/// found scanning basis vectors, then integer combinations with coefficients in
/// [-3, 3]; if every scanned element has a common factor, the lowest-degree
/// reduction that still satisfies the node conditions. Throws kNoCoprimeWitness.
GonalityResult gonality_map(const NodeData& nodes, int n);
GonalityResult gonality_map(const BinaryCurve& c);

struct HyperellipticResult {
  bool hyperelliptic;
  std::size_t kernel_dim;
  /// Rows (q1 coefficients, q2 coefficients) of an invertible solution.
  std::optional<Matrix> mobius;
};

/// Whether some Moebius map sends r_j to s_j for every node.
HyperellipticResult hyperelliptic_test(const NodeData& nodes);
HyperellipticResult hyperelliptic_test(const BinaryCurve& c);

struct QuadricSpace {
  std::vector<Quadric> basis;
  std::size_t equations;
  std::size_t unknowns;
  /// (n-1)(n-2)/2
  std::size_t expected;
};

/// Quadrics vanishing identically on both components.
QuadricSpace quadrics_through(const BinaryCurve& c);

enum class ContainmentVerdict { kNoneFound, kWitness };
std::string to_string(ContainmentVerdict v);

/// One random plane: the restricted conics and the gcd of their pairwise
/// resultants in the first two plane coordinates.
struct SliceTrial {
  std::uint64_t stream;
  std::vector<BinaryForm> resultants;
  BinaryForm common;
  bool hit;
};

/// Every plane meets a surface in P^4, while a random plane misses a curve.
/// The quadrics must live in P^4 and number at least two. A miss is certified
/// (no common zero over the algebraic closure); a hit only says the pairwise
/// resultants share a root.
std::vector<SliceTrial> plane_slices(const std::vector<Quadric>& quadrics, int trials, std::uint64_t seed);

struct StratumCheck {
  ScrollType scroll;
  int h;
  int k;
  std::string method;
  bool excluded;
  std::optional<std::size_t> kernel_dim;
  std::optional<int> estimate;
  std::string detail;
};

/// Heuristic enumeration for scrolls of dimension n/2, n even: each (h, k) is
/// excluded by one of the proof steps. When min(h, k) = 1 the step is an exact
/// linear solve on this curve: the ruling restricted to the unisecant
/// component identifies it with P^1, so the other component carries a map of
/// degree max(h, k) compatible with the nodes.
std::vector<StratumCheck> containment_strata(const BinaryCurve& c);

struct ContainmentReport {
  ContainmentVerdict verdict;
  std::string method;
  bool heuristic;
  std::string description;
  std::uint64_t seed;
  std::size_t quadric_dim = 0;
  std::size_t expected_quadric_dim = 0;
  /// "QUADRIC_SPACE_UNEXPECTED_DIM" when the net has the wrong size.
  std::optional<std::string> anomaly;
  std::vector<SliceTrial> trials;
  std::size_t hits = 0;
  /// Number of projections from node 0 applied before the search.
  int projections = 0;
  std::vector<StratumCheck> strata;
};

/// n = 4: plane slicing of the net of quadrics, majority over trials.
/// Otherwise the stratified search (after one projection when n is odd).
/// Throws kInvalidTrials when trials < 1.
ContainmentReport scroll_containment_witness(const BinaryCurve& c, int trials, std::uint64_t seed);

/// A curve of P^4 lying on a cubic surface scroll: a degree-2 curve of F(1,2)
/// and the unisecant through six of its points, pushed forward and normalized.
BinaryCurve scroll_positive_control(const Field& k, std::uint64_t seed);

/// Projection of both components from node j. Requires n >= 4.
BinaryCurve project_from_node(const BinaryCurve& c, int j);

}  // namespace scrollkit
