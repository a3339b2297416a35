#pragma once

// The permutohedron P_n with geometrically oriented faces, its quotients
// C_n (unordered partitions) and QC_n (partitions into ordered blocks),
// cellular boundary matrices and integral homology.

#include <cstdint>
#include <string>
#include <vector>

#include "ybalg/exact.hpp"
#include "ybalg/ncalg.hpp"

namespace ybalg {

using Mask = std::uint32_t;

/// Face S_1 | ... | S_r of P_n (dimension n - r).
struct OrderedPartition {
  int n = 0;
  std::vector<Mask> blocks;

  int dimension() const { return n - static_cast<int>(blocks.size()); }
  friend auto operator<=>(const OrderedPartition&, const OrderedPartition&) = default;
};

/// Blocks sorted by their minima.
struct Partition {
  int n = 0;
  std::vector<Mask> blocks;

  int dimension() const { return n - static_cast<int>(blocks.size()); }
  friend auto operator<=>(const Partition&, const Partition&) = default;
};

/// Blocks sorted by their minima; each block lists its elements in increasing order
/// of the block's total order.
struct BlockOrderedPartition {
  int n = 0;
  std::vector<std::vector<int>> blocks;

  int dimension() const { return n - static_cast<int>(blocks.size()); }
  friend auto operator<=>(const BlockOrderedPartition&, const BlockOrderedPartition&) = default;
};

/// "13|2"
std::string to_string(const OrderedPartition& p);
/// "{13,2}"
std::string to_string(const Partition& p);
/// "[3>1]|[2]": within a block, larger elements of the order come first.
std::string to_string(const BlockOrderedPartition& p);
OrderedPartition parse_ordered_partition(std::string_view text, int n);

std::vector<int> elements(Mask m);
Partition unordered(const OrderedPartition& p);
/// Blocks of an unordered partition taken in the order of their minima.
OrderedPartition canonical_representative(const Partition& p);

/// Faces of P_n indexed by dimension. Throws ResourceLimitError for n > cap.
std::vector<std::vector<OrderedPartition>> perm_faces(int n, int cap = 7);

struct FaceGeometry {
  /// Sorted lexicographically.
  std::vector<std::vector<int>> vertices;
  /// For each block: sum of coordinates over the block.
  std::vector<int> block_sums;
};
FaceGeometry face_geometry(const OrderedPartition& p);

/// Canonical oriented basis of the face's tangent space: blocks by minima,
/// vectors e_s - e_{min B} for the other s in B in increasing order.
std::vector<std::vector<int>> orientation_basis(const OrderedPartition& p);

/// Incidence of the facet `g` in the boundary of `f`: +1 iff the outward
/// normal of g followed by the basis of g is positively oriented in f.
/// `g` must be obtained from `f` by splitting one block into two adjacent ones.
int incidence_sign(const OrderedPartition& f, const OrderedPartition& g);

struct ChainComplex {
  /// cells[k]: labels of the k-cells.
  std::vector<std::vector<std::string>> cells;
  /// boundary[k]: rows are k-cells, columns are (k-1)-cells; boundary[0] has no columns.
  std::vector<IntMatrix> boundary;

  std::vector<std::size_t> cell_counts() const;
  bool boundary_squares_to_zero() const;
  bool is_minimal() const;
};

struct HomologyGroup {
  std::size_t rank = 0;
  std::vector<Integer> torsion;
};

std::vector<HomologyGroup> homology(const ChainComplex& cc);

enum class Space { P, C, QC };
std::string to_string(Space s);
Space parse_space(std::string_view text);

ChainComplex permutohedron_complex(int n, const Caps& caps = {});
/// Boundaries induced from P_n through canonical representatives.
ChainComplex quotient_complex(Space space, int n, const Caps& caps = {});
ChainComplex build_complex(Space space, int n, const Caps& caps = {});

/// Cell counts of QC_n obtained by gluing C_n x S_n with the literal
/// identification rule, compared against canonicalization; also checks that
/// boundaries computed from every glued representative agree. Small n only.
struct LiteralQCReport {
  std::vector<std::size_t> cell_counts;
  bool classes_match_canonical = false;
  bool boundary_matches = false;
};
LiteralQCReport literal_qc_check(int n);

/// Coefficients of S'|S'' and S''|S' in the boundary of the top face cancel.
bool opposite_faces_cancel(int n);

/// Every ordered representative of a C_n or QC_n cell carries the same
/// canonical orientation and induces the same boundary row.
bool orbit_orientation_consistent(int n);

/// Alternating sum of face counts of P_n.
Integer euler_characteristic(int n, int cap = 7);

}  // namespace ybalg
