#include "ybalg/topo.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <numeric>

#include "ybalg/error.hpp"
#include "ybalg/series.hpp"
#include "ybalg/setpart.hpp"

namespace ybalg {

std::vector<int> elements(Mask m) {
  std::vector<int> out;
  for (int s = 1; m; ++s, m >>= 1)
    if (m & 1u) out.push_back(s);
  return out;
}

namespace {

Mask bit(int s) { return Mask{1} << (s - 1); }

Mask mask_of(const std::vector<int>& xs) {
  Mask m = 0;
  for (int x : xs) m |= bit(x);
  return m;
}

int min_element_of(Mask m) { return std::countr_zero(m) + 1; }

std::string digits(Mask m) {
  std::string out;
  for (int s : elements(m)) out += std::to_string(s);
  return out;
}

void check_n(int n, int cap) {
  if (n < 1) throw InvalidArgument("n must be positive");
  if (n > cap) throw ResourceLimitError("n = " + std::to_string(n) + " exceeds the cell complex cap " + std::to_string(cap));
  if (n > 30) throw InvalidArgument("n too large for bitmask blocks");
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  for_each_set_partition<int>(site_range(n), [&](const std::vector<std::vector<int>>& blocks) {
    Partition p{n, {}};
    for (const auto& b : blocks) p.blocks.push_back(mask_of(b));
    out.push_back(std::move(p));
  });
  return out;
}

}  // namespace

std::string to_string(const OrderedPartition& p) {
  std::string out;
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    if (k) out += "|";
    out += digits(p.blocks[k]);
  }
  return out;
}

std::string to_string(const Partition& p) {
  std::string out = "{";
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    if (k) out += ",";
    out += digits(p.blocks[k]);
  }
  return out + "}";
}

std::string to_string(const BlockOrderedPartition& p) {
  std::string out;
  for (std::size_t k = 0; k < p.blocks.size(); ++k) {
    if (k) out += "|";
    out += "[";
    for (std::size_t s = p.blocks[k].size(); s-- > 0;) {
      out += std::to_string(p.blocks[k][s]);
      if (s) out += ">";
    }
    out += "]";
  }
  return out;
}

OrderedPartition parse_ordered_partition(std::string_view text, int n) {
  OrderedPartition p{n, {}};
  Mask seen = 0, current = 0;
  auto close = [&] {
    if (!current) throw InvalidArgument("empty block in '" + std::string(text) + "'");
    p.blocks.push_back(current);
    current = 0;
  };
  for (char c : text) {
    if (c == '|') {
      close();
      continue;
    }
    if (c < '1' || c > '9' || c - '0' > n) throw InvalidArgument("bad site in '" + std::string(text) + "'");
    Mask b = bit(c - '0');
    if (seen & b) throw InvalidArgument("repeated site in '" + std::string(text) + "'");
    seen |= b;
    current |= b;
  }
  close();
  if (seen != (n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1)) throw InvalidArgument("'" + std::string(text) + "' does not cover [n]");
  return p;
}

Partition unordered(const OrderedPartition& p) {
  Partition out{p.n, p.blocks};
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](Mask a, Mask b) { return min_element_of(a) < min_element_of(b); });
  return out;
}

OrderedPartition canonical_representative(const Partition& p) {
  OrderedPartition out{p.n, p.blocks};
  std::sort(out.blocks.begin(), out.blocks.end(),
            [](Mask a, Mask b) { return min_element_of(a) < min_element_of(b); });
  return out;
}

std::vector<std::vector<OrderedPartition>> perm_faces(int n, int cap) {
  check_n(n, cap);
  std::vector<std::vector<OrderedPartition>> out(static_cast<std::size_t>(n));
  for (const auto& p : partitions_of(n)) {
    std::vector<Mask> blocks = p.blocks;
    std::sort(blocks.begin(), blocks.end());
    do {
      OrderedPartition f{n, blocks};
      out[static_cast<std::size_t>(f.dimension())].push_back(f);
    } while (std::next_permutation(blocks.begin(), blocks.end()));
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

FaceGeometry face_geometry(const OrderedPartition& p) {
  FaceGeometry g;
  std::vector<std::vector<int>> partial{std::vector<int>(static_cast<std::size_t>(p.n), 0)};
  int offset = 0;
  for (Mask b : p.blocks) {
    auto xs = elements(b);
    std::vector<int> values(xs.size());
    std::iota(values.begin(), values.end(), offset + 1);
    int sum = 0;
    for (int v : values) sum += v;
    g.block_sums.push_back(sum);
    std::vector<std::vector<int>> next;
    for (const auto& v : partial) {
      auto perm = values;
      do {
        auto w = v;
        for (std::size_t k = 0; k < xs.size(); ++k) w[static_cast<std::size_t>(xs[k] - 1)] = perm[k];
        next.push_back(std::move(w));
      } while (std::next_permutation(perm.begin(), perm.end()));
    }
    partial = std::move(next);
    offset += static_cast<int>(xs.size());
  }
  std::sort(partial.begin(), partial.end());
  g.vertices = std::move(partial);
  return g;
}

namespace {

/// Non-minimal elements of each block, blocks by minima: the coordinate
/// order of the canonical basis.
std::vector<int> coordinate_sites(const OrderedPartition& p) {
  std::vector<int> out;
  for (Mask b : unordered(p).blocks) {
    auto xs = elements(b);
    out.insert(out.end(), xs.begin() + 1, xs.end());
  }
  return out;
}

int determinant_sign(std::vector<std::vector<Rat>> m) {
  const std::size_t k = m.size();
  int sign = 1;
  for (std::size_t c = 0; c < k; ++c) {
    std::size_t pivot = c;
    while (pivot < k && m[pivot][c] == 0) ++pivot;
    if (pivot == k) return 0;
    if (pivot != c) {
      std::swap(m[pivot], m[c]);
      sign = -sign;
    }
    if (m[c][c] < 0) sign = -sign;
    for (std::size_t r = c + 1; r < k; ++r) {
      if (m[r][c] == 0) continue;
      Rat factor = m[r][c] / m[c][c];
      for (std::size_t s = c; s < k; ++s) m[r][s] -= factor * m[c][s];
    }
  }
  return sign;
}

/// Facets of f: split block i into (s1, s2) at adjacent positions.
template <class Visit>
void for_each_facet(const OrderedPartition& f, Visit visit) {
  for (std::size_t i = 0; i < f.blocks.size(); ++i) {
    const Mask b = f.blocks[i];
    if (std::popcount(b) < 2) continue;
    for (Mask s1 = (b - 1) & b; s1; s1 = (s1 - 1) & b) {
      OrderedPartition g{f.n, {}};
      g.blocks.reserve(f.blocks.size() + 1);
      g.blocks.insert(g.blocks.end(), f.blocks.begin(), f.blocks.begin() + static_cast<long>(i));
      g.blocks.push_back(s1);
      g.blocks.push_back(b & ~s1);
      g.blocks.insert(g.blocks.end(), f.blocks.begin() + static_cast<long>(i) + 1, f.blocks.end());
      visit(g);
    }
  }
}

}  // namespace

std::vector<std::vector<int>> orientation_basis(const OrderedPartition& p) {
  std::vector<std::vector<int>> basis;
  for (Mask b : unordered(p).blocks) {
    auto xs = elements(b);
    for (std::size_t k = 1; k < xs.size(); ++k) {
      std::vector<int> v(static_cast<std::size_t>(p.n), 0);
      v[static_cast<std::size_t>(xs[k] - 1)] = 1;
      v[static_cast<std::size_t>(xs[0] - 1)] = -1;
      basis.push_back(std::move(v));
    }
  }
  return basis;
}

int incidence_sign(const OrderedPartition& f, const OrderedPartition& g) {
  if (g.n != f.n || g.blocks.size() != f.blocks.size() + 1) throw InvalidArgument("not a facet");
  std::size_t i = 0;
  while (i < f.blocks.size() && f.blocks[i] == g.blocks[i]) ++i;
  if (i == f.blocks.size() || (g.blocks[i] | g.blocks[i + 1]) != f.blocks[i] ||
      !std::equal(f.blocks.begin() + static_cast<long>(i) + 1, f.blocks.end(), g.blocks.begin() + static_cast<long>(i) + 2))
    throw InvalidArgument(to_string(g) + " is not a facet of " + to_string(f));
  const Mask first = g.blocks[i], second = g.blocks[i + 1];
  // Points of f satisfy sum_{first} x >= its minimum, with equality on g.
  std::vector<int> normal(static_cast<std::size_t>(f.n), 0);
  for (int s : elements(first)) normal[static_cast<std::size_t>(s - 1)] = -std::popcount(second);
  for (int s : elements(second)) normal[static_cast<std::size_t>(s - 1)] = std::popcount(first);

  const auto sites = coordinate_sites(f);
  auto coords = [&](const std::vector<int>& v) {
    std::vector<Rat> c;
    for (int s : sites) c.emplace_back(v[static_cast<std::size_t>(s - 1)]);
    return c;
  };
  std::vector<std::vector<Rat>> m{coords(normal)};
  for (const auto& v : orientation_basis(g)) m.push_back(coords(v));
  int sign = determinant_sign(std::move(m));
  if (sign == 0) throw std::logic_error("degenerate facet frame");
  return sign;
}

// ---------------------------------------------------------------------------
// Complexes

std::vector<std::size_t> ChainComplex::cell_counts() const {
  std::vector<std::size_t> out;
  for (const auto& level : cells) out.push_back(level.size());
  return out;
}

bool ChainComplex::boundary_squares_to_zero() const {
  for (std::size_t k = 2; k < boundary.size(); ++k)
    if (!multiply(boundary[k], boundary[k - 1]).is_zero()) return false;
  return true;
}

bool ChainComplex::is_minimal() const {
  return std::all_of(boundary.begin(), boundary.end(), [](const IntMatrix& m) { return m.is_zero(); });
}

std::vector<HomologyGroup> homology(const ChainComplex& cc) {
  const std::size_t top = cc.cells.size();
  std::vector<std::vector<Integer>> factors(top + 1);
  for (std::size_t k = 1; k < top; ++k) factors[k] = smith_normal_form(cc.boundary[k]);
  std::vector<HomologyGroup> out(top);
  for (std::size_t k = 0; k < top; ++k) {
    const std::size_t rank_out = factors[k].size();
    const std::size_t rank_in = factors[k + 1].size();
    out[k].rank = cc.cells[k].size() - rank_out - rank_in;
    for (const auto& d : factors[k + 1])
      if (d > 1) out[k].torsion.push_back(d);
  }
  return out;
}

std::string to_string(Space s) {
  switch (s) {
    case Space::P: return "P";
    case Space::C: return "C";
    case Space::QC: return "QC";
  }
  return "?";
}

Space parse_space(std::string_view text) {
  if (text == "P") return Space::P;
  if (text == "C") return Space::C;
  if (text == "QC") return Space::QC;
  throw InvalidArgument("unknown space '" + std::string(text) + "'");
}

namespace {

/// Generic assembly: each k-cell has a representative face of P_n; a facet
/// g of the representative is sent to a (k-1)-cell by `classify(cell, g)`.
template <class Cell, class Rep, class Classify, class Label>
ChainComplex assemble(int n, const std::vector<std::vector<Cell>>& cells, Rep representative, Classify classify,
                      Label label) {
  ChainComplex cc;
  const std::size_t levels = cells.size();
  cc.cells.resize(levels);
  cc.boundary.resize(levels);
  for (std::size_t k = 0; k < levels; ++k) {
    for (const auto& c : cells[k]) cc.cells[k].push_back(label(c));
    cc.boundary[k] = IntMatrix(cells[k].size(), k == 0 ? 0 : cells[k - 1].size());
    if (k == 0) continue;
    for (std::size_t r = 0; r < cells[k].size(); ++r) {
      const OrderedPartition f = representative(cells[k][r]);
      for_each_facet(f, [&](const OrderedPartition& g) {
        cc.boundary[k].add(r, classify(cells[k][r], g), Integer(incidence_sign(f, g)));
      });
    }
  }
  (void)n;
  return cc;
}

template <class T>
std::map<T, std::size_t> index_of_cells(const std::vector<T>& cells) {
  std::map<T, std::size_t> out;
  for (std::size_t k = 0; k < cells.size(); ++k) out.emplace(cells[k], k);
  return out;
}

std::vector<std::vector<Partition>> c_cells(int n) {
  std::vector<std::vector<Partition>> out(static_cast<std::size_t>(n));
  for (auto& p : partitions_of(n)) out[static_cast<std::size_t>(p.dimension())].push_back(p);
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

std::vector<std::vector<BlockOrderedPartition>> qc_cells(int n) {
  std::vector<std::vector<BlockOrderedPartition>> out(static_cast<std::size_t>(n));
  for (const auto& p : partitions_of(n)) {
    std::vector<std::vector<int>> blocks;
    for (Mask b : p.blocks) blocks.push_back(elements(b));
    std::function<void(std::size_t)> choose = [&](std::size_t k) {
      if (k == blocks.size()) {
        out[static_cast<std::size_t>(p.dimension())].push_back(BlockOrderedPartition{n, blocks});
        return;
      }
      std::sort(blocks[k].begin(), blocks[k].end());
      do choose(k + 1);
      while (std::next_permutation(blocks[k].begin(), blocks[k].end()));
    };
    choose(0);
  }
  for (auto& level : out) std::sort(level.begin(), level.end());
  return out;
}

/// Rank of each site within its block's order.
std::vector<int> order_ranks(const BlockOrderedPartition& c) {
  std::vector<int> rank(static_cast<std::size_t>(c.n + 1), 0);
  for (const auto& b : c.blocks)
    for (std::size_t k = 0; k < b.size(); ++k) rank[static_cast<std::size_t>(b[k])] = static_cast<int>(k);
  return rank;
}

/// Cell of QC_n carried by face g with orders restricted from `rank` (any
/// function whose comparisons give the orders).
BlockOrderedPartition restrict_orders(const OrderedPartition& g, const std::vector<int>& rank) {
  BlockOrderedPartition out{g.n, {}};
  for (Mask b : unordered(g).blocks) {
    auto xs = elements(b);
    std::stable_sort(xs.begin(), xs.end(), [&](int x, int y) { return rank[static_cast<std::size_t>(x)] < rank[static_cast<std::size_t>(y)]; });
    out.blocks.push_back(std::move(xs));
  }
  return out;
}

OrderedPartition representative_of(const BlockOrderedPartition& c) {
  Partition p{c.n, {}};
  for (const auto& b : c.blocks) p.blocks.push_back(mask_of(b));
  return canonical_representative(p);
}

void check_cells(std::size_t total, const Caps& caps) {
  if (total > caps.max_cells)
    throw ResourceLimitError(std::to_string(total) + " cells exceed the cap of " + std::to_string(caps.max_cells));
}

template <class T>
std::size_t total_size(const std::vector<std::vector<T>>& levels) {
  std::size_t total = 0;
  for (const auto& l : levels) total += l.size();
  return total;
}

}  // namespace

ChainComplex permutohedron_complex(int n, const Caps& caps) {
  check_n(n, 7);
  auto faces = perm_faces(n);
  check_cells(total_size(faces), caps);
  std::vector<std::map<OrderedPartition, std::size_t>> index;
  for (const auto& level : faces) index.push_back(index_of_cells(level));
  return assemble(
      n, faces, [](const OrderedPartition& f) { return f; },
      [&](const OrderedPartition& f, const OrderedPartition& g) { return index[static_cast<std::size_t>(f.dimension() - 1)].at(g); },
      [](const OrderedPartition& f) { return to_string(f); });
}

ChainComplex quotient_complex(Space space, int n, const Caps& caps) {
  check_n(n, 7);
  if (space == Space::C) {
    auto cells = c_cells(n);
    check_cells(total_size(cells), caps);
    std::vector<std::map<Partition, std::size_t>> index;
    for (const auto& level : cells) index.push_back(index_of_cells(level));
    return assemble(
        n, cells, [](const Partition& p) { return canonical_representative(p); },
        [&](const Partition& p, const OrderedPartition& g) {
          return index[static_cast<std::size_t>(p.dimension() - 1)].at(unordered(g));
        },
        [](const Partition& p) { return to_string(p); });
  }
  if (space == Space::QC) {
    auto cells = qc_cells(n);
    check_cells(total_size(cells), caps);
    std::vector<std::map<BlockOrderedPartition, std::size_t>> index;
    for (const auto& level : cells) index.push_back(index_of_cells(level));
    return assemble(
        n, cells, [](const BlockOrderedPartition& c) { return representative_of(c); },
        [&](const BlockOrderedPartition& c, const OrderedPartition& g) {
          return index[static_cast<std::size_t>(c.dimension() - 1)].at(restrict_orders(g, order_ranks(c)));
        },
        [](const BlockOrderedPartition& c) { return to_string(c); });
  }
  throw InvalidArgument("P_n is not a quotient complex");
}

ChainComplex build_complex(Space space, int n, const Caps& caps) {
  return space == Space::P ? permutohedron_complex(n, caps) : quotient_complex(space, n, caps);
}

// ---------------------------------------------------------------------------
// Checks

LiteralQCReport literal_qc_check(int n) {
  check_n(n, 4);
  LiteralQCReport report;
  report.cell_counts.assign(static_cast<std::size_t>(n), 0);
  report.classes_match_canonical = true;
  report.boundary_matches = true;
  ChainComplex direct = quotient_complex(Space::QC, n);
  std::vector<std::map<std::string, std::size_t>> label_index(static_cast<std::size_t>(n));
  for (std::size_t k = 0; k < direct.cells.size(); ++k)
    for (std::size_t r = 0; r < direct.cells[k].size(); ++r) label_index[k][direct.cells[k][r]] = r;

  std::vector<std::vector<int>> perms;
  std::vector<int> sigma(static_cast<std::size_t>(n + 1));
  std::iota(sigma.begin(), sigma.end(), 0);
  do perms.push_back(sigma);
  while (std::next_permutation(sigma.begin() + 1, sigma.end()));

  for (const auto& p : partitions_of(n)) {
    const OrderedPartition f = canonical_representative(p);
    const auto k = static_cast<std::size_t>(p.dimension());
    // Literal rule: (P, sigma) ~ (P, tau) iff sigma and tau order every block alike.
    std::vector<std::size_t> parent(perms.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
      return parent[x] == x ? x : parent[x] = find(parent[x]);
    };
    auto same_orders = [&](const std::vector<int>& s, const std::vector<int>& t) {
      for (Mask b : p.blocks) {
        auto xs = elements(b);
        for (int x : xs)
          for (int y : xs)
            if ((s[static_cast<std::size_t>(x)] < s[static_cast<std::size_t>(y)]) !=
                (t[static_cast<std::size_t>(x)] < t[static_cast<std::size_t>(y)]))
              return false;
      }
      return true;
    };
    for (std::size_t a = 0; a < perms.size(); ++a)
      for (std::size_t b = a + 1; b < perms.size(); ++b)
        if (same_orders(perms[a], perms[b])) parent[find(a)] = find(b);

    std::map<std::size_t, std::string> class_key;
    std::map<std::string, std::size_t> key_class;
    for (std::size_t a = 0; a < perms.size(); ++a) {
      const std::string key = to_string(restrict_orders(f, perms[a]));
      const std::size_t root = find(a);
      auto [it, inserted] = class_key.try_emplace(root, key);
      if (!inserted && it->second != key) report.classes_match_canonical = false;
      auto [jt, fresh] = key_class.try_emplace(key, root);
      if (!fresh && jt->second != root) report.classes_match_canonical = false;

      // Boundary of the glued cell computed from this representative.
      auto found = label_index[k].find(key);
      if (found == label_index[k].end()) {
        report.classes_match_canonical = false;
        continue;
      }
      if (k == 0) continue;
      std::map<std::size_t, Integer> row;
      for_each_facet(f, [&](const OrderedPartition& g) {
        const auto target = label_index[k - 1].at(to_string(restrict_orders(g, perms[a])));
        row[target] += incidence_sign(f, g);
      });
      for (const auto& [col, v] : row)
        if (direct.boundary[k].at(found->second, col) != v) report.boundary_matches = false;
      std::size_t nonzero = 0;
      for (const auto& [col, v] : row)
        if (v != 0) ++nonzero;
      if (nonzero != direct.boundary[k].row(found->second).size()) report.boundary_matches = false;
    }
    report.cell_counts[k] += class_key.size();
  }
  return report;
}

bool opposite_faces_cancel(int n) {
  check_n(n, 7);
  const Mask all = n >= 32 ? ~Mask{0} : (Mask{1} << n) - 1;
  const OrderedPartition top{n, {all}};
  for (Mask s1 = (all - 1) & all; s1; s1 = (s1 - 1) & all) {
    const Mask s2 = all & ~s1;
    if (incidence_sign(top, {n, {s1, s2}}) + incidence_sign(top, {n, {s2, s1}}) != 0) return false;
  }
  return true;
}

bool orbit_orientation_consistent(int n) {
  check_n(n, 7);
  auto c = c_cells(n);
  std::vector<std::map<Partition, std::size_t>> c_index;
  for (const auto& level : c) c_index.push_back(index_of_cells(level));
  for (const auto& level : c)
    for (const auto& p : level) {
      const OrderedPartition canonical = canonical_representative(p);
      const auto reference = orientation_basis(canonical);
      std::map<std::size_t, long> reference_row;
      bool have_reference = false;
      std::vector<std::size_t> order(p.blocks.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        OrderedPartition f{n, {}};
        for (auto k : order) f.blocks.push_back(canonical.blocks[k]);
        // Block translations have identity differential, so the transported
        // frame of f is its own canonical frame; compare against the reference.
        if (orientation_basis(f) != reference) return false;
        if (p.dimension() == 0) continue;
        std::map<std::size_t, long> row;
        for_each_facet(f, [&](const OrderedPartition& g) {
          row[c_index[static_cast<std::size_t>(p.dimension() - 1)].at(unordered(g))] += incidence_sign(f, g);
        });
        std::erase_if(row, [](const auto& e) { return e.second == 0; });
        if (!have_reference) {
          reference_row = row;
          have_reference = true;
        } else if (row != reference_row) {
          return false;
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }

  auto qc = qc_cells(n);
  std::vector<std::map<BlockOrderedPartition, std::size_t>> qc_index;
  for (const auto& level : qc) qc_index.push_back(index_of_cells(level));
  for (const auto& level : qc)
    for (const auto& cell : level) {
      if (cell.dimension() == 0) continue;
      const OrderedPartition canonical = representative_of(cell);
      const auto rank = order_ranks(cell);
      std::map<std::size_t, long> reference_row;
      bool have_reference = false;
      std::vector<std::size_t> order(canonical.blocks.size());
      std::iota(order.begin(), order.end(), 0);
      do {
        OrderedPartition f{n, {}};
        for (auto k : order) f.blocks.push_back(canonical.blocks[k]);
        std::map<std::size_t, long> row;
        for_each_facet(f, [&](const OrderedPartition& g) {
          row[qc_index[static_cast<std::size_t>(cell.dimension() - 1)].at(restrict_orders(g, rank))] +=
              incidence_sign(f, g);
        });
        std::erase_if(row, [](const auto& e) { return e.second == 0; });
        if (!have_reference) {
          reference_row = row;
          have_reference = true;
        } else if (row != reference_row) {
          return false;
        }
      } while (std::next_permutation(order.begin(), order.end()));
    }
  return true;
}

Integer euler_characteristic(int n, int cap) {
  const auto faces = perm_faces(n, cap);
  Integer chi = 0;
  for (std::size_t k = 0; k < faces.size(); ++k) {
    if (k % 2 == 0) chi += faces[k].size();
    else chi -= faces[k].size();
  }
  return chi;
}

}  // namespace ybalg
