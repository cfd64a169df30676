#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "wscm/error.hpp"
#include "wscm/field.hpp"
#include "wscm/linear_quotients.hpp"
#include "wscm/monomial.hpp"
#include "wscm/rank.hpp"

namespace wscm {

/// Largest multidegree support whose subsets are enumerated when building upper Koszul complexes.
inline constexpr std::size_t kMaxKoszulSupport = 22;

/**
 * A simplicial complex on a ground set, stored by its facets.
 *
 * The void complex has no faces at all; the irrelevant complex has only the
 * empty face. They have different reduced homology, so the distinction is kept.
 */
class SimplicialComplex {
 public:
  static SimplicialComplex void_complex(IndexSet ground) { return SimplicialComplex(ground, {}, true); }

  /// Facets are the inclusion-maximal members; `faces` must be downward closed.
  static SimplicialComplex from_faces(IndexSet ground, std::vector<IndexSet> faces) {
    if (faces.empty()) return void_complex(ground);
    std::sort(faces.begin(), faces.end(), [](IndexSet a, IndexSet b) {
      if (a.size() != b.size()) return a.size() > b.size();
      return a < b;
    });
    std::vector<IndexSet> facets;
    for (auto f : faces) {
      if (!f.is_subset_of(ground)) throw InputError("face outside the ground set");
      if (std::none_of(facets.begin(), facets.end(), [&](IndexSet g) { return f.is_subset_of(g); }))
        facets.push_back(f);
    }
    return SimplicialComplex(ground, std::move(facets), false);
  }

  static SimplicialComplex from_facets(IndexSet ground, std::vector<IndexSet> facets) {
    if (facets.empty()) return void_complex(ground);
    return from_faces(ground, std::move(facets));
  }

  IndexSet ground() const { return ground_; }
  bool is_void() const { return void_; }
  bool is_irrelevant() const { return !void_ && facets_.size() == 1 && facets_.front().empty(); }

  /// Facets, largest first, then lexicographic.
  const std::vector<IndexSet>& facets() const { return facets_; }

  bool contains(IndexSet face) const {
    return std::any_of(facets_.begin(), facets_.end(), [&](IndexSet f) { return face.is_subset_of(f); });
  }

  /// Dimension; the irrelevant complex has -1 and the void complex is reported as -2.
  int dimension() const {
    if (void_) return -2;
    return static_cast<int>(facets_.front().size()) - 1;
  }

  /// Every face, by size then lexicographic.
  std::vector<IndexSet> faces() const {
    std::unordered_set<IndexSet> seen;
    for (auto f : facets_) for_each_subset(f, [&](IndexSet s) { seen.insert(s); });
    std::vector<IndexSet> out(seen.begin(), seen.end());
    std::sort(out.begin(), out.end(), DegreeLexLess{});
    return out;
  }

  friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

 private:
  SimplicialComplex(IndexSet ground, std::vector<IndexSet> facets, bool is_void)
      : ground_(ground), facets_(std::move(facets)), void_(is_void) {}

  IndexSet ground_;
  std::vector<IndexSet> facets_;
  bool void_ = true;
};

/// K^b(M) = { a ⊆ b : x^b / x^a ∈ M }.
inline SimplicialComplex upper_koszul_complex(const MonomialIdeal& ideal, SquareFreeMonomial b) {
  if (!b.is_subset_of(IndexSet::range(ideal.ambient()))) throw InputError("multidegree outside the ambient ring");
  if (b.size() > kMaxKoszulSupport) throw InputError("multidegree support too large for face enumeration");
  std::vector<IndexSet> faces;
  for_each_subset(b, [&](IndexSet a) {
    if (ideal.contains(b - a)) faces.push_back(a);
  });
  return SimplicialComplex::from_faces(b, std::move(faces));
}

namespace detail {

/*
 * Reduced homology of a complex given as a list of faces in compressed
 * coordinates (bit i = i-th ground element), m = ground size. Returns ranks
 * of H̃_k for k = -1..top, or {0} for the void complex. Boundary ranks are
 * computed from the top dimension down, skipping columns that are already
 * pivot rows one dimension up (their reduced columns vanish).
 */
inline std::vector<std::size_t> reduced_homology_of_faces(const std::vector<std::uint32_t>& faces, std::size_t m,
                                                          const FieldSpec& field) {
  if (faces.empty()) return {0};
  std::vector<std::vector<std::uint32_t>> by_size(m + 1);
  for (auto f : faces) by_size[static_cast<std::size_t>(std::popcount(f))].push_back(f);
  std::size_t top = 0;
  for (std::size_t s = 0; s <= m; ++s)
    if (!by_size[s].empty()) top = s;
  for (auto& level : by_size) std::sort(level.begin(), level.end());

  auto index_of = [&](std::size_t size, std::uint32_t face) {
    const auto& level = by_size[size];
    return static_cast<std::uint32_t>(std::lower_bound(level.begin(), level.end(), face) - level.begin());
  };

  // rank_of[s] = rank of the boundary map from faces with s vertices to faces with s-1 vertices.
  std::vector<std::size_t> rank_of(top + 2, 0);
  std::vector<bool> cleared;
  std::vector<bool> next_cleared;
  for (std::size_t s = top; s >= 1; --s) {
    std::vector<SparseColumn> columns;
    const auto& level = by_size[s];
    columns.reserve(level.size());
    for (std::size_t c = 0; c < level.size(); ++c) {
      if (!cleared.empty() && cleared[c]) continue;
      const auto face = level[c];
      SparseColumn col;
      int sign = 1;
      for (auto bits = face; bits != 0; bits &= bits - 1) {
        const auto low = bits & (~bits + 1);
        col.rows.push_back(index_of(s - 1, face ^ low));
        col.coeffs.push_back(sign);
        sign = -sign;
      }
      // Rows of a boundary column come out in decreasing order of the removed
      // vertex, i.e. increasing face value only after sorting.
      std::vector<std::size_t> perm(col.rows.size());
      for (std::size_t k = 0; k < perm.size(); ++k) perm[k] = k;
      std::sort(perm.begin(), perm.end(), [&](std::size_t x, std::size_t y) { return col.rows[x] < col.rows[y]; });
      SparseColumn sorted;
      for (auto k : perm) {
        sorted.rows.push_back(col.rows[k]);
        sorted.coeffs.push_back(col.coeffs[k]);
      }
      columns.push_back(std::move(sorted));
    }
    const auto reduction = reduce_columns(columns, by_size[s - 1].size(), field);
    rank_of[s] = reduction.rank;
    next_cleared.assign(by_size[s - 1].size(), false);
    for (auto r : reduction.pivot_rows) next_cleared[r] = true;
    cleared.swap(next_cleared);
  }

  std::vector<std::size_t> ranks;
  for (std::size_t s = 0; s <= top; ++s) {
    const auto chains = by_size[s].size();
    ranks.push_back(chains - rank_of[s] - rank_of[s + 1]);
  }
  return ranks;
}

inline std::vector<std::uint32_t> compress_faces(const std::vector<IndexSet>& faces, IndexSet ground) {
  const auto members = ground.members();
  std::vector<std::uint32_t> out;
  out.reserve(faces.size());
  for (auto f : faces) {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < members.size(); ++i)
      if (f.contains(members[i])) c |= std::uint32_t{1} << i;
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

/**
 * Ranks of reduced homology over `field`: element k+1 is dim H̃_k, for
 * k = -1 .. dim K. The void complex gives {0}; the irrelevant complex {1}.
 */
inline std::vector<std::size_t> reduced_homology_ranks(const SimplicialComplex& complex, const FieldSpec& field) {
  if (complex.is_void()) return {0};
  if (complex.ground().size() > 31) throw InputError("ground set too large for homology");
  return detail::reduced_homology_of_faces(detail::compress_faces(complex.faces(), complex.ground()),
                                           complex.ground().size(), field);
}

// ---------------------------------------------------------------------------
// Betti tables

/**
 * Betti numbers β_{i,b}. `multigraded` may be empty when only the total-degree
 * view β_{i,j} = Σ_{|b|=j} β_{i,b} is known.
 */
struct BettiTable {
  std::size_t ambient = 0;
  std::map<std::pair<std::size_t, IndexSet>, std::size_t> multigraded;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> total;

  void add(std::size_t i, IndexSet b, std::size_t rank) {
    if (rank == 0) return;
    multigraded[{i, b}] += rank;
    total[{i, b.size()}] += rank;
  }

  std::size_t at(std::size_t i, std::size_t j) const {
    const auto it = total.find({i, j});
    return it == total.end() ? 0 : it->second;
  }

  std::size_t at(std::size_t i, IndexSet b) const {
    const auto it = multigraded.find({i, b});
    return it == multigraded.end() ? 0 : it->second;
  }

  /// β_i = Σ_j β_{i,j}.
  std::size_t rank(std::size_t i) const {
    std::size_t sum = 0;
    for (const auto& [key, value] : total)
      if (key.first == i) sum += value;
    return sum;
  }
};

/**
 * Staircase layout: columns are homological degrees i, rows are j - i,
 * zero entries print as '.', and a "total:" row leads.
 *
 *            0 1 2
 *     total: 6 6 1
 *         4: 6 5 .
 *         5: . 1 1
 */
inline std::string format_betti_table(const BettiTable& table) {
  if (table.total.empty()) return "       (zero)\n";
  std::size_t max_i = 0, min_row = SIZE_MAX, max_row = 0;
  for (const auto& [key, value] : table.total) {
    max_i = std::max(max_i, key.first);
    const auto row = key.second - key.first;
    min_row = std::min(min_row, row);
    max_row = std::max(max_row, row);
  }
  std::vector<std::vector<std::string>> cells;
  std::vector<std::string> header{""}, totals{"total:"};
  for (std::size_t i = 0; i <= max_i; ++i) {
    header.push_back(std::to_string(i));
    totals.push_back(std::to_string(table.rank(i)));
  }
  cells.push_back(header);
  cells.push_back(totals);
  for (auto row = min_row; row <= max_row; ++row) {
    std::vector<std::string> line{std::to_string(row) + ":"};
    for (std::size_t i = 0; i <= max_i; ++i) {
      const auto v = table.at(i, row + i);
      line.push_back(v == 0 ? "." : std::to_string(v));
    }
    cells.push_back(line);
  }
  std::vector<std::size_t> width(max_i + 2, 0);
  for (const auto& line : cells)
    for (std::size_t c = 0; c < line.size(); ++c) width[c] = std::max(width[c], line[c].size());
  std::ostringstream out;
  for (const auto& line : cells) {
    for (std::size_t c = 0; c < line.size(); ++c) {
      if (c > 0) out << ' ';
      out << std::string(width[c] - line[c].size(), ' ') << line[c];
    }
    out << '\n';
  }
  return out.str();
}

namespace detail {

/*
 * Evaluates upper Koszul homology for one ideal at many multidegrees. Works in
 * coordinates compressed to the support of the ideal, with a membership table
 * over all subsets of that support.
 */
class KoszulScanner {
 public:
  KoszulScanner(const MonomialIdeal& ideal, FieldSpec field) : ideal_(ideal), field_(field) {
    support_ = ideal.support();
    members_ = support_.members();
    if (members_.size() > kMaxKoszulSupport)
      throw InputError("ideal support too large for upper Koszul enumeration");
    const auto m = members_.size();
    member_.assign(std::size_t{1} << m, 0);
    for (auto g : ideal.generators()) member_[compress(g)] = 1;
    for (std::size_t bit = 0; bit < m; ++bit)
      for (std::uint32_t s = 0; s < member_.size(); ++s)
        if ((s >> bit) & 1U) member_[s] |= member_[s ^ (1U << bit)];
  }

  std::uint32_t compress(IndexSet s) const {
    std::uint32_t c = 0;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if (s.contains(members_[i])) c |= 1U << i;
    return c;
  }

  IndexSet expand(std::uint32_t c) const {
    IndexSet s;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if ((c >> i) & 1U) s.insert(members_[i]);
    return s;
  }

  /// Unions of generator supports, by size then lexicographic.
  std::vector<IndexSet> lcm_lattice() const {
    std::unordered_set<std::uint32_t> seen;
    std::vector<std::uint32_t> frontier;
    std::vector<std::uint32_t> gens;
    for (auto g : ideal_.generators()) gens.push_back(compress(g));
    for (auto g : gens)
      if (seen.insert(g).second) frontier.push_back(g);
    while (!frontier.empty()) {
      const auto b = frontier.back();
      frontier.pop_back();
      for (auto g : gens) {
        const auto u = b | g;
        if (seen.insert(u).second) frontier.push_back(u);
      }
    }
    std::vector<IndexSet> out;
    for (auto c : seen) out.push_back(expand(c));
    std::sort(out.begin(), out.end(), DegreeLexLess{});
    return out;
  }

  /// Ranks of H̃_k(K^b), k = -1.. . Multidegrees leaving the support give a cone, hence zeros.
  std::vector<std::size_t> homology_at(IndexSet b) const {
    if (!b.is_subset_of(support_)) return {0};
    const auto cb = compress(b);
    std::vector<std::uint32_t> faces;
    // a ⊆ b is a face iff b \ a ∈ M; iterate complements directly.
    std::uint32_t a = 0;
    while (true) {
      if (member_[cb ^ a]) faces.push_back(a);
      if (a == cb) break;
      a = (a - cb) & cb;
    }
    // Faces live inside b; recompress to b's own coordinates.
    std::vector<std::uint32_t> local;
    local.reserve(faces.size());
    std::vector<std::uint32_t> positions;
    for (std::size_t i = 0; i < members_.size(); ++i)
      if ((cb >> i) & 1U) positions.push_back(static_cast<std::uint32_t>(i));
    for (auto f : faces) {
      std::uint32_t c = 0;
      for (std::size_t k = 0; k < positions.size(); ++k)
        if ((f >> positions[k]) & 1U) c |= 1U << k;
      local.push_back(c);
    }
    return reduced_homology_of_faces(local, positions.size(), field_);
  }

 private:
  const MonomialIdeal& ideal_;
  FieldSpec field_;
  IndexSet support_;
  std::vector<std::size_t> members_;
  std::vector<std::uint8_t> member_;
};

}  // namespace detail

/**
 * Multigraded Betti numbers β_{i,b}(M) = dim H̃_{i-1}(K^b(M)) over `field`.
 * Only multidegrees in the lcm lattice of the generators are scanned; all
 * others have a cone for K^b and contribute nothing.
 */
inline BettiTable betti_numbers(const MonomialIdeal& ideal, const FieldSpec& field) {
  BettiTable table;
  table.ambient = ideal.ambient();
  if (ideal.is_zero()) return table;
  const detail::KoszulScanner scanner(ideal, field);
  for (auto b : scanner.lcm_lattice()) {
    const auto ranks = scanner.homology_at(b);
    for (std::size_t k = 0; k < ranks.size(); ++k) table.add(k, b, ranks[k]);
  }
  return table;
}

/// β_{i,b} at one multidegree, without the lattice restriction.
inline std::size_t betti_number_at(const MonomialIdeal& ideal, std::size_t i, IndexSet b, const FieldSpec& field) {
  const auto ranks = reduced_homology_ranks(upper_koszul_complex(ideal, b), field);
  return i < ranks.size() ? ranks[i] : 0;
}

inline std::size_t binomial(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

/// Total-degree Betti numbers implied by a linear-quotients order: β_{i,d+i} = Σ_j C(r_j, i).
inline BettiTable betti_from_quotient_order(const QuotientOrder& order) {
  if (!verify_order(order)) throw InputError("linear-quotients certificate does not verify");
  if (!order.ideal.is_equigenerated()) throw InputError("certificate ideal is not equigenerated");
  BettiTable table;
  table.ambient = order.ideal.ambient();
  if (order.ideal.is_zero()) return table;
  const auto d = order.ideal.min_degree();
  for (auto r : order.colon_sizes())
    for (std::size_t i = 0; i <= r; ++i) table.total[{i, d + i}] += binomial(r, i);
  return table;
}

/// A nonzero β_{i,b} off the linear strand.
struct SyzygyLocation {
  std::size_t i = 0;
  IndexSet b;
  std::size_t rank = 0;
};

/**
 * First nonzero β_{i,b} with |b| ≠ d + i for an ideal generated in degree d,
 * scanning multidegrees by size then lexicographically.
 */
inline std::optional<SyzygyLocation> find_nonlinear_syzygy(const MonomialIdeal& ideal, const FieldSpec& field) {
  if (!ideal.is_equigenerated()) throw InputError("linear resolution test needs an equigenerated ideal");
  if (ideal.is_zero()) return std::nullopt;
  const auto d = ideal.min_degree();
  const detail::KoszulScanner scanner(ideal, field);
  for (auto b : scanner.lcm_lattice()) {
    if (b.size() == d) continue;  // K^b is {∅}: only β_{0,b}
    const auto ranks = scanner.homology_at(b);
    for (std::size_t k = 0; k < ranks.size(); ++k)
      if (ranks[k] != 0 && b.size() != d + k) return SyzygyLocation{k, b, ranks[k]};
  }
  return std::nullopt;
}

inline bool has_linear_resolution(const MonomialIdeal& ideal, const FieldSpec& field) {
  return !find_nonlinear_syzygy(ideal, field).has_value();
}

struct ComponentLinearity {
  std::size_t degree = 0;
  bool linear = true;
  std::optional<SyzygyLocation> witness;
};

struct CWLReport {
  std::vector<ComponentLinearity> degrees;
  bool holds = true;
  std::optional<std::size_t> first_failure;  // index into `degrees`
};

/**
 * Componentwise linearity through the square-free components (I_[d]) for d
 * from the least generator degree up to the ambient variable count.
 */
inline CWLReport is_componentwise_linear(const MonomialIdeal& ideal, const FieldSpec& field,
                                         bool stop_at_first_failure = false) {
  CWLReport report;
  if (ideal.is_zero()) return report;
  for (auto d = ideal.min_degree(); d <= ideal.ambient(); ++d) {
    const auto component = squarefree_degree_component(ideal, d);
    ComponentLinearity entry{d, true, find_nonlinear_syzygy(component, field)};
    entry.linear = !entry.witness.has_value();
    report.degrees.push_back(entry);
    if (!entry.linear && report.holds) {
      report.holds = false;
      report.first_failure = report.degrees.size() - 1;
      if (stop_at_first_failure) break;
    }
  }
  return report;
}

}  // namespace wscm
