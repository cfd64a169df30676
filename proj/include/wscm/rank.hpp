#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "wscm/field.hpp"

namespace wscm {

/// Column of a boundary matrix: strictly increasing row indices with integer coefficients.
struct SparseColumn {
  std::vector<std::uint32_t> rows;
  std::vector<int> coeffs;
};

/// Outcome of column reduction: the rank and, for each nonzero reduced column, its pivot row.
struct ReductionResult {
  std::size_t rank = 0;
  std::vector<std::uint32_t> pivot_rows;
};

namespace detail {

inline void reduce_mod2(const std::vector<SparseColumn>& columns, std::size_t row_count, ReductionResult& out) {
  std::vector<std::vector<std::uint32_t>> reduced;
  std::vector<std::int64_t> owner(row_count, -1);
  std::vector<std::uint32_t> scratch;
  for (const auto& c : columns) {
    std::vector<std::uint32_t> col;
    for (std::size_t k = 0; k < c.rows.size(); ++k)
      if (c.coeffs[k] % 2 != 0) col.push_back(c.rows[k]);
    while (!col.empty() && owner[col.back()] >= 0) {
      const auto& p = reduced[static_cast<std::size_t>(owner[col.back()])];
      scratch.clear();
      std::set_symmetric_difference(col.begin(), col.end(), p.begin(), p.end(), std::back_inserter(scratch));
      col.swap(scratch);
    }
    if (col.empty()) continue;
    owner[col.back()] = static_cast<std::int64_t>(reduced.size());
    out.pivot_rows.push_back(col.back());
    reduced.push_back(std::move(col));
  }
  out.rank = reduced.size();
}

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t p) {
  std::uint64_t result = 1, base = a % p, e = p - 2;
  while (e) {
    if (e & 1U) result = result * base % p;
    base = base * base % p;
    e >>= 1U;
  }
  return result;
}

inline void reduce_mod_p(const std::vector<SparseColumn>& columns, std::size_t row_count, std::uint32_t p,
                         ReductionResult& out) {
  using Entry = std::pair<std::uint32_t, std::uint64_t>;
  std::vector<std::vector<Entry>> reduced;  // each normalized to leading coefficient 1
  std::vector<std::int64_t> owner(row_count, -1);
  std::vector<Entry> scratch;
  for (const auto& c : columns) {
    std::vector<Entry> col;
    for (std::size_t k = 0; k < c.rows.size(); ++k) {
      const auto v = ((c.coeffs[k] % static_cast<std::int64_t>(p)) + p) % p;
      if (v != 0) col.emplace_back(c.rows[k], static_cast<std::uint64_t>(v));
    }
    while (!col.empty() && owner[col.back().first] >= 0) {
      const auto& piv = reduced[static_cast<std::size_t>(owner[col.back().first])];
      const auto factor = col.back().second;  // pivot lead is 1
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          scratch.push_back(col[i++]);
        } else if (i == col.size() || piv[j].first < col[i].first) {
          scratch.emplace_back(piv[j].first, (p - factor * piv[j].second % p) % p);
          ++j;
        } else {
          const auto v = (col[i].second + p - factor * piv[j].second % p) % p;
          if (v != 0) scratch.emplace_back(col[i].first, v);
          ++i;
          ++j;
        }
      }
      col.swap(scratch);
    }
    if (col.empty()) continue;
    const auto inv = inverse_mod(col.back().second, p);
    for (auto& e : col) e.second = e.second * inv % p;
    owner[col.back().first] = static_cast<std::int64_t>(reduced.size());
    out.pivot_rows.push_back(col.back().first);
    reduced.push_back(std::move(col));
  }
  out.rank = reduced.size();
}

// Fraction-free elimination over Z: col <- lead(piv)*col - lead(col)*piv, then
// divide out the content. The rank over Z equals the rank over Q.
inline void reduce_integer(const std::vector<SparseColumn>& columns, std::size_t row_count, ReductionResult& out) {
  using Int = boost::multiprecision::cpp_int;
  using Entry = std::pair<std::uint32_t, Int>;
  std::vector<std::vector<Entry>> reduced;
  std::vector<std::int64_t> owner(row_count, -1);
  std::vector<Entry> scratch;
  for (const auto& c : columns) {
    std::vector<Entry> col;
    for (std::size_t k = 0; k < c.rows.size(); ++k)
      if (c.coeffs[k] != 0) col.emplace_back(c.rows[k], Int(c.coeffs[k]));
    while (!col.empty() && owner[col.back().first] >= 0) {
      const auto& piv = reduced[static_cast<std::size_t>(owner[col.back().first])];
      const Int a = piv.back().second;
      const Int b = col.back().second;
      scratch.clear();
      std::size_t i = 0, j = 0;
      while (i < col.size() || j < piv.size()) {
        if (j == piv.size() || (i < col.size() && col[i].first < piv[j].first)) {
          scratch.emplace_back(col[i].first, a * col[i].second);
          ++i;
        } else if (i == col.size() || piv[j].first < col[i].first) {
          scratch.emplace_back(piv[j].first, -b * piv[j].second);
          ++j;
        } else {
          Int v = a * col[i].second - b * piv[j].second;
          if (v != 0) scratch.emplace_back(col[i].first, std::move(v));
          ++i;
          ++j;
        }
      }
      Int content = 0;
      for (const auto& e : scratch) content = boost::multiprecision::gcd(content, e.second);
      if (content > 1)
        for (auto& e : scratch) e.second /= content;
      col.swap(scratch);
    }
    if (col.empty()) continue;
    owner[col.back().first] = static_cast<std::int64_t>(reduced.size());
    out.pivot_rows.push_back(col.back().first);
    reduced.push_back(std::move(col));
  }
  out.rank = reduced.size();
}

}  // namespace detail

/// Rank over `field` of the matrix with the given columns and `row_count` rows.
inline ReductionResult reduce_columns(const std::vector<SparseColumn>& columns, std::size_t row_count,
                                      const FieldSpec& field) {
  ReductionResult out;
  if (field.is_rationals()) {
    detail::reduce_integer(columns, row_count, out);
  } else if (field.characteristic() == 2) {
    detail::reduce_mod2(columns, row_count, out);
  } else {
    detail::reduce_mod_p(columns, row_count, field.characteristic(), out);
  }
  return out;
}

inline std::size_t matrix_rank(const std::vector<SparseColumn>& columns, std::size_t row_count,
                               const FieldSpec& field) {
  return reduce_columns(columns, row_count, field).rank;
}

}  // namespace wscm
