#pragma once

// Brute-force reference computations for the test suite. Nothing here calls
// into the Groebner engine or the library's linear algebra.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "ncalg/presentation.hpp"

namespace oracle {

inline std::uint32_t inverse_by_scan(std::uint32_t p, std::uint32_t a) {
  for (std::uint32_t k = 1; k < p; ++k)
    if (static_cast<std::uint64_t>(k) * a % p == 1) return k;
  return 0;
}

inline std::vector<std::uint32_t> nontrivial_cube_roots(std::uint32_t p) {
  std::vector<std::uint32_t> out;
  for (std::uint64_t r = 2; r < p; ++r)
    if (r * r % p * r % p == 1) out.push_back(static_cast<std::uint32_t>(r));
  return out;
}

/// Power series num/den through t^n; den[0] must be 1.
inline std::vector<long long> series_divide(const std::vector<long long>& num,
                                            const std::vector<long long>& den,
                                            std::size_t n) {
  std::vector<long long> out(n + 1, 0);
  for (std::size_t i = 0; i <= n; ++i) {
    long long c = i < num.size() ? num[i] : 0;
    for (std::size_t j = 1; j <= i && j < den.size(); ++j) c -= den[j] * out[i - j];
    out[i] = c;
  }
  return out;
}

inline std::vector<long long> poly_mul(const std::vector<long long>& a,
                                       const std::vector<long long>& b) {
  std::vector<long long> out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

inline std::size_t binomial_phs(std::size_t n) { return (n + 1) * (n + 2) / 2; }

using Row = std::map<std::string, ncalg::Scalar>;

/// Rank of a set of sparse vectors by plain Gaussian elimination.
inline std::size_t rank(std::vector<Row> rows) {
  std::vector<Row> basis;  // each with a distinct pivot = its first key
  for (auto& row : rows) {
    for (const auto& b : basis) {
      const auto& pivot = b.begin()->first;
      auto it = row.find(pivot);
      if (it == row.end()) continue;
      const ncalg::Scalar factor = it->second / b.begin()->second;
      for (const auto& [key, value] : b) {
        auto slot = row.find(key);
        if (slot == row.end()) {
          row.emplace(key, -(factor * value));
        } else {
          slot->second -= factor * value;
          if (slot->second.is_zero()) row.erase(slot);
        }
      }
    }
    if (row.empty()) continue;
    basis.push_back(std::move(row));
    std::sort(basis.begin(), basis.end(),
              [](const Row& a, const Row& b) { return a.begin()->first < b.begin()->first; });
  }
  return basis.size();
}

inline std::string concat(const ncalg::Word& a, const ncalg::Word& b, const ncalg::Word& c) {
  return std::string(a.key()) + std::string(b.key()) + std::string(c.key());
}

inline void all_words(std::size_t n, std::size_t d, std::vector<ncalg::Word>& out) {
  out.assign(1, ncalg::Word{});
  for (std::size_t i = 0; i < d; ++i) {
    std::vector<ncalg::Word> next;
    for (const auto& w : out)
      for (std::size_t g = 0; g < n; ++g) {
        ncalg::Word v = w;
        v.push_back(static_cast<ncalg::Letter>(g));
        next.push_back(v);
      }
    out = std::move(next);
  }
}

/// n^d - dim I_d for the two-sided ideal of homogeneous relations.
inline std::size_t graded_dim(const ncalg::Presentation& p, std::size_t d) {
  const std::size_t n = p.ngens();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= n;
  std::vector<Row> rows;
  for (const auto& r : p.relations) {
    const std::size_t e = r.degree();
    if (e > d) continue;
    for (std::size_t left = 0; left + e <= d; ++left) {
      std::vector<ncalg::Word> lefts, rights;
      all_words(n, left, lefts);
      all_words(n, d - e - left, rights);
      for (const auto& u : lefts)
        for (const auto& v : rights) {
          Row row;
          for (const auto& t : r.terms()) row.emplace(concat(u, t.word, v), t.coeff);
          rows.push_back(std::move(row));
        }
    }
  }
  return total - rank(std::move(rows));
}

}  // namespace oracle
