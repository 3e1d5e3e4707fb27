#include "gspin/oracles/oracles.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>
#include <stdexcept>

namespace gspin::oracles {

namespace {

long ipow(long b, int e) {
  long r = 1;
  for (int i = 0; i < e; ++i) r *= b;
  return r;
}

long mod(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

}  // namespace

int hilbert_symbol_search(long a, long b, long p) {
  if (a == 0 || b == 0) throw std::invalid_argument("nonzero arguments required");
  int k = p == 2 ? 6 : 3;
  long pk = ipow(p, k);
  long am = mod(a, pk);
  long bm = mod(b, pk);
  // Primitive solutions with a unit coordinate lift once k exceeds the
  // valuations of a, b plus the Hensel margin. z ranges over all residues
  // when x or y is a unit, and over units otherwise.
  std::vector<char> any_square(static_cast<std::size_t>(pk), 0), unit_square(static_cast<std::size_t>(pk), 0);
  for (long z = 0; z < pk; ++z) {
    auto r = static_cast<std::size_t>(z * z % pk);
    any_square[r] = 1;
    if (z % p != 0) unit_square[r] = 1;
  }
  for (long x = 0; x < pk; ++x) {
    long ax2 = am * (x * x % pk) % pk;
    for (long y = 0; y < pk; ++y) {
      auto s = static_cast<std::size_t>((ax2 + bm * (y * y % pk)) % pk);
      bool unit_xy = x % p != 0 || y % p != 0;
      if (unit_xy ? any_square[s] : unit_square[s]) return 1;
    }
  }
  return -1;
}

std::size_t witt_index_fp_search(const std::vector<long>& diag, long p) {
  std::size_t n = diag.size();
  long total = ipow(p, static_cast<int>(n));
  auto vec = [&](long code) {
    std::vector<long> v(n);
    for (std::size_t i = 0; i < n; ++i) {
      v[i] = code % p;
      code /= p;
    }
    return v;
  };
  auto bil = [&](const std::vector<long>& x, const std::vector<long>& y) {
    long s = 0;
    for (std::size_t i = 0; i < n; ++i) s = mod(s + mod(diag[i], p) * x[i] % p * y[i], p);
    return s;
  };
  std::vector<std::vector<long>> iso;
  for (long c = 1; c < total; ++c) {
    auto v = vec(c);
    if (bil(v, v) == 0) iso.push_back(v);
  }
  if (iso.empty()) return 0;
  // A second independent orthogonal isotropic vector gives index >= 2.
  for (std::size_t i = 0; i < iso.size(); ++i)
    for (std::size_t j = i + 1; j < iso.size(); ++j) {
      if (bil(iso[i], iso[j]) != 0) continue;
      bool dependent = false;
      for (long t = 1; t < p && !dependent; ++t) {
        bool same = true;
        for (std::size_t r = 0; r < n; ++r) same = same && mod(t * iso[i][r], p) == iso[j][r];
        dependent = same;
      }
      if (!dependent) return 2;
    }
  return 1;
}

bool ternary_has_solution(long a, long b, long bound) {
  for (long x = 0; x <= bound; ++x)
    for (long y = -bound; y <= bound; ++y) {
      if (x == 0 && y == 0) continue;
      long s = a * x * x + b * y * y;
      if (s < 0) continue;
      long z = static_cast<long>(std::llround(std::sqrt(static_cast<double>(s))));
      for (long c = std::max(0L, z - 1); c <= z + 1; ++c)
        if (c * c == s) return true;
    }
  return false;
}

std::complex<double> spherical_coset_sum(std::complex<double> alpha, std::complex<double> beta, long p, int k) {
  if (k == 0) return {1.0, 0.0};
  long pk = ipow(p, k);
  // Bottom row (c : d) of k0 decides the Iwasawa torus part of k0 diag(p^k, 1).
  std::vector<std::pair<long, long>> points;
  for (long c = 0; c < pk; ++c) points.emplace_back(c, 1);
  for (long d = 0; d < pk; d += p) points.emplace_back(1, d);
  std::complex<double> sum(0.0, 0.0);
  const double q = static_cast<double>(p);
  for (const auto& [c, d] : points) {
    int vd = 0;
    if (d % p == 0) {
      vd = k;
      long t = d;
      if (t != 0) {
        vd = 0;
        while (t % p == 0 && vd < k) {
          t /= p;
          ++vd;
        }
      }
    }
    int v2 = std::min(k, vd);
    int v1 = k - v2;
    sum += std::pow(alpha, v1) * std::pow(beta, v2) * std::pow(q, -0.5 * (v1 - v2));
  }
  return sum / static_cast<double>(points.size());
}

std::uint64_t cartan_coset_count(long p, int k) {
  std::uint64_t count = 0;
  for (int a = 0; a <= k; ++a) {
    int c = k - a;
    long pa = ipow(p, a);
    for (long b = 0; b < pa; ++b) {
      bool unit_entry = a == 0 || c == 0 || b % p != 0;
      if (unit_entry) ++count;
    }
  }
  return count;
}

std::uint64_t sign_quotient_count(std::size_t k) {
  std::size_t n = std::size_t{1} << k;
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t s = 0; s < n; ++s) {
    std::size_t neg = s ^ (n - 1);
    parent[find(s)] = find(neg);
  }
  std::set<std::size_t> roots;
  for (std::size_t s = 0; s < n; ++s) roots.insert(find(s));
  return roots.size();
}

WordProduct reduce_word(std::vector<int> word) {
  WordProduct out;
  // Bubble sort with anticommutation signs, then contract equal neighbours.
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i + 1 < word.size(); ++i) {
      if (word[i] > word[i + 1]) {
        std::swap(word[i], word[i + 1]);
        out.sign = -out.sign;
        changed = true;
      } else if (word[i] == word[i + 1]) {
        out.contracted.push_back(word[i]);
        word.erase(word.begin() + static_cast<std::ptrdiff_t>(i), word.begin() + static_cast<std::ptrdiff_t>(i) + 2);
        changed = true;
        break;
      }
    }
  }
  out.word = word;
  return out;
}

}  // namespace gspin::oracles
