// Outerplanar covers of K_{m,n} for 3 <= m <= n <= 2m-2.
//
// Parts are interval chains: black i sees the whites [S_i, S_i + d_i) mod n
// with S_{i+1} = S_i + d_i - 2, so consecutive blacks share two whites.
// Such a chain with total degree 2m+n-2 is a ladder with leaves.
//   n >= m+2     rotate the degree sequence and the start, one part per shift
//   n in {m,m+1} restrict the cover of K_{m,m+2} when that keeps the count
//   otherwise    search affine images of a few chains / ladders, with the
//                remainder as the last part

#include <algorithm>
#include <numeric>

#include "unc/constructions.hpp"
#include "unc/formulas.hpp"

namespace unc {
namespace {

using Cells = std::vector<std::pair<int, int>>;  // (black, white index)

std::int64_t target_parts(int m, int n) { return ceil_div(static_cast<std::int64_t>(m) * n, 2LL * m + n - 2); }

Cells chain(int m, int n, const std::vector<int>& degrees, long long start) {
  Cells cells;
  long long s = start;
  for (int i = 0; i < m; ++i) {
    for (long long j = s; j < s + degrees[static_cast<std::size_t>(i)]; ++j)
      cells.emplace_back(i, static_cast<int>(j % n));
    s += degrees[static_cast<std::size_t>(i)] - 2;
  }
  return cells;
}

std::vector<int> chain_degrees(int m, int n) {
  const long long a = 2LL * m + n - 2;
  std::vector<int> d;
  for (long long i = 1; i <= m; ++i) d.push_back(static_cast<int>(i * a / m - (i - 1) * a / m));
  return d;
}

EdgeSet to_set(int m, int n, const Cells& cells) {
  EdgeSet s(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
  for (auto [b, w] : cells) s.set(static_cast<std::size_t>(b) * static_cast<std::size_t>(n) + static_cast<std::size_t>(w));
  return s;
}

bool valid_cover(const Graph& host, const std::vector<EdgeSet>& parts) {
  EdgeSet all(host.edge_count());
  for (const auto& p : parts) {
    if (!is_outerplanar(edge_subgraph(host, p))) return false;
    all |= p;
  }
  return all == EdgeSet::full(host.edge_count());
}

std::vector<EdgeSet> rotated_chains(int m, int n) {
  const auto d = chain_degrees(m, n);
  std::vector<EdgeSet> parts;
  for (std::int64_t c = 0; c < target_parts(m, n); ++c) {
    std::vector<int> dc(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) dc[static_cast<std::size_t>(i)] = d[static_cast<std::size_t>((i + c) % m)];
    const long long start = std::accumulate(d.begin(), d.begin() + c, 0LL);
    parts.push_back(to_set(m, n, chain(m, n, dc, start)));
  }
  return parts;
}

std::vector<EdgeSet> restricted(int m, int n) {
  const int wide = m + 2;
  std::vector<EdgeSet> parts;
  for (const auto& p : rotated_chains(m, wide)) {
    EdgeSet q(static_cast<std::size_t>(m) * static_cast<std::size_t>(n));
    for (auto i : p.indices()) {
      const auto b = i / static_cast<std::size_t>(wide);
      const auto w = i % static_cast<std::size_t>(wide);
      if (w < static_cast<std::size_t>(n)) q.set(b * static_cast<std::size_t>(n) + w);
    }
    parts.push_back(std::move(q));
  }
  return parts;
}

// 2m-gon alternating black i / white i, with chords (i, 2m-1-i): a ladder
// drawn as nested rungs.
Cells ladder_polygon(int m) {
  auto cell = [](int a, int b) {
    if (a % 2 != 0) std::swap(a, b);
    return std::pair{a / 2, b / 2};
  };
  Cells cells;
  for (int v = 0; v < 2 * m; ++v) cells.push_back(cell(v, (v + 1) % (2 * m)));
  for (int i = 1; i <= m - 2; ++i) cells.push_back(cell(i, 2 * m - 1 - i));
  return cells;
}

class AffineSearch {
 public:
  AffineSearch(const Graph& host, int m, int n, std::int64_t budget)
      : host_(host), m_(m), n_(n), cap_(2 * m + n - 2), budget_(budget) {}

  std::optional<std::vector<EdgeSet>> run(const std::vector<Cells>& shapes, std::int64_t parts) {
    build_pool(shapes);
    std::vector<EdgeSet> chosen;
    if (!descend(EdgeSet(host_.edge_count()), parts, chosen)) return std::nullopt;
    return chosen;
  }

 private:
  void build_pool(const std::vector<Cells>& shapes) {
    std::vector<int> units_m;
    std::vector<int> units_n;
    for (int a = 1; a < std::max(m_, 2); ++a)
      if (std::gcd(a, m_) == 1) units_m.push_back(a);
    for (int a = 1; a < std::max(n_, 2); ++a)
      if (std::gcd(a, n_) == 1) units_n.push_back(a);

    std::vector<std::vector<std::size_t>> images;
    for (const auto& shape : shapes)
      for (int a : units_m)
        for (int c : units_n)
          for (int s = 0; s < m_; ++s)
            for (int t = 0; t < n_; ++t) {
              std::vector<std::size_t> idx;
              for (auto [b, w] : shape)
                idx.push_back(static_cast<std::size_t>((a * b + s) % m_) * static_cast<std::size_t>(n_) +
                              static_cast<std::size_t>((c * w + t) % n_));
              std::sort(idx.begin(), idx.end());
              idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
              images.push_back(std::move(idx));
            }
    std::sort(images.begin(), images.end());
    images.erase(std::unique(images.begin(), images.end()), images.end());

    by_cell_.assign(host_.edge_count(), {});
    for (const auto& idx : images) {
      auto part = EdgeSet::of(host_.edge_count(), idx);
      if (!is_outerplanar(edge_subgraph(host_, part))) continue;
      pool_.push_back(std::move(part));
      for (auto i : idx) by_cell_[i].push_back(pool_.size() - 1);
    }
  }

  bool descend(const EdgeSet& covered, std::int64_t parts, std::vector<EdgeSet>& chosen) {
    if (++nodes_ > budget_) throw DecompositionNotFound("outerplanar cover search exceeded its node budget");
    const auto missing = static_cast<std::int64_t>(host_.edge_count() - covered.count());
    if (missing > parts * cap_) return false;
    if (parts == 1) {
      EdgeSet rest = ~covered;
      if (!is_outerplanar(edge_subgraph(host_, rest))) return false;
      chosen.push_back(std::move(rest));
      return true;
    }
    std::size_t cell = 0;
    while (covered.test(cell)) ++cell;
    for (auto p : by_cell_[cell]) {
      chosen.push_back(pool_[p]);
      if (descend(covered | pool_[p], parts - 1, chosen)) return true;
      chosen.pop_back();
    }
    return false;
  }

  const Graph& host_;
  int m_;
  int n_;
  std::int64_t cap_;
  std::int64_t budget_;
  std::int64_t nodes_ = 0;
  std::vector<EdgeSet> pool_;
  std::vector<std::vector<std::size_t>> by_cell_;
};

}  // namespace

std::vector<EdgeSet> bipartite_outerplanar_cover(int m, int n) {
  if (m < 3 || n < m || n > 2 * m - 2)
    throw std::invalid_argument("bipartite_outerplanar_cover: need 3 <= m <= n <= 2m-2");
  const Graph host = complete_bipartite(m, n);
  const auto parts = target_parts(m, n);

  if (n >= m + 2) {
    auto cover = rotated_chains(m, n);
    if (valid_cover(host, cover)) return cover;
  }
  if (m >= 4 && n <= m + 1 && target_parts(m, m + 2) == parts) {
    auto cover = restricted(m, n);
    if (valid_cover(host, cover)) return cover;
  }

  std::vector<Cells> shapes{chain(m, n, chain_degrees(m, n), 0)};
  if (n == m) {
    shapes.push_back(ladder_polygon(m));
    std::vector<int> ladder(static_cast<std::size_t>(m), 3);
    ladder.front() = ladder.back() = 2;
    shapes.push_back(chain(m, n, ladder, 0));
  }
  AffineSearch search(host, m, n, 2'000'000);
  if (auto cover = search.run(shapes, parts); cover && valid_cover(host, *cover)) return *cover;
  throw DecompositionNotFound("no outerplanar cover of K_" + std::to_string(m) + "," + std::to_string(n) + " with " +
                              std::to_string(parts) + " parts found");
}

}  // namespace unc
