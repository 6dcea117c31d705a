#include "extremal/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <optional>

#include "extremal/graph6.hpp"

namespace extremal {

namespace {

struct Cell {
  int start;
  int size;
};

// Ordered partition of the vertex set. Cells occupy contiguous ranges of
// `order`; splitting a cell keeps its pieces inside the original range, so
// singleton positions never move once fixed.
struct Partition {
  std::vector<Vertex> order;
  std::vector<Cell> cells;

  bool discrete() const { return cells.size() == order.size(); }
};

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(static_cast<std::size_t>(n)) {
    std::iota(parent_.begin(), parent_.end(), 0);
  }
  int find(int x) {
    while (parent_[static_cast<std::size_t>(x)] != x) {
      auto &p = parent_[static_cast<std::size_t>(x)];
      p = parent_[static_cast<std::size_t>(p)];
      x = p;
    }
    return x;
  }
  void unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b)
      parent_[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }

private:
  std::vector<int> parent_;
};

class Canonizer {
public:
  Canonizer(const Graph &g, std::span<const int> colors)
      : g_(g), n_(g.vertex_count()), words_(g.words_per_row()),
        colors_(colors.begin(), colors.end()) {}

  CanonicalLabeling run() {
    Partition root;
    root.order.resize(static_cast<std::size_t>(n_));
    std::iota(root.order.begin(), root.order.end(), 0);
    if (colors_.empty()) {
      if (n_ > 0)
        root.cells.push_back({0, n_});
    } else {
      std::stable_sort(root.order.begin(), root.order.end(),
                       [&](Vertex a, Vertex b) {
                         return color(a) < color(b);
                       });
      for (int i = 0; i < n_;) {
        int j = i;
        while (j < n_ && color(root.order[static_cast<std::size_t>(j)]) ==
                             color(root.order[static_cast<std::size_t>(i)]))
          ++j;
        root.cells.push_back({i, j - i});
        i = j;
      }
    }
    std::vector<Vertex> prefix;
    search(std::move(root), prefix);
    return {std::move(best_order_), std::move(best_cert_),
            std::move(automorphisms_)};
  }

private:
  static constexpr int kNoJump = -1;

  int color(Vertex v) const {
    return colors_.empty() ? 0 : colors_[static_cast<std::size_t>(v)];
  }

  // Splits cells by neighbour counts into every current cell until the
  // partition is equitable. Sub-cells are ordered by their count vectors,
  // which depend only on the ordered partition, never on vertex labels.
  void refine(Partition &p) const {
    std::vector<std::uint64_t> masks;
    std::vector<int> sig;
    std::vector<int> idx;
    for (;;) {
      const std::size_t ncells = p.cells.size();
      masks.assign(ncells * words_, 0);
      for (std::size_t c = 0; c < ncells; ++c) {
        const Cell cell = p.cells[c];
        for (int i = cell.start; i < cell.start + cell.size; ++i) {
          const auto v =
              static_cast<std::size_t>(p.order[static_cast<std::size_t>(i)]);
          masks[c * words_ + v / 64] |= std::uint64_t{1} << (v % 64);
        }
      }

      std::vector<Cell> next;
      next.reserve(static_cast<std::size_t>(n_));
      bool split = false;
      for (std::size_t c = 0; c < ncells; ++c) {
        const Cell cell = p.cells[c];
        if (cell.size == 1) {
          next.push_back(cell);
          continue;
        }
        const auto sz = static_cast<std::size_t>(cell.size);
        sig.assign(sz * ncells, 0);
        for (std::size_t i = 0; i < sz; ++i) {
          const Vertex v =
              p.order[static_cast<std::size_t>(cell.start) + i];
          auto row = g_.row(v);
          for (std::size_t d = 0; d < ncells; ++d) {
            int count = 0;
            for (std::size_t w = 0; w < words_; ++w)
              count += std::popcount(row[w] & masks[d * words_ + w]);
            sig[i * ncells + d] = count;
          }
        }
        idx.resize(sz);
        std::iota(idx.begin(), idx.end(), 0);
        auto sig_less = [&](int a, int b) {
          return std::lexicographical_compare(
              sig.begin() + static_cast<std::ptrdiff_t>(a * ncells),
              sig.begin() + static_cast<std::ptrdiff_t>((a + 1) * ncells),
              sig.begin() + static_cast<std::ptrdiff_t>(b * ncells),
              sig.begin() + static_cast<std::ptrdiff_t>((b + 1) * ncells));
        };
        auto sig_equal = [&](int a, int b) {
          return std::equal(
              sig.begin() + static_cast<std::ptrdiff_t>(a * ncells),
              sig.begin() + static_cast<std::ptrdiff_t>((a + 1) * ncells),
              sig.begin() + static_cast<std::ptrdiff_t>(b * ncells));
        };
        std::stable_sort(idx.begin(), idx.end(), sig_less);
        std::vector<Vertex> members(sz);
        for (std::size_t i = 0; i < sz; ++i)
          members[i] = p.order[static_cast<std::size_t>(cell.start) +
                               static_cast<std::size_t>(idx[i])];
        int run_start = 0;
        int pieces = 0;
        for (int i = 1; i <= cell.size; ++i) {
          if (i == cell.size || !sig_equal(idx[static_cast<std::size_t>(i)],
                                           idx[static_cast<std::size_t>(
                                               run_start)])) {
            next.push_back({cell.start + run_start, i - run_start});
            run_start = i;
            ++pieces;
          }
        }
        if (pieces > 1)
          split = true;
        std::copy(members.begin(), members.end(),
                  p.order.begin() + cell.start);
      }
      p.cells = std::move(next);
      if (!split)
        return;
    }
  }

  std::vector<std::uint64_t> certificate(const std::vector<Vertex> &order) const {
    const std::size_t n = static_cast<std::size_t>(n_);
    const std::size_t cwords = (n + 63) / 64;
    std::vector<std::uint64_t> cert;
    cert.reserve(n + n * cwords);
    for (std::size_t i = 0; i < n; ++i)
      cert.push_back(static_cast<std::uint64_t>(color(order[i])));
    for (std::size_t i = 0; i < n; ++i) {
      const std::size_t base = cert.size();
      cert.resize(base + cwords, 0);
      for (std::size_t j = 0; j < n; ++j)
        if (g_.adjacent(order[i], order[j]))
          cert[base + j / 64] |= std::uint64_t{1} << (j % 64);
    }
    return cert;
  }

  void add_automorphism(const std::vector<Vertex> &from,
                        const std::vector<Vertex> &to) {
    std::vector<Vertex> perm(static_cast<std::size_t>(n_));
    for (std::size_t i = 0; i < from.size(); ++i)
      perm[static_cast<std::size_t>(from[i])] = to[i];
    bool identity = true;
    for (std::size_t v = 0; v < perm.size(); ++v)
      identity = identity && perm[v] == static_cast<Vertex>(v);
    if (!identity)
      automorphisms_.push_back(std::move(perm));
  }

  // Orbits, restricted to the automorphisms found so far that fix every
  // vertex of `prefix`.
  UnionFind stabilizer_orbits(const std::vector<Vertex> &prefix) const {
    UnionFind uf(n_);
    for (const auto &perm : automorphisms_) {
      bool fixes = std::all_of(prefix.begin(), prefix.end(), [&](Vertex v) {
        return perm[static_cast<std::size_t>(v)] == v;
      });
      if (!fixes)
        continue;
      for (int v = 0; v < n_; ++v)
        uf.unite(v, perm[static_cast<std::size_t>(v)]);
    }
    return uf;
  }

  // Returns the depth to resume at when a leaf equivalent to the first
  // leaf was found (its whole branch is an automorphic image of the first
  // path), otherwise kNoJump.
  int search(Partition p, std::vector<Vertex> &prefix) {
    refine(p);
    const int depth = static_cast<int>(prefix.size());
    if (p.discrete())
      return leaf(p.order, prefix);

    const Cell target = *std::find_if(p.cells.begin(), p.cells.end(),
                                      [](const Cell &c) { return c.size > 1; });
    const std::vector<Vertex> candidates(
        p.order.begin() + target.start,
        p.order.begin() + target.start + target.size);
    std::vector<Vertex> explored;
    for (Vertex v : candidates) {
      if (!explored.empty()) {
        UnionFind uf = stabilizer_orbits(prefix);
        const int root = uf.find(v);
        if (std::any_of(explored.begin(), explored.end(),
                        [&](Vertex u) { return uf.find(u) == root; }))
          continue;
      }
      // Individualize v: it takes the first slot of the target cell, the
      // rest keep their relative order.
      Partition child = p;
      auto slot = child.order.begin() + target.start;
      *slot++ = v;
      for (Vertex u : candidates)
        if (u != v)
          *slot++ = u;
      auto it = std::find_if(child.cells.begin(), child.cells.end(),
                             [&](const Cell &c) {
                               return c.start == target.start;
                             });
      *it = {target.start, 1};
      child.cells.insert(it + 1, {target.start + 1, target.size - 1});

      prefix.push_back(v);
      const int jump = search(std::move(child), prefix);
      prefix.pop_back();
      explored.push_back(v);
      if (jump != kNoJump && jump < depth)
        return jump;
    }
    return kNoJump;
  }

  int leaf(const std::vector<Vertex> &order,
           const std::vector<Vertex> &prefix) {
    std::vector<std::uint64_t> cert = certificate(order);
    if (!first_cert_) {
      first_cert_ = cert;
      first_order_ = order;
      first_path_ = prefix;
      best_cert_ = std::move(cert);
      best_order_ = order;
      return kNoJump;
    }
    if (cert == *first_cert_) {
      add_automorphism(first_order_, order);
      std::size_t common = 0;
      while (common < prefix.size() && common < first_path_.size() &&
             prefix[common] == first_path_[common])
        ++common;
      return static_cast<int>(common);
    }
    if (cert > best_cert_) {
      best_cert_ = std::move(cert);
      best_order_ = order;
    } else if (cert == best_cert_) {
      add_automorphism(best_order_, order);
    }
    return kNoJump;
  }

  const Graph &g_;
  int n_;
  std::size_t words_;
  std::vector<int> colors_;

  std::optional<std::vector<std::uint64_t>> first_cert_;
  std::vector<Vertex> first_order_;
  std::vector<Vertex> first_path_;
  std::vector<std::uint64_t> best_cert_;
  std::vector<Vertex> best_order_;
  std::vector<std::vector<Vertex>> automorphisms_;
};

} // namespace

CanonicalLabeling canonical_labeling(const Graph &g,
                                     std::span<const int> colors) {
  if (!colors.empty() &&
      colors.size() != static_cast<std::size_t>(g.vertex_count()))
    throw std::invalid_argument("colouring has wrong length");
  return Canonizer(g, colors).run();
}

Graph canonical_graph(const Graph &g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  std::vector<Vertex> new_label(lab.order.size());
  for (std::size_t i = 0; i < lab.order.size(); ++i)
    new_label[static_cast<std::size_t>(lab.order[i])] = static_cast<Vertex>(i);
  return g.relabeled(new_label);
}

CanonicalForm canonical_form(const Graph &g) {
  return {encode_graph6(canonical_graph(g))};
}

bool are_isomorphic(const Graph &a, const Graph &b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return false;
  return canonical_labeling(a).certificate == canonical_labeling(b).certificate;
}

std::vector<Vertex> vertex_orbits(const Graph &g) {
  const CanonicalLabeling lab = canonical_labeling(g);
  UnionFind uf(g.vertex_count());
  for (const auto &perm : lab.automorphisms)
    for (Vertex v = 0; v < g.vertex_count(); ++v)
      uf.unite(v, perm[static_cast<std::size_t>(v)]);
  std::vector<Vertex> orbit(static_cast<std::size_t>(g.vertex_count()));
  for (Vertex v = 0; v < g.vertex_count(); ++v)
    orbit[static_cast<std::size_t>(v)] = uf.find(v);
  return orbit;
}

} // namespace extremal
