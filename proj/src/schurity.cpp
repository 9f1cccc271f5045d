#include "schur/schurity.hpp"

#include <algorithm>
#include <numeric>

#include "schur/constructions.hpp"

namespace schur {

CayleyScheme cayley_scheme(const SRing& a) {
  const auto& g = a.group();
  const std::size_t n = g.size();
  CayleyScheme s;
  s.n_ = n;
  s.rank_ = a.rank();
  s.colors_.resize(n * n);
  for (Index x = 0; x < n; ++x) {
    const Index xi = g.inv(x);
    for (Index y = 0; y < n; ++y) s.colors_[x * n + y] = a.class_of(g.mul(y, xi));
  }
  s.transpose_.resize(s.rank_);
  s.representative_.resize(s.rank_);
  for (std::uint32_t c = 0; c < s.rank_; ++c) {
    s.transpose_[c] = a.inverse_class(c);
    s.representative_[c] = a.basic_set(c).front();
  }

  // Diagonal is exactly colour 0.
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if ((s.colors_[x * n + y] == 0) != (x == y)) throw Error("cayley_scheme: diagonal axiom fails");
  // Closed under transposition.
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (s.colors_[y * n + x] != s.transpose_[s.colors_[x * n + y]])
        throw Error("cayley_scheme: transpose axiom fails");
  // Intersection numbers depend only on the colour of (a, b). Colours are
  // translation invariant, so pairs (e, b) cover every case.
  const std::size_t r = s.rank_;
  std::vector<std::vector<std::int64_t>> first(r);
  for (Index b = 0; b < n; ++b) {
    std::vector<std::int64_t> counts(r * r, 0);
    for (Index c = 0; c < n; ++c) ++counts[s.colors_[c] * r + s.colors_[c * n + b]];
    auto& ref = first[s.colors_[b]];
    if (ref.empty())
      ref = std::move(counts);
    else if (ref != counts)
      throw Error("cayley_scheme: regularity axiom fails");
  }
  return s;
}

std::int64_t CayleyScheme::intersection_number(std::uint32_t r, std::uint32_t s,
                                               std::uint32_t t) const {
  if (r >= rank_ || s >= rank_ || t >= rank_) throw InvalidArgument("intersection_number: bad colour");
  const Index b = representative_[t];
  std::int64_t count = 0;
  for (Index c = 0; c < n_; ++c)
    if (colors_[c] == r && colors_[c * n_ + b] == s) ++count;
  return count;
}

bool preserves_colors(const CayleyScheme& s, const Permutation& p) {
  const std::size_t n = s.degree();
  if (p.degree() != n) return false;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (s.color(p(a), p(b)) != s.color(a, b)) return false;
  return true;
}

namespace {

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  return h;
}

// Ordered vertex partition.
struct OPart {
  std::vector<std::vector<Index>> cells;
  std::vector<std::uint32_t> cell_of;

  bool discrete() const { return cells.size() == cell_of.size(); }
};

class Searcher {
 public:
  Searcher(const CayleyScheme& s, const SearchOptions& opt) : s_(s), opt_(opt) {}

  // Colour-degree refinement to the coarsest equitable refinement. Returns
  // a trace hash that is invariant under colour automorphisms.
  std::uint64_t refine(OPart& p) {
    const std::size_t n = s_.degree();
    const std::uint64_t r = s_.rank();
    std::uint64_t trace = p.cells.size();
    std::vector<std::uint64_t> tmp(n);
    for (;;) {
      if (++nodes_ > opt_.search_budget) throw BudgetExceeded("automorphism search budget exceeded");
      if (opt_.budget && (nodes_ & 63) == 0) opt_.budget->check_deadline();
      std::vector<std::vector<Index>> next;
      bool split = false;
      for (const auto& cell : p.cells) {
        if (cell.size() == 1) {
          next.push_back(cell);
          continue;
        }
        std::vector<std::pair<std::vector<std::uint64_t>, Index>> keyed;
        keyed.reserve(cell.size());
        for (Index v : cell) {
          for (Index w = 0; w < n; ++w) tmp[w] = p.cell_of[w] * r + s_.color(v, w);
          std::sort(tmp.begin(), tmp.end());
          std::vector<std::uint64_t> sig;
          for (std::size_t i = 0; i < n;) {
            std::size_t j = i;
            while (j < n && tmp[j] == tmp[i]) ++j;
            sig.push_back(tmp[i] * (n + 1) + (j - i));
            i = j;
          }
          keyed.emplace_back(std::move(sig), v);
        }
        std::sort(keyed.begin(), keyed.end());
        std::size_t start = next.size();
        for (std::size_t i = 0; i < keyed.size(); ++i) {
          if (i == 0 || keyed[i].first != keyed[i - 1].first) {
            next.emplace_back();
            std::uint64_t h = 0;
            for (auto x : keyed[i].first) h = mix(h, x);
            trace = mix(trace, h);
          }
          next.back().push_back(keyed[i].second);
        }
        if (next.size() - start > 1) split = true;
        trace = mix(trace, next.size() - start);
      }
      p.cells = std::move(next);
      for (std::uint32_t c = 0; c < p.cells.size(); ++c)
        for (Index v : p.cells[c]) p.cell_of[v] = c;
      if (!split) return mix(trace, p.cells.size());
    }
  }

  OPart individualize(const OPart& p, std::size_t cell, Index v) {
    OPart q;
    q.cells.reserve(p.cells.size() + 1);
    for (std::size_t c = 0; c < p.cells.size(); ++c) {
      if (c != cell) {
        q.cells.push_back(p.cells[c]);
        continue;
      }
      q.cells.push_back({v});
      std::vector<Index> rest;
      for (Index w : p.cells[c])
        if (w != v) rest.push_back(w);
      q.cells.push_back(std::move(rest));
    }
    q.cell_of.resize(p.cell_of.size());
    for (std::uint32_t c = 0; c < q.cells.size(); ++c)
      for (Index w : q.cells[c]) q.cell_of[w] = c;
    return q;
  }

  static std::size_t target_cell(const OPart& p) {
    std::size_t best = SIZE_MAX;
    for (std::size_t c = 0; c < p.cells.size(); ++c)
      if (p.cells[c].size() > 1 && (best == SIZE_MAX || p.cells[c].size() < p.cells[best].size()))
        best = c;
    return best;
  }

  void first_path() {
    const std::size_t n = s_.degree();
    OPart p;
    p.cells.emplace_back(n);
    std::iota(p.cells[0].begin(), p.cells[0].end(), Index{0});
    p.cell_of.assign(n, 0);
    traces_.push_back(refine(p));
    path_.push_back(p);
    while (!p.discrete()) {
      const std::size_t c = target_cell(p);
      const Index v = p.cells[c].front();
      cells_.push_back(c);
      base_.push_back(v);
      p = individualize(p, c, v);
      traces_.push_back(refine(p));
      path_.push_back(p);
    }
    for (const auto& cell : p.cells) leaf_.push_back(cell.front());
  }

  bool descend(std::size_t depth, const OPart& p) {
    if (p.discrete()) {
      std::vector<Index> img(s_.degree());
      for (std::size_t i = 0; i < leaf_.size(); ++i) img[leaf_[i]] = p.cells[i].front();
      Permutation f(std::move(img));
      if (!preserves_colors(s_, f)) return false;
      found_ = std::move(f);
      return true;
    }
    const std::size_t c = cells_[depth];
    if (c >= p.cells.size() || p.cells[c].size() != path_[depth].cells[c].size()) return false;
    for (Index z : p.cells[c]) {
      OPart q = individualize(p, c, z);
      if (refine(q) != traces_[depth + 1] || q.cells.size() != path_[depth + 1].cells.size()) continue;
      if (descend(depth + 1, q)) return true;
    }
    return false;
  }

  std::vector<Index> orbit_of(Index point, std::size_t level) const {
    const std::size_t n = s_.degree();
    std::vector<char> seen(n, 0);
    std::vector<Index> orbit{point};
    seen[point] = 1;
    for (std::size_t i = 0; i < orbit.size(); ++i)
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        if (gen_level_[k] < level) continue;
        const Index y = gens_[k](orbit[i]);
        if (!seen[y]) {
          seen[y] = 1;
          orbit.push_back(y);
        }
      }
    return orbit;
  }

  void run(const AbelianGroup& g) {
    first_path();
    for (std::size_t i = 0; i < g.rank(); ++i) {
      gens_.push_back(translation(g, g.generator(i)));
      gen_level_.push_back(0);
    }
    orbit_sizes_.assign(base_.size(), 1);
    for (std::size_t level = base_.size(); level-- > 0;) {
      auto orbit = orbit_of(base_[level], level);
      std::vector<char> in(s_.degree(), 0);
      for (Index y : orbit) in[y] = 1;
      for (Index y : path_[level].cells[cells_[level]]) {
        if (in[y]) continue;
        OPart q = individualize(path_[level], cells_[level], y);
        if (refine(q) != traces_[level + 1] || q.cells.size() != path_[level + 1].cells.size())
          continue;
        if (!descend(level + 1, q)) continue;
        gens_.push_back(*found_);
        gen_level_.push_back(level);
        found_.reset();
        orbit = orbit_of(base_[level], level);
        for (Index x : orbit) in[x] = 1;
      }
      orbit_sizes_[level] = orbit.size();
    }
  }

  const CayleyScheme& s_;
  const SearchOptions& opt_;
  std::size_t nodes_ = 0;
  std::vector<OPart> path_;
  std::vector<std::uint64_t> traces_;
  std::vector<std::size_t> cells_;
  std::vector<Index> base_;
  std::vector<Index> leaf_;
  std::vector<Permutation> gens_;
  std::vector<std::size_t> gen_level_;
  std::vector<std::size_t> orbit_sizes_;
  std::optional<Permutation> found_;
};

}  // namespace

AutomorphismResult scheme_automorphisms(const SRing& a, const SearchOptions& opt) {
  const auto& g = a.group();
  const std::size_t n = g.size();
  if (n > opt.max_order) throw BudgetExceeded("scheme_automorphisms: |G| exceeds the order cap");
  if (a.rank() <= 2) {
    std::vector<Index> all(n);
    std::iota(all.begin(), all.end(), Index{0});
    auto sym = PermGroup::symmetric(n, all);
    auto stab = sym.point_stabilizer(AbelianGroup::identity());
    std::vector<std::size_t> sizes;
    for (std::size_t m = n; m >= 2; --m) sizes.push_back(m);
    return AutomorphismResult{sym, sym.order(), sym.base(), std::move(sizes), stab.generators(), 0};
  }
  const auto scheme = cayley_scheme(a);
  Searcher s(scheme, opt);
  s.run(g);
  BigInt order = 1;
  for (auto k : s.orbit_sizes_) order *= k;
  std::vector<Permutation> stab;
  for (std::size_t k = 0; k < s.gens_.size(); ++k)
    if (s.gen_level_[k] >= 1 || s.gens_[k](0) == 0) stab.push_back(s.gens_[k]);
  std::erase_if(stab, [](const Permutation& p) { return p.is_identity(); });
  PermGroup group(n, s.gens_, s.base_, opt.chain_budget);
  return AutomorphismResult{std::move(group), order, s.base_, s.orbit_sizes_, std::move(stab), s.nodes_};
}

SchurityResult is_schurian(const SRing& a, const SearchOptions& opt) {
  const auto aut = scheme_automorphisms(a, opt);
  SchurityResult r;
  r.aut_order = aut.order;
  r.stabilizer_generators = aut.stabilizer_generators;
  const std::size_t n = a.group().size();
  if (aut.group.is_symbolic_symmetric()) {
    r.stabilizer_orbits = aut.group.point_stabilizer(0).orbit_labels();
  } else {
    PermGroup stab(n, aut.stabilizer_generators);
    r.stabilizer_orbits = stab.orbit_labels();
  }
  // Orbits refine classes; schurian iff the counts agree.
  std::uint32_t orbits = 0;
  for (auto l : r.stabilizer_orbits) orbits = std::max(orbits, l + 1);
  r.schurian = orbits == a.rank();
  if (!r.schurian) {
    for (std::uint32_t i = 0; i < a.rank(); ++i) {
      const auto& x = a.basic_set(i);
      for (Index y : x)
        if (r.stabilizer_orbits[y] != r.stabilizer_orbits[x.front()]) {
          r.split_class = i;
          r.witness = std::pair{x.front(), y};
          break;
        }
      if (r.split_class) break;
    }
  }
  return r;
}

bool extends_to_automorphism(const CayleyScheme& s,
                             std::span<const std::pair<Index, Index>> fixed,
                             std::size_t node_budget) {
  const std::size_t n = s.degree();
  std::vector<Index> img(n, Index(n));
  std::vector<char> used(n, 0);
  std::vector<Index> order;
  for (auto [x, y] : fixed) {
    if (x >= n || y >= n) throw InvalidArgument("extends_to_automorphism: point out of range");
    if (img[x] != n) {
      if (img[x] != y) return false;
      continue;
    }
    if (used[y]) return false;
    img[x] = y;
    used[y] = 1;
    order.push_back(x);
  }
  for (std::size_t i = 0; i < order.size(); ++i)
    for (std::size_t j = 0; j < order.size(); ++j)
      if (s.color(img[order[i]], img[order[j]]) != s.color(order[i], order[j])) return false;
  std::vector<Index> rest;
  for (Index x = 0; x < n; ++x)
    if (img[x] == n) rest.push_back(x);
  std::size_t nodes = 0;
  auto assign = [&](auto&& self, std::size_t k) -> bool {
    if (k == rest.size()) return true;
    if (++nodes > node_budget) throw BudgetExceeded("witness check: node budget exhausted");
    const Index v = rest[k];
    for (Index w = 0; w < n; ++w) {
      if (used[w]) continue;
      bool ok = s.color(w, w) == s.color(v, v);
      for (std::size_t i = 0; ok && i < order.size(); ++i) {
        const Index u = order[i];
        ok = s.color(img[u], w) == s.color(u, v) && s.color(w, img[u]) == s.color(v, u);
      }
      if (!ok) continue;
      img[v] = w;
      used[w] = 1;
      order.push_back(v);
      if (self(self, k + 1)) return true;
      order.pop_back();
      used[w] = 0;
      img[v] = Index(n);
    }
    return false;
  };
  return assign(assign, 0);
}

bool verify_split_witness(const SRing& a, const SchurityResult& r, std::size_t node_budget) {
  if (!r.split_class || !r.witness) return false;
  const auto scheme = cayley_scheme(a);
  for (const auto& p : r.stabilizer_generators)
    if (p.degree() != scheme.degree() || p(0) != 0 || !preserves_colors(scheme, p)) return false;
  const auto [x, y] = *r.witness;
  if (x >= scheme.degree() || y >= scheme.degree()) return false;
  if (a.class_of(x) != *r.split_class || a.class_of(y) != *r.split_class) return false;
  PermGroup stab(a.group().size(), r.stabilizer_generators);
  const auto labels = stab.orbit_labels();
  if (labels[x] == labels[y]) return false;
  const std::pair<Index, Index> fixed[] = {{0, 0}, {x, y}};
  return !extends_to_automorphism(scheme, fixed, node_budget);
}

GenwrCertificate genwr_certificate(const SRing& a, const Subgroup& u, const Subgroup& l,
                                   const SearchOptions& opt) {
  GenwrCertificate c;
  c.is_gw = is_generalized_wreath(a, u, l);
  if (!c.is_gw) {
    c.detail = "not a U/L-wreath product";
    return c;
  }
  const auto& g = a.group();
  c.u_schurian = is_schurian(restrict(a, u), opt).schurian;
  c.quotient_schurian = is_schurian(quotient_ring(a, SectionRef{whole_group(g), l}), opt).schurian;
  const auto section = quotient_ring(a, SectionRef{u, l});
  c.section_order = section.group().size();
  const auto aut = scheme_automorphisms(section, opt);
  c.regular_orbit = aut.group.point_stabilizer(0).has_faithful_regular_orbit();
  c.schurian = is_schurian(a, opt).schurian;
  c.detail = "|U/L| = " + std::to_string(c.section_order) +
             ", |Aut(A_U/L)| = " + aut.order.str();
  return c;
}

}  // namespace schur
