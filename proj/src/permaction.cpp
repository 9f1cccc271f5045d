#include "schur/permaction.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <numeric>
#include <set>

namespace schur {

Permutation::Permutation(std::vector<Index> images) : img_(std::move(images)) {
  std::vector<char> hit(img_.size(), 0);
  for (Index y : img_) {
    if (y >= img_.size() || hit[y]) throw InvalidArgument("Permutation: not a bijection");
    hit[y] = 1;
  }
}

Permutation Permutation::identity(std::size_t n) {
  std::vector<Index> img(n);
  std::iota(img.begin(), img.end(), Index{0});
  return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
  for (Index x = 0; x < img_.size(); ++x)
    if (img_[x] != x) return false;
  return true;
}

Permutation Permutation::then(const Permutation& next) const {
  if (next.degree() != degree()) throw InvalidArgument("Permutation: degree mismatch");
  Permutation r;
  r.img_.resize(img_.size());
  for (std::size_t x = 0; x < img_.size(); ++x) r.img_[x] = next.img_[img_[x]];
  return r;
}

Permutation Permutation::inverse() const {
  Permutation r;
  r.img_.resize(img_.size());
  for (Index x = 0; x < img_.size(); ++x) r.img_[img_[x]] = x;
  return r;
}

namespace detail {

struct Level {
  Index base;
  std::vector<Permutation> gens;
  std::vector<int> slot;  // position in trans, or -1
  std::vector<Permutation> trans;
  std::vector<Index> orbit;
};

struct Chain {
  std::size_t degree = 0;
  std::vector<Level> levels;
};

namespace {

// Incremental Schreier-Sims. Level j keeps the orbit of its base point under
// every strong generator stored at levels >= j; each new (point, generator)
// pair yields a Schreier generator that is sifted into the next level.
class ChainBuilder {
 public:
  ChainBuilder(std::size_t degree, std::vector<Index> prefix, std::size_t budget)
      : prefix_(std::move(prefix)), budget_(budget) {
    chain_.degree = degree;
  }

  void add(const Permutation& g) { add_at(0, g); }
  Chain take() { return std::move(chain_); }

 private:
  bool sifts(std::size_t k, Permutation g) const {
    for (; k < chain_.levels.size(); ++k) {
      const auto& lv = chain_.levels[k];
      const int s = lv.slot[g(lv.base)];
      if (s < 0) return false;
      g = g.then(lv.trans[s].inverse());
    }
    return g.is_identity();
  }

  Index next_base(const Permutation& g) {
    std::vector<char> used(chain_.degree, 0);
    for (const auto& lv : chain_.levels) used[lv.base] = 1;
    for (Index p : prefix_)
      if (!used[p]) return p;
    for (Index x = 0; x < chain_.degree; ++x)
      if (g(x) != x && !used[x]) return x;
    throw Error("Schreier-Sims: non-identity element fixes every base point");
  }

  void add_at(std::size_t k, const Permutation& g) {
    if (sifts(k, g)) return;
    if (k == chain_.levels.size()) {
      Level lv;
      lv.base = next_base(g);
      lv.slot.assign(chain_.degree, -1);
      lv.slot[lv.base] = 0;
      lv.trans.push_back(Permutation::identity(chain_.degree));
      lv.orbit.push_back(lv.base);
      chain_.levels.push_back(std::move(lv));
    }
    chain_.levels[k].gens.push_back(g);
    for (std::size_t j = k + 1; j-- > 0;) {
      const std::size_t old = chain_.levels[j].orbit.size();
      for (std::size_t i = 0; i < old; ++i) {
        const auto& lv = chain_.levels[j];
        extend(j, lv.trans[lv.slot[lv.orbit[i]]].then(g));
      }
    }
  }

  void extend(std::size_t k, const Permutation& g) {
    if (++work_ > budget_) throw BudgetExceeded("stabilizer chain budget exceeded");
    const Index y = g(chain_.levels[k].base);
    const int s = chain_.levels[k].slot[y];
    if (s >= 0) {
      add_at(k + 1, g.then(chain_.levels[k].trans[s].inverse()));
      return;
    }
    {
      auto& lv = chain_.levels[k];
      lv.slot[y] = static_cast<int>(lv.trans.size());
      lv.trans.push_back(g);
      lv.orbit.push_back(y);
    }
    for (std::size_t i = k; i < chain_.levels.size(); ++i)
      for (std::size_t h = 0; h < chain_.levels[i].gens.size(); ++h)
        extend(k, g.then(chain_.levels[i].gens[h]));
  }

  Chain chain_;
  std::vector<Index> prefix_;
  std::size_t budget_;
  std::size_t work_ = 0;
};

}  // namespace
}  // namespace detail

struct PermGroup::Lazy {
  std::once_flag once;
  std::shared_ptr<const detail::Chain> chain;
};

PermGroup::PermGroup(std::size_t degree, std::vector<Permutation> generators,
                     std::vector<Index> base_prefix, std::size_t chain_budget)
    : degree_(degree),
      gens_(std::move(generators)),
      base_prefix_(std::move(base_prefix)),
      chain_budget_(chain_budget),
      lazy_(std::make_shared<Lazy>()) {
  for (const auto& g : gens_)
    if (g.degree() != degree_) throw InvalidArgument("PermGroup: generator degree mismatch");
  for (Index p : base_prefix_)
    if (p >= degree_) throw InvalidArgument("PermGroup: base point out of range");
}

PermGroup PermGroup::symmetric(std::size_t degree, std::vector<Index> support) {
  std::sort(support.begin(), support.end());
  support.erase(std::unique(support.begin(), support.end()), support.end());
  std::vector<Permutation> gens;
  const std::size_t m = support.size();
  if (m >= 2) {
    // (s0 s1 ... s_{m-1}) and (s0 s1 ... s_{m-2}) generate Sym(support).
    for (std::size_t len : {m, m - 1}) {
      if (len < 2) continue;
      auto p = Permutation::identity(degree).images();
      for (std::size_t i = 0; i < len; ++i) p[support[i]] = support[(i + 1) % len];
      gens.emplace_back(std::move(p));
    }
  }
  PermGroup g(degree, std::move(gens));
  g.symmetric_ = true;
  g.support_ = std::move(support);
  return g;
}

std::shared_ptr<const detail::Chain> PermGroup::chain() const {
  if (symmetric_) throw Error("PermGroup: symbolic symmetric group has no explicit chain");
  std::call_once(lazy_->once, [this] {
    detail::ChainBuilder b(degree_, base_prefix_, chain_budget_);
    for (const auto& g : gens_) b.add(g);
    lazy_->chain = std::make_shared<detail::Chain>(b.take());
  });
  return lazy_->chain;
}

BigInt PermGroup::order() const {
  BigInt r = 1;
  if (symmetric_) {
    for (std::size_t i = 2; i <= support_.size(); ++i) r *= i;
    return r;
  }
  for (const auto& lv : chain()->levels) r *= lv.orbit.size();
  return r;
}

bool PermGroup::contains(const Permutation& p) const {
  if (p.degree() != degree_) return false;
  if (symmetric_) {
    std::vector<char> in(degree_, 0);
    for (Index x : support_) in[x] = 1;
    for (Index x = 0; x < degree_; ++x)
      if (!in[x] && p(x) != x) return false;
    return true;
  }
  Permutation g = p;
  for (const auto& lv : chain()->levels) {
    const int s = lv.slot[g(lv.base)];
    if (s < 0) return false;
    g = g.then(lv.trans[s].inverse());
  }
  return g.is_identity();
}

std::vector<Index> PermGroup::base() const {
  if (symmetric_) return support_.size() < 2 ? std::vector<Index>{}
                                             : std::vector<Index>(support_.begin(), support_.end() - 1);
  std::vector<Index> out;
  for (const auto& lv : chain()->levels) out.push_back(lv.base);
  return out;
}

std::vector<std::size_t> PermGroup::basic_orbit_sizes() const {
  std::vector<std::size_t> out;
  if (symmetric_) {
    for (std::size_t m = support_.size(); m >= 2; --m) out.push_back(m);
    return out;
  }
  for (const auto& lv : chain()->levels) out.push_back(lv.orbit.size());
  return out;
}

PermGroup PermGroup::point_stabilizer(Index point) const {
  if (point >= degree_) throw InvalidArgument("point_stabilizer: point out of range");
  if (symmetric_) {
    auto rest = support_;
    std::erase(rest, point);
    return symmetric(degree_, std::move(rest));
  }
  std::shared_ptr<const detail::Chain> c;
  if (!base_prefix_.empty() && base_prefix_.front() == point) {
    c = chain();
  } else {
    std::vector<Index> prefix{point};
    for (Index p : base_prefix_)
      if (p != point) prefix.push_back(p);
    PermGroup rebased(degree_, gens_, std::move(prefix), chain_budget_);
    c = rebased.chain();
  }
  // Levels after the first fix the point; their strong generators generate
  // the stabilizer and the sliced chain is already complete for it.
  auto sliced = std::make_shared<detail::Chain>();
  sliced->degree = degree_;
  std::size_t first = (!c->levels.empty() && c->levels.front().base == point) ? 1 : 0;
  sliced->levels.assign(c->levels.begin() + static_cast<std::ptrdiff_t>(first), c->levels.end());
  std::vector<Permutation> gens;
  std::set<Permutation> seen;
  for (const auto& lv : sliced->levels)
    for (const auto& g : lv.gens)
      if (seen.insert(g).second) gens.push_back(g);
  std::vector<Index> prefix;
  for (const auto& lv : sliced->levels) prefix.push_back(lv.base);
  PermGroup out(degree_, std::move(gens), std::move(prefix), chain_budget_);
  std::call_once(out.lazy_->once, [&] { out.lazy_->chain = sliced; });
  return out;
}

std::vector<std::uint32_t> PermGroup::orbit_labels() const {
  std::vector<std::uint32_t> parent(degree_);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens_)
    for (Index x = 0; x < degree_; ++x) {
      const auto a = find(x), b = find(g(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  std::vector<std::uint32_t> labels(degree_);
  std::vector<std::uint32_t> remap(degree_, UINT32_MAX);
  std::uint32_t next = 0;
  for (Index x = 0; x < degree_; ++x) {
    auto& r = remap[find(x)];
    if (r == UINT32_MAX) r = next++;
    labels[x] = r;
  }
  return labels;
}

std::vector<std::vector<Index>> PermGroup::orbits() const {
  const auto labels = orbit_labels();
  std::vector<std::vector<Index>> out;
  for (Index x = 0; x < degree_; ++x) {
    if (labels[x] >= out.size()) out.resize(labels[x] + 1);
    out[labels[x]].push_back(x);
  }
  return out;
}

std::vector<std::uint32_t> PermGroup::orbitals(std::size_t budget) const {
  const std::size_t n = degree_;
  if (n * n > budget) throw BudgetExceeded("orbitals: pair count exceeds budget");
  std::vector<std::uint32_t> parent(n * n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& g : gens_)
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        const auto u = find(static_cast<std::uint32_t>(a * n + b));
        const auto v = find(static_cast<std::uint32_t>(g(a) * n + g(b)));
        if (u != v) parent[std::max(u, v)] = std::min(u, v);
      }
  std::vector<std::uint32_t> labels(n * n);
  std::vector<std::uint32_t> remap(n * n, UINT32_MAX);
  std::uint32_t next = 0;
  for (std::size_t x = 0; x < n * n; ++x) {
    auto& r = remap[find(static_cast<std::uint32_t>(x))];
    if (r == UINT32_MAX) r = next++;
    labels[x] = r;
  }
  return labels;
}

bool PermGroup::has_faithful_regular_orbit() const {
  const BigInt ord = order();
  if (ord > degree_) return false;
  const auto size = static_cast<std::size_t>(ord);
  for (const auto& o : orbits())
    if (o.size() == size) return true;
  return false;
}

Permutation translation(const AbelianGroup& g, Index by) {
  std::vector<Index> img(g.size());
  for (Index x = 0; x < g.size(); ++x) img[x] = g.mul(x, by);
  return Permutation(std::move(img));
}

PermGroup right_translations(const AbelianGroup& g) {
  std::vector<Permutation> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(translation(g, g.generator(i)));
  return PermGroup(g.size(), std::move(gens), {AbelianGroup::identity()});
}

Permutation as_permutation(const GroupMap& f) {
  if (!f.is_automorphism()) throw InvalidArgument("as_permutation: not an automorphism");
  return Permutation(f.table());
}

bool two_equivalent(const PermGroup& a, const PermGroup& b) {
  if (a.degree() != b.degree()) throw InvalidArgument("two_equivalent: different domains");
  return a.orbitals() == b.orbitals();
}

std::vector<Permutation> enumerate_elements(std::size_t degree, std::span<const Permutation> gens,
                                            std::size_t limit) {
  std::set<Permutation> seen{Permutation::identity(degree)};
  std::deque<Permutation> queue{Permutation::identity(degree)};
  while (!queue.empty()) {
    const auto p = queue.front();
    queue.pop_front();
    for (const auto& g : gens) {
      auto q = p.then(g);
      if (seen.insert(q).second) {
        if (seen.size() > limit) throw BudgetExceeded("enumerate_elements: limit exceeded");
        queue.push_back(std::move(q));
      }
    }
  }
  return {seen.begin(), seen.end()};
}

}  // namespace schur
