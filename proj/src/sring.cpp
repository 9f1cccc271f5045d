#include "schur/sring.hpp"

#include <algorithm>
#include <numeric>

#include "schur/groupring.hpp"

namespace schur {

const char* to_string(Violation::Kind k) {
  switch (k) {
    case Violation::Kind::NotPartition: return "not-a-partition";
    case Violation::Kind::IdentityNotAlone: return "identity-not-alone";
    case Violation::Kind::InverseClosure: return "inverse-closure";
    case Violation::Kind::ModuleClosure: return "module-closure";
  }
  return "unknown";
}

SRing::SRing(AbelianGroup g, Partition classes)
    : group_(std::move(g)), classes_(std::move(classes)), labels_(group_.size()) {
  for (std::uint32_t i = 0; i < classes_.size(); ++i)
    for (Index x : classes_[i]) labels_[x] = i;
  inverse_.resize(classes_.size());
  for (std::uint32_t i = 0; i < classes_.size(); ++i)
    inverse_[i] = labels_[group_.inv(classes_[i].front())];
}

std::int64_t SRing::structure_constant(std::uint32_t x, std::uint32_t y, std::uint32_t z) const {
  if (x >= rank() || y >= rank() || z >= rank())
    throw InvalidArgument("structure_constant: class index out of range");
  const Index w = classes_[z].front();
  std::int64_t count = 0;
  for (Index a : classes_[x])
    if (labels_[group_.mul(group_.inv(a), w)] == y) ++count;
  return count;
}

namespace {

void canonicalize(Partition& p) {
  for (auto& c : p) std::sort(c.begin(), c.end());
  std::sort(p.begin(), p.end(), [](const Class& a, const Class& b) {
    if (a.empty() || b.empty()) return a.size() < b.size();
    return a.front() < b.front();
  });
}

Violation violation(Violation::Kind kind, std::string msg, int x = -1, int y = -1, int z = -1) {
  Violation v;
  v.kind = kind;
  v.message = std::move(msg);
  v.x = x;
  v.y = y;
  v.z = z;
  return v;
}

}  // namespace

std::variant<SRing, Violation> validate(const AbelianGroup& g, Partition partition) {
  const std::size_t n = g.size();
  canonicalize(partition);

  std::vector<int> label(n, -1);
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty())
      return violation(Violation::Kind::NotPartition, "empty class", static_cast<int>(i));
    for (Index x : partition[i]) {
      if (x >= n) {
        auto v = violation(Violation::Kind::NotPartition, "element out of range", static_cast<int>(i));
        v.a = x;
        return v;
      }
      if (label[x] != -1) {
        auto v = violation(Violation::Kind::NotPartition, "element in two classes", label[x],
                    static_cast<int>(i));
        v.a = x;
        return v;
      }
      label[x] = static_cast<int>(i);
    }
  }
  for (Index x = 0; x < n; ++x)
    if (label[x] == -1) {
      auto v = violation(Violation::Kind::NotPartition, "element not covered");
      v.a = x;
      return v;
    }
  if (partition[0].size() != 1) {
    auto v = violation(Violation::Kind::IdentityNotAlone, "identity shares its class", 0);
    v.a = partition[0][1];
    return v;
  }

  for (std::size_t i = 0; i < partition.size(); ++i) {
    const int j = label[g.inv(partition[i].front())];
    bool ok = partition[j].size() == partition[i].size();
    for (Index x : partition[i])
      if (label[g.inv(x)] != j) ok = false;
    if (!ok) {
      auto v = violation(Violation::Kind::InverseClosure, "inverse of a class is not a class",
                  static_cast<int>(i), j);
      v.a = partition[i].front();
      return v;
    }
  }

  for (std::size_t i = 0; i < partition.size(); ++i) {
    for (std::size_t j = i; j < partition.size(); ++j) {
      const auto prod = set_product_counts(g, partition[i], partition[j]);
      for (std::size_t k = 0; k < partition.size(); ++k) {
        const auto& z = partition[k];
        const auto c0 = prod[z.front()];
        for (Index w : z)
          if (prod[w] != c0) {
            auto v = violation(Violation::Kind::ModuleClosure,
                        "product of two classes is not constant on a class",
                        static_cast<int>(i), static_cast<int>(j), static_cast<int>(k));
            v.a = z.front();
            v.b = w;
            v.coeff_a = c0;
            v.coeff_b = prod[w];
            return v;
          }
      }
    }
  }
  return SRing(g, std::move(partition));
}

SRing make_sring(const AbelianGroup& g, Partition partition) {
  auto r = validate(g, std::move(partition));
  if (auto* v = std::get_if<Violation>(&r))
    throw ValidationError(std::string(to_string(v->kind)) + ": " + v->message);
  return std::get<SRing>(std::move(r));
}

Partition partition_from_labels(std::span<const std::uint32_t> labels) {
  std::uint32_t k = 0;
  for (auto l : labels) k = std::max(k, l + 1);
  Partition p(k);
  for (Index x = 0; x < labels.size(); ++x) p[labels[x]].push_back(x);
  std::erase_if(p, [](const Class& c) { return c.empty(); });
  return p;
}

SRing group_ring(const AbelianGroup& g) {
  Partition p(g.size());
  for (Index x = 0; x < g.size(); ++x) p[x] = {x};
  return make_sring(g, std::move(p));
}

SRing trivial_sring(const AbelianGroup& g) {
  Partition p{{AbelianGroup::identity()}};
  if (g.size() > 1) {
    Class rest(g.size() - 1);
    std::iota(rest.begin(), rest.end(), Index{1});
    p.push_back(std::move(rest));
  }
  return make_sring(g, std::move(p));
}

StructureConstants::StructureConstants(const SRing& a) : rank_(a.rank()), c_(rank_ * rank_ * rank_) {
  for (std::size_t x = 0; x < rank_; ++x)
    for (std::size_t y = 0; y < rank_; ++y) {
      const auto prod = set_product_counts(a.group(), a.basic_set(x), a.basic_set(y));
      for (std::size_t z = 0; z < rank_; ++z)
        c_[(z * rank_ + x) * rank_ + y] = prod[a.basic_set(z).front()];
    }
}

bool is_a_set(const SRing& a, std::span<const Index> set) {
  std::vector<std::size_t> hits(a.rank(), 0);
  std::vector<char> seen(a.group().size(), 0);
  for (Index x : set) {
    if (x >= a.group().size()) throw InvalidArgument("is_a_set: element out of range");
    if (seen[x]) continue;
    seen[x] = 1;
    ++hits[a.class_of(x)];
  }
  for (std::size_t i = 0; i < a.rank(); ++i)
    if (hits[i] != 0 && hits[i] != a.basic_set(i).size()) return false;
  return true;
}

bool is_a_subgroup(const SRing& a, const Subgroup& h) {
  return is_a_set(a, h.members()) && is_subgroup(a.group(), h.members());
}

std::vector<Subgroup> a_subgroups(const SRing& a) {
  std::vector<Subgroup> out;
  for (const auto& h : a.group().subgroups())
    if (is_a_set(a, h.members())) out.push_back(h);
  return out;
}

SRing restrict(const SRing& a, const Subgroup& h) {
  if (!is_a_subgroup(a, h)) throw InvalidArgument("restrict: not an A-subgroup");
  const auto pres = present(a.group(), h);
  std::vector<Index> local(a.group().size(), 0);
  for (Index i = 0; i < pres.embedding.size(); ++i) local[pres.embedding[i]] = i;
  Partition p;
  for (const auto& x : a.classes()) {
    if (!h.contains(x.front())) continue;
    Class c;
    for (Index y : x) c.push_back(local[y]);
    p.push_back(std::move(c));
  }
  return make_sring(pres.group, std::move(p));
}

bool is_a_section(const SRing& a, const SectionRef& s) {
  return s.l.is_subgroup_of(s.u) && is_a_subgroup(a, s.u) && is_a_subgroup(a, s.l);
}

SRing quotient_ring(const SRing& a, const SectionRef& s) {
  if (!is_a_section(a, s)) throw InvalidArgument("quotient_ring: not an A-section");
  const auto pres = present(a.group(), s.u);
  std::vector<Index> local(a.group().size(), 0);
  for (Index i = 0; i < pres.embedding.size(); ++i) local[pres.embedding[i]] = i;
  std::vector<Index> lmem;
  for (Index x : s.l.members()) lmem.push_back(local[x]);
  const auto q = quotient(pres.group, generated(pres.group, lmem));

  // Images of classes inside U, merged where they overlap.
  const std::size_t m = q.group.size();
  std::vector<std::uint32_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& x : a.classes()) {
    if (!s.u.contains(x.front())) continue;
    const auto r = find(q.projection(local[x.front()]));
    for (Index y : x) parent[find(q.projection(local[y]))] = r;
  }
  std::vector<std::uint32_t> labels(m);
  for (std::uint32_t i = 0; i < m; ++i) labels[i] = find(i);
  return make_sring(q.group, partition_from_labels(labels));
}

Class rational_conjugate(const AbelianGroup& g, std::span<const Index> set, long long m) {
  Class out;
  for (Index x : set) out.push_back(g.pow(x, m));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<int> coprime_residues(const AbelianGroup& g) {
  const int e = g.exponent();
  std::vector<int> out{1};
  for (int m = 2; m < e; ++m)
    if (std::gcd(m, e) == 1) out.push_back(m);
  return out;
}

bool is_rational(const AbelianGroup& g, std::span<const Index> set) {
  Class sorted(set.begin(), set.end());
  std::sort(sorted.begin(), sorted.end());
  for (int m : coprime_residues(g)) {
    const auto img = rational_conjugate(g, set, m);
    if (!std::includes(sorted.begin(), sorted.end(), img.begin(), img.end())) return false;
  }
  return true;
}

bool is_rational(const SRing& a) {
  return std::all_of(a.classes().begin(), a.classes().end(),
                     [&](const Class& x) { return is_rational(a.group(), x); });
}

Class power_set_p(const AbelianGroup& g, std::span<const Index> set, int p) {
  bool prime = p >= 2;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) prime = false;
  if (!prime || g.size() % static_cast<std::size_t>(p) != 0)
    throw InvalidArgument("power_set_p: p must be a prime dividing |G|");
  std::vector<Index> h;
  for (Index x = 0; x < g.size(); ++x)
    if (g.pow(x, p) == AbelianGroup::identity()) h.push_back(x);
  std::vector<char> in(g.size(), 0);
  for (Index x : set) in[x] = 1;
  Class out;
  for (Index x : set) {
    int count = 0;
    for (Index y : h)
      if (in[g.mul(y, x)]) ++count;
    if (count % p != 0) out.push_back(g.pow(x, p));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

bool is_primitive(const SRing& a) {
  if (a.group().size() == 1) return true;
  return a_subgroups(a).size() == 2;
}

bool is_quasi_thin(const SRing& a) {
  return std::all_of(a.classes().begin(), a.classes().end(),
                     [](const Class& x) { return x.size() <= 2; });
}

std::vector<std::uint32_t> orthogonals(const SRing& a) {
  if (!is_quasi_thin(a)) throw InvalidArgument("orthogonals: ring is not quasi-thin");
  const auto& g = a.group();
  std::vector<char> covered(g.size(), 0);
  std::vector<std::uint32_t> out;
  std::vector<std::vector<char>> products;
  for (const auto& y : a.classes()) {
    std::vector<char> yy(g.size(), 0);
    for (Index u : y)
      for (Index v : y) yy[g.mul(u, g.inv(v))] = 1;
    products.push_back(std::move(yy));
  }
  for (std::uint32_t i = 1; i < a.rank(); ++i) {
    const auto& x = a.basic_set(i);
    for (const auto& yy : products)
      if (std::all_of(x.begin(), x.end(), [&](Index t) { return yy[t] != 0; })) {
        out.push_back(i);
        break;
      }
  }
  return out;
}

ThreeGroupFamily three_group_family(const AbelianGroup& g) {
  auto log3 = [](int m) {
    int k = 0;
    while (m > 1 && m % 3 == 0) {
      m /= 3;
      ++k;
    }
    return m == 1 ? k : -1;
  };
  const auto& o = g.orders();
  ThreeGroupFamily f;
  if (o.size() == 1 && log3(o[0]) >= 1) {
    f.cyclic = true;
    f.n = log3(o[0]);
    f.c = g.generator(0);
    f.c1 = g.pow(f.c, o[0] / 3);
    return f;
  }
  if (o.size() == 2 && o[0] == 3 && log3(o[1]) >= 1) {
    f.n = log3(o[1]);
    f.s = g.generator(0);
    f.c = g.generator(1);
    f.c1 = g.pow(f.c, o[1] / 3);
    return f;
  }
  throw InvalidArgument("group " + g.to_string() + " is not Z3 x Z3^n or a cyclic 3-group");
}

bool is_highest(const AbelianGroup& g, std::span<const Index> set) {
  three_group_family(g);
  const int e = g.exponent();
  return std::any_of(set.begin(), set.end(), [&](Index x) { return g.order(x) == e; });
}

bool is_regular_set(const AbelianGroup& g, std::span<const Index> set) {
  three_group_family(g);
  if (set.empty()) return true;
  const int o = g.order(set.front());
  return std::all_of(set.begin(), set.end(), [&](Index x) { return g.order(x) == o; });
}

bool is_regular(const SRing& a) {
  const auto& g = a.group();
  for (const auto& x : a.classes())
    if (is_highest(g, x) && !is_regular_set(g, x)) return false;
  return true;
}

Subgroup ring_radical(const SRing& a) {
  const auto& g = a.group();
  Subgroup r = trivial_subgroup(g);
  for (const auto& x : a.classes())
    if (is_highest(g, x)) r = join(g, r, radical(g, x));
  return r;
}

std::vector<std::uint32_t> canonical_labels(std::span<const std::uint32_t> labels) {
  std::uint32_t k = 0;
  for (auto l : labels) k = std::max(k, l + 1);
  std::vector<std::uint32_t> remap(k, UINT32_MAX);
  std::vector<std::uint32_t> out(labels.size());
  std::uint32_t next = 0;
  for (std::size_t x = 0; x < labels.size(); ++x) {
    auto& r = remap[labels[x]];
    if (r == UINT32_MAX) r = next++;
    out[x] = r;
  }
  return out;
}

std::vector<std::uint32_t> image_labels(std::span<const std::uint32_t> labels, const GroupMap& f) {
  std::vector<std::uint32_t> moved(labels.size());
  for (Index x = 0; x < labels.size(); ++x) moved[f(x)] = labels[x];
  return canonical_labels(moved);
}

SRing image(const SRing& a, const GroupMap& f) {
  if (!f.is_automorphism() || !(f.source() == a.group()))
    throw InvalidArgument("image: not an automorphism of the ring's group");
  return make_sring(a.group(), partition_from_labels(image_labels(a.labels(), f)));
}

std::optional<GroupMap> cayley_isomorphic(const SRing& a, const SRing& b,
                                          std::span<const GroupMap> maps) {
  if (!(a.group() == b.group()))
    throw InvalidArgument("cayley_isomorphic: rings over different group specs");
  if (a.rank() != b.rank()) return std::nullopt;
  auto sizes = [](const SRing& r) {
    std::vector<std::size_t> s;
    for (const auto& c : r.classes()) s.push_back(c.size());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (sizes(a) != sizes(b)) return std::nullopt;
  for (const auto& f : maps) {
    bool ok = true;
    for (const auto& x : a.classes()) {
      const auto t = b.class_of(f(x.front()));
      if (b.basic_set(t).size() != x.size()) {
        ok = false;
        break;
      }
      for (Index y : x)
        if (b.class_of(f(y)) != t) {
          ok = false;
          break;
        }
      if (!ok) break;
    }
    if (ok) return f;
  }
  return std::nullopt;
}

std::optional<GroupMap> cayley_isomorphic(const SRing& a, const SRing& b) {
  if (!(a.group() == b.group()))
    throw InvalidArgument("cayley_isomorphic: rings over different group specs");
  return cayley_isomorphic(a, b, a.group().automorphisms());
}

}  // namespace schur
