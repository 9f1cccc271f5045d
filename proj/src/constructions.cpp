#include "schur/constructions.hpp"

#include <algorithm>
#include <numeric>

namespace schur {

SRing cyclotomic(const AbelianGroup& g, std::span<const GroupMap> k) {
  const std::size_t n = g.size();
  std::vector<std::uint32_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0u);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& f : k) {
    if (!f.is_automorphism() || !(f.source() == g))
      throw InvalidArgument("cyclotomic: map is not an automorphism of " + g.to_string());
    for (Index x = 0; x < n; ++x) {
      const auto a = find(x), b = find(f(x));
      if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
  }
  std::vector<std::uint32_t> labels(n);
  for (Index x = 0; x < n; ++x) labels[x] = find(x);
  return make_sring(g, partition_from_labels(labels));
}

namespace {

AbelianGroup product_group(const AbelianGroup& g1, const AbelianGroup& g2) {
  auto orders = g1.orders();
  orders.insert(orders.end(), g2.orders().begin(), g2.orders().end());
  return AbelianGroup(std::move(orders));
}

}  // namespace

SRing tensor(const SRing& a1, const SRing& a2) {
  const auto g = product_group(a1.group(), a2.group());
  const Index n2 = static_cast<Index>(a2.group().size());
  Partition p;
  for (const auto& x1 : a1.classes())
    for (const auto& x2 : a2.classes()) {
      Class c;
      for (Index u : x1)
        for (Index v : x2) c.push_back(u * n2 + v);
      p.push_back(std::move(c));
    }
  return make_sring(g, std::move(p));
}

SRing wreath(const SRing& a1, const SRing& a2) {
  const auto g = product_group(a1.group(), a2.group());
  const Index n1 = static_cast<Index>(a1.group().size());
  const Index n2 = static_cast<Index>(a2.group().size());
  Partition p;
  for (const auto& x1 : a1.classes()) {
    Class c;
    for (Index u : x1) c.push_back(u * n2);
    p.push_back(std::move(c));
  }
  for (std::size_t j = 1; j < a2.rank(); ++j) {
    Class c;
    for (Index u = 0; u < n1; ++u)
      for (Index v : a2.basic_set(static_cast<std::uint32_t>(j))) c.push_back(u * n2 + v);
    p.push_back(std::move(c));
  }
  return make_sring(g, std::move(p));
}

bool is_generalized_wreath(const SRing& a, const Subgroup& u, const Subgroup& l) {
  if (!is_a_section(a, SectionRef{u, l}))
    throw InvalidArgument("is_generalized_wreath: U/L is not an A-section");
  const auto& g = a.group();
  for (const auto& x : a.classes()) {
    if (u.contains(x.front())) continue;
    std::vector<char> in(g.size(), 0);
    for (Index y : x) in[y] = 1;
    for (Index y : x)
      for (Index h : l.members())
        if (!in[g.mul(y, h)]) return false;
  }
  return true;
}

std::vector<SectionRef> gw_sections(const SRing& a) {
  const auto subs = a_subgroups(a);
  const std::size_t n = a.group().size();
  std::vector<SectionRef> out;
  for (const auto& u : subs) {
    if (u.size() == n) continue;
    for (const auto& l : subs) {
      if (l.size() == 1 || !l.is_subgroup_of(u)) continue;
      if (is_generalized_wreath(a, u, l)) out.push_back({u, l});
    }
  }
  return out;
}

const std::array<Table1Row, 10>& table1_rows() {
  // Words are {s, x, c1} exponents; x_image first, as in "(x,s) -> (A,B)".
  static const std::array<Table1Row, 10> rows = {{
      {"K0", {{{0, 1, 0}, {1, 0, 0}}}, 1},
      {"K1", {{{0, 1, 0}, {2, 0, 0}}}, 2},
      {"K2", {{{0, -1, 0}, {1, 0, 0}}}, 2},
      {"K3", {{{0, -1, 0}, {1, 0, 0}}, {{0, 1, 0}, {2, 0, 0}}}, 4},
      {"K4", {{{0, -1, 0}, {2, 0, 0}}}, 2},
      {"K5", {{{1, -1, 0}, {1, 0, 0}}}, 2},
      {"K6", {{{1, 1, 0}, {1, 0, 1}}}, 3},
      {"K7", {{{1, 1, 0}, {1, 0, 1}}, {{0, 1, 0}, {2, 0, 1}}}, 6},
      {"K8", {{{1, 1, 0}, {1, 0, 2}}, {{0, -1, 0}, {1, 0, 1}}}, 6},
      {"K9", {{{1, 1, 0}, {1, 0, 2}}, {{0, -1, 0}, {2, 0, 0}}}, 6},
  }};
  return rows;
}

Index evaluate(const AbelianGroup& d, const Word& w, int x_power) {
  const auto f = three_group_family(d);
  if (f.cyclic) throw InvalidArgument("evaluate: words live in Z3 x Z3^n");
  if (x_power % 3 == 0) throw InvalidArgument("evaluate: x must generate C");
  const Index x = d.pow(f.c, x_power);
  return d.mul(d.mul(d.pow(f.s, w.s), d.pow(x, w.x)), d.pow(f.c1, w.c1));
}

std::vector<GroupMap> table1_generators(int row, int n, int x_power) {
  if (row < 0 || row > 9) throw InvalidArgument("table1: row must be in 0..9");
  if (n < 2) throw InvalidArgument("table1: n must be at least 2");
  if (x_power % 3 == 0) throw InvalidArgument("table1: x must generate C");
  int m = 1;
  for (int i = 0; i < n; ++i) m *= 3;
  AbelianGroup d({3, m});
  // c = x^k with k x_power = 1 mod 3^n, so f(c) = f(x)^k.
  int k = 1;
  while (((static_cast<long long>(k) * x_power) % m + m) % m != 1) ++k;
  std::vector<GroupMap> out;
  for (const auto& gen : table1_rows()[row].generators) {
    const std::array<Index, 2> images{evaluate(d, gen.s_image, x_power),
                                      d.pow(evaluate(d, gen.x_image, x_power), k)};
    auto f = map_from_generator_images(d, images);
    if (!f.is_automorphism())
      throw Error("table1: generator of " + table1_rows()[row].name + " is not bijective");
    out.push_back(std::move(f));
  }
  return out;
}

SRing table1(int row, int n, int x_power) {
  const auto gens = table1_generators(row, n, x_power);
  const auto& d = gens.front().source();
  const auto k = generate_automorphism_group(d, gens);
  const auto& r = table1_rows()[row];
  if (k.size() != r.size)
    throw Error("table1: |<" + r.name + ">| = " + std::to_string(k.size()) +
                " but the listed size is " + std::to_string(r.size));
  return cyclotomic(d, gens);
}

}  // namespace schur
