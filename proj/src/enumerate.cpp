#include "schur/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "schur/groupring.hpp"
#include "schur/schurity.hpp"

namespace schur {

namespace {

constexpr std::int32_t kUnassigned = -1;

std::uint64_t mix(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  h *= 0xff51afd7ed558ccdULL;
  return h ^ (h >> 33);
}

// Residues mod e acting on G by power maps, with all subgroups of that unit group.
struct Multipliers {
  int exponent = 1;
  std::vector<int> units;
  std::vector<std::vector<int>> subgroups;  // sorted residues, each contains 1
  std::vector<std::vector<Index>> power;    // power[i][x] = x^units[i]
};

Multipliers make_multipliers(const AbelianGroup& g) {
  Multipliers m;
  m.exponent = g.exponent();
  m.units = coprime_residues(g);
  for (int u : m.units) {
    std::vector<Index> row(g.size());
    for (Index x = 0; x < g.size(); ++x) row[x] = g.pow(x, u);
    m.power.push_back(std::move(row));
  }
  auto close = [&](std::vector<int> gens) {
    std::set<int> s{1};
    std::vector<int> frontier{1};
    while (!frontier.empty()) {
      int a = frontier.back();
      frontier.pop_back();
      for (int b : gens) {
        int c = static_cast<int>((static_cast<long long>(a) * b) % m.exponent);
        if (m.exponent == 1) c = 1;
        if (s.insert(c).second) frontier.push_back(c);
      }
    }
    return std::vector<int>(s.begin(), s.end());
  };
  std::set<std::vector<int>> found{close({})};
  std::vector<std::vector<int>> queue(found.begin(), found.end());
  while (!queue.empty()) {
    auto h = queue.back();
    queue.pop_back();
    for (int u : m.units) {
      if (std::binary_search(h.begin(), h.end(), u)) continue;
      auto gens = h;
      gens.push_back(u);
      auto k = close(gens);
      if (found.insert(k).second) queue.push_back(k);
    }
  }
  m.subgroups.assign(found.begin(), found.end());
  return m;
}

struct Node {
  std::vector<std::int32_t> labels;       // class id or kUnassigned
  std::vector<Class> classes;             // completed classes
  std::vector<std::uint64_t> signature;   // module-closure fingerprint per element
  std::size_t unassigned = 0;
};

class Enumerator {
 public:
  Enumerator(const AbelianGroup& g, const EnumerateOptions& opt)
      : g_(g), opt_(opt), mult_(make_multipliers(g)), n_(g.size()) {
    unit_pos_.assign(mult_.exponent + 1, -1);
    for (std::size_t i = 0; i < mult_.units.size(); ++i) unit_pos_[mult_.units[i]] = int(i);
    inverse_.resize(n_);
    for (Index x = 0; x < n_; ++x) inverse_[x] = g.inv(x);
  }

  Node root() const {
    Node r;
    r.labels.assign(n_, kUnassigned);
    r.signature.assign(n_, 0);
    r.unassigned = n_;
    Node out = r;
    apply(out, {Class{AbelianGroup::identity()}});
    return out;
  }

  // Groups of classes to add at this node, one group per admissible choice
  // of the pivot's class.
  std::vector<std::vector<Class>> children(const Node& node, EnumerateStats& st) const {
    const Index pivot = first_unassigned(node);
    std::vector<char> allowed(n_, 0);
    for (Index x = pivot; x < n_; ++x)
      allowed[x] = node.labels[x] == kUnassigned &&
                   (!opt_.prune_module || node.signature[x] == node.signature[pivot]);
    std::vector<Class> cands =
        opt_.prune_multiplier ? multiplier_candidates(node, pivot, allowed)
                              : subset_candidates(pivot, allowed);
    std::stable_sort(cands.begin(), cands.end(), [](const Class& a, const Class& b) {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
    std::vector<std::vector<Class>> out;
    for (auto& x : cands) {
      ++st.candidates;
      std::vector<Class> group;
      if (opt_.prune_multiplier) {
        group = conjugates(x);
      } else if (opt_.prune_inverse) {
        Class inv = image(x, inverse_);
        if (inv == x) {
          group = {x};
        } else {
          bool ok = true;
          for (Index y : inv)
            if (node.labels[y] != kUnassigned || std::binary_search(x.begin(), x.end(), y))
              ok = false;
          if (!ok) {
            ++st.pruned_inverse;
            continue;
          }
          group = {x, inv};
        }
      } else {
        group = {x};
      }
      if (opt_.prune_multiplier && !group_consistent(node, group)) {
        ++st.pruned_multiplier;
        continue;
      }
      if (opt_.prune_module && !module_consistent(node, group)) {
        ++st.pruned_module;
        continue;
      }
      out.push_back(std::move(group));
    }
    return out;
  }

  void apply(Node& node, const std::vector<Class>& group) const {
    for (const auto& c : group) {
      const auto id = static_cast<std::int32_t>(node.classes.size());
      for (Index x : c) node.labels[x] = id;
      node.unassigned -= c.size();
      node.classes.push_back(c);
    }
    if (!opt_.prune_module) return;
    const std::size_t k = node.classes.size();
    const std::size_t first_new = k - group.size();
    for (std::size_t i = first_new; i < k; ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        auto counts = set_product_counts(g_, node.classes[i], node.classes[j]);
        const std::uint64_t tag = (std::uint64_t(i) << 32) | j;
        for (Index x = 0; x < n_; ++x)
          if (counts[x]) node.signature[x] = mix(node.signature[x], mix(tag, std::uint64_t(counts[x])));
      }
    }
  }

  // Runs the subtree below node, adding valid leaves to out.
  void descend(Node& node, std::map<std::vector<std::uint32_t>, SRing>& out, EnumerateStats& st) const {
    ++st.nodes;
    charge();
    if (node.unassigned == 0) {
      ++st.leaves;
      auto v = validate(g_, node.classes);
      if (auto* r = std::get_if<SRing>(&v)) {
        out.emplace(r->labels(), *r);
      } else {
        ++st.rejected_leaves;
      }
      return;
    }
    for (const auto& group : children(node, st)) {
      Node child = node;
      apply(child, group);
      descend(child, out, st);
    }
  }

 private:
  void charge() const {
    const std::size_t w = ++work_;
    if (w > opt_.node_budget) throw BudgetExceeded("enumeration: node budget exhausted");
    if (opt_.budget && (w & 1023) == 0) opt_.budget->check_deadline();
  }

  Index first_unassigned(const Node& node) const {
    for (Index x = 0; x < n_; ++x)
      if (node.labels[x] == kUnassigned) return x;
    return Index(n_);
  }

  static Class image(const Class& x, const std::vector<Index>& table) {
    Class out;
    out.reserve(x.size());
    for (Index a : x) out.push_back(table[a]);
    std::sort(out.begin(), out.end());
    return out;
  }

  std::vector<int> stabilizer(Index x) const {
    std::vector<int> s;
    for (std::size_t i = 0; i < mult_.units.size(); ++i)
      if (mult_.power[i][x] == x) s.push_back(mult_.units[i]);
    return s;
  }

  Class m_orbit(Index x, const std::vector<int>& m) const {
    Class out;
    for (int u : m) out.push_back(mult_.power[unit_pos_[u]][x]);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
  }

  // X meets every U-orbit in at most one M-orbit, where M is the stabilizer
  // of X in U; the pivot's M-orbit is mandatory.
  std::vector<Class> multiplier_candidates(const Node& node, Index pivot,
                                           const std::vector<char>& allowed) const {
    std::vector<char> seen(n_, 0);
    std::vector<Class> u_orbits;
    for (Index x = pivot; x < n_; ++x) {
      if (node.labels[x] != kUnassigned || seen[x]) continue;
      Class o = m_orbit(x, mult_.units);
      for (Index y : o) seen[y] = 1;
      u_orbits.push_back(std::move(o));
    }
    std::vector<Class> out;
    for (const auto& m : mult_.subgroups) {
      auto admissible = [&](Index x) {
        for (int u : stabilizer(x))
          if (!std::binary_search(m.begin(), m.end(), u)) return false;
        Class o = m_orbit(x, m);
        return std::all_of(o.begin(), o.end(), [&](Index y) { return allowed[y] != 0; });
      };
      if (!admissible(pivot)) continue;
      std::vector<std::vector<Class>> options;  // per other U-orbit, its M-orbit choices
      for (const auto& o : u_orbits) {
        if (std::binary_search(o.begin(), o.end(), pivot)) continue;
        std::vector<Class> opts;
        std::vector<char> used(n_, 0);
        for (Index x : o) {
          if (used[x]) continue;
          Class mo = m_orbit(x, m);
          for (Index y : mo) used[y] = 1;
          if (admissible(x)) opts.push_back(std::move(mo));
        }
        if (!opts.empty()) options.push_back(std::move(opts));
      }
      Class base = m_orbit(pivot, m);
      std::vector<std::size_t> choice(options.size(), 0);  // 0 = none, i = opts[i-1]
      while (true) {
        Class x = base;
        for (std::size_t i = 0; i < options.size(); ++i)
          if (choice[i]) x.insert(x.end(), options[i][choice[i] - 1].begin(), options[i][choice[i] - 1].end());
        std::sort(x.begin(), x.end());
        out.push_back(std::move(x));
        charge();
        std::size_t i = 0;
        for (; i < options.size(); ++i) {
          if (++choice[i] <= options[i].size()) break;
          choice[i] = 0;
        }
        if (i == options.size()) break;
      }
    }
    return out;
  }

  std::vector<Class> subset_candidates(Index pivot, const std::vector<char>& allowed) const {
    std::vector<Index> pool;
    for (Index x = pivot + 1; x < n_; ++x)
      if (allowed[x]) pool.push_back(x);
    if (pool.size() > 30) throw BudgetExceeded("enumeration: too many free elements without multiplier pruning");
    std::vector<Class> out;
    const std::uint64_t total = std::uint64_t(1) << pool.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      Class x{pivot};
      for (std::size_t i = 0; i < pool.size(); ++i)
        if (mask >> i & 1) x.push_back(pool[i]);
      out.push_back(std::move(x));
      charge();
    }
    return out;
  }

  std::vector<Class> conjugates(const Class& x) const {
    std::set<Class> s;
    for (const auto& row : mult_.power) s.insert(image(x, row));
    return std::vector<Class>(s.begin(), s.end());
  }

  bool group_consistent(const Node& node, const std::vector<Class>& group) const {
    std::vector<char> hit(n_, 0);
    for (const auto& c : group)
      for (Index y : c) {
        if (node.labels[y] != kUnassigned || hit[y]) return false;
        hit[y] = 1;
      }
    return true;
  }

  // New classes must each sit inside one signature cell, and every product
  // involving a new class must be constant on every completed class.
  bool module_consistent(const Node& node, const std::vector<Class>& group) const {
    for (const auto& c : group)
      for (Index y : c)
        if (node.signature[y] != node.signature[c.front()]) return false;
    std::vector<const Class*> all;
    for (const auto& c : node.classes) all.push_back(&c);
    for (const auto& c : group) all.push_back(&c);
    const std::size_t first_new = node.classes.size();
    for (std::size_t i = first_new; i < all.size(); ++i) {
      for (std::size_t j = 0; j <= i; ++j) {
        auto counts = set_product_counts(g_, *all[i], *all[j]);
        for (const Class* z : all) {
          const auto c0 = counts[z->front()];
          for (Index y : *z)
            if (counts[y] != c0) return false;
        }
      }
    }
    return true;
  }

  const AbelianGroup& g_;
  const EnumerateOptions& opt_;
  Multipliers mult_;
  std::size_t n_;
  std::vector<int> unit_pos_;
  std::vector<Index> inverse_;
  mutable std::atomic<std::size_t> work_{0};
};

void add_stats(EnumerateStats& a, const EnumerateStats& b) {
  a.nodes += b.nodes;
  a.candidates += b.candidates;
  a.pruned_inverse += b.pruned_inverse;
  a.pruned_multiplier += b.pruned_multiplier;
  a.pruned_module += b.pruned_module;
  a.leaves += b.leaves;
  a.rejected_leaves += b.rejected_leaves;
}

}  // namespace

EnumerateResult enumerate_srings(const AbelianGroup& g, const EnumerateOptions& opt) {
  if (g.size() > opt.max_order)
    throw BudgetExceeded("enumerate_srings: |G| = " + std::to_string(g.size()) +
                         " exceeds cap " + std::to_string(opt.max_order));
  const auto start = std::chrono::steady_clock::now();
  EnumerateResult result;
  Enumerator en(g, opt);
  Node root = en.root();
  std::map<std::vector<std::uint32_t>, SRing> found;
  if (root.unassigned == 0) {
    found.emplace(group_ring(g).labels(), group_ring(g));
  } else {
    ++result.stats.nodes;
    const auto top = en.children(root, result.stats);
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, unsigned(top.size())));
    std::vector<std::map<std::vector<std::uint32_t>, SRing>> parts(jobs);
    std::vector<EnumerateStats> stats(jobs);
    std::vector<std::exception_ptr> errors(jobs);
    std::atomic<std::size_t> next{0};
    auto worker = [&](unsigned w) {
      try {
        for (std::size_t i; (i = next++) < top.size();) {
          Node child = root;
          en.apply(child, top[i]);
          en.descend(child, parts[w], stats[w]);
        }
      } catch (...) {
        errors[w] = std::current_exception();
        next = top.size();
      }
    };
    if (jobs == 1) {
      worker(0);
    } else {
      std::vector<std::thread> threads;
      for (unsigned w = 0; w < jobs; ++w) threads.emplace_back(worker, w);
      for (auto& t : threads) t.join();
    }
    for (auto& e : errors)
      if (e) std::rethrow_exception(e);
    for (unsigned w = 0; w < jobs; ++w) {
      found.merge(parts[w]);
      add_stats(result.stats, stats[w]);
    }
  }
  result.rings.reserve(found.size());
  for (auto& [k, r] : found) result.rings.push_back(std::move(r));
  result.stats.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
}

std::vector<SRing> enumerate_srings_brute(const AbelianGroup& g) {
  if (g.size() > 9) throw InvalidArgument("enumerate_srings_brute: |G| must be at most 9");
  const std::size_t n = g.size();
  std::vector<SRing> out;
  std::vector<std::uint32_t> labels(n, 0);
  // Element x > 0 joins one of the blocks opened so far or opens a new one.
  auto place = [&](auto&& self, std::size_t x, std::uint32_t blocks) -> void {
    if (x == n) {
      auto v = validate(g, partition_from_labels(labels));
      if (auto* r = std::get_if<SRing>(&v)) out.push_back(std::move(*r));
      return;
    }
    for (std::uint32_t b = 1; b <= blocks + 1; ++b) {
      labels[x] = b;
      self(self, x + 1, std::max(blocks, b));
    }
  };
  place(place, 1, 0);
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

bool canonical_less(const SRing& a, const SRing& b) { return a.labels() < b.labels(); }

std::vector<CayleyClass> classify_up_to_cayley(const std::vector<SRing>& rings) {
  if (rings.empty()) return {};
  const auto& maps = rings.front().group().automorphisms();
  return classify_up_to_cayley(rings, maps);
}

std::vector<CayleyClass> classify_up_to_cayley(const std::vector<SRing>& rings,
                                               std::span<const GroupMap> maps) {
  std::map<std::vector<std::uint32_t>, std::size_t> orbits;
  for (const auto& r : rings) {
    if (!(r.group() == rings.front().group()))
      throw InvalidArgument("classify_up_to_cayley: rings over different groups");
    auto best = r.labels();
    for (const auto& f : maps) {
      auto l = image_labels(r.labels(), f);
      if (l < best) best = std::move(l);
    }
    ++orbits[best];
  }
  std::vector<CayleyClass> out;
  for (const auto& [labels, size] : orbits)
    out.push_back({make_sring(rings.front().group(), partition_from_labels(labels)), size});
  return out;
}

std::vector<SRing> cyclotomic_rings(const AbelianGroup& g) {
  const std::size_t n = g.size();
  const auto& aut = g.automorphisms();
  std::vector<std::uint32_t> discrete(n);
  std::iota(discrete.begin(), discrete.end(), 0u);
  std::set<std::vector<std::uint32_t>> seen{discrete};
  std::vector<std::vector<std::uint32_t>> queue{discrete};
  std::vector<std::uint32_t> parent(n);
  auto find = [&](std::uint32_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  while (!queue.empty()) {
    const auto labels = std::move(queue.back());
    queue.pop_back();
    for (const auto& f : aut) {
      bool inside = true;
      for (Index x = 0; x < n && inside; ++x) inside = labels[f(x)] == labels[x];
      if (inside) continue;
      // Components of the current classes joined with the cycles of f.
      std::vector<std::uint32_t> first(n, UINT32_MAX);
      for (Index x = 0; x < n; ++x) {
        parent[x] = x;
        if (first[labels[x]] == UINT32_MAX) first[labels[x]] = x;
      }
      auto unite = [&](std::uint32_t a, std::uint32_t b) { parent[find(a)] = find(b); };
      for (Index x = 0; x < n; ++x) {
        unite(x, first[labels[x]]);
        unite(f(x), x);
      }
      std::vector<std::uint32_t> joined(n);
      for (Index x = 0; x < n; ++x) joined[x] = find(x);
      joined = canonical_labels(joined);
      if (seen.insert(joined).second) queue.push_back(std::move(joined));
    }
  }
  std::vector<SRing> out;
  for (const auto& labels : seen) out.push_back(make_sring(g, partition_from_labels(labels)));
  std::sort(out.begin(), out.end(), canonical_less);
  return out;
}

std::vector<GroupMap> automorphisms_preserving(const AbelianGroup& g, const Subgroup& h) {
  std::vector<GroupMap> out;
  for (const auto& f : g.automorphisms()) {
    bool ok = true;
    for (Index x : h.members())
      if (!h.contains(f(x))) ok = false;
    if (ok) out.push_back(f);
  }
  return out;
}

RingPredicate ring_predicate(const std::string& raw) {
  if (!raw.empty() && raw[0] == '!') {
    auto p = ring_predicate(raw.substr(1));
    return [p](const SRing& a) { return !p(a); };
  }
  if (raw == "always") return [](const SRing&) { return true; };
  if (raw == "regular") return [](const SRing& a) { return is_regular(a); };
  if (raw == "nonregular") return [](const SRing& a) { return !is_regular(a); };
  if (raw == "trivial-radical") return [](const SRing& a) { return ring_radical(a).size() == 1; };
  if (raw == "nontrivial-radical") return [](const SRing& a) { return ring_radical(a).size() > 1; };
  if (raw == "rational") return [](const SRing& a) { return is_rational(a); };
  if (raw == "quasi-thin") return [](const SRing& a) { return is_quasi_thin(a); };
  if (raw == "primitive") return [](const SRing& a) { return is_primitive(a); };
  if (raw == "schurian") return [](const SRing& a) { return is_schurian(a).schurian; };
  if (raw == "c1-subgroup")
    return [](const SRing& a) {
      const auto fam = three_group_family(a.group());
      const Index c1[] = {fam.c1};
      return is_a_subgroup(a, generated(a.group(), c1));
    };
  throw InvalidArgument("unknown predicate '" + raw + "'");
}

std::vector<std::string> predicate_names() {
  return {"always",   "regular",    "nonregular", "trivial-radical", "nontrivial-radical",
          "rational", "quasi-thin", "primitive",  "schurian",        "c1-subgroup"};
}

std::vector<SRing> filter_rings(const std::vector<SRing>& rings, const RingPredicate& pred) {
  std::vector<SRing> out;
  for (const auto& r : rings)
    if (pred(r)) out.push_back(r);
  return out;
}

std::vector<SRing> filter_rings(const std::vector<SRing>& rings, const std::string& names) {
  std::vector<RingPredicate> preds;
  std::stringstream ss(names);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) preds.push_back(ring_predicate(item));
  return filter_rings(rings, [&](const SRing& a) {
    return std::all_of(preds.begin(), preds.end(), [&](const RingPredicate& p) { return p(a); });
  });
}

}  // namespace schur
