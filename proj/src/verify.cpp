#include "schur/verify.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <map>
#include <memory>
#include <mutex>
#include <set>
#include <sstream>
#include <thread>

#include "schur/constructions.hpp"
#include "schur/groupring.hpp"
#include "schur/schurity.hpp"

namespace schur {

namespace {

using Labels = std::vector<std::uint32_t>;

// Progress text survives a BudgetExceeded so the claim can say how far it got.
struct Progress {
  std::string text;
};

Claim run_claim(const std::string& id, const VerifyOptions& opt,
                const std::function<bool(std::string&, Progress&)>& body) {
  Claim c;
  c.id = id;
  Progress progress;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    c.status = body(c.detail, progress) ? ClaimStatus::Pass : ClaimStatus::Fail;
  } catch (const BudgetExceeded& e) {
    c.status = ClaimStatus::Budget;
    c.detail = std::string(e.what());
    if (!progress.text.empty()) c.detail += "; " + progress.text;
  } catch (const std::exception& e) {
    c.status = ClaimStatus::Fail;
    c.detail = std::string("error: ") + e.what();
  }
  c.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (opt.on_claim) opt.on_claim(c);
  return c;
}

SearchOptions search_options(const VerifyOptions& opt) {
  SearchOptions s;
  s.search_budget = opt.budget.search_budget;
  s.chain_budget = opt.budget.chain_budget;
  s.max_order = opt.budget.max_order;
  s.budget = &opt.budget;
  return s;
}

// Runs f(i) for i < n on up to `jobs` threads; the first exception wins and
// is rethrown after all workers stop.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr failure;
  std::mutex m;
  auto worker = [&] {
    while (!stop) {
      const std::size_t i = next++;
      if (i >= n) return;
      try {
        f(i);
      } catch (...) {
        std::lock_guard lock(m);
        if (!failure) failure = std::current_exception();
        stop = true;
      }
    }
  };
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  if (failure) std::rethrow_exception(failure);
}

using RingList = std::shared_ptr<const std::vector<SRing>>;

RingList rings_of(const AbelianGroup& g, const VerifyOptions& opt) {
  static std::mutex m;
  static std::map<std::vector<int>, RingList> cache;
  {
    std::lock_guard lock(m);
    if (auto it = cache.find(g.orders()); it != cache.end()) return it->second;
  }
  EnumerateOptions eo;
  eo.jobs = opt.jobs;
  eo.max_order = std::min(eo.max_order, opt.budget.max_order);
  eo.node_budget = opt.budget.search_budget;
  eo.budget = &opt.budget;
  auto list = std::make_shared<const std::vector<SRing>>(enumerate_srings(g, eo).rings);
  std::lock_guard lock(m);
  cache.emplace(g.orders(), list);
  return list;
}

std::string ring_tag(const SRing& a, std::size_t i) {
  return a.group().to_string() + " ring #" + std::to_string(i) + " (rank " + std::to_string(a.rank()) + ")";
}

std::set<Labels> representative_labels(const std::vector<SRing>& rings, std::span<const GroupMap> maps) {
  std::set<Labels> out;
  for (const auto& c : classify_up_to_cayley(rings, maps)) out.insert(c.representative.labels());
  return out;
}

// Residues (i, j) in Z_3 x Z_3 stand for s^i c1^j.
using Form = std::vector<std::vector<std::pair<int, int>>>;

const std::array<Form, 9>& e_forms() {
  static const std::array<Form, 9> forms = {{
      {{{0, 1}}, {{0, 2}}, {{1, 0}, {1, 1}, {1, 2}, {2, 0}, {2, 1}, {2, 2}}},
      {{{0, 1}}, {{0, 2}}, {{1, 0}}, {{1, 1}}, {{1, 2}}, {{2, 0}}, {{2, 1}}, {{2, 2}}},
      {{{0, 1}}, {{0, 2}}, {{1, 0}, {1, 1}, {1, 2}}, {{2, 0}, {2, 1}, {2, 2}}},
      {{{0, 1}}, {{0, 2}}, {{1, 0}, {2, 0}}, {{1, 1}, {2, 1}}, {{1, 2}, {2, 2}}},
      {{{0, 1}, {0, 2}}, {{1, 0}}, {{2, 0}}, {{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}},
      {{{0, 1}, {0, 2}}, {{1, 0}, {1, 1}, {1, 2}}, {{2, 0}, {2, 1}, {2, 2}}},
      {{{0, 1}, {0, 2}}, {{1, 0}, {2, 0}}, {{1, 1}, {2, 2}}, {{1, 2}, {2, 1}}},
      {{{0, 1}, {0, 2}}, {{1, 0}, {2, 0}}, {{1, 1}, {2, 2}, {1, 2}, {2, 1}}},
      {{{0, 1}, {0, 2}}, {{1, 0}, {2, 0}, {1, 1}, {2, 2}, {1, 2}, {2, 1}}},
  }};
  return forms;
}

SRing form_ring(const AbelianGroup& e, const Form& f) {
  Partition p{{0}};
  for (const auto& cls : f) {
    Class c;
    for (auto [i, j] : cls) c.push_back(e.index(Element{{i, j}}));
    p.push_back(std::move(c));
  }
  return make_sring(e, std::move(p));
}

// Checks every ring of every group with `prop`; an empty reason means the
// ring is fine (or the property does not apply).
using RingCheck = std::function<std::string(const SRing&)>;

bool check_all_rings(const std::vector<AbelianGroup>& groups, const VerifyOptions& opt,
                     const std::function<bool(const AbelianGroup&)>& applies, const RingCheck& prop,
                     std::string& detail, Progress& progress) {
  std::size_t checked = 0, group_count = 0;
  for (const auto& g : groups) {
    if (!applies(g)) continue;
    const auto rings = rings_of(g, opt);
    std::mutex m;
    std::string failure;
    parallel_for(rings->size(), opt.jobs, [&](std::size_t i) {
      opt.budget.check_deadline();
      auto why = prop((*rings)[i]);
      if (why.empty()) return;
      std::lock_guard lock(m);
      if (failure.empty()) failure = ring_tag((*rings)[i], i) + ": " + why;
    });
    if (!failure.empty()) {
      detail = "violation over " + failure;
      return false;
    }
    checked += rings->size();
    ++group_count;
    progress.text = std::to_string(checked) + " rings over " + std::to_string(group_count) + " groups checked";
  }
  detail = std::to_string(checked) + " rings over " + std::to_string(group_count) + " groups, no violations";
  return true;
}

std::vector<std::vector<Index>> a_set_sample(const SRing& a) {
  std::vector<std::vector<Index>> out;
  const std::size_t r = a.rank();
  auto union_of = [&](auto&& pick) {
    std::vector<Index> s;
    for (std::uint32_t i = 0; i < r; ++i)
      if (pick(i)) s.insert(s.end(), a.basic_set(i).begin(), a.basic_set(i).end());
    std::sort(s.begin(), s.end());
    return s;
  };
  if (r <= 8) {
    for (std::size_t mask = 1; mask < (std::size_t{1} << r); ++mask)
      out.push_back(union_of([&](std::uint32_t i) { return (mask >> i) & 1; }));
    return out;
  }
  for (std::uint32_t i = 0; i < r; ++i) {
    out.push_back(a.basic_set(i));
    out.push_back(union_of([&](std::uint32_t k) { return k != i; }));
    for (std::uint32_t j = i + 1; j < r; ++j) out.push_back(union_of([&](std::uint32_t k) { return k == i || k == j; }));
  }
  out.push_back(union_of([](std::uint32_t) { return true; }));
  return out;
}

std::vector<int> prime_divisors(std::size_t n) {
  std::vector<int> ps;
  for (int p = 2; static_cast<std::size_t>(p) * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

bool is_prime_power(std::size_t n, int& p) {
  const auto ps = prime_divisors(n);
  if (ps.size() != 1) return false;
  p = ps.front();
  return true;
}

bool in_d_family(const AbelianGroup& g) {
  const auto& o = g.orders();
  if (o.size() != 2 || o[0] != 3 || o[1] < 9) return false;
  int p = 0;
  return is_prime_power(static_cast<std::size_t>(o[1]), p) && p == 3;
}

// ---- property checks ----

std::string prop_triple_identity(const SRing& a) {
  StructureConstants c(a);
  const auto r = a.rank();
  for (std::uint32_t x = 0; x < r; ++x)
    for (std::uint32_t y = 0; y < r; ++y)
      for (std::uint32_t z = 0; z < r; ++z) {
        const auto sx = static_cast<std::int64_t>(a.basic_set(x).size());
        const auto sy = static_cast<std::int64_t>(a.basic_set(y).size());
        const auto sz = static_cast<std::int64_t>(a.basic_set(z).size());
        const auto v1 = sz * c(a.inverse_class(z), x, y);
        const auto v2 = sx * c(a.inverse_class(x), y, z);
        const auto v3 = sy * c(a.inverse_class(y), z, x);
        if (v1 != v2 || v2 != v3)
          return "classes " + std::to_string(x) + "," + std::to_string(y) + "," + std::to_string(z);
      }
  return {};
}

std::string prop_product_a_set(const SRing& a) {
  const auto& g = a.group();
  for (std::uint32_t x = 0; x < a.rank(); ++x)
    for (std::uint32_t y = 0; y < a.rank(); ++y) {
      const auto counts = set_product_counts(g, a.basic_set(x), a.basic_set(y));
      std::vector<Index> support;
      for (Index z = 0; z < g.size(); ++z)
        if (counts[z] != 0) support.push_back(z);
      if (!is_a_set(a, support)) return "XY not an A-set for classes " + std::to_string(x) + "," + std::to_string(y);
      if ((a.basic_set(x).size() == 1 || a.basic_set(y).size() == 1) &&
          support.size() != a.basic_set(a.class_of(support.front())).size())
        return "XY with a singleton factor is not basic for classes " + std::to_string(x) + "," + std::to_string(y);
    }
  return {};
}

std::string prop_coset_intersection(const SRing& a) {
  const auto& g = a.group();
  for (const auto& h : a_subgroups(a)) {
    std::vector<Index> coset(g.size());
    for (Index x = 0; x < g.size(); ++x) {
      Index least = x;
      for (Index m : h.members()) least = std::min(least, g.mul(x, m));
      coset[x] = least;
    }
    for (const auto& cls : a.classes()) {
      std::map<Index, std::size_t> hits;
      for (Index x : cls) ++hits[coset[x]];
      for (const auto& [k, v] : hits)
        if (v != hits.begin()->second)
          return "class of " + std::to_string(cls.front()) + " meets cosets of a subgroup of order " +
                 std::to_string(h.size()) + " unevenly";
    }
  }
  return {};
}

std::string prop_generated_and_radical(const SRing& a) {
  const auto& g = a.group();
  for (const auto& s : a_set_sample(a)) {
    if (!is_a_subgroup(a, generated(g, s))) return "<X> is not an A-subgroup";
    if (!is_a_subgroup(a, radical(g, s))) return "rad(X) is not an A-subgroup";
  }
  return {};
}

std::string prop_rational_conjugates(const SRing& a) {
  const auto& g = a.group();
  const auto units = coprime_residues(g);
  for (const auto& cls : a.classes())
    for (int m : units) {
      const auto img = rational_conjugate(g, cls, m);
      if (img != a.basic_set(a.class_of(img.front())))
        return "X^(" + std::to_string(m) + ") is not basic for the class of " + std::to_string(cls.front());
    }
  return {};
}

std::string prop_power_sets(const SRing& a) {
  const auto& g = a.group();
  const auto ps = prime_divisors(g.size());
  for (const auto& s : a_set_sample(a))
    for (int p : ps)
      if (!is_a_set(a, power_set_p(g, s, p))) return "X^[" + std::to_string(p) + "] is not an A-set";
  return {};
}

std::string prop_separating_group(const SRing& a) {
  const auto& g = a.group();
  for (const auto& cls : a.classes()) {
    if (cls.size() == 1 && cls.front() == 0) continue;
    for (const auto& h : g.subgroups()) {
      std::vector<Index> outside;
      bool meets = false;
      for (Index x : cls) {
        if (h.contains(x))
          meets = true;
        else
          outside.push_back(x);
      }
      if (!meets || outside.empty()) continue;
      std::vector<char> in_out(g.size(), 0);
      for (Index x : outside) in_out[x] = 1;
      bool separating = true;
      for (Index gen : h.generators()) {
        for (Index x : outside)
          if (!in_out[g.mul(x, gen)]) {
            separating = false;
            break;
          }
        if (!separating) break;
      }
      if (!separating) continue;
      const auto gen = generated(g, cls);
      const auto rad = radical(g, cls);
      std::vector<Index> expect;
      for (Index x : gen.members())
        if (!rad.contains(x)) expect.push_back(x);
      if (expect != cls) return "class of " + std::to_string(cls.front()) + " is not <X> \\ rad(X)";
      if (!rad.is_subgroup_of(intersection(h, gen))) return "rad(X) not inside H and <X>";
    }
  }
  return {};
}

std::string prop_order_argument(const SRing& a) {
  const auto& g = a.group();
  const auto f = three_group_family(g);
  for (const auto& cls : a.classes()) {
    int low = 0;
    for (Index x : cls) {
      const int o = g.order(x);
      if (o >= 3 && (low == 0 || o < low)) low = o;
    }
    if (low == 0) continue;
    for (Index x : cls)
      if (g.order(x) > low && a.class_of(g.mul(x, f.c1)) != a.class_of(x))
        return "class of " + std::to_string(cls.front()) + " misses a c1-translate";
    for (Index x : cls)
      if (g.order(x) > low && a.class_of(g.mul(x, g.mul(f.c1, f.c1))) != a.class_of(x))
        return "class of " + std::to_string(cls.front()) + " misses a c1^2-translate";
  }
  return {};
}

std::string prop_cyclic_sets(const SRing& a) {
  const auto& g = a.group();
  const auto units = coprime_residues(g);
  for (const auto& cls : a.classes()) {
    std::vector<int> stab;
    for (int m : units)
      if (rational_conjugate(g, cls, m) == cls) stab.push_back(m);
    std::set<Index> orbit;
    for (int m : stab) orbit.insert(g.pow(cls.front(), m));
    if (std::equal(orbit.begin(), orbit.end(), cls.begin(), cls.end())) continue;
    const auto gen = generated(g, cls);
    const auto rad = radical(g, cls);
    std::vector<Index> expect;
    for (Index x : gen.members())
      if (!rad.contains(x)) expect.push_back(x);
    if (expect != cls) return "class of " + std::to_string(cls.front()) + " is neither an orbit nor <X> \\ rad(X)";
  }
  return {};
}

std::string prop_quasi_thin(const SRing& a, const SearchOptions& so) {
  if (!is_quasi_thin(a)) return {};
  if (!is_schurian(a, so).schurian) return "quasi-thin but not schurian";
  if (orthogonals(a).size() >= 2 &&
      !scheme_automorphisms(a, so).group.point_stabilizer(0).has_faithful_regular_orbit())
    return "two orthogonals but no faithful regular orbit of the stabilizer";
  return {};
}

bool primitive_rank_two_applies(const AbelianGroup& g) {
  int p = 0;
  if (!is_prime_power(g.size(), p)) return false;
  const auto& o = g.orders();
  if (o.size() > 2) return false;
  const int a = o.back(), b = o.size() == 2 ? o.front() : 1;
  return a > b && a > p;
}

std::string prop_primitive_rank_two(const SRing& a) {
  if (is_primitive(a) && a.rank() != 2) return "primitive of rank " + std::to_string(a.rank());
  return {};
}

// Lowest layer of a basic set with trivial radical over Z_3 x Z_{3^n}, for
// least order at least 9. At order 3 the shape fails already for D \ {e}.
std::string prop_lowest_layer(const SRing& a) {
  const auto& g = a.group();
  const int cn = g.orders()[1];
  auto c_inv = [&](int j) { return (cn - j) % cn; };
  auto fits = [&](const std::vector<int>& u, int kind) {
    if (u.size() == 1) return kind == 1 || u[0] == c_inv(u[0]);
    return kind == 2 && u.size() == 2 && u[1] == c_inv(u[0]) && u[0] != u[1];
  };
  for (const auto& cls : a.classes()) {
    if (cls.front() == 0) continue;
    if (radical(g, cls).size() != 1) continue;
    int low = g.order(cls.front());
    for (Index x : cls) low = std::min(low, g.order(x));
    if (low < 9) continue;
    std::vector<int> inner;
    std::vector<std::pair<int, int>> outer;  // (s-exponent, C-residue)
    for (Index x : cls) {
      if (g.order(x) != low) continue;
      const auto e = g.element(x);
      if (e.residues[0] == 0)
        inner.push_back(e.residues[1]);
      else
        outer.emplace_back(e.residues[0], e.residues[1]);
    }
    bool ok = false;
    for (int kind = 1; kind <= 2 && !ok; ++kind) {
      if (!inner.empty() && !fits(inner, kind)) continue;
      if (outer.size() > 4) continue;
      for (std::size_t mask = 0; mask < (std::size_t{1} << outer.size()) && !ok; ++mask) {
        bool good = true;
        for (int side = 0; side < 2 && good; ++side) {
          std::vector<int> u;
          for (std::size_t i = 0; i < outer.size(); ++i)
            if (((mask >> i) & 1) == static_cast<std::size_t>(side)) u.push_back(outer[i].second);
          if (u.empty()) continue;
          std::sort(u.begin(), u.end());
          if (std::adjacent_find(u.begin(), u.end()) != u.end()) good = false;
          if (u.size() == 2 && u[1] != c_inv(u[0])) std::swap(u[0], u[1]);
          good = good && fits(u, kind);
        }
        ok = good;
      }
    }
    if (!ok) return "lowest layer of the class of " + std::to_string(cls.front()) + " has the wrong shape";
  }
  return {};
}

}  // namespace

AbelianGroup family_group(int n) {
  if (n < 1 || n > 6) throw InvalidArgument("family_group: n must be in 1..6");
  int m = 1;
  for (int i = 0; i < n; ++i) m *= 3;
  return AbelianGroup({3, m});
}

std::vector<AbelianGroup> abelian_groups_up_to(std::size_t max_order) {
  std::vector<AbelianGroup> out;
  std::vector<int> factors;
  // Invariant factors d1 | d2 | ... with d1 > 1, built from the front.
  std::function<void(std::size_t, int)> extend = [&](std::size_t rest, int last) {
    if (rest == 1) {
      out.emplace_back(factors);
      return;
    }
    for (std::size_t d = 2; d <= rest; ++d) {
      if (rest % d != 0 || d % static_cast<std::size_t>(last) != 0) continue;
      // Every later factor is a multiple of d, so d must divide what remains.
      if ((rest / d) % d != 0 && rest != d) continue;
      factors.push_back(static_cast<int>(d));
      extend(rest / d, static_cast<int>(d));
      factors.pop_back();
    }
  };
  for (std::size_t n = 2; n <= max_order; ++n) extend(n, 1);
  return out;
}

Claim check_oracle_equivalence(const VerifyOptions& opt) {
  return run_claim("oracle-equivalence", opt, [&](std::string& detail, Progress& progress) {
    std::ostringstream os;
    for (const auto& orders : std::vector<std::vector<int>>{{2}, {3}, {4}, {2, 2}, {9}, {3, 3}}) {
      AbelianGroup g(orders);
      const auto fast = rings_of(g, opt);
      const auto slow = enumerate_srings_brute(g);
      if (*fast != slow) {
        detail = g.to_string() + ": backtracking found " + std::to_string(fast->size()) +
                 " rings, brute force " + std::to_string(slow.size());
        return false;
      }
      os << g.to_string() << ' ' << fast->size() << "; ";
      progress.text = os.str();
    }
    detail = "equal sets: " + os.str();
    return true;
  });
}

Claim check_e_forms(const VerifyOptions& opt) {
  return run_claim("e-forms", opt, [&](std::string& detail, Progress&) {
    AbelianGroup e({3, 3});
    const auto all = rings_of(e, opt);
    const auto c1 = generated(e, std::vector<Index>{e.index(Element{{0, 1}})});
    const auto with_c1 = filter_rings(*all, "c1-subgroup");
    const auto maps = automorphisms_preserving(e, c1);
    const auto classes = representative_labels(with_c1, maps);

    std::set<Labels> forms;
    for (const auto& f : e_forms()) {
      const auto ring = form_ring(e, f);
      if (!is_a_subgroup(ring, c1)) {
        detail = "a listed form does not contain C1 as an A-subgroup";
        return false;
      }
      forms.insert(*representative_labels({ring}, maps).begin());
    }
    const auto full = classify_up_to_cayley(with_c1).size();
    detail = std::to_string(all->size()) + " rings, " + std::to_string(with_c1.size()) + " with C1 an A-subgroup, " +
             std::to_string(classes.size()) + " classes under C1-preserving maps, " + std::to_string(forms.size()) +
             " distinct listed forms, " + std::to_string(full) + " classes under all of Aut";
    return forms.size() == 9 && classes == forms;
  });
}

Claim check_all_schurian(int n, const VerifyOptions& opt) {
  return run_claim("schurian-n" + std::to_string(n), opt, [&](std::string& detail, Progress& progress) {
    const auto g = family_group(n);
    const auto rings = rings_of(g, opt);
    const auto so = search_options(opt);
    std::atomic<std::size_t> done{0};
    std::mutex m;
    std::string failure;
    try {
      parallel_for(rings->size(), opt.jobs, [&](std::size_t i) {
        if (!is_schurian((*rings)[i], so).schurian) {
          std::lock_guard lock(m);
          if (failure.empty()) failure = ring_tag((*rings)[i], i) + " is not schurian";
        }
        ++done;
      });
    } catch (const BudgetExceeded&) {
      progress.text = std::to_string(done.load()) + " of " + std::to_string(rings->size()) + " rings schurian so far";
      throw;
    }
    if (!failure.empty()) {
      detail = failure;
      return false;
    }
    detail = std::to_string(rings->size()) + " rings over " + g.to_string() + ", all schurian";
    return true;
  });
}

Claim check_table1(int n, const VerifyOptions& opt) {
  return run_claim("table1-n" + std::to_string(n), opt, [&](std::string& detail, Progress& progress) {
    const auto d = family_group(n);
    const auto so = search_options(opt);
    std::ostringstream sizes;
    for (int x_power : {1, -1})
      for (int row = 0; row < 10; ++row) {
        const auto where = "row " + std::to_string(row) + (x_power == 1 ? " (x = c)" : " (x = c^-1)");
        const auto gens = table1_generators(row, n, x_power);
        const auto k = generate_automorphism_group(d, gens);
        const auto listed = table1_rows()[row].size;
        if (k.size() != listed) {
          detail = where + ": |<K>| = " + std::to_string(k.size()) + ", listed " + std::to_string(listed);
          return false;
        }
        const auto a = cyclotomic(d, gens);
        if (!std::holds_alternative<SRing>(validate(d, a.classes()))) {
          detail = where + " does not validate";
          return false;
        }
        if (!is_regular(a) || ring_radical(a).size() != 1) {
          detail = where + " is not regular with trivial radical";
          return false;
        }
        if (!is_schurian(a, so).schurian) {
          detail = where + " is not schurian";
          return false;
        }
        if (x_power == 1) sizes << (row ? "," : "") << k.size();
        progress.text = where + " passes";
      }
    detail = "|<K_i>| = " + sizes.str() + "; all valid, regular, trivial radical, schurian for x = c and x = c^-1";
    return true;
  });
}

Claim check_regular_classification(int n, const VerifyOptions& opt) {
  return run_claim("regular-classification-n" + std::to_string(n), opt, [&](std::string& detail, Progress&) {
    const auto d = family_group(n);
    const auto regular = filter_rings(*rings_of(d, opt), "regular,trivial-radical");
    std::vector<SRing> rows;
    for (int x_power : {1, -1})
      for (int row = 0; row < 10; ++row) rows.push_back(cyclotomic(d, table1_generators(row, n, x_power)));
    const auto& aut = d.automorphisms();
    const auto found = representative_labels(regular, aut);
    const auto listed = representative_labels(rows, aut);
    std::size_t missing = 0;
    for (const auto& l : found) missing += !listed.count(l);
    std::size_t unseen = 0;
    for (const auto& l : listed) unseen += !found.count(l);
    detail = std::to_string(regular.size()) + " regular rings with trivial radical in " + std::to_string(found.size()) +
             " Cayley classes; " + std::to_string(listed.size()) + " table classes over both choices of x; " + std::to_string(missing) +
             " classes outside the table, " + std::to_string(unseen) + " table classes not found";
    return missing == 0 && unseen == 0;
  });
}

Claim check_nonregular_tensor(int n, const VerifyOptions& opt) {
  return run_claim("nonregular-tensor-n" + std::to_string(n), opt, [&](std::string& detail, Progress&) {
    const auto d = family_group(n);
    const auto rings = filter_rings(*rings_of(d, opt), "nonregular,trivial-radical");
    for (std::size_t i = 0; i < rings.size(); ++i) {
      const auto& a = rings[i];
      const auto subs = a_subgroups(a);
      bool found = false;
      for (const auto& h : subs) {
        if (h.size() < 3 || restrict(a, h).rank() != 2) continue;
        for (const auto& l : subs) {
          if (l.size() > 3 || h.size() * l.size() != d.size() || intersection(h, l).size() != 1) continue;
          bool tensor = true;
          for (const auto& x : a.classes()) {
            if (!h.contains(x.front())) continue;
            for (const auto& y : a.classes()) {
              if (!l.contains(y.front())) continue;
              std::vector<Index> xy;
              for (Index u : x)
                for (Index v : y) xy.push_back(d.mul(u, v));
              std::sort(xy.begin(), xy.end());
              if (xy != a.basic_set(a.class_of(xy.front()))) tensor = false;
            }
          }
          if (tensor) {
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (!found) {
        detail = ring_tag(a, i) + " has no decomposition A_H (x) A_L with rk(A_H) = 2, |L| <= 3 <= |H|";
        return false;
      }
    }
    detail = std::to_string(rings.size()) + " nonregular rings with trivial radical, all decompose";
    return true;
  });
}

Claim check_radical_wreath(int n, const VerifyOptions& opt) {
  return run_claim("radical-wreath-n" + std::to_string(n), opt, [&](std::string& detail, Progress&) {
    const auto d = family_group(n);
    const auto rings = filter_rings(*rings_of(d, opt), "nontrivial-radical");
    std::size_t by_small = 0, by_radical = 0;
    for (std::size_t i = 0; i < rings.size(); ++i) {
      const auto& a = rings[i];
      bool small = false, rad = false;
      for (const auto& s : gw_sections(a)) {
        const auto q = s.u.size() / s.l.size();
        if (q == 1 || q == 3) {
          small = true;
          break;
        }
        if (s.l.size() == 3 && ring_radical(restrict(a, s.u)).size() == 1) rad = true;
      }
      if (small) {
        ++by_small;
      } else if (rad) {
        ++by_radical;
      } else {
        detail = ring_tag(a, i) + " has no proper section of the required kind";
        return false;
      }
    }
    detail = std::to_string(rings.size()) + " rings with nontrivial radical: " + std::to_string(by_small) +
             " with |U/L| in {1,3}, " + std::to_string(by_radical) + " with rad(A_U) = e and |L| = 3";
    return true;
  });
}

std::vector<Claim> check_properties(const std::vector<AbelianGroup>& groups, const VerifyOptions& opt) {
  const auto so = search_options(opt);
  auto any = [](const AbelianGroup&) { return true; };
  auto cyclic_odd = [](const AbelianGroup& g) {
    int p = 0;
    return g.orders().size() == 1 && is_prime_power(g.size(), p) && p > 2;
  };
  struct Suite {
    std::string id;
    std::function<bool(const AbelianGroup&)> applies;
    RingCheck check;
  };
  const std::vector<Suite> suites = {
      {"prop-triple-identity", any, prop_triple_identity},
      {"prop-product-a-set", any, prop_product_a_set},
      {"prop-coset-intersection", any, prop_coset_intersection},
      {"prop-generated-and-radical", any, prop_generated_and_radical},
      {"prop-rational-conjugates", any, prop_rational_conjugates},
      {"prop-power-sets", any, prop_power_sets},
      {"prop-separating-group", any, prop_separating_group},
      {"prop-order-argument", in_d_family, prop_order_argument},
      {"prop-lowest-layer", in_d_family, prop_lowest_layer},
      {"prop-cyclic-p-group-sets", cyclic_odd, prop_cyclic_sets},
      {"prop-primitive-rank-two", primitive_rank_two_applies, prop_primitive_rank_two},
      {"prop-quasi-thin", any, [so](const SRing& a) { return prop_quasi_thin(a, so); }},
  };
  std::vector<Claim> out;
  for (const auto& s : suites)
    out.push_back(run_claim(s.id, opt, [&](std::string& detail, Progress& progress) {
      return check_all_rings(groups, opt, s.applies, s.check, detail, progress);
    }));
  return out;
}

Claim check_cyclotomic_schurian(std::size_t max_order, const VerifyOptions& opt) {
  return run_claim("cyclotomic-schurian", opt, [&](std::string& detail, Progress& progress) {
    const auto so = search_options(opt);
    std::size_t total = 0, groups = 0;
    for (const auto& g : abelian_groups_up_to(max_order)) {
      opt.budget.check_deadline();
      const auto rings = cyclotomic_rings(g);
      std::mutex m;
      std::string failure;
      parallel_for(rings.size(), opt.jobs, [&](std::size_t i) {
        if (is_schurian(rings[i], so).schurian) return;
        std::lock_guard lock(m);
        if (failure.empty()) failure = ring_tag(rings[i], i) + " is cyclotomic but not schurian";
      });
      if (!failure.empty()) {
        detail = failure;
        return false;
      }
      total += rings.size();
      ++groups;
      progress.text = std::to_string(total) + " cyclotomic rings over " + std::to_string(groups) + " groups schurian";
    }
    detail = std::to_string(total) + " cyclotomic rings over " + std::to_string(groups) + " groups, all schurian";
    return true;
  });
}

Claim check_quotient_regular_orbits(int n, const VerifyOptions& opt) {
  return run_claim("quotient-regular-orbit-n" + std::to_string(n), opt, [&](std::string& detail, Progress& progress) {
    const auto d = family_group(n);
    const auto so = search_options(opt);
    std::size_t sections = 0;
    for (int row = 0; row <= 5; ++row) {
      const auto a = cyclotomic(d, table1_generators(row, n));
      for (const auto& l : a_subgroups(a)) {
        if (l.size() != 3) continue;
        const auto q = quotient_ring(a, {whole_group(d), l});
        const auto aut = scheme_automorphisms(q, so);
        if (!aut.group.point_stabilizer(0).has_faithful_regular_orbit()) {
          detail = "row " + std::to_string(row) + ": the stabilizer of the quotient by a subgroup of order 3 has no "
                   "faithful regular orbit";
          return false;
        }
        ++sections;
      }
      progress.text = "rows 0.." + std::to_string(row) + " pass";
    }
    detail = std::to_string(sections) + " quotients over rows 0..5, each stabilizer has a faithful regular orbit";
    return true;
  });
}

Claim check_negative_control(const VerifyOptions& opt) {
  return run_claim("negative-control-z5xz5", opt, [&](std::string& detail, Progress& progress) {
    AbelianGroup g({5, 5});
    const auto rings = rings_of(g, opt);
    const auto so = search_options(opt);
    std::atomic<std::size_t> non{0}, verified{0}, done{0};
    try {
      parallel_for(rings->size(), opt.jobs, [&](std::size_t i) {
        const auto r = is_schurian((*rings)[i], so);
        ++done;
        if (r.schurian) return;
        ++non;
        if (verify_split_witness((*rings)[i], r, opt.budget.search_budget)) ++verified;
      });
    } catch (const BudgetExceeded&) {
      progress.text = std::to_string(done.load()) + " of " + std::to_string(rings->size()) + " rings checked, " +
                      std::to_string(non.load()) + " non-schurian";
      throw;
    }
    detail = std::to_string(rings->size()) + " rings over Z5 x Z5, " + std::to_string(non.load()) +
             " non-schurian, " + std::to_string(verified.load()) + " witnesses verified";
    return non > 0 && verified == non;
  });
}

std::vector<Claim> verify_paper(int n, const VerifyOptions& opt) {
  if (n < 1 || n > 3) throw InvalidArgument("verify_paper: n must be 1, 2 or 3");
  std::vector<Claim> out;
  out.push_back(check_oracle_equivalence(opt));
  out.push_back(check_e_forms(opt));
  for (int k = 1; k <= n; ++k) out.push_back(check_all_schurian(k, opt));
  for (int k = 2; k <= n; ++k) {
    out.push_back(check_table1(k, opt));
    if (k == 2) out.push_back(check_regular_classification(k, opt));
    out.push_back(check_nonregular_tensor(k, opt));
    out.push_back(check_radical_wreath(k, opt));
    out.push_back(check_quotient_regular_orbits(k, opt));
  }
  auto groups = abelian_groups_up_to(27);
  if (family_group(n).size() > 27) groups.push_back(family_group(n));
  for (auto& c : check_properties(groups, opt)) out.push_back(std::move(c));
  out.push_back(check_cyclotomic_schurian(27, opt));
  out.push_back(check_negative_control(opt));
  return out;
}

}  // namespace schur
