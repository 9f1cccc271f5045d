#include "schur/group.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>
#include <set>
#include <sstream>

namespace schur {

namespace detail {

struct GroupData {
  std::vector<int> orders;
  std::vector<Index> strides;
  std::size_t size = 1;
  int exponent = 1;
  std::vector<int> residues;  // size * rank, row-major
  std::vector<Index> mul_table;  // empty for large groups
  std::vector<Index> inv_table;
  std::vector<int> order_table;

  std::once_flag subgroups_once;
  std::vector<Subgroup> subgroups;
  std::once_flag automorphisms_once;
  std::vector<GroupMap> automorphisms;

  int residue(Index a, std::size_t i) const {
    return residues[a * orders.size() + i];
  }

  Index compose(std::span<const long long> raw) const {
    Index idx = 0;
    for (std::size_t i = 0; i < orders.size(); ++i) {
      long long r = raw[i] % orders[i];
      if (r < 0) r += orders[i];
      idx += static_cast<Index>(r) * strides[i];
    }
    return idx;
  }
};

namespace {

constexpr std::size_t kTableLimit = 1024;

std::shared_ptr<GroupData> build(std::vector<int> orders) {
  auto d = std::make_shared<GroupData>();
  d->orders = std::move(orders);
  const std::size_t k = d->orders.size();
  d->strides.assign(k, 1);
  for (std::size_t i = k; i-- > 0;) {
    if (d->orders[i] < 2)
      throw InvalidArgument("cyclic factor orders must be >= 2");
    d->strides[i] = static_cast<Index>(d->size);
    d->size *= static_cast<std::size_t>(d->orders[i]);
    if (d->size > (std::size_t{1} << 24))
      throw BudgetExceeded("group too large");
    d->exponent = std::lcm(d->exponent, d->orders[i]);
  }
  const std::size_t n = d->size;
  d->residues.resize(n * k);
  for (std::size_t a = 0; a < n; ++a) {
    std::size_t rest = a;
    for (std::size_t i = 0; i < k; ++i) {
      d->residues[a * k + i] = static_cast<int>(rest / d->strides[i]);
      rest %= d->strides[i];
    }
  }
  std::vector<long long> raw(k);
  d->inv_table.resize(n);
  d->order_table.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    int ord = 1;
    for (std::size_t i = 0; i < k; ++i) {
      const int r = d->residues[a * k + i];
      raw[i] = -r;
      ord = std::lcm(ord, d->orders[i] / std::gcd(d->orders[i], r == 0 ? d->orders[i] : r));
    }
    d->inv_table[a] = d->compose(raw);
    d->order_table[a] = ord;
  }
  if (n <= kTableLimit) {
    d->mul_table.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        for (std::size_t i = 0; i < k; ++i)
          raw[i] = d->residues[a * k + i] + d->residues[b * k + i];
        d->mul_table[a * n + b] = d->compose(raw);
      }
  }
  return d;
}

std::shared_ptr<GroupData> lookup(std::vector<int> orders) {
  static std::mutex mutex;
  static std::map<std::vector<int>, std::shared_ptr<GroupData>> registry;
  std::lock_guard lock(mutex);
  auto it = registry.find(orders);
  if (it != registry.end()) return it->second;
  auto d = build(orders);
  registry.emplace(std::move(orders), d);
  return d;
}

}  // namespace
}  // namespace detail

AbelianGroup::AbelianGroup() : data_(detail::lookup({})) {}

AbelianGroup::AbelianGroup(std::vector<int> orders)
    : data_(detail::lookup(std::move(orders))) {}

const std::vector<int>& AbelianGroup::orders() const { return data_->orders; }
std::size_t AbelianGroup::size() const { return data_->size; }
int AbelianGroup::exponent() const { return data_->exponent; }

Index AbelianGroup::mul(Index a, Index b) const {
  const auto& d = *data_;
  if (!d.mul_table.empty()) return d.mul_table[a * d.size + b];
  const std::size_t k = d.orders.size();
  Index idx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    int r = d.residues[a * k + i] + d.residues[b * k + i];
    if (r >= d.orders[i]) r -= d.orders[i];
    idx += static_cast<Index>(r) * d.strides[i];
  }
  return idx;
}

Index AbelianGroup::inv(Index a) const { return data_->inv_table[a]; }

Index AbelianGroup::pow(Index a, long long m) const {
  const auto& d = *data_;
  const std::size_t k = d.orders.size();
  Index idx = 0;
  for (std::size_t i = 0; i < k; ++i) {
    const long long mod = d.orders[i];
    long long r = (static_cast<long long>(d.residues[a * k + i]) * (m % mod)) % mod;
    if (r < 0) r += mod;
    idx += static_cast<Index>(r) * d.strides[i];
  }
  return idx;
}

int AbelianGroup::order(Index a) const { return data_->order_table[a]; }

Index AbelianGroup::generator(std::size_t i) const {
  if (i >= rank()) throw InvalidArgument("generator index out of range");
  return data_->strides[i];
}

Element AbelianGroup::element(Index a) const {
  if (a >= size()) throw InvalidArgument("element index out of range");
  const std::size_t k = rank();
  Element e;
  e.residues.assign(data_->residues.begin() + static_cast<std::ptrdiff_t>(a * k),
                    data_->residues.begin() + static_cast<std::ptrdiff_t>((a + 1) * k));
  return e;
}

Index AbelianGroup::index(const Element& e) const {
  if (e.residues.size() != rank())
    throw InvalidArgument("element arity " + std::to_string(e.residues.size()) +
                          " does not match group " + to_string());
  Index idx = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const int r = e.residues[i];
    if (r < 0 || r >= data_->orders[i])
      throw InvalidArgument("residue out of range for group " + to_string());
    idx += static_cast<Index>(r) * data_->strides[i];
  }
  return idx;
}

std::vector<Element> AbelianGroup::elements() const {
  std::vector<Element> out;
  out.reserve(size());
  for (Index a = 0; a < size(); ++a) out.push_back(element(a));
  return out;
}

Element AbelianGroup::mul(const Element& g, const Element& h) const {
  return element(mul(index(g), index(h)));
}
Element AbelianGroup::inv(const Element& g) const { return element(inv(index(g))); }
Element AbelianGroup::pow(const Element& g, long long m) const {
  return element(pow(index(g), m));
}
int AbelianGroup::order(const Element& g) const { return order(index(g)); }

const std::vector<Subgroup>& AbelianGroup::subgroups() const {
  std::call_once(data_->subgroups_once,
                 [this] { data_->subgroups = schur::subgroups(*this); });
  return data_->subgroups;
}

const std::vector<GroupMap>& AbelianGroup::automorphisms() const {
  std::call_once(data_->automorphisms_once,
                 [this] { data_->automorphisms = schur::automorphisms(*this); });
  return data_->automorphisms;
}

std::string AbelianGroup::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < rank(); ++i) os << (i ? "," : "") << orders()[i];
  os << ']';
  return os.str();
}

// ---------------------------------------------------------------------------

Subgroup::Subgroup(std::vector<Index> members, std::vector<Index> generators)
    : members_(std::move(members)), generators_(std::move(generators)) {
  std::sort(members_.begin(), members_.end());
}

bool Subgroup::contains(Index g) const {
  return std::binary_search(members_.begin(), members_.end(), g);
}

bool Subgroup::is_subgroup_of(const Subgroup& other) const {
  return std::includes(other.members_.begin(), other.members_.end(),
                       members_.begin(), members_.end());
}

namespace {

// Closure of a generating set; BFS over products with generators.
std::vector<Index> closure(const AbelianGroup& g, std::span<const Index> gens) {
  std::vector<char> seen(g.size(), 0);
  std::vector<Index> out{AbelianGroup::identity()};
  seen[0] = 1;
  for (std::size_t i = 0; i < out.size(); ++i)
    for (Index s : gens) {
      const Index x = g.mul(out[i], s);
      if (!seen[x]) {
        seen[x] = 1;
        out.push_back(x);
      }
    }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

Subgroup generated(const AbelianGroup& g, std::span<const Index> set) {
  if (set.empty()) throw InvalidArgument("generated: empty set");
  std::vector<Index> gens;
  for (Index x : set)
    if (x != AbelianGroup::identity()) gens.push_back(x);
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  return Subgroup(closure(g, gens), gens);
}

Subgroup radical(const AbelianGroup& g, std::span<const Index> set) {
  if (set.empty()) throw InvalidArgument("radical: empty set");
  std::vector<char> in(g.size(), 0);
  for (Index x : set) in[x] = 1;
  std::vector<Index> members;
  for (Index h = 0; h < g.size(); ++h) {
    bool stable = true;
    for (Index x : set)
      if (!in[g.mul(x, h)]) {
        stable = false;
        break;
      }
    if (stable) members.push_back(h);
  }
  return Subgroup(std::move(members), {});
}

Subgroup trivial_subgroup(const AbelianGroup&) {
  return Subgroup({AbelianGroup::identity()}, {});
}

Subgroup whole_group(const AbelianGroup& g) {
  std::vector<Index> all(g.size());
  std::iota(all.begin(), all.end(), Index{0});
  std::vector<Index> gens;
  for (std::size_t i = 0; i < g.rank(); ++i) gens.push_back(g.generator(i));
  return Subgroup(std::move(all), std::move(gens));
}

Subgroup join(const AbelianGroup& g, const Subgroup& a, const Subgroup& b) {
  std::vector<Index> gens;
  for (const Subgroup* h : {&a, &b}) {
    const auto& src = h->generators().empty() ? h->members() : h->generators();
    gens.insert(gens.end(), src.begin(), src.end());
  }
  return generated(g, gens);
}

Subgroup intersection(const Subgroup& a, const Subgroup& b) {
  std::vector<Index> out;
  std::set_intersection(a.members().begin(), a.members().end(),
                        b.members().begin(), b.members().end(),
                        std::back_inserter(out));
  return Subgroup(std::move(out), {});
}

bool is_subgroup(const AbelianGroup& g, std::span<const Index> set) {
  std::vector<char> in(g.size(), 0);
  for (Index x : set) in[x] = 1;
  if (!in[0]) return false;
  for (Index x : set)
    for (Index y : set)
      if (!in[g.mul(x, y)]) return false;
  return true;
}

std::vector<Subgroup> subgroups(const AbelianGroup& g, std::size_t max_order) {
  if (g.size() > max_order)
    throw BudgetExceeded("subgroups: |G| = " + std::to_string(g.size()) +
                         " exceeds cap " + std::to_string(max_order));
  const Index n = static_cast<Index>(g.size());
  std::set<Subgroup> found;
  found.insert(trivial_subgroup(g));
  for (Index a = 1; a < n; ++a) {
    const Index one[] = {a};
    found.insert(generated(g, one));
    for (Index b = a + 1; b < n; ++b) {
      const Index two[] = {a, b};
      found.insert(generated(g, two));
    }
  }
  // Joins until fixpoint (needed only for rank > 2).
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<Subgroup> current(found.begin(), found.end());
    for (std::size_t i = 0; i < current.size(); ++i)
      for (std::size_t j = i + 1; j < current.size(); ++j) {
        if (current[i].is_subgroup_of(current[j]) ||
            current[j].is_subgroup_of(current[i]))
          continue;
        if (found.insert(join(g, current[i], current[j])).second) grew = true;
      }
  }
  return {found.begin(), found.end()};
}

// ---------------------------------------------------------------------------

GroupMap::GroupMap(AbelianGroup source, AbelianGroup target, std::vector<Index> images)
    : source_(std::move(source)), target_(std::move(target)), images_(std::move(images)) {
  if (images_.size() != source_.size())
    throw InvalidArgument("GroupMap: image table has wrong length");
  std::vector<char> hit(target_.size(), 0);
  std::size_t distinct = 0;
  for (Index x : images_) {
    if (x >= target_.size()) throw InvalidArgument("GroupMap: image out of range");
    if (!hit[x]) {
      hit[x] = 1;
      ++distinct;
    }
  }
  injective_ = distinct == source_.size();
  surjective_ = distinct == target_.size();
}

GroupMap GroupMap::identity(const AbelianGroup& g) {
  std::vector<Index> t(g.size());
  std::iota(t.begin(), t.end(), Index{0});
  return GroupMap(g, g, std::move(t));
}

bool GroupMap::is_homomorphism() const {
  for (Index a = 0; a < source_.size(); ++a)
    for (Index b = 0; b < source_.size(); ++b)
      if (images_[source_.mul(a, b)] != target_.mul(images_[a], images_[b]))
        return false;
  return true;
}

GroupMap GroupMap::then(const GroupMap& next) const {
  if (!(target_ == next.source_))
    throw InvalidArgument("GroupMap::then: incompatible groups");
  std::vector<Index> t(images_.size());
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = next.images_[images_[i]];
  return GroupMap(source_, next.target_, std::move(t));
}

GroupMap GroupMap::inverse() const {
  if (!injective_ || !surjective_)
    throw InvalidArgument("GroupMap::inverse: map is not bijective");
  std::vector<Index> t(images_.size());
  for (Index i = 0; i < t.size(); ++i) t[images_[i]] = i;
  return GroupMap(target_, source_, std::move(t));
}

int GroupMap::order() const {
  if (!is_automorphism()) throw InvalidArgument("GroupMap::order: not an automorphism");
  // lcm of cycle lengths
  std::vector<char> seen(images_.size(), 0);
  long long ord = 1;
  for (Index i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (Index j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return static_cast<int>(ord);
}

namespace {

// Extends generator images additively: a -> sum a_i * images[i].
std::vector<Index> extend_table(const AbelianGroup& g, std::span<const Index> images) {
  const std::size_t k = g.rank();
  std::vector<Index> table(g.size());
  for (Index a = 0; a < g.size(); ++a) {
    const Element e = g.element(a);
    Index acc = AbelianGroup::identity();
    for (std::size_t i = 0; i < k; ++i) acc = g.mul(acc, g.pow(images[i], e.residues[i]));
    table[a] = acc;
  }
  return table;
}

}  // namespace

GroupMap map_from_generator_images(const AbelianGroup& g, std::span<const Index> images) {
  if (images.size() != g.rank())
    throw InvalidArgument("map_from_generator_images: expected " +
                          std::to_string(g.rank()) + " images");
  for (std::size_t i = 0; i < images.size(); ++i) {
    if (images[i] >= g.size()) throw InvalidArgument("image out of range");
    if (g.orders()[i] % g.order(images[i]) != 0)
      throw InvalidArgument("ill-defined map: image of generator " + std::to_string(i) +
                            " has order " + std::to_string(g.order(images[i])) +
                            " not dividing " + std::to_string(g.orders()[i]));
  }
  return GroupMap(g, g, extend_table(g, images));
}

std::vector<GroupMap> automorphisms(const AbelianGroup& g, std::size_t max_order) {
  if (g.size() > max_order)
    throw BudgetExceeded("automorphisms: |G| exceeds cap " + std::to_string(max_order));
  const std::size_t k = g.rank();
  std::vector<std::vector<Index>> candidates(k);
  double combos = 1;
  for (std::size_t i = 0; i < k; ++i) {
    for (Index x = 0; x < g.size(); ++x)
      if (g.orders()[i] % g.order(x) == 0) candidates[i].push_back(x);
    combos *= static_cast<double>(candidates[i].size());
  }
  if (combos > 5e7) throw BudgetExceeded("automorphisms: too many generator images");

  std::vector<GroupMap> out;
  std::vector<Index> images(k);
  std::vector<char> seen(g.size());
  // Odometer over candidate images.
  std::vector<std::size_t> pos(k, 0);
  while (true) {
    for (std::size_t i = 0; i < k; ++i) images[i] = candidates[i][pos[i]];
    auto table = extend_table(g, images);
    std::fill(seen.begin(), seen.end(), 0);
    bool bijective = true;
    for (Index x : table) {
      if (seen[x]) {
        bijective = false;
        break;
      }
      seen[x] = 1;
    }
    if (bijective) out.emplace_back(g, g, std::move(table));
    bool done = true;
    for (std::size_t j = k; j-- > 0;) {
      if (++pos[j] < candidates[j].size()) {
        done = false;
        break;
      }
      pos[j] = 0;
    }
    if (done) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<GroupMap> generate_automorphism_group(const AbelianGroup& g,
                                                  std::span<const GroupMap> generators) {
  for (const auto& f : generators)
    if (!f.is_automorphism() || !(f.source() == g))
      throw InvalidArgument("generate_automorphism_group: non-automorphism input");
  std::set<std::vector<Index>> seen;
  std::vector<GroupMap> out{GroupMap::identity(g)};
  seen.insert(out[0].table());
  for (std::size_t i = 0; i < out.size(); ++i)
    for (const auto& f : generators) {
      GroupMap h = out[i].then(f);
      if (seen.insert(h.table()).second) out.push_back(std::move(h));
    }
  std::sort(out.begin(), out.end());
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::vector<int> prime_factors(long long n) {
  std::vector<int> ps;
  for (long long p = 2; p * p <= n; ++p)
    if (n % p == 0) {
      ps.push_back(static_cast<int>(p));
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(static_cast<int>(n));
  return ps;
}

// A finite abelian group given abstractly by its elements (local ids 0..n-1,
// identity 0) and a multiplication callback.
template <class Mul>
struct AbstractGroup {
  std::size_t n;
  Mul mul;
  std::vector<int> orders;

  AbstractGroup(std::size_t size, Mul m) : n(size), mul(std::move(m)), orders(size, 1) {
    for (std::size_t a = 0; a < n; ++a) {
      int o = 1;
      std::size_t x = a;
      while (x != 0) {
        x = mul(x, a);
        ++o;
      }
      orders[a] = o;
    }
  }

  std::size_t closure_size(const std::vector<std::size_t>& gens) const {
    std::vector<char> seen(n, 0);
    std::vector<std::size_t> list{0};
    seen[0] = 1;
    for (std::size_t i = 0; i < list.size(); ++i)
      for (auto s : gens) {
        auto x = mul(list[i], s);
        if (!seen[x]) {
          seen[x] = 1;
          list.push_back(x);
        }
      }
    return list.size();
  }

  std::vector<int> invariant_factors() const {
    // exponent multiset of each primary component
    std::vector<std::vector<int>> per_prime;
    std::vector<int> primes = prime_factors(static_cast<long long>(n));
    for (int p : primes) {
      std::vector<int> exps;  // exps[j-1] = #factors with exponent >= j
      long long prev = 1;
      for (int j = 1;; ++j) {
        long long pj = 1;
        for (int t = 0; t < j; ++t) pj *= p;
        long long count = 0;
        for (std::size_t a = 0; a < n; ++a)
          if (pj % orders[a] == 0) ++count;
        if (count == prev) break;
        int r = 0;
        for (long long c = count / prev; c > 1; c /= p) ++r;
        exps.push_back(r);
        prev = count;
      }
      std::vector<int> factor_exps;  // descending
      for (std::size_t j = 0; j < exps.size(); ++j) {
        const int with_exact = exps[j] - (j + 1 < exps.size() ? exps[j + 1] : 0);
        for (int t = 0; t < with_exact; ++t) factor_exps.push_back(static_cast<int>(j + 1));
      }
      std::sort(factor_exps.rbegin(), factor_exps.rend());
      std::vector<int> factors;
      for (int e : factor_exps) {
        int v = 1;
        for (int t = 0; t < e; ++t) v *= p;
        factors.push_back(v);
      }
      per_prime.push_back(std::move(factors));
    }
    std::size_t k = 0;
    for (auto& f : per_prime) k = std::max(k, f.size());
    std::vector<int> inv(k, 1);  // descending
    for (auto& f : per_prime)
      for (std::size_t i = 0; i < f.size(); ++i) inv[i] *= f[i];
    std::reverse(inv.begin(), inv.end());
    return inv;
  }

  // Basis b_i of order factors[i] (factors ascending) with G = prod <b_i>.
  std::vector<std::size_t> basis(const std::vector<int>& factors) const {
    std::vector<std::size_t> chosen;  // largest factor first
    std::vector<std::size_t> out;
    if (!search(factors, static_cast<int>(factors.size()) - 1, chosen, 1))
      throw Error("internal: failed to find basis of abelian group");
    out.assign(chosen.rbegin(), chosen.rend());
    return out;
  }

  bool search(const std::vector<int>& factors, int i, std::vector<std::size_t>& chosen,
              std::size_t current) const {
    if (i < 0) return current == n;
    for (std::size_t a = 1; a < n; ++a) {
      if (orders[a] != factors[static_cast<std::size_t>(i)]) continue;
      chosen.push_back(a);
      const std::size_t sz = closure_size(chosen);
      if (sz == current * static_cast<std::size_t>(factors[static_cast<std::size_t>(i)]) &&
          search(factors, i - 1, chosen, sz))
        return true;
      chosen.pop_back();
    }
    return false;
  }
};

// Canonical group for an abstract group plus map canonical index -> local id.
template <class Mul>
std::pair<AbelianGroup, std::vector<std::size_t>> canonicalize(const AbstractGroup<Mul>& ag) {
  const auto factors = ag.invariant_factors();
  const auto basis = ag.basis(factors);
  AbelianGroup canon(factors);
  std::vector<std::size_t> to_local(canon.size());
  for (Index c = 0; c < canon.size(); ++c) {
    const Element e = canon.element(c);
    std::size_t acc = 0;
    for (std::size_t i = 0; i < basis.size(); ++i)
      for (int t = 0; t < e.residues[i]; ++t) acc = ag.mul(acc, basis[i]);
    to_local[c] = acc;
  }
  return {canon, to_local};
}

}  // namespace

std::vector<int> invariant_factors(const AbelianGroup& g) {
  auto mul = [&g](std::size_t a, std::size_t b) {
    return static_cast<std::size_t>(g.mul(static_cast<Index>(a), static_cast<Index>(b)));
  };
  AbstractGroup ag(g.size(), mul);
  return ag.invariant_factors();
}

Presentation present(const AbelianGroup& g, const Subgroup& h) {
  if (!is_subgroup(g, h.members())) throw InvalidArgument("present: not a subgroup");
  const auto& mem = h.members();  // mem[0] == identity
  std::vector<std::size_t> local(g.size(), 0);
  for (std::size_t i = 0; i < mem.size(); ++i) local[mem[i]] = i;
  auto mul = [&](std::size_t a, std::size_t b) { return local[g.mul(mem[a], mem[b])]; };
  AbstractGroup ag(mem.size(), mul);
  auto [canon, to_local] = canonicalize(ag);
  std::vector<Index> emb(canon.size());
  for (std::size_t c = 0; c < emb.size(); ++c) emb[c] = mem[to_local[c]];
  return {canon, std::move(emb)};
}

Quotient quotient(const AbelianGroup& g, const Subgroup& l) {
  if (!is_subgroup(g, l.members())) throw InvalidArgument("quotient: not a subgroup");
  const std::size_t n = g.size();
  // coset ids ordered by smallest member; coset 0 is L itself.
  std::vector<std::size_t> coset(n, SIZE_MAX);
  std::vector<Index> rep;
  for (Index a = 0; a < n; ++a) {
    if (coset[a] != SIZE_MAX) continue;
    const std::size_t id = rep.size();
    rep.push_back(a);
    for (Index x : l.members()) coset[g.mul(a, x)] = id;
  }
  auto mul = [&](std::size_t a, std::size_t b) { return coset[g.mul(rep[a], rep[b])]; };
  AbstractGroup ag(rep.size(), mul);
  auto [canon, to_local] = canonicalize(ag);
  std::vector<Index> from_local(rep.size());
  for (Index c = 0; c < canon.size(); ++c) from_local[to_local[c]] = c;
  std::vector<Index> proj(n);
  for (Index a = 0; a < n; ++a) proj[a] = from_local[coset[a]];
  return {canon, GroupMap(g, canon, std::move(proj))};
}

}  // namespace schur
