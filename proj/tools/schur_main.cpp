#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <sstream>
#include <thread>

#include "CLI11.hpp"

#include "schur/constructions.hpp"
#include "schur/enumerate.hpp"
#include "schur/io.hpp"
#include "schur/schurity.hpp"
#include "schur/verify.hpp"

using namespace schur;

namespace {

constexpr int kExitBudget = 2;
constexpr int kExitNonSchurian = 3;
constexpr int kExitMalformed = 64;
constexpr int kExitInvalid = 65;
constexpr int kExitNoInput = 66;

class NoInput : public Error {
 public:
  using Error::Error;
};

struct Globals {
  std::size_t max_order = kDefaultMaxOrder;
  std::size_t chain_budget = kDefaultChainBudget;
  std::size_t search_budget = kDefaultSearchBudget;
  double time_limit = 0;  // seconds, 0 = none
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());

  Budget budget() const {
    Budget b;
    b.max_order = max_order;
    b.chain_budget = chain_budget;
    b.search_budget = search_budget;
    if (time_limit > 0)
      b.deadline = std::chrono::steady_clock::now() +
                   std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(time_limit));
    return b;
  }
};

SearchOptions search_options(const Budget& b) {
  SearchOptions s;
  s.search_budget = b.search_budget;
  s.chain_budget = b.chain_budget;
  s.max_order = b.max_order;
  s.budget = &b;
  return s;
}

std::string read_input(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in(path);
  if (!in) throw NoInput("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw NoInput("cannot write " + path);
  out << text << '\n';
}

std::vector<int> parse_ints(const std::string& spec, int least) {
  std::vector<int> out;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      const int m = std::stoi(part, &used);
      if (used != part.size() || m < least) throw std::invalid_argument(part);
      out.push_back(m);
    } catch (const std::exception&) {
      throw InvalidArgument("bad integer list \"" + spec + "\"");
    }
  }
  if (out.empty()) throw InvalidArgument("empty integer list");
  return out;
}

std::vector<int> parse_orders(const std::string& spec) { return parse_ints(spec, 1); }

Json elements_json(const AbelianGroup& g, const std::vector<Index>& xs) {
  Json out = Json::array();
  for (Index x : xs) out.push_back(g.element(x).residues);
  return out;
}

std::string orbit_json(const AbelianGroup& g, const std::vector<std::uint32_t>& labels) {
  std::vector<std::vector<Index>> orbits;
  for (Index x = 0; x < labels.size(); ++x) {
    if (labels[x] >= orbits.size()) orbits.resize(labels[x] + 1);
    orbits[labels[x]].push_back(x);
  }
  Json out = Json::array();
  for (const auto& o : orbits) out.push_back(elements_json(g, o));
  return out.dump();
}

// "a,b;c,d" -> images of the canonical generators.
GroupMap parse_map(const AbelianGroup& g, const std::string& spec) {
  std::vector<Index> images;
  std::stringstream ss(spec);
  std::string tuple;
  while (std::getline(ss, tuple, ';')) {
    Element e{parse_ints(tuple, 0)};
    if (e.residues.size() != g.rank()) throw InvalidArgument("map image \"" + tuple + "\" has the wrong length");
    for (std::size_t i = 0; i < e.residues.size(); ++i)
      if (e.residues[i] >= g.orders()[i]) throw InvalidArgument("map image \"" + tuple + "\" out of range");
    images.push_back(g.index(e));
  }
  if (images.size() != g.rank()) throw InvalidArgument("map \"" + spec + "\" needs one image per generator");
  return map_from_generator_images(g, images);
}

int run_check(const std::string& path, bool schurity, const Globals& gl) {
  const auto text = read_input(path);
  const auto json = parse_json(text);
  const auto rings = rings_from_json(json);
  const auto budget = gl.budget();
  const auto so = search_options(budget);
  int status = 0;
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const auto& a = rings[i];
    const auto r = is_schurian(a, so);
    const std::string prefix = rings.size() > 1 ? "#" + std::to_string(i) + ": " : "";
    std::cout << prefix << "valid, rank " << a.rank() << ", " << (r.schurian ? "schurian" : "non-schurian") << '\n';
    if (!schurity) continue;
    std::cout << prefix << "|Aut(A)| = " << r.aut_order << '\n';
    std::cout << prefix << "stabilizer orbits: " << orbit_json(a.group(), r.stabilizer_orbits) << '\n';
    if (!r.schurian) {
      Json w;
      w["split_class"] = elements_json(a.group(), a.basic_set(*r.split_class));
      w["witness"] = elements_json(a.group(), {r.witness->first, r.witness->second});
      w["verified"] = verify_split_witness(a, r, budget.search_budget);
      std::cout << prefix << "witness: " << w.dump() << '\n';
      status = kExitNonSchurian;
    }
  }
  return status;
}

int run_aut(const std::string& path, const Globals& gl) {
  const auto rings = parse_rings(read_input(path));
  const auto budget = gl.budget();
  for (std::size_t i = 0; i < rings.size(); ++i) {
    const auto& a = rings[i];
    const auto r = is_schurian(a, search_options(budget));
    const std::string prefix = rings.size() > 1 ? "#" + std::to_string(i) + ": " : "";
    std::cout << prefix << "|Aut(A)| = " << r.aut_order << '\n';
    std::cout << prefix << "stabilizer orbits: " << orbit_json(a.group(), r.stabilizer_orbits) << '\n';
    std::cout << prefix << (r.schurian ? "schurian" : "non-schurian") << '\n';
  }
  return 0;
}

int run_enumerate(const std::string& group, bool up_to_cayley, const std::string& filter, const std::string& out,
                  const Globals& gl) {
  AbelianGroup g(parse_orders(group));
  if (g.size() > 27) std::cerr << "warning: enumeration over a group of order " << g.size() << " may take long\n";
  const auto budget = gl.budget();
  EnumerateOptions eo;
  eo.jobs = gl.jobs;
  eo.max_order = gl.max_order;
  eo.node_budget = gl.search_budget;
  eo.budget = &budget;
  auto res = enumerate_srings(g, eo);
  EnumerationDocument doc{g, std::move(res.rings), {}, filter, res.stats};
  if (!filter.empty()) doc.rings = filter_rings(doc.rings, filter);
  if (up_to_cayley) {
    std::vector<SRing> reps;
    for (auto& c : classify_up_to_cayley(doc.rings)) {
      reps.push_back(std::move(c.representative));
      doc.class_sizes.push_back(c.size);
    }
    doc.rings = std::move(reps);
  }
  write_output(out, enumeration_to_json(doc).dump(2));
  std::cerr << doc.rings.size() << (up_to_cayley ? " Cayley classes" : " S-rings") << " over " << g.to_string() << " ("
            << res.stats.nodes << " nodes, " << res.stats.seconds << " s)\n";
  return 0;
}

int run_classify(const std::string& path, const std::string& out) {
  const auto rings = parse_rings(read_input(path));
  EnumerationDocument doc{rings.empty() ? AbelianGroup() : rings.front().group(), {}, {}, "", {}};
  for (auto& c : classify_up_to_cayley(rings)) {
    doc.rings.push_back(std::move(c.representative));
    doc.class_sizes.push_back(c.size);
  }
  write_output(out, enumeration_to_json(doc).dump(2));
  return 0;
}

int run_cyclotomic(const std::string& group, const std::vector<int>& powers, const std::vector<std::string>& maps,
                   bool all, const std::string& out) {
  AbelianGroup g(parse_orders(group));
  if (all) {
    EnumerationDocument doc{g, cyclotomic_rings(g), {}, "cyclotomic", {}};
    write_output(out, enumeration_to_json(doc).dump(2));
    return 0;
  }
  std::vector<GroupMap> k;
  for (int m : powers) {
    std::vector<Index> images;
    for (std::size_t i = 0; i < g.rank(); ++i) images.push_back(g.pow(g.generator(i), m));
    k.push_back(map_from_generator_images(g, images));
  }
  for (const auto& m : maps) k.push_back(parse_map(g, m));
  if (k.empty()) k.push_back(GroupMap::identity(g));
  write_output(out, serialize_ring(cyclotomic(g, k)));
  return 0;
}

int run_verify(int n, const std::string& report, bool stretch, const Globals& gl) {
  if (n == 3 && !stretch) {
    std::cerr << "n = 3 is the long-running target; pass --stretch to run it\n";
    return 1;
  }
  VerifyOptions opt;
  opt.budget = gl.budget();
  opt.jobs = gl.jobs;
  opt.on_claim = [](const Claim& c) {
    std::string tag = to_string(c.status);
    for (auto& ch : tag) ch = static_cast<char>(std::toupper(ch));
    std::cout << tag << ' ' << c.id << " (" << std::fixed << std::setprecision(2) << c.seconds << " s) " << c.detail
              << std::endl;
  };
  const auto claims = verify_paper(n, opt);
  std::size_t passed = 0, budget = 0;
  for (const auto& c : claims) {
    passed += c.status == ClaimStatus::Pass;
    budget += c.status == ClaimStatus::Budget;
  }
  std::cout << passed << " of " << claims.size() << " claims pass";
  if (budget) std::cout << ", " << budget << " out of budget";
  std::cout << '\n';
  if (!report.empty()) write_output(report, report_to_json(claims).dump(2));
  return passed == claims.size() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Schur rings over finite abelian groups"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals gl;
  app.add_option("--max-order", gl.max_order, "Largest group order accepted")->envname("SCHUR_MAX_ORDER");
  app.add_option("--chain-budget", gl.chain_budget, "Stabilizer chain budget")->envname("SCHUR_CHAIN_BUDGET");
  app.add_option("--search-budget", gl.search_budget, "Backtrack node budget")->envname("SCHUR_SEARCH_BUDGET");
  app.add_option("--time-limit", gl.time_limit, "Wall-clock limit in seconds (0 = none)")->envname("SCHUR_TIME_LIMIT");
  app.add_option("--jobs", gl.jobs, "Worker threads")->envname("SCHUR_JOBS")->check(CLI::PositiveNumber);

  std::function<int()> action;

  auto* en = app.add_subcommand("enumerate", "All S-rings over a group");
  std::string group, filter, out;
  bool up_to_cayley = false;
  en->add_option("--group,-g", group, "Cyclic orders, e.g. 3,9")->required();
  en->add_flag("--up-to-cayley", up_to_cayley, "One representative per Cayley isomorphism class");
  en->add_option("--filter", filter, "Comma-separated predicates (prefix ! negates)");
  en->add_option("-o,--output", out, "Output file (default stdout)");
  en->callback([&] { action = [&] { return run_enumerate(group, up_to_cayley, filter, out, gl); }; });

  auto* ch = app.add_subcommand("check", "Validate rings and decide schurity");
  std::string input = "-";
  bool schurity = false;
  ch->add_option("input", input, "Ring JSON file or - for stdin");
  ch->add_flag("--schurity", schurity, "Print |Aut(A)|, stabilizer orbits and a witness; exit 3 if non-schurian");
  ch->callback([&] { action = [&] { return run_check(input, schurity, gl); }; });

  auto* au = app.add_subcommand("aut", "|Aut(A)|, stabilizer orbits and schurity verdict");
  au->add_option("input", input, "Ring JSON file or - for stdin");
  au->callback([&] { action = [&] { return run_aut(input, gl); }; });

  auto* cl = app.add_subcommand("classify", "Cayley isomorphism classes of a list of rings");
  cl->add_option("input", input, "Rings JSON file or - for stdin");
  cl->add_option("-o,--output", out, "Output file (default stdout)");
  cl->callback([&] { action = [&] { return run_classify(input, out); }; });

  auto* cy = app.add_subcommand("cyclotomic", "Orbit ring Cyc(K, G)");
  std::vector<int> powers;
  std::vector<std::string> maps;
  bool all = false;
  cy->add_option("--group,-g", group, "Cyclic orders, e.g. 3,9")->required();
  cy->add_option("--power", powers, "Power map x -> x^m as a generator of K (repeatable)");
  cy->add_option("--map", maps, "Generator images \"a,b;c,d\" as a generator of K (repeatable)");
  cy->add_flag("--all", all, "Every cyclotomic ring over the group");
  cy->add_option("-o,--output", out, "Output file (default stdout)");
  cy->callback([&] { action = [&] { return run_cyclotomic(group, powers, maps, all, out); }; });

  auto* t1 = app.add_subcommand("table1", "Cyc(K_i, Z3 x Z3^n) for a row of the table");
  int row = 0, n = 2, x_power = 1;
  t1->add_option("--row", row, "Row 0..9")->required();
  t1->add_option("--n", n, "Exponent n >= 2");
  t1->add_option("--x-power", x_power, "x = c^k (k prime to 3)");
  t1->callback([&] { action = [&] { write_output("", serialize_ring(table1(row, n, x_power))); return 0; }; });

  std::string left, right;
  auto* te = app.add_subcommand("tensor", "Tensor product of two rings");
  te->add_option("left", left)->required();
  te->add_option("right", right)->required();
  te->callback([&] {
    action = [&] {
      write_output("", serialize_ring(tensor(parse_ring(read_input(left)), parse_ring(read_input(right)))));
      return 0;
    };
  });
  auto* wr = app.add_subcommand("wreath", "Wreath product of two rings");
  wr->add_option("left", left)->required();
  wr->add_option("right", right)->required();
  wr->callback([&] {
    action = [&] {
      write_output("", serialize_ring(wreath(parse_ring(read_input(left)), parse_ring(read_input(right)))));
      return 0;
    };
  });

  auto* vp = app.add_subcommand("verify-paper", "Acceptance claims for Z3 x Z3^n");
  std::string report;
  bool stretch = false;
  vp->add_option("--n", n, "1, 2 or 3")->check(CLI::Range(1, 3));
  vp->add_option("--report", report, "Write the JSON report here");
  vp->add_flag("--stretch", stretch, "Allow the long-running n = 3 target");
  vp->callback([&] { action = [&] { return run_verify(n, report, stretch, gl); }; });

  CLI11_PARSE(app, argc, argv);
  try {
    return action();
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const ValidationError& e) {
    std::cerr << "validation failed: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return kExitBudget;
  } catch (const NoInput& e) {
    std::cerr << e.what() << '\n';
    return kExitNoInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}
