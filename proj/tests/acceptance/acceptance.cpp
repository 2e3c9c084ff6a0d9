// Acceptance gate: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>

#include "liecartan/cartan.hpp"
#include "liecartan/cli.hpp"
#include "liecartan/enumerate.hpp"
#include "liecartan/error.hpp"
#include "liecartan/io.hpp"
#include "liecartan/oracles.hpp"
#include "liecartan/quotient.hpp"
#include "liecartan/radicals.hpp"
#include "liecartan/verify.hpp"

using namespace liecartan;

namespace {

struct Fixture {
  std::string name;
  LieAlgebra g;
  std::vector<IdealEntry> ideals;
};

std::vector<Fixture> load_catalog(const VerificationMatrix& m) {
  std::vector<Fixture> out;
  for (const auto& a : m.algebras) out.push_back({a.file.stem().string(), load_algebra(a.file, JacobiCheck::Force), a.ideals});
  return out;
}

// Nilpotent and self-normalizing, checked directly rather than through is_cartan_subalgebra.
bool cartan_axioms(const LieAlgebra& g, const Subspace& h) {
  return is_subalgebra(g, h) && is_nilpotent(g, h) && normalizer(g, h) == h;
}

class Gate {
 public:
  void run(const std::string& id, const std::string& title, const std::function<std::string()>& body) {
    const auto start = std::chrono::steady_clock::now();
    std::string failure;
    try {
      failure = body();
    } catch (const std::exception& e) {
      failure = std::string("exception: ") + e.what();
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream line;
    line.precision(2);
    line << std::fixed << (failure.empty() ? "PASS " : "FAIL ") << id << " " << title << " (" << seconds << " s)";
    if (!failure.empty()) line << ": " << failure;
    std::cout << line.str() << "\n" << detail.str() << std::flush;
    detail.str({});
    failed_ = failed_ || !failure.empty();
  }
  bool failed() const { return failed_; }

  std::ostringstream detail;

 private:
  bool failed_ = false;
};

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path data = argc > 1 ? std::filesystem::path(argv[1]) : default_data_dir();
  const VerificationMatrix matrix = load_verification_matrix(data);
  const std::vector<Fixture> catalog = load_catalog(matrix);
  Gate gate;

  gate.run("AC1", "Cartan axioms for every construction on every fixture", [&]() -> std::string {
    std::size_t checked = 0;
    for (const auto& f : catalog) {
      std::vector<std::pair<std::string, Subspace>> csas{{"regular", regular_element_csa(f.g).csa},
                                                         {"composite", composite_csa(f.g).csa}};
      if (is_solvable(f.g)) csas.emplace_back("chain", normalizer_chain_csa(f.g).csa);
      for (const auto& [method, h] : csas) {
        if (!cartan_axioms(f.g, h)) return f.name + " " + method;
        ++checked;
      }
    }
    gate.detail << "  " << checked << " subalgebras over " << catalog.size() << " fixtures\n";
    return {};
  });

  gate.run("AC2", "composite construction is Cartan with dimension equal to the rank", [&]() -> std::string {
    for (const auto& f : catalog) {
      const Subspace h = composite_csa(f.g).csa;
      if (!is_cartan_subalgebra(f.g, h)) return f.name + " not Cartan";
      const std::size_t rank = regular_element_csa(f.g).csa.dim();
      if (h.dim() != rank) return f.name + " dim " + std::to_string(h.dim()) + " vs rank " + std::to_string(rank);
    }
    return {};
  });

  gate.run("AC3", "normalizer chains from every valid start stabilize at a Cartan subalgebra", [&]() -> std::string {
    std::size_t starts = 0, solvable = 0;
    for (const auto& f : catalog) {
      if (!is_solvable(f.g)) continue;
      ++solvable;
      const std::size_t n = f.g.dim();
      const Subspace nil = nilradical(f.g);
      for (const auto& l : enumerate_subalgebras(f.g, n <= 4 ? 2 : 1)) {
        if (!is_nilpotent(f.g, l) || !(l + nil).is_whole()) continue;
        ++starts;
        const CartanResult r = normalizer_chain_csa(f.g, l);
        if (r.trace.size() - 1 > n) return f.name + " took more than dim steps";
        for (const auto& member : r.trace)
          if (!is_nilpotent(f.g, member)) return f.name + " non-nilpotent iterate";
        if (!r.csa.contains(l) || !is_cartan_subalgebra(f.g, r.csa)) return f.name + " limit not Cartan";
      }
    }
    gate.detail << "  " << starts << " starts over " << solvable << " solvable fixtures\n";
    return {};
  });

  gate.run("AC4", "radical and nilradical equal the enumerated maxima (dim <= 5)", [&]() -> std::string {
    std::size_t checked = 0;
    for (const auto& f : catalog) {
      if (f.g.dim() > 5) continue;
      const auto r = oracle::largest_enumerated_solvable_ideal(f.g);
      const auto n = oracle::largest_enumerated_nilpotent_ideal(f.g);
      if (!r || !(*r == radical(f.g))) return f.name + " radical";
      if (!n || !(*n == nilradical(f.g))) return f.name + " nilradical";
      ++checked;
    }
    gate.detail << "  " << checked << " fixtures\n";
    return {};
  });

  gate.run("AC5", "push and lift of Cartan subalgebras through every matrix ideal", [&]() -> std::string {
    std::size_t pairs = 0;
    for (const auto& f : catalog) {
      const std::vector<Subspace> csas{regular_element_csa(f.g).csa, composite_csa(f.g).csa};
      for (const auto& entry : f.ideals) {
        const Subspace ideal = resolve_ideal(f.g, entry);
        const QuotientMap q = quotient_algebra(f.g, ideal);
        for (const auto& h : csas) {
          const Subspace pushed = push_cartan(h, q);
          if (!is_cartan_subalgebra(q.target, pushed)) return f.name + "/" + entry.name + " push";
          const Subspace lifted = lift_cartan(pushed, q);
          if (!is_cartan_subalgebra(f.g, lifted)) return f.name + "/" + entry.name + " lift";
          if (!(q.project(lifted) == pushed)) return f.name + "/" + entry.name + " projection of lift";
        }
        ++pairs;
      }
    }
    gate.detail << "  " << pairs << " (fixture, ideal) pairs\n";
    return {};
  });

  gate.run("AC6", "Z_R(H_S) + N = R, H_Z + N = R, and self-centralizing in semisimple fixtures", [&]() -> std::string {
    for (const auto& f : catalog) {
      CompositeParts parts;
      const CartanResult h = composite_csa(f.g, &parts);
      const Subspace r = parts.decomposition.radical;
      const Subspace n = nilradical(f.g);
      if (!(parts.radical_centralizer + n == r)) return f.name + " Z_R(H_S) + N";
      if (!(parts.centralizer_csa + n == r)) return f.name + " H_Z + N";
      if (is_semisimple(f.g)) {
        for (const auto& csa : {h.csa, regular_element_csa(f.g).csa})
          if (!(centralizer(f.g, csa) == csa)) return f.name + " centralizer";
      }
    }
    return {};
  });

  gate.run("AC7", "power-map models: enumeration agreement, SL(2,R) parity, composition", [&]() -> std::string {
    std::size_t comparisons = 0;
    for (const auto& m : matrix.models) {
      const auto instance = load_instance(m.file);
      for (const auto& c : instance.cartan_models) {
        if (oracle::component_group_order(c) > oracle::kMaxEnumeratedGroupOrder) continue;
        for (std::uint64_t k = 1; k <= matrix.k_max; ++k, ++comparisons)
          if (pk_surjective(c, k) != oracle::power_map_onto(c, k))
            return instance.name + " k=" + std::to_string(k);
      }
    }
    const auto sl2r = load_instance(data / "models" / "sl2r.json");
    for (std::uint64_t k = 1; k <= 99; ++k)
      if (density_from_cartans(sl2r, k) != (k % 2 == 1)) return "SL(2,R) k=" + std::to_string(k);
    for (const auto& t : matrix.triples) {
      const auto h = load_instance(t.subgroup), q = load_instance(t.quotient), g = load_instance(t.group);
      for (std::uint64_t k = 1; k <= matrix.k_max; ++k)
        if (!composition_holds(density_from_cartans(h, k), density_from_cartans(q, k), density_from_cartans(g, k)))
          return t.name + " k=" + std::to_string(k);
    }
    gate.detail << "  " << comparisons << " enumeration comparisons, " << matrix.triples.size() << " triples\n";
    return {};
  });

  gate.run("AC8", "repeated verify --json runs are byte-identical", [&]() -> std::string {
    const std::string a = run_verification(matrix).to_json().dump(2);
    const std::string b = run_verification(matrix).to_json().dump(2);
    if (a != b) return "library reports differ";
    std::ostringstream out1, out2, err;
    const std::vector<std::string> args{"verify", "--all", "--json", "--data-dir", data.string()};
    const int c1 = run_cli(args, out1, err);
    const int c2 = run_cli(args, out2, err);
    if (c1 != kExitSuccess || c2 != kExitSuccess) return "verify exit codes " + std::to_string(c1) + "," + std::to_string(c2);
    if (out1.str() != out2.str()) return "CLI outputs differ";
    if (out1.str() != a + "\n") return "CLI output differs from library report";
    return {};
  });

  return gate.failed() ? 1 : 0;
}
