#include "liecartan/verify.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <numeric>
#include <thread>

#include "liecartan/cartan.hpp"
#include "liecartan/enumerate.hpp"
#include "liecartan/error.hpp"
#include "liecartan/io.hpp"
#include "liecartan/levi.hpp"
#include "liecartan/oracles.hpp"
#include "liecartan/quotient.hpp"
#include "liecartan/radicals.hpp"

namespace liecartan {

using nlohmann::json;

std::string_view to_string(CheckStatus status) {
  switch (status) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Reported: return "reported";
  }
  return "unknown";
}

namespace {

const std::map<std::string, std::string>& anchors() {
  static const std::map<std::string, std::string> table = {
      {"core.load", "structure constants satisfy the Jacobi identity"},
      {"core.killing_form", "Killing form is symmetric and invariant: kappa([x,y],z) = kappa(x,[y,z])"},
      {"core.normalizer_bounds", "L and Z(L) are contained in the normalizer N(L)"},
      {"core.nilpotent_normalizer_growth",
       "in a nilpotent algebra a proper subalgebra is a proper subalgebra of its normalizer"},
      {"radicals.structure",
       "radical is a solvable ideal, nilradical a nilpotent ideal, and [g,R], [R,R] lie in N"},
      {"radicals.semisimplicity", "Killing form nondegenerate iff the radical is zero"},
      {"radicals.enumeration", "radical and nilradical are the unique maximal solvable and nilpotent ideals"},
      {"levi.decomposition", "g = S (+) R with S a semisimple subalgebra and R the radical"},
      {"levi.induced_roundtrip", "subspaces of the induced Levi algebra survive inclusion and restriction"},
      {"cartan.regular", "Cartan subalgebra: nilpotent and equal to its own normalizer (regular element)"},
      {"cartan.composite", "H_S (+) H_Z, with H_Z a Cartan subalgebra of Z_R(H_S), is a Cartan subalgebra"},
      {"cartan.chain",
       "iterated normalizers of a nilpotent L with L + N = g stay nilpotent and stop at a Cartan subalgebra"},
      {"cartan.rank", "every Cartan subalgebra has dimension equal to the rank"},
      {"cartan.solvable_criterion",
       "in a solvable algebra, nilpotent and self-normalizing iff nilpotent and equal to its Fitting null component"},
      {"cartan.self_centralizing", "a Cartan subalgebra of a semisimple algebra equals its centralizer"},
      {"cartan.radical_decomposition", "R = Z_R(H_S) + N and R = H_Z + N"},
      {"cartan.nilpotent_radical_form", "with nilpotent radical the composite Cartan subalgebra is H_S (+) Z_N(H_S)"},
      {"quotient.map", "projection onto g/I is a homomorphism with kernel I and a linear right inverse"},
      {"quotient.push", "the image of a Cartan subalgebra in g/I is a Cartan subalgebra"},
      {"quotient.lift", "every Cartan subalgebra of g/I is the image of a Cartan subalgebra of g"},
      {"quotient.roundtrip", "push(lift(push(H))) = push(H) and dim lift >= dim image"},
      {"quotient.ideal_intersection", "H meet I lies in some Cartan subalgebra of I"},
      {"catalog.expectations", "recorded rank, radical, nilradical, Levi and Killing-determinant values"},
      {"powermap.bruteforce", "P_k is onto the model iff gcd(k, m) = 1 for every component order m"},
      {"powermap.multiplicativity", "P_{k1 k2} is onto iff P_{k1} and P_{k2} are onto"},
      {"powermap.identity", "P_1 has dense image in every group"},
      {"powermap.composition", "dense power maps on H and on G/H give a dense power map on G"},
      {"powermap.weakly_exponential", "P_k dense for every k iff every Cartan component group is trivial"},
  };
  return table;
}

class Recorder {
 public:
  explicit Recorder(FixtureReport& report) : report_(report) {}

  void record(const std::string& id, std::string subject, bool ok, json witness = nullptr) {
    report_.checks.push_back(
        {id, check_anchor(id), std::move(subject), ok ? CheckStatus::Pass : CheckStatus::Fail,
         ok ? json(nullptr) : std::move(witness)});
  }

  void report_only(const std::string& id, std::string subject, bool ok, json witness = nullptr) {
    report_.checks.push_back(
        {id, check_anchor(id), std::move(subject), ok ? CheckStatus::Pass : CheckStatus::Reported,
         ok ? json(nullptr) : std::move(witness)});
  }

  /// Runs `body`; an escaping exception becomes a failed check.
  template <typename F>
  void guard(const std::string& id, const std::string& subject, F&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      record(id, subject, false, json{{"error", e.what()}});
    }
  }

 private:
  FixtureReport& report_;
};

json space(const LieAlgebra& g, const Subspace& s) { return subspace_to_json(s, g.labels()); }

std::size_t enumeration_generators(std::size_t dim) { return dim <= 4 ? 2 : 1; }

}  // namespace

const std::string& check_anchor(const std::string& id) {
  static const std::string unknown = "unregistered check";
  auto it = anchors().find(id);
  return it == anchors().end() ? unknown : it->second;
}

std::vector<std::string> check_ids() {
  std::vector<std::string> ids;
  for (const auto& [id, _] : anchors()) ids.push_back(id);
  return ids;
}

CheckCounts FixtureReport::counts() const {
  CheckCounts c;
  for (const auto& check : checks) {
    switch (check.status) {
      case CheckStatus::Pass: ++c.passed; break;
      case CheckStatus::Fail: ++c.failed; break;
      case CheckStatus::Reported: ++c.reported; break;
    }
  }
  return c;
}

namespace {

json counts_to_json(const CheckCounts& c) {
  return json{{"checks", c.total()}, {"passed", c.passed}, {"failed", c.failed}, {"reported", c.reported}};
}

}  // namespace

json FixtureReport::to_json() const {
  json list = json::array();
  for (const auto& c : checks) {
    json entry{{"id", c.id}, {"anchor", c.anchor}, {"subject", c.subject}, {"status", liecartan::to_string(c.status)}};
    if (!c.witness.is_null()) entry["witness"] = c.witness;
    list.push_back(std::move(entry));
  }
  return json{{"name", name}, {"source", source}, {"checks", std::move(list)}, {"summary", counts_to_json(counts())}};
}

CheckCounts VerificationReport::counts() const {
  CheckCounts total;
  for (const auto& f : fixtures) {
    const CheckCounts c = f.counts();
    total.passed += c.passed;
    total.failed += c.failed;
    total.reported += c.reported;
  }
  return total;
}

json VerificationReport::to_json() const {
  json list = json::array();
  for (const auto& f : fixtures) list.push_back(f.to_json());
  json summary = counts_to_json(counts());
  summary["fixtures"] = fixtures.size();
  return json{{"fixtures", std::move(list)}, {"summary", std::move(summary)}};
}

// ---- Matrix ----------------------------------------------------------------

std::vector<IdealEntry> standard_ideals() {
  return {{"zero", ""},    {"whole", ""},  {"radical", ""},        {"nilradical", ""},
          {"derived", ""}, {"center", ""}, {"radical_derived", ""}};
}

std::filesystem::path default_data_dir() { return LIECARTAN_DATA_DIR; }

Subspace resolve_ideal(const LieAlgebra& g, const IdealEntry& entry) {
  const std::size_t n = g.dim();
  if (!entry.rows.empty()) return parse_rows(entry.rows, n);
  const Subspace whole = Subspace::whole(n);
  if (entry.name == "zero") return Subspace::zero(n);
  if (entry.name == "whole") return whole;
  if (entry.name == "radical") return radical(g);
  if (entry.name == "nilradical") return nilradical(g);
  if (entry.name == "derived") return bracket_span(g, whole, whole);
  if (entry.name == "center") return center(g);
  if (entry.name == "radical_derived") {
    const Subspace rad = radical(g);
    return bracket_span(g, rad, rad);
  }
  throw Error(ErrorCode::ParseError, "unknown ideal name \"" + entry.name + "\"");
}

VerificationMatrix load_verification_matrix(const std::filesystem::path& data_dir) {
  const json doc = load_json(data_dir / "verify_matrix.json");
  VerificationMatrix matrix;
  if (doc.contains("k_max")) matrix.k_max = doc.at("k_max").get<std::uint64_t>();

  for (const auto& a : doc.value("algebras", json::array())) {
    AlgebraEntry entry;
    entry.file = data_dir / "algebras" / a.at("file").get<std::string>();
    if (a.contains("ideals")) {
      for (const auto& i : a.at("ideals")) {
        if (i.is_string()) {
          entry.ideals.push_back({i.get<std::string>(), ""});
        } else {
          entry.ideals.push_back({i.at("name").get<std::string>(), i.at("rows").get<std::string>()});
        }
      }
    } else {
      entry.ideals = standard_ideals();
    }
    if (a.contains("expect")) {
      const json& e = a.at("expect");
      auto& x = entry.expect;
      if (e.contains("rank")) x.rank = e.at("rank").get<std::size_t>();
      if (e.contains("radical_dim")) x.radical_dim = e.at("radical_dim").get<std::size_t>();
      if (e.contains("nilradical_dim")) x.nilradical_dim = e.at("nilradical_dim").get<std::size_t>();
      if (e.contains("levi_dim")) x.levi_dim = e.at("levi_dim").get<std::size_t>();
      if (e.contains("semisimple")) x.semisimple = e.at("semisimple").get<bool>();
      if (e.contains("killing_det")) x.killing_det = parse_rational(e.at("killing_det").get<std::string>());
    }
    matrix.algebras.push_back(std::move(entry));
  }
  for (const auto& m : doc.value("models", json::array())) {
    ModelEntry entry;
    entry.file = data_dir / "models" / m.at("file").get<std::string>();
    if (m.contains("weakly_exponential")) entry.weakly_exponential = m.at("weakly_exponential").get<bool>();
    matrix.models.push_back(std::move(entry));
  }
  for (const auto& t : doc.value("model_triples", json::array())) {
    matrix.triples.push_back({t.at("name").get<std::string>(), data_dir / "models" / t.at("subgroup").get<std::string>(),
                              data_dir / "models" / t.at("quotient").get<std::string>(),
                              data_dir / "models" / t.at("group").get<std::string>()});
  }
  return matrix;
}

// ---- Algebra checks --------------------------------------------------------

namespace {

struct Context {
  const LieAlgebra& g;
  Recorder& rec;
  Subspace rad;
  Subspace nil;
  std::vector<std::pair<std::string, Subspace>> csas;  // method name -> CSA
  std::size_t rank = 0;
};

void check_core(Context& cx) {
  const LieAlgebra& g = cx.g;
  const std::size_t n = g.dim();

  cx.rec.guard("core.killing_form", "basis triples", [&] {
    const Matrix k = killing_form(g);
    json witness = nullptr;
    if (!(k == k.transposed())) witness = json{{"killing_form", matrix_to_json(k)}};
    for (std::size_t i = 0; i < n && witness.is_null(); ++i)
      for (std::size_t j = 0; j < n && witness.is_null(); ++j)
        for (std::size_t l = 0; l < n && witness.is_null(); ++l) {
          const Vector& xy = g.bracket_basis(i, j);
          const Vector& yz = g.bracket_basis(j, l);
          Rational lhs = 0;
          Rational rhs = 0;
          for (std::size_t t = 0; t < n; ++t) {
            lhs += xy[t] * k(t, l);
            rhs += k(i, t) * yz[t];
          }
          if (lhs != rhs) {
            witness = json{{"triple", {i, j, l}}, {"lhs", format_rational(lhs)}, {"rhs", format_rational(rhs)}};
          }
        }
    cx.rec.record("core.killing_form", "basis triples", witness.is_null(), witness);
  });

  const auto pool = enumerate_subalgebras(g, enumeration_generators(n));
  cx.rec.guard("core.normalizer_bounds", "enumerated subalgebras", [&] {
    json witness = nullptr;
    for (const auto& l : pool) {
      const Subspace norm = normalizer(g, l);
      const Subspace cent = centralizer(g, l);
      if (!norm.contains(l) || !norm.contains(cent)) {
        witness = json{{"subalgebra", space(g, l)}, {"normalizer", space(g, norm)}, {"centralizer", space(g, cent)}};
        break;
      }
    }
    cx.rec.record("core.normalizer_bounds", std::to_string(pool.size()) + " enumerated subalgebras",
                  witness.is_null(), witness);
  });

  if (is_nilpotent(g)) {
    cx.rec.guard("core.nilpotent_normalizer_growth", "enumerated proper subalgebras", [&] {
      json witness = nullptr;
      for (const auto& q : pool) {
        if (q.is_whole()) continue;
        const Subspace norm = normalizer(g, q);
        if (norm.dim() <= q.dim()) {
          witness = json{{"subalgebra", space(g, q)}, {"normalizer", space(g, norm)}};
          break;
        }
      }
      cx.rec.record("core.nilpotent_normalizer_growth", "enumerated proper subalgebras", witness.is_null(), witness);
    });
  }
}

void check_radicals(Context& cx) {
  const LieAlgebra& g = cx.g;
  const Subspace whole = Subspace::whole(g.dim());

  cx.rec.guard("radicals.structure", "radical and nilradical", [&] {
    cx.rad = radical(g);
    cx.nil = nilradical(g);
    const Subspace g_r = bracket_span(g, whole, cx.rad);
    const Subspace r_r = bracket_span(g, cx.rad, cx.rad);
    const bool ok = is_ideal(g, cx.rad) && is_solvable(g, cx.rad) && is_ideal(g, cx.nil) &&
                    is_nilpotent(g, cx.nil) && cx.rad.contains(cx.nil) && cx.nil.contains(g_r) &&
                    cx.nil.contains(r_r);
    cx.rec.record("radicals.structure", "radical and nilradical", ok,
                  json{{"radical", space(g, cx.rad)}, {"nilradical", space(g, cx.nil)}, {"g_R", space(g, g_r)}});
  });

  cx.rec.guard("radicals.semisimplicity", "Killing criterion", [&] {
    const bool semisimple = is_semisimple(g);
    cx.rec.record("radicals.semisimplicity", "Killing criterion", semisimple == radical(g).is_zero(),
                  json{{"is_semisimple", semisimple}, {"radical_dim", radical(g).dim()}});
  });

  if (g.dim() <= 5) {
    cx.rec.guard("radicals.enumeration", "ideal lattice", [&] {
      const auto solvable = oracle::largest_enumerated_solvable_ideal(g);
      const auto nilpotent = oracle::largest_enumerated_nilpotent_ideal(g);
      const bool ok = solvable && nilpotent && *solvable == cx.rad && *nilpotent == cx.nil;
      json witness{{"radical", space(g, cx.rad)}, {"nilradical", space(g, cx.nil)}};
      witness["enumerated_solvable"] = solvable ? space(g, *solvable) : json("no unique maximum");
      witness["enumerated_nilpotent"] = nilpotent ? space(g, *nilpotent) : json("no unique maximum");
      cx.rec.record("radicals.enumeration", "ideal lattice", ok, witness);
    });
  }
}

void check_levi(Context& cx) {
  const LieAlgebra& g = cx.g;
  cx.rec.guard("levi.decomposition", "levi_decomposition", [&] {
    const LeviDecomposition d = levi_decomposition(g);
    const InducedAlgebra s = induced_algebra(g, d.levi);
    const bool ok = d.levi.dim() + d.radical.dim() == g.dim() && intersect(d.levi, d.radical).is_zero() &&
                    is_subalgebra(g, d.levi) && is_semisimple(s.algebra()) && d.radical == radical(g);
    cx.rec.record("levi.decomposition", "levi_decomposition", ok,
                  json{{"levi", space(g, d.levi)}, {"radical", space(g, d.radical)}});

    json witness = nullptr;
    const std::size_t m = s.algebra().dim();
    std::vector<Subspace> probes{Subspace::zero(m), Subspace::whole(m)};
    for (const auto& v : small_vector_pool(m)) probes.emplace_back(m, std::vector<Vector>{v});
    for (const auto& p : probes) {
      if (!(s.from_ambient(s.to_ambient(p)) == p)) {
        witness = json{{"probe", matrix_to_json(p.basis())}};
        break;
      }
    }
    cx.rec.record("levi.induced_roundtrip", std::to_string(probes.size()) + " probes", witness.is_null(), witness);
  });
}

void check_cartan(Context& cx) {
  const LieAlgebra& g = cx.g;
  const std::size_t n = g.dim();

  cx.rec.guard("cartan.regular", "regular_element_csa", [&] {
    const CartanResult r = regular_element_csa(g);
    cx.rank = r.csa.dim();
    cx.csas.emplace_back("regular", r.csa);
    const bool ok = is_nilpotent(g, r.csa) && normalizer(g, r.csa) == r.csa && r.trace.back() == r.csa;
    cx.rec.record("cartan.regular", "regular_element_csa", ok, json{{"csa", space(g, r.csa)}});
  });

  CompositeParts parts;
  bool have_parts = false;
  cx.rec.guard("cartan.composite", "composite_csa", [&] {
    const CartanResult r = composite_csa(g, &parts);
    have_parts = true;
    cx.csas.emplace_back("composite", r.csa);
    const bool ok = is_nilpotent(g, r.csa) && normalizer(g, r.csa) == r.csa;
    cx.rec.record("cartan.composite", "composite_csa", ok, json{{"csa", space(g, r.csa)}});
    cx.rec.record("cartan.rank", "composite vs regular", r.csa.dim() == cx.rank,
                  json{{"composite_dim", r.csa.dim()}, {"rank", cx.rank}});
  });

  if (have_parts) {
    cx.rec.guard("cartan.radical_decomposition", "Z_R(H_S) + N and H_Z + N", [&] {
      const Subspace& r = parts.decomposition.radical;
      const bool ok = parts.radical_centralizer + cx.nil == r && parts.centralizer_csa + cx.nil == r;
      cx.rec.record("cartan.radical_decomposition", "Z_R(H_S) + N and H_Z + N", ok,
                    json{{"Z_R(H_S)", space(g, parts.radical_centralizer)},
                         {"H_Z", space(g, parts.centralizer_csa)},
                         {"nilradical", space(g, cx.nil)},
                         {"radical", space(g, r)}});
    });
    if (parts.decomposition.radical == cx.nil) {
      cx.rec.guard("cartan.nilpotent_radical_form", "H_S + Z_N(H_S)", [&] {
        const Subspace expected = parts.levi_csa + intersect(centralizer(g, parts.levi_csa), cx.nil);
        const Subspace actual = parts.levi_csa + parts.centralizer_csa;
        cx.rec.record("cartan.nilpotent_radical_form", "H_S + Z_N(H_S)", expected == actual,
                      json{{"expected", space(g, expected)}, {"composite", space(g, actual)}});
      });
    }
  }

  if (is_semisimple(g)) {
    for (const auto& [method, h] : cx.csas) {
      cx.rec.guard("cartan.self_centralizing", method, [&, &h = h, &method = method] {
        const Subspace c = centralizer(g, h);
        cx.rec.record("cartan.self_centralizing", method, c == h,
                      json{{"csa", space(g, h)}, {"centralizer", space(g, c)}});
      });
    }
  }

  if (!is_solvable(g)) return;

  cx.rec.guard("cartan.chain", "default start", [&] {
    const CartanResult r = normalizer_chain_csa(g);
    // Each step but the last strictly grows the subalgebra; the last confirms stabilization.
    const bool ok = is_cartan_subalgebra(g, r.csa) && r.steps == r.trace.size() && r.steps <= n - r.trace.front().dim() + 1;
    cx.rec.record("cartan.chain", "default start", ok, json{{"csa", space(g, r.csa)}, {"steps", r.steps}});
    cx.rec.record("cartan.rank", "chain (default start) vs regular", r.csa.dim() == cx.rank,
                  json{{"chain_dim", r.csa.dim()}, {"rank", cx.rank}});
  });

  const auto pool = enumerate_subalgebras(g, enumeration_generators(n));
  std::size_t starts = 0;
  cx.rec.guard("cartan.chain", "enumerated starts", [&] {
    json witness = nullptr;
    for (const auto& l : pool) {
      if (!is_nilpotent(g, l) || !(l + cx.nil).is_whole()) continue;
      ++starts;
      try {
        const CartanResult r = normalizer_chain_csa(g, l);
        bool ok = r.csa.contains(l) && r.steps == r.trace.size() && r.steps <= n - l.dim() + 1 &&
                  is_cartan_subalgebra(g, r.csa) &&
                  r.csa.dim() == cx.rank;
        for (std::size_t i = 0; ok && i < r.trace.size(); ++i) {
          ok = is_nilpotent(g, r.trace[i]) && (i == 0 || (r.trace[i].contains(r.trace[i - 1]) &&
                                                          r.trace[i].dim() > r.trace[i - 1].dim()));
        }
        if (!ok) witness = json{{"start", space(g, l)}, {"limit", space(g, r.csa)}, {"steps", r.steps}};
      } catch (const Error& e) {
        witness = json{{"start", space(g, l)}, {"error", e.what()}};
      }
      if (!witness.is_null()) break;
    }
    cx.rec.record("cartan.chain", std::to_string(starts) + " enumerated starts", witness.is_null(), witness);
  });

  if (n <= 4) {
    cx.rec.guard("cartan.solvable_criterion", "enumerated subalgebras", [&] {
      json witness = nullptr;
      for (const auto& h : pool) {
        const bool nilpotent = is_nilpotent(g, h);
        const bool by_normalizer = nilpotent && normalizer(g, h) == h;
        const bool by_fitting = nilpotent && oracle::fitting_null_of_subalgebra(g, h) == h;
        if (by_normalizer != by_fitting || by_normalizer != is_cartan_subalgebra(g, h) ||
            (by_normalizer && h.dim() != cx.rank)) {
          witness = json{{"subalgebra", space(g, h)}, {"self_normalizing", by_normalizer}, {"fitting", by_fitting}};
          break;
        }
      }
      cx.rec.record("cartan.solvable_criterion", std::to_string(pool.size()) + " enumerated subalgebras",
                    witness.is_null(), witness);
    });
  }
}

void check_quotients(Context& cx, const std::vector<IdealEntry>& ideals) {
  const LieAlgebra& g = cx.g;
  std::vector<Subspace> seen;
  for (const auto& entry : ideals) {
    const std::string subject = "ideal " + entry.name;
    Subspace ideal;
    try {
      ideal = resolve_ideal(g, entry);
    } catch (const std::exception& e) {
      cx.rec.record("quotient.map", subject, false, json{{"error", e.what()}});
      continue;
    }
    if (std::find(seen.begin(), seen.end(), ideal) != seen.end()) continue;
    seen.push_back(ideal);

    cx.rec.guard("quotient.map", subject, [&] {
      const QuotientMap q = quotient_algebra(g, ideal);
      const std::size_t m = q.target.dim();
      bool ok = q.projection * q.section == Matrix::identity(m) && Subspace(nullspace(q.projection)) == ideal &&
                m + ideal.dim() == g.dim();
      for (std::size_t i = 0; ok && i < g.dim(); ++i)
        for (std::size_t j = i + 1; ok && j < g.dim(); ++j)
          ok = q.project(g.bracket_basis(i, j)) ==
               q.target.bracket(q.project(unit_vector(g.dim(), i)), q.project(unit_vector(g.dim(), j)));
      cx.rec.record("quotient.map", subject, ok, json{{"ideal", space(g, ideal)}});

      std::vector<std::pair<std::string, Subspace>> targets;
      for (const auto& [method, h] : cx.csas) {
        const std::string s = subject + ", csa " + method;
        cx.rec.guard("quotient.push", s, [&, &h = h] {
          const Subspace pushed = push_cartan(h, q);
          cx.rec.record("quotient.push", s, is_cartan_subalgebra(q.target, pushed),
                        json{{"image", space(q.target, pushed)}});
          targets.emplace_back("image of " + method, pushed);
        });
      }
      targets.emplace_back("quotient regular", regular_element_csa(q.target).csa);

      for (const auto& [label, h_target] : targets) {
        const std::string s = subject + ", " + label;
        cx.rec.guard("quotient.lift", s, [&, &h_target = h_target] {
          const Subspace lifted = lift_cartan(h_target, q);
          const bool ok_lift = is_cartan_subalgebra(g, lifted) && q.project(lifted) == h_target;
          cx.rec.record("quotient.lift", s, ok_lift,
                        json{{"target", space(q.target, h_target)}, {"lift", space(g, lifted)}});
          const Subspace again = push_cartan(lifted, q);
          cx.rec.record("quotient.roundtrip", s, again == h_target && lifted.dim() >= h_target.dim(),
                        json{{"target", space(q.target, h_target)}, {"pushed_again", space(q.target, again)}});
        });
      }
    });

    if (!ideal.is_zero() && ideal.dim() <= 4) {
      for (const auto& [method, h] : cx.csas) {
        const std::string s = subject + ", csa " + method;
        cx.rec.guard("quotient.ideal_intersection", s, [&, &h = h] {
          const InducedAlgebra sub = induced_algebra(g, ideal);
          const Subspace meet = sub.from_ambient(intersect(h, ideal));
          std::vector<Subspace> candidates = enumerate_subalgebras(sub.algebra(), 2);
          candidates.push_back(regular_element_csa(sub.algebra()).csa);
          bool found = false;
          for (const auto& c : candidates) {
            if (c.contains(meet) && is_cartan_subalgebra(sub.algebra(), c)) {
              found = true;
              break;
            }
          }
          cx.rec.report_only("quotient.ideal_intersection", s, found,
                             json{{"intersection", space(g, intersect(h, ideal))}, {"ideal", space(g, ideal)}});
        });
      }
    }
  }
}

void check_expectations(Context& cx, const AlgebraExpectation& x) {
  const LieAlgebra& g = cx.g;
  cx.rec.guard("catalog.expectations", "recorded values", [&] {
    json mismatches = json::object();
    auto compare = [&](const char* key, const auto& expected, const auto& actual) {
      if (expected && *expected != actual) mismatches[key] = json{{"expected", *expected}, {"actual", actual}};
    };
    compare("rank", x.rank, cx.rank);
    compare("radical_dim", x.radical_dim, cx.rad.dim());
    compare("nilradical_dim", x.nilradical_dim, cx.nil.dim());
    compare("levi_dim", x.levi_dim, levi_decomposition(g).levi.dim());
    compare("semisimple", x.semisimple, is_semisimple(g));
    if (x.killing_det) {
      const Rational det = determinant(killing_form(g));
      if (det != *x.killing_det) {
        mismatches["killing_det"] = json{{"expected", format_rational(*x.killing_det)}, {"actual", format_rational(det)}};
      }
    }
    cx.rec.record("catalog.expectations", "recorded values", mismatches.empty(), mismatches);
  });
}

}  // namespace

FixtureReport verify_algebra(const LieAlgebra& g, const AlgebraEntry& entry) {
  FixtureReport report;
  report.name = entry.file.stem().string();
  report.source = entry.file.filename().string();
  Recorder rec(report);
  rec.guard("core.load", "Jacobi identity", [&] {
    g.check_jacobi();
    rec.record("core.load", "Jacobi identity", true);
  });

  Context cx{g, rec, Subspace::zero(g.dim()), Subspace::zero(g.dim()), {}, 0};
  check_core(cx);
  check_radicals(cx);
  check_levi(cx);
  check_cartan(cx);
  check_quotients(cx, entry.ideals);
  check_expectations(cx, entry.expect);
  return report;
}

FixtureReport verify_algebra_file(const AlgebraEntry& entry) {
  LieAlgebra g;
  try {
    g = load_algebra(entry.file, JacobiCheck::Force);
  } catch (const JacobiViolation& e) {
    FixtureReport report{entry.file.stem().string(), entry.file.filename().string(), {}};
    Recorder(report).record("core.load", "Jacobi identity", false,
                            json{{"error", e.what()},
                                 {"triple", e.triple()},
                                 {"residual", vector_to_json(e.residual())}});
    return report;
  } catch (const std::exception& e) {
    FixtureReport report{entry.file.stem().string(), entry.file.filename().string(), {}};
    Recorder(report).record("core.load", "parse", false, json{{"error", e.what()}});
    return report;
  }
  return verify_algebra(g, entry);
}

FixtureReport verify_models(const VerificationMatrix& matrix) {
  FixtureReport report{"powermap-models", "verify_matrix.json", {}};
  Recorder rec(report);

  std::vector<GroupDensityInstance> instances;
  for (const auto& entry : matrix.models) {
    const std::string subject = entry.file.filename().string();
    rec.guard("powermap.bruteforce", subject, [&] {
      const GroupDensityInstance inst = load_instance(entry.file);
      json witness = nullptr;
      for (std::size_t c = 0; c < inst.cartan_models.size() && witness.is_null(); ++c) {
        const auto& model = inst.cartan_models[c];
        if (oracle::component_group_order(model) > oracle::kMaxEnumeratedGroupOrder) continue;
        for (std::uint64_t k = 1; k <= matrix.k_max; ++k) {
          if (pk_surjective(model, k) != oracle::power_map_onto(model, k)) {
            witness = json{{"class", c + 1}, {"k", k}, {"formula", pk_surjective(model, k)}};
            break;
          }
        }
      }
      rec.record("powermap.bruteforce", subject, witness.is_null(), witness);

      witness = nullptr;
      for (std::size_t c = 0; c < inst.cartan_models.size() && witness.is_null(); ++c)
        for (std::uint64_t a = 1; a <= 12 && witness.is_null(); ++a)
          for (std::uint64_t b = 1; b <= 12; ++b) {
            const auto& model = inst.cartan_models[c];
            if (pk_surjective(model, a * b) != (pk_surjective(model, a) && pk_surjective(model, b))) {
              witness = json{{"class", c + 1}, {"k1", a}, {"k2", b}};
              break;
            }
          }
      rec.record("powermap.multiplicativity", subject, witness.is_null(), witness);
      rec.record("powermap.identity", subject, density_from_cartans(inst, 1));

      const bool we = weakly_exponential_model(inst, std::max<std::uint64_t>(matrix.k_max, 2));
      rec.record("powermap.weakly_exponential", subject,
                 !entry.weakly_exponential || *entry.weakly_exponential == we,
                 json{{"computed", we}, {"expected", entry.weakly_exponential.value_or(we)}});
    });
  }

  for (const auto& t : matrix.triples) {
    rec.guard("powermap.composition", t.name, [&] {
      const auto h = load_instance(t.subgroup);
      const auto q = load_instance(t.quotient);
      const auto g = load_instance(t.group);
      json witness = nullptr;
      for (std::uint64_t k = 1; k <= matrix.k_max; ++k) {
        const bool dh = density_from_cartans(h, k);
        const bool dq = density_from_cartans(q, k);
        const bool dg = density_from_cartans(g, k);
        if (!composition_holds(dh, dq, dg)) {
          witness = json{{"k", k}, {"subgroup", dh}, {"quotient", dq}, {"group", dg}};
          break;
        }
      }
      rec.record("powermap.composition", t.name, witness.is_null(), witness);
    });
  }
  return report;
}

VerificationReport run_verification(const VerificationMatrix& matrix, const VerifyOptions& options) {
  unsigned threads = options.threads ? options.threads : std::max(1U, std::thread::hardware_concurrency());
  std::vector<FixtureReport> results(matrix.algebras.size());

  // Fixed-size batches of independent verifications.
  for (std::size_t start = 0; start < matrix.algebras.size(); start += threads) {
    std::vector<std::future<FixtureReport>> batch;
    for (std::size_t i = start; i < std::min(matrix.algebras.size(), start + threads); ++i) {
      batch.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred,
                                 [&matrix, i] { return verify_algebra_file(matrix.algebras[i]); }));
    }
    for (std::size_t i = 0; i < batch.size(); ++i) results[start + i] = batch[i].get();
  }

  VerificationReport report;
  report.fixtures = std::move(results);
  if (options.include_models && (!matrix.models.empty() || !matrix.triples.empty())) {
    report.fixtures.push_back(verify_models(matrix));
  }
  std::stable_sort(report.fixtures.begin(), report.fixtures.end(),
                   [](const FixtureReport& a, const FixtureReport& b) { return a.name < b.name; });
  return report;
}

}  // namespace liecartan
