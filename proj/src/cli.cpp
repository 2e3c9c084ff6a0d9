#include "liecartan/cli.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <optional>

#include <CLI11.hpp>

#include "liecartan/cartan.hpp"
#include "liecartan/error.hpp"
#include "liecartan/io.hpp"
#include "liecartan/levi.hpp"
#include "liecartan/quotient.hpp"
#include "liecartan/radicals.hpp"
#include "liecartan/verify.hpp"

namespace liecartan {

using nlohmann::json;

namespace {

struct Options {
  bool json_output = false;
  bool skip_jacobi = false;
  bool all = false;
  std::string method = "regular";
  std::string path;
  std::vector<std::string> paths;
  std::string ideal;
  std::string start;
  std::uint64_t k = 1;
  std::string data_dir;
};

std::string span_text(const LieAlgebra& g, const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += describe_vector(g.labels(), s.row(i));
  }
  return out + "}";
}

std::string dim_line(const LieAlgebra& g, const Subspace& s) {
  return "dim " + std::to_string(s.dim()) + " " + span_text(g, s);
}

LieAlgebra load(const Options& o, const std::string& path) {
  return load_algebra(path, o.skip_jacobi ? JacobiCheck::Skip : JacobiCheck::Force);
}

std::filesystem::path data_dir(const Options& o) {
  return o.data_dir.empty() ? default_data_dir() : std::filesystem::path(o.data_dir);
}

// Either a standard ideal name or row text.
Subspace ideal_from_arg(const LieAlgebra& g, const std::string& text) {
  const bool named =
      std::all_of(text.begin(), text.end(), [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; });
  return resolve_ideal(g, named ? IdealEntry{text, ""} : IdealEntry{"rows", text});
}

CartanResult run_method(const LieAlgebra& g, const std::string& method, const std::string& start) {
  if (method == "regular") return regular_element_csa(g);
  if (method == "composite") return composite_csa(g);
  if (start.empty()) return normalizer_chain_csa(g);
  return normalizer_chain_csa(g, parse_rows(start, g.dim()));
}

int cmd_analyze(const Options& o, std::ostream& out) {
  const LieAlgebra g = load(o, o.path);
  const RadicalPair rp = radicals(g);
  const bool semisimple = is_semisimple(g);
  const LeviDecomposition levi = levi_decomposition(g);
  const CartanResult regular = regular_element_csa(g);
  const CartanResult composite = composite_csa(g);
  std::optional<CartanResult> chain;
  if (is_solvable(g)) chain = normalizer_chain_csa(g);

  if (o.json_output) {
    json csas{{"regular", subspace_to_json(regular.csa, g.labels())},
              {"composite", subspace_to_json(composite.csa, g.labels())}};
    csas["chain"] = chain ? subspace_to_json(chain->csa, g.labels()) : json(nullptr);
    out << json{{"name", g.name()},
                {"dim", g.dim()},
                {"basis", g.labels()},
                {"radical", subspace_to_json(rp.radical, g.labels())},
                {"nilradical", subspace_to_json(rp.nilradical, g.labels())},
                {"semisimple", semisimple},
                {"levi", subspace_to_json(levi.levi, g.labels())},
                {"rank", regular.csa.dim()},
                {"csa", std::move(csas)}}
               .dump(2)
        << "\n";
    return kExitSuccess;
  }
  out << "algebra: " << (g.name().empty() ? o.path : g.name()) << "\n";
  out << "dim: " << g.dim() << "\n";
  out << "radical: " << dim_line(g, rp.radical) << "\n";
  out << "nilradical: " << dim_line(g, rp.nilradical) << "\n";
  out << "semisimple: " << (semisimple ? "true" : "false") << "\n";
  out << "levi: dim " << levi.levi.dim() << " + radical dim " << levi.radical.dim() << "\n";
  out << "rank: " << regular.csa.dim() << "\n";
  out << "csa[regular]: " << span_text(g, regular.csa) << "\n";
  out << "csa[composite]: " << span_text(g, composite.csa) << "\n";
  out << "csa[chain]: " << (chain ? span_text(g, chain->csa) : std::string("n/a (algebra not solvable)")) << "\n";
  return kExitSuccess;
}

int cmd_cartan(const Options& o, std::ostream& out) {
  const LieAlgebra g = load(o, o.path);
  const CartanResult r = run_method(g, o.method, o.start);
  const bool ok = is_cartan_subalgebra(g, r.csa);
  if (o.json_output) {
    json trace = json::array();
    for (const auto& t : r.trace) trace.push_back(subspace_to_json(t, g.labels()));
    out << json{{"method", std::string(to_string(r.method))},
                {"csa", subspace_to_json(r.csa, g.labels())},
                {"is_cartan", ok},
                {"steps", r.steps},
                {"trace", std::move(trace)}}
               .dump(2)
        << "\n";
  } else {
    out << "method: " << to_string(r.method) << "\n";
    out << "csa: " << dim_line(g, r.csa) << "\n";
    out << "is_cartan: " << (ok ? "true" : "false") << "\n";
    out << "steps: " << r.steps << "\n";
    for (std::size_t i = 0; i < r.trace.size(); ++i) out << "trace[" << i << "]: " << dim_line(g, r.trace[i]) << "\n";
  }
  return ok ? kExitSuccess : kExitVerificationFailure;
}

int cmd_levi(const Options& o, std::ostream& out) {
  const LieAlgebra g = load(o, o.path);
  const LeviDecomposition d = levi_decomposition(g);
  const InducedAlgebra s = induced_algebra(g, d.levi);
  if (o.json_output) {
    out << json{{"levi", subspace_to_json(d.levi, g.labels())},
                {"radical", subspace_to_json(d.radical, g.labels())},
                {"levi_algebra", algebra_to_json(s.algebra())},
                {"levi_semisimple", is_semisimple(s.algebra())}}
               .dump(2)
        << "\n";
  } else {
    out << "levi: " << dim_line(g, d.levi) << "\n";
    out << "radical: " << dim_line(g, d.radical) << "\n";
    out << "levi semisimple: " << (is_semisimple(s.algebra()) ? "true" : "false") << "\n";
  }
  return kExitSuccess;
}

json constants_json(const LieAlgebra& g) { return algebra_to_json(g).at("brackets"); }

int cmd_quotient(const Options& o, std::ostream& out) {
  const LieAlgebra g = load(o, o.path);
  const Subspace ideal = ideal_from_arg(g, o.ideal);
  const QuotientMap q = quotient_algebra(g, ideal);
  const Subspace h = regular_element_csa(g).csa;
  const Subspace pushed = push_cartan(h, q);
  const Subspace lifted = lift_cartan(pushed, q);
  const Subspace again = push_cartan(lifted, q);
  const bool roundtrip = again == pushed;

  if (o.json_output) {
    out << json{{"ideal", subspace_to_json(ideal, g.labels())},
                {"quotient", algebra_to_json(q.target)},
                {"projection", matrix_to_json(q.projection)},
                {"source_csa", subspace_to_json(h, g.labels())},
                {"pushed_csa", subspace_to_json(pushed, q.target.labels())},
                {"lifted_csa", subspace_to_json(lifted, g.labels())},
                {"roundtrip", roundtrip}}
               .dump(2)
        << "\n";
  } else {
    out << "ideal: " << dim_line(g, ideal) << "\n";
    out << "quotient: dim " << q.target.dim() << ", basis";
    for (const auto& l : q.target.labels()) out << " " << l;
    out << "\n";
    out << "quotient brackets: " << constants_json(q.target).dump() << "\n";
    out << "source csa: " << dim_line(g, h) << "\n";
    out << "pushed csa: " << dim_line(q.target, pushed) << "\n";
    out << "lifted csa: " << dim_line(g, lifted) << "\n";
    out << "roundtrip: " << (roundtrip ? "ok" : "FAILED") << "\n";
  }
  return roundtrip ? kExitSuccess : kExitVerificationFailure;
}

std::string orders_text(const CartanGroupModel& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.component_orders.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(m.component_orders[i]);
  }
  return s + "]";
}

int cmd_powermap(const Options& o, std::ostream& out) {
  const GroupDensityInstance inst = load_instance(o.path);
  if (o.k == 0) throw Error(ErrorCode::ParseError, "k must be a positive integer");
  const bool dense = density_from_cartans(inst, o.k);

  std::optional<std::pair<std::size_t, std::uint64_t>> failure;
  json classes = json::array();
  for (std::size_t c = 0; c < inst.cartan_models.size(); ++c) {
    const auto& m = inst.cartan_models[c];
    const auto obstruction = first_obstruction(m, o.k);
    if (obstruction && !failure) failure = {c + 1, *obstruction};
    classes.push_back({{"class", c + 1},
                       {"vector_rank", m.vector_rank},
                       {"torus_rank", m.torus_rank},
                       {"component_orders", m.component_orders},
                       {"surjective", !obstruction}});
  }
  if (o.json_output) {
    out << json{{"name", inst.name}, {"k", o.k}, {"classes", std::move(classes)}, {"dense", dense}}.dump(2) << "\n";
    return kExitSuccess;
  }
  out << "instance: " << inst.name << "\n";
  out << "k: " << o.k << "\n";
  for (std::size_t c = 0; c < inst.cartan_models.size(); ++c) {
    const auto& m = inst.cartan_models[c];
    out << "class " << c + 1 << " (vector_rank " << m.vector_rank << ", torus_rank " << m.torus_rank << ", orders "
        << orders_text(m) << "): " << (pk_surjective(m, o.k) ? "surjective" : "not surjective") << "\n";
  }
  if (dense) {
    out << "dense: true\n";
  } else {
    out << "dense: false (class " << failure->first << " fails: order " << failure->second << ")\n";
  }
  return kExitSuccess;
}

int cmd_verify(const Options& o, std::ostream& out) {
  VerificationMatrix matrix;
  std::optional<VerificationMatrix> catalog;
  const auto dir = data_dir(o);
  if (o.all || !o.paths.empty()) {
    if (std::filesystem::exists(dir / "verify_matrix.json")) catalog = load_verification_matrix(dir);
  }
  if (o.all) {
    if (!catalog) throw Error(ErrorCode::ParseError, "no verify_matrix.json in " + dir.string());
    matrix = *catalog;
  } else {
    for (const auto& p : o.paths) {
      AlgebraEntry entry{p, standard_ideals(), {}};
      if (catalog) {
        for (const auto& known : catalog->algebras) {
          if (known.file.filename() == std::filesystem::path(p).filename()) {
            entry.ideals = known.ideals;
            entry.expect = known.expect;
          }
        }
      }
      matrix.algebras.push_back(std::move(entry));
    }
  }

  const VerificationReport report = run_verification(matrix, {o.all, 0});
  if (o.json_output) {
    out << report.to_json().dump(2) << "\n";
  } else {
    for (const auto& f : report.fixtures) {
      const CheckCounts c = f.counts();
      out << (c.failed ? "FAIL " : "ok   ") << f.name << ": " << c.passed << " passed, " << c.failed << " failed, "
          << c.reported << " reported\n";
      for (const auto& check : f.checks) {
        if (check.status == CheckStatus::Pass) continue;
        out << "  " << to_string(check.status) << " " << check.id << " [" << check.subject << "] (" << check.anchor
            << ")\n    witness: " << check.witness.dump() << "\n";
      }
    }
    const CheckCounts c = report.counts();
    out << "total: " << c.total() << " checks, " << c.passed << " passed, " << c.failed << " failed, " << c.reported
        << " reported\n";
  }
  return report.all_passed() ? kExitSuccess : kExitVerificationFailure;
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError:
    case ErrorCode::IndexOutOfRange:
    case ErrorCode::JacobiViolation:
    case ErrorCode::NotIdeal:
    case ErrorCode::NotClosed:
    case ErrorCode::NotSolvable:
    case ErrorCode::HypothesisViolated:
    case ErrorCode::DimensionMismatch:
    case ErrorCode::InvalidOrder:
    case ErrorCode::EmptyInstance:
    case ErrorCode::NotCartan:
      return kExitInputError;
    default:
      return kExitInternalInconsistency;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Cartan subalgebra, Levi decomposition and power-map toolkit", "liecartan"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_output, "Machine-readable output");
  app.add_flag("--skip-jacobi", o.skip_jacobi, "Skip the Jacobi check on load (large inputs)");
  app.add_option("--data-dir", o.data_dir, "Directory holding verify_matrix.json, algebras/ and models/");

  auto* analyze = app.add_subcommand("analyze", "Radicals, Levi decomposition, rank and Cartan subalgebras");
  analyze->add_option("algebra", o.path, "Algebra JSON file")->required();

  auto* cartan = app.add_subcommand("cartan", "Construct a Cartan subalgebra");
  cartan->add_option("algebra", o.path, "Algebra JSON file")->required();
  cartan->add_option("--method", o.method, "Construction method")
      ->check(CLI::IsMember({"regular", "chain", "composite"}));
  cartan->add_option("--start", o.start, "Chain start as rows, e.g. \"1,0,0;0,0,1\"");

  auto* levi = app.add_subcommand("levi", "Levi decomposition");
  levi->add_option("algebra", o.path, "Algebra JSON file")->required();

  auto* quotient = app.add_subcommand("quotient", "Quotient by an ideal and the Cartan push/lift round trip");
  quotient->add_option("algebra", o.path, "Algebra JSON file")->required();
  quotient->add_option("--ideal", o.ideal, "Rows (\"0,0,0,1,0;0,0,0,0,1\") or radical|nilradical|derived|center|zero|whole")
      ->required();

  auto* powermap = app.add_subcommand("powermap", "Density of P_k from Cartan subgroup models");
  powermap->add_option("instance", o.path, "Model instance JSON file")->required();
  powermap->add_option("-k,--k", o.k, "Exponent k >= 1")->required();

  auto* verify = app.add_subcommand("verify", "Run every invariant suite over fixtures");
  verify->add_option("algebras", o.paths, "Algebra JSON files");
  verify->add_flag("--all", o.all, "Bundled catalog and model corpus");

  for (auto* sub : {analyze, cartan, levi, quotient, powermap, verify}) {
    sub->add_flag("--json", o.json_output, "Machine-readable output");
    sub->add_flag("--skip-jacobi", o.skip_jacobi, "Skip the Jacobi check on load");
    sub->add_option("--data-dir", o.data_dir, "Data directory");
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitSuccess : kExitInputError;
  }

  try {
    if (*analyze) return cmd_analyze(o, out);
    if (*cartan) return cmd_cartan(o, out);
    if (*levi) return cmd_levi(o, out);
    if (*quotient) return cmd_quotient(o, out);
    if (*powermap) return cmd_powermap(o, out);
    if (*verify) return cmd_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  } catch (const nlohmann::json::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitInternalInconsistency;
  }
  return kExitInputError;
}

}  // namespace liecartan
