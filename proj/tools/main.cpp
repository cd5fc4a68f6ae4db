#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "quiverlab/census.hpp"
#include "quiverlab/error.hpp"
#include "quiverlab/homology.hpp"
#include "quiverlab/io.hpp"
#include "quiverlab/kron.hpp"
#include "quiverlab/nodesplit.hpp"
#include "quiverlab/report.hpp"

using namespace quiverlab;

namespace {

struct Output {
  bool json = false;
  bool strict = false;
  std::string out;
};

int emit(Report& r, const Output& o,
         std::chrono::steady_clock::time_point t0 = {}) {
  if (t0 != std::chrono::steady_clock::time_point{}) {
    auto dt = std::chrono::steady_clock::now() - t0;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(dt).count();
  }
  const std::string text = o.json ? r.to_json() : r.to_text();
  if (o.out.empty())
    std::cout << text;
  else
    write_text_file(o.out, text);
  return r.exit_code(o.strict);
}

Report base_report(std::string command) {
  Report r;
  r.version = kVersion;
  r.command = std::move(command);
  return r;
}

std::vector<int> parse_dims_csv(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    out.push_back(std::stoi(tok));
  if (out.empty()) throw Error(ErrorKind::bad_parameter, "empty dimension list");
  return out;
}

std::uint64_t prime_of(const std::string& field_text) {
  FieldDesc d = FieldDesc::parse(field_text);
  if (d.kind != FieldDesc::Kind::prime)
    throw Error(ErrorKind::bad_parameter, "this command needs a finite field (p:<prime>)");
  return d.p;
}

std::string dims_str(const std::vector<int>& dims) {
  std::string s = "(";
  for (size_t i = 0; i < dims.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(dims[i]);
  }
  return s + ")";
}

std::string quiver_summary(const BoundQuiverAlgebra& alg) {
  std::ostringstream os;
  os << alg.quiver.name << ": " << alg.num_vertices() << " vertices, " << alg.num_arrows()
     << " arrows, " << alg.relations.size() << " relations, dim " << alg.dim();
  return os.str();
}

template <class F>
std::string rep_summary(const Representation<F>& M) {
  std::ostringstream os;
  os << "dims " << dims_str(M.dims) << " over ";
  if constexpr (F::is_finite)
    os << "p:" << M.field.modulus();
  else
    os << "Q";
  return os.str();
}

// "P(1)^2 + P(3)" for one resolution term
std::string term_str(const Quiver& q, const std::vector<int>& mults) {
  std::string s;
  for (size_t v = 0; v < mults.size(); ++v) {
    if (mults[v] == 0) continue;
    if (!s.empty()) s += " + ";
    s += "P(" + q.vertices[v] + ")";
    if (mults[v] > 1) s += "^" + std::to_string(mults[v]);
  }
  return s.empty() ? "0" : s;
}

// --- subcommand handlers ---------------------------------------------------

int run_check(const std::string& qpath, const std::vector<std::string>& rpaths,
              const Output& o) {
  auto t0 = std::chrono::steady_clock::now();
  std::string cmd = "check " + qpath;
  for (const auto& p : rpaths) cmd += " " + p;
  Report r = base_report(cmd);

  AlgebraPtr alg;
  try {
    alg = load_algebra_file(qpath);
    r.add(Check::passed("quiver file " + qpath, "a valid bound quiver", quiver_summary(*alg)));
  } catch (const Error& e) {
    r.add(Check::failed("quiver file " + qpath, "a valid bound quiver", e.what()));
    return emit(r, o, t0);
  }
  for (const auto& p : rpaths) {
    try {
      AnyRep m = load_rep_file(p, alg);
      std::string desc = std::visit([](const auto& M) { return rep_summary(M); }, m);
      r.add(Check::passed("representation file " + p, "shapes and relations consistent", desc));
    } catch (const Error& e) {
      r.add(Check::failed("representation file " + p, "shapes and relations consistent",
                          e.what()));
    }
  }
  return emit(r, o, t0);
}

int run_gldim(const std::string& qpath, const std::string& field_text, const Output& o) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = base_report("gldim " + qpath + " --field " + field_text);
  AlgebraPtr alg = load_algebra_file(qpath);
  FieldDesc d = FieldDesc::parse(field_text);
  GlobalDim g = d.kind == FieldDesc::Kind::prime
                    ? global_dimension(alg, PrimeField(d.p))
                    : global_dimension(alg, Rationals());
  if (g.exact)
    r.add(Check::passed("global dimension", "", std::to_string(g.value)));
  else
    r.add(Check::skip("global dimension",
                      "at least " + std::to_string(g.value) + ", resolution cap reached"));
  return emit(r, o, t0);
}

int run_resolve(const std::string& qpath, const std::string& vertex,
                const std::string& field_text, const Output& o) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = base_report("resolve " + qpath + " --simple " + vertex + " --field " + field_text);
  AlgebraPtr alg = load_algebra_file(qpath);
  FieldDesc d = FieldDesc::parse(field_text);

  auto resolve = [&](const auto& f) {
    auto res = min_resolution(simple_rep(alg, f, vertex));
    std::string chain = "S(" + vertex + ")";
    for (const auto& t : res.terms) chain += " <- " + term_str(alg->quiver, t);
    if (res.complete) {
      chain += " <- 0";
      r.add(Check::passed("projective resolution of S(" + vertex + ")", "",
                          "length " + std::to_string(res.length()), chain));
    } else {
      r.add(Check::skip("projective resolution of S(" + vertex + ")",
                        "did not terminate within the cap; partial: " + chain));
    }
  };
  if (d.kind == FieldDesc::Kind::prime)
    resolve(PrimeField(d.p));
  else
    resolve(Rationals());
  return emit(r, o, t0);
}

int run_pairing(const std::string& which, const std::string& qpath, const std::string& apath,
                const std::string& bpath, const Output& o) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = base_report(which + " " + qpath + " " + apath + " " + bpath);
  AlgebraPtr alg = load_algebra_file(qpath);
  AnyRep a = load_rep_file(apath, alg);
  AnyRep b = load_rep_file(bpath, alg);
  if (a.index() != b.index())
    throw Error(ErrorKind::field_mismatch, "the two representations use different fields");

  std::visit(
      [&](const auto& A) {
        const auto& B = std::get<std::decay_t<decltype(A)>>(b);
        if (which == "hom") {
          int d = hom_basis(A, B).dim();
          r.add(Check::passed("dim Hom(A, B)", "", std::to_string(d),
                              rep_summary(A) + " ; " + rep_summary(B)));
        } else {
          int d = ext_dim(A, B, 1);
          r.add(Check::passed("dim Ext^1(A, B)", "", std::to_string(d),
                              rep_summary(A) + " ; " + rep_summary(B)));
        }
      },
      a);
  return emit(r, o, t0);
}

int run_node_split(const std::string& qpath, const std::string& vertex,
                   const std::string& write_path, const Output& o) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = base_report("node-split " + qpath + " --vertex " + vertex);
  AlgebraPtr alg = load_algebra_file(qpath);
  try {
    SplitAlgebra s = split_at_node(alg, vertex);
    GraphClass g = classify_underlying_graph(s.algebra->quiver);
    std::string label = g.label.empty() ? std::string(to_string(g.verdict)) : g.label;
    r.add(Check::passed("vertex " + vertex + " is a node", "a node", "a node"));
    r.add(Check::passed("split quiver", "", label, quiver_summary(*s.algebra)));
    if (!write_path.empty()) write_quiver_file(write_path, *s.algebra);
  } catch (const Error& e) {
    if (e.kind != ErrorKind::not_a_node) throw;
    r.add(Check::failed("vertex " + vertex + " is a node", "a node", e.what()));
  }
  return emit(r, o, t0);
}

int run_bricks(const std::string& qpath, const std::string& max_dim,
               const std::string& field_text, const Output& o) {
  auto t0 = std::chrono::steady_clock::now();
  Report r = base_report("bricks " + qpath + " --max-dim " + max_dim + " --field " + field_text);
  AlgebraPtr alg = load_algebra_file(qpath);
  PrimeField f(prime_of(field_text));
  std::vector<int> bounds = parse_dims_csv(max_dim);

  try {
    CensusReport census = brick_census(alg, f, bounds);
    r.add(Check::passed("isomorphism classes", "", std::to_string(census.classes.size())));
    r.add(Check::passed("indecomposable classes", "", std::to_string(census.indecomposables)));

    int undecided = 0;
    std::string brick_dims;
    for (const auto& c : census.classes) {
      if (c.indecomposable && !c.end.is_schur.decided()) ++undecided;
      if (c.end.is_brick) {
        if (!brick_dims.empty()) brick_dims += " ";
        brick_dims += dims_str(c.dims);
      }
    }
    if (undecided == 0)
      r.add(Check::passed("endomorphism verdicts decided", "0 undecided", "0 undecided"));
    else
      r.add(Check::skip("endomorphism verdicts decided",
                        std::to_string(undecided) + " classes hit the scan guard"));
    r.add(Check::passed("brick classes", "", std::to_string(census.bricks), brick_dims));
    r.add(Check::passed("schur classes", "", std::to_string(census.schur)));
  } catch (const Error& e) {
    if (e.kind != ErrorKind::budget_exceeded) throw;
    r.add(Check::skip("brick census", e.what()));
  }
  return emit(r, o, t0);
}

int run_verify_one(int n, const std::string& field_text, const std::string& max_dim,
                   const Output& o) {
  std::optional<std::uint64_t> p;
  if (!field_text.empty()) p = prime_of(field_text);
  std::optional<std::vector<int>> bounds;
  if (!max_dim.empty()) bounds = parse_dims_csv(max_dim);
  Report r = verify_example_one(n, p, bounds);
  return emit(r, o);
}

int run_verify_two(const std::string& field_text, const std::string& sample_text,
                   const Output& o) {
  std::uint64_t p = prime_of(field_text);
  PrimeField f(p);
  std::vector<ProjPoint<PrimeField>> sample;
  std::stringstream ss(sample_text);
  std::string tok;
  while (std::getline(ss, tok, ','))
    sample.push_back(parse_point(f, tok));
  Report r = verify_example_two(p, sample);
  return emit(r, o);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"quiver representations over prime fields and Q"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", kVersion);

  Output out;
  app.add_flag("--json", out.json, "emit the report as JSON");
  app.add_flag("--strict", out.strict, "treat skipped checks as failures");
  app.add_option("--out", out.out, "write the report to a file instead of stdout");

  std::string qpath, vertex, field_text = "p:2", max_dim, sample_text, write_path;
  std::vector<std::string> rpaths;
  int n = 3;

  auto* check = app.add_subcommand("check", "validate a quiver file and representation files");
  check->add_option("quiver", qpath, "quiver file")->required();
  check->add_option("reps", rpaths, "representation files");

  auto* gldim = app.add_subcommand("gldim", "global dimension of the bound quiver algebra");
  gldim->add_option("quiver", qpath)->required();
  gldim->add_option("--field", field_text, "p:<prime> or Q (default p:2)");

  auto* resolve = app.add_subcommand("resolve", "minimal projective resolution of a simple");
  resolve->add_option("quiver", qpath)->required();
  resolve->add_option("--simple", vertex, "vertex of the simple module")->required();
  resolve->add_option("--field", field_text, "p:<prime> or Q (default p:2)");

  std::string apath, bpath;
  auto* hom = app.add_subcommand("hom", "dim Hom between two representations");
  hom->add_option("quiver", qpath)->required();
  hom->add_option("repA", apath)->required();
  hom->add_option("repB", bpath)->required();

  auto* ext = app.add_subcommand("ext", "dim Ext^1 between two representations");
  ext->add_option("quiver", qpath)->required();
  ext->add_option("repA", apath)->required();
  ext->add_option("repB", bpath)->required();

  auto* nodesplit = app.add_subcommand("node-split", "split the quiver at a node");
  nodesplit->add_option("quiver", qpath)->required();
  nodesplit->add_option("--vertex", vertex, "the node")->required();
  nodesplit->add_option("--write", write_path, "also write the split quiver to a file");

  auto* bricks = app.add_subcommand("bricks", "census of representation classes up to a bound");
  bricks->add_option("quiver", qpath)->required();
  bricks->add_option("--max-dim", max_dim, "per-vertex bound, comma separated")->required();
  bricks->add_option("--field", field_text, "p:<prime>")->required();

  auto* verify = app.add_subcommand("verify", "built-in example verifications");
  verify->require_subcommand(1);
  auto* ex1 = verify->add_subcommand("example1", "the one-relation star family");
  ex1->add_option("--n", n, "number of vertices (>= 3)")->required();
  std::string v1_field;
  ex1->add_option("--field", v1_field, "p:<prime>; enables the census checks");
  ex1->add_option("--max-dim", max_dim, "census bound, comma separated");
  auto* ex2 = verify->add_subcommand("example2", "the two-parallel-arrows-with-loopback algebra");
  ex2->add_option("--field", field_text, "p:<prime>")->required();
  ex2->add_option("--sample", sample_text, "projective points, e.g. 0,1,inf")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (check->parsed()) return run_check(qpath, rpaths, out);
    if (gldim->parsed()) return run_gldim(qpath, field_text, out);
    if (resolve->parsed()) return run_resolve(qpath, vertex, field_text, out);
    if (hom->parsed()) return run_pairing("hom", qpath, apath, bpath, out);
    if (ext->parsed()) return run_pairing("ext", qpath, apath, bpath, out);
    if (nodesplit->parsed()) return run_node_split(qpath, vertex, write_path, out);
    if (bricks->parsed()) return run_bricks(qpath, max_dim, field_text, out);
    if (verify->parsed()) {
      if (ex1->parsed()) return run_verify_one(n, v1_field, max_dim, out);
      if (ex2->parsed()) return run_verify_two(field_text, sample_text, out);
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
