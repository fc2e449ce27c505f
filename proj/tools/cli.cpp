#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "tck/chevalley.hpp"
#include "tck/error.hpp"
#include "tck/serialize.hpp"
#include "tck/spectrum.hpp"
#include "tck/suite.hpp"
#include "tck/twisted.hpp"
#include "tck/witness.hpp"

namespace tck {

namespace {

class UsageError : public Error {
public:
  explicit UsageError(const std::string& message) : Error("usage_error", message) {}
};

struct Options {
  bool json = true;
  bool timing = false;
  std::string type;
  std::string kind = "x";
  long root = 1;
  std::string t = "1";
  std::string group;
  std::string aut;
  std::string matrix;
  long n = 0;
  long target = 0;
  long modulus = 0;
  std::string r, s, p;
  std::string member;
  long count = 6;
  long trdeg = 1;
  std::string scale = "2";
  long index = 3;
  long rho = 0;
  std::string sigma;
  long power = 6;
  std::string filter;
};

Json read_descriptor(const std::string& ref, const char* what) {
  if (ref.empty()) throw UsageError(std::string("missing --") + what);
  if (ref.front() == '{' || ref.front() == '[') return parse_json_text(ref);
  std::ifstream in(ref);
  if (!in) throw DomainError("cannot read " + std::string(what) + " file '" + ref + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

RootSystemType need_type(const Options& o) {
  if (o.type.empty()) throw UsageError("missing --type");
  return RootSystemType::parse(o.type);
}

Json extended(const ExtendedCount& c) { return c.is_infinite() ? Json("infinity") : to_json(c.value()); }

Json root_vector(const Root& r) {
  Json out = Json::array();
  for (int x : r) out.push_back(x);
  return out;
}

std::vector<std::string> split_commas(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

std::uint32_t modulus_arg(long m) {
  if (m < 2 || m > 1000000) throw DomainError("modulus must be in [2, 1000000]");
  return static_cast<std::uint32_t>(m);
}

// --- root / chevalley

Json root_info(const Options& o) {
  RootSystem rs = RootSystem::build(need_type(o));
  Json roots = Json::array();
  for (const auto& r : rs.roots()) roots.push_back(root_vector(r));
  Json symmetries = Json::array();
  for (const auto& s : diagram_symmetries(rs)) symmetries.push_back({{"perm", s.perm}, {"order", s.order()}});
  // one row per ordered pair with a + b a root, in root order
  ChevalleyBasisData constants = structure_constants(rs);
  Json table = Json::array();
  for (std::size_t a = 0; a < rs.size(); ++a)
    for (std::size_t b = 0; b < rs.size(); ++b)
      if (int n = constants.n(a, b); n != 0)
        table.push_back({{"alpha", root_vector(rs.root(a))}, {"beta", root_vector(rs.root(b))}, {"n", n}});
  return {{"type", rs.type().name()},
          {"rank", rs.rank()},
          {"root_count", rs.size()},
          {"positive_count", rs.positive_count()},
          {"dimension", rs.dimension()},
          {"roots", roots},
          {"cartan", rs.cartan()},
          {"simple_lengths", rs.simple_lengths()},
          {"diagram_symmetries", symmetries},
          {"structure_constants", table}};
}

Json chevalley_gen(const Options& o) {
  AdjointRepresentation rep(need_type(o));
  const RootSystem& rs = rep.root_system();
  if (o.root < 1 || static_cast<std::size_t>(o.root) > rs.size())
    throw DomainError("--root must be in 1.." + std::to_string(rs.size()));
  auto idx = static_cast<std::size_t>(o.root - 1);
  Rational t = Rational::parse(o.t);
  Matrix<Rational> m;
  if (o.kind == "x") m = x_alpha(rep, idx, t);
  else if (o.kind == "n") m = n_alpha(rep, idx, t);
  else if (o.kind == "h") m = h_alpha(rep, idx, t);
  else throw UsageError("--kind must be x, n or h");
  return {{"type", rs.type().name()}, {"kind", o.kind}, {"root", o.root}, {"root_vector", root_vector(rs.root(idx))},
          {"t", t.to_string()}, {"matrix", to_json(m)}};
}

// --- twisted

struct GroupInput {
  FiniteGroup g;
  GroupAutomorphism phi;
};

GroupInput group_input(const Options& o) {
  FiniteGroup g = group_from_json(read_descriptor(o.group, "group"));
  GroupAutomorphism phi = o.aut.empty() ? GroupAutomorphism::identity(g)
                                        : automorphism_from_json(g, read_descriptor(o.aut, "aut"));
  return {std::move(g), std::move(phi)};
}

Json twisted_classes_cmd(const Options& o) {
  GroupInput in = group_input(o);
  TwistedClassPartition p = twisted_classes(in.g, in.phi);
  Json blocks = Json::array();
  for (const auto& b : p.blocks) {
    Json block = Json::array();
    for (auto x : b) block.push_back(code_to_json(in.g, in.g.element(x)));
    blocks.push_back(std::move(block));
  }
  return {{"order", in.g.size()}, {"count", p.count()}, {"classes", blocks}};
}

Json twisted_reidemeister_cmd(const Options& o) {
  GroupInput in = group_input(o);
  return {{"order", in.g.size()}, {"reidemeister", reidemeister_number(in.g, in.phi)}};
}

Json twisted_isogredience_cmd(const Options& o) {
  GroupInput in = group_input(o);
  IsogredienceClassCount c = isogredience_count(in.g, in.phi);
  return {{"order", in.g.size()}, {"count", c.count}, {"quotient_count", c.quotient_count}};
}

// --- spectrum

Json spectrum_zn(const Options& o) {
  IntegerMatrix m;
  Json out = Json::object();
  if (!o.matrix.empty()) {
    m = integer_matrix_from_json(parse_json_text(o.matrix));
  } else if (o.n > 0 && o.target > 0) {
    m = zn_fullness_witness(static_cast<std::size_t>(o.n), o.target);
    out["matrix"] = to_json(m);
  } else {
    throw UsageError("spectrum zn needs --matrix, or --n with --target");
  }
  out["reidemeister"] = extended(reidemeister_zn(m));
  SmithForm s = smith_normal_form(m.minus_identity());
  Json d = Json::array();
  for (const auto& x : s.diagonal) d.push_back(to_json(x));
  out["smith_diagonal"] = d;
  if (o.modulus) {
    std::uint32_t mod = modulus_arg(o.modulus);
    out["modulus"] = mod;
    out["cokernel_mod"] = to_json(zn_cokernel_mod(m, mod));
    out["direct_count"] = zn_oracle(m, mod);
  }
  return out;
}

Json spectrum_heisenberg(const Options& o) {
  if (o.matrix.empty()) throw UsageError("spectrum heisenberg needs --matrix");
  IntegerMatrix m = integer_matrix_from_json(parse_json_text(o.matrix));
  ExtendedCount r = heisenberg_reidemeister(m);
  Json out{{"reidemeister", extended(r)}};
  out["even"] = r.is_infinite() ? Json(nullptr) : Json(r.value() % 2 == 0);
  if (o.modulus) {
    std::uint32_t mod = modulus_arg(o.modulus);
    HeisenbergLift lift = heisenberg_lift(m, mod);
    out["modulus"] = mod;
    out["lift_correction"] = {lift.e, lift.f};
    out["direct_count"] = heisenberg_oracle(m, mod);
    out["cokernel_product"] = to_json(heisenberg_cokernel_product(m, mod));
  }
  return out;
}

Json spectrum_lamplighter(const Options& o) {
  if (o.n == 0) throw UsageError("spectrum lamplighter needs --n");
  return {{"n", o.n}, {"r_infinity", lamplighter_r_infinity(o.n)}};
}

Json spectrum_metabelian(const Options& o) {
  if (o.r.empty() || o.s.empty() || o.p.empty()) throw UsageError("spectrum metabelian needs --r, --s and --p");
  SpectrumDescriptor d = metabelian_spectrum(Rational::parse(o.r), Rational::parse(o.s), Rational::parse(o.p).numerator());
  Json out{{"case", std::string(1, d.label())}, {"p", to_json(d.prime())}, {"spectrum", d.description()}};
  if (!o.member.empty()) {
    ExtendedCount v = o.member == "infinity" ? ExtendedCount::infinite()
                                             : ExtendedCount::finite(Rational::parse(o.member).numerator());
    out["member"] = o.member;
    out["contains"] = d.contains(v);
  }
  return out;
}

// --- witness

Json certificate_json(const ObstructionCertificate& c) {
  Json entries = Json::array();
  for (const auto& e : c.entries)
    entries.push_back({{"row", e.constraint.row},
                       {"col", e.constraint.col},
                       {"block", std::string(1, block_name(e.constraint.block))},
                       {"eigencharacter", to_json(e.constraint.eigencharacter)},
                       {"certified_zero", e.certified_zero}});
  Json gens = Json::array(), corr = Json::array(), supports = Json::array();
  for (const auto& g : c.twist_generators) gens.push_back(to_json(g));
  for (const auto& x : c.correction) corr.push_back(to_json(x));
  for (const auto& w : c.b_supports) {
    PrimeSupport u;
    for (const auto& s : w) u = u.united(s);
    supports.push_back(to_json(u));
  }
  return {{"type", c.type.name()},
          {"index", c.index},
          {"transcendence_degree", c.transcendence},
          {"bound", c.bound},
          {"family_size", c.family_size},
          {"power", c.power},
          {"twist_generators", gens},
          {"correction", corr},
          {"b_supports", supports},
          {"b_supports_disjoint", c.b_supports_disjoint},
          {"positions", c.entries.size()},
          {"certified", c.certified_count},
          {"determinant_forced_zero", c.determinant_forced_zero},
          {"verdict", c.verdict},
          {"entries", entries}};
}

Json witness_run(const Options& o) {
  AdjointRepresentation rep(need_type(o));
  if (o.count < 1) throw DomainError("--count must be >= 1");
  if (o.trdeg < 1 || o.trdeg > 16) throw DomainError("--trdeg must be in 1..16");
  if (o.power < 1 || o.power > 60) throw DomainError("--power must be in 1..60");
  if (o.index < 1 || o.index > o.count) throw DomainError("--index must be in 1..count");
  auto scales = split_commas(o.scale);
  if (scales.empty()) throw UsageError("--scale needs at least one value");
  std::vector<Rational> c;
  for (long j = 0; j < o.trdeg; ++j) c.push_back(Rational::parse(scales[std::min<std::size_t>(j, scales.size() - 1)]));
  ScalingAutomorphism delta(c);
  const auto& syms = rep.symmetries();
  if (o.rho < 0 || static_cast<std::size_t>(o.rho) >= syms.size())
    throw DomainError("--rho must be in 0.." + std::to_string(syms.size() - 1));
  const DiagramSymmetry& rho = syms[static_cast<std::size_t>(o.rho)];
  WitnessSequence w = generate_witnesses(rep, static_cast<std::size_t>(o.count));
  auto power = static_cast<unsigned>(o.power);
  auto index = static_cast<std::size_t>(o.index);
  if (o.sigma.empty()) return certificate_json(obstruction_check(rep, w, rho, delta, index, power));
  ProductAutomorphism p;
  for (const auto& s : split_commas(o.sigma)) {
    if (s.find_first_not_of("0123456789") != std::string::npos) throw UsageError("--sigma takes 0-based images");
    p.sigma.push_back(std::stoul(s));
    ChevalleyAutomorphism<RationalFunction> f;
    f.graph = rho;
    f.field = delta;
    p.factors.push_back(f);
  }
  Json out = certificate_json(product_obstruction_check(rep, p, w, index, power));
  out["sigma"] = p.sigma;
  out["sigma_order"] = p.sigma_order();
  return out;
}

Json report_ok(Json payload) {
  return {{"status", "ok"}, {"version", kToolkitVersion}, {"payload", std::move(payload)}};
}

Json report_error(const std::string& code, const std::string& message) {
  return {{"status", "error"}, {"version", kToolkitVersion}, {"error", {{"code", code}, {"message", message}}}};
}

void emit(std::ostream& out, Json report, bool timing, std::chrono::steady_clock::time_point start) {
  if (timing)
    report["timing_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  out << report.dump(2) << '\n';
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out) {
  auto start = std::chrono::steady_clock::now();
  Options o;
  CLI::App app{"Twisted conjugacy toolkit", "tck"};
  app.require_subcommand(1);
  app.add_flag("--json", o.json, "JSON output (default)");
  app.add_flag("--timing", o.timing, "include timing_ms in the report");

  auto type_opt = [&](CLI::App* c) { c->add_option("--type", o.type, "root system type, e.g. A2"); };

  CLI::App* root = app.add_subcommand("root", "root systems")->require_subcommand(1);
  CLI::App* root_info_cmd = root->add_subcommand("info", "roots, Cartan matrix and symmetries");
  type_opt(root_info_cmd);
  root_info_cmd->add_option("positional_type", o.type, "root system type (positional form)");

  CLI::App* chev = app.add_subcommand("chevalley", "Chevalley group elements")->require_subcommand(1);
  CLI::App* gen = chev->add_subcommand("gen", "x_alpha(t), n_alpha(t) or h_alpha(t) in the adjoint representation");
  type_opt(gen);
  gen->add_option("--kind", o.kind, "x, n or h");
  gen->add_option("--root", o.root, "1-based root index in the ordered root list");
  gen->add_option("--t", o.t, "rational parameter");

  CLI::App* tw = app.add_subcommand("twisted", "twisted conjugacy in finite groups")->require_subcommand(1);
  std::vector<CLI::App*> tw_cmds{tw->add_subcommand("classes", "Reidemeister classes"),
                                 tw->add_subcommand("reidemeister", "Reidemeister number"),
                                 tw->add_subcommand("isogredience", "isogredience classes via G/Z(G)")};
  for (auto* c : tw_cmds) {
    c->add_option("--group", o.group, "group descriptor file or inline JSON");
    c->add_option("--aut", o.aut, "automorphism descriptor file or inline JSON (default identity)");
  }

  CLI::App* sp = app.add_subcommand("spectrum", "Reidemeister spectra")->require_subcommand(1);
  CLI::App* zn = sp->add_subcommand("zn", "R for an automorphism of Z^n");
  zn->add_option("--matrix", o.matrix, "integer matrix as nested JSON arrays");
  zn->add_option("--n", o.n, "rank for a fullness witness");
  zn->add_option("--target", o.target, "Reidemeister number the witness should realize");
  zn->add_option("--modulus", o.modulus, "also count twisted classes on (Z/m)^n");
  CLI::App* heis = sp->add_subcommand("heisenberg", "R for an automorphism of the Heisenberg group");
  heis->add_option("--matrix", o.matrix, "2x2 integer matrix");
  heis->add_option("--modulus", o.modulus, "also count twisted classes on H(Z/m)");
  CLI::App* lamp = sp->add_subcommand("lamplighter", "R_infinity criterion for Z_n wr Z");
  lamp->add_option("--n", o.n, "lamp group order");
  CLI::App* meta = sp->add_subcommand("metabelian", "spectrum of Z[1/p]^2 x| Z");
  meta->add_option("--r", o.r, "first diagonal entry");
  meta->add_option("--s", o.s, "second diagonal entry");
  meta->add_option("--p", o.p, "prime");
  meta->add_option("--member", o.member, "value to test for membership (integer or infinity)");

  CLI::App* wit = app.add_subcommand("witness", "obstruction certificates")->require_subcommand(1);
  CLI::App* run = wit->add_subcommand("run", "witness elements, twisted products and the block-zero certificate");
  type_opt(run);
  run->add_option("--count", o.count, "number of witnesses");
  run->add_option("--trdeg", o.trdeg, "transcendence degree k of Q(T1..Tk)");
  run->add_option("--scale", o.scale, "comma-separated scalars c_j of T_j -> c_j T_j");
  run->add_option("--index", o.index, "witness index to certify (1-based)");
  run->add_option("--rho", o.rho, "diagram symmetry index (0 = identity)");
  run->add_option("--sigma", o.sigma, "0-based permutation images for a product of copies");
  run->add_option("--power", o.power, "exponent killing the graph part (default 6)");

  CLI::App* ver = app.add_subcommand("verify", "acceptance checks")->require_subcommand(1);
  CLI::App* suite = ver->add_subcommand("suite", "run the verification suite");
  suite->add_option("--filter", o.filter, "substring of the check tags to run");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    emit(out, report_error("usage_error", e.what()), false, start);
    return 2;
  }

  try {
    Json payload;
    if (root_info_cmd->parsed()) payload = root_info(o);
    else if (gen->parsed()) payload = chevalley_gen(o);
    else if (tw_cmds[0]->parsed()) payload = twisted_classes_cmd(o);
    else if (tw_cmds[1]->parsed()) payload = twisted_reidemeister_cmd(o);
    else if (tw_cmds[2]->parsed()) payload = twisted_isogredience_cmd(o);
    else if (zn->parsed()) payload = spectrum_zn(o);
    else if (heis->parsed()) payload = spectrum_heisenberg(o);
    else if (lamp->parsed()) payload = spectrum_lamplighter(o);
    else if (meta->parsed()) payload = spectrum_metabelian(o);
    else if (run->parsed()) payload = witness_run(o);
    else if (suite->parsed()) {
      auto results = run_suite(o.filter);
      Json checks = Json::array(), failing = Json::array();
      for (const auto& r : results) {
        checks.push_back(to_json(r, o.timing));
        if (!r.passed) failing.push_back(r.tag);
      }
      payload = {{"filter", o.filter}, {"checks", checks}, {"passed", results.size() - failing.size()},
                 {"failed", failing.size()}};
      if (results.empty()) payload["warning"] = "no checks match the filter";
      if (!failing.empty()) {
        Json report = report_error("check_failed", "failing checks: " + failing.dump());
        report["error"]["failing"] = failing;
        report["payload"] = payload;
        emit(out, std::move(report), o.timing, start);
        return 1;
      }
    } else {
      throw UsageError("unknown subcommand");
    }
    emit(out, report_ok(std::move(payload)), o.timing, start);
    return 0;
  } catch (const UsageError& e) {
    emit(out, report_error(e.code(), e.what()), false, start);
    return 2;
  } catch (const Error& e) {
    emit(out, report_error(e.code(), e.what()), false, start);
    return 1;
  } catch (const std::exception& e) {
    emit(out, report_error("internal_error", e.what()), false, start);
    return 1;
  }
}

}  // namespace tck
