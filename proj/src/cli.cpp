#include "deformlab/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <future>
#include <ostream>
#include <sstream>

#include "deformlab/json_io.hpp"
#include "deformlab/variety.hpp"

namespace deformlab::cli {

namespace {

Index max_dim() {
  if (const char* env = std::getenv("DEFORMLAB_MAX_DIM")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v >= 1) return static_cast<Index>(v);
  }
  return 8;
}

Json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::ParseError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_json_text(buf.str());
}

Algebra load_algebra(const std::string& path) {
  Algebra alg = algebra_from_json(load_json(path));
  if (alg.dim > max_dim())
    fail(Errc::ParseError, "algebra dimension exceeds DEFORMLAB_MAX_DIM (" + std::to_string(max_dim()) + ")");
  return alg;
}

Cochain load_cochain(const std::string& path) {
  Cochain c = cochain_from_json(load_json(path));
  if (c.dim > max_dim())
    fail(Errc::ParseError, "cochain dimension exceeds DEFORMLAB_MAX_DIM (" + std::to_string(max_dim()) + ")");
  return c;
}

FormalDeformation load_deformation(const std::string& path) {
  FormalDeformation def = deformation_from_json(load_json(path));
  if (def.base.dim > max_dim())
    fail(Errc::ParseError, "deformation dimension exceeds DEFORMLAB_MAX_DIM (" + std::to_string(max_dim()) + ")");
  return def;
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

void print_algebra_text(std::ostream& out, const Algebra& alg) {
  out << "dim: " << alg.dim << "\n";
  out << "unity: " << (alg.unity ? std::to_string(*alg.unity) : std::string("none")) << "\n";
  for (Index i = 0; i < alg.dim; ++i)
    for (Index j = 0; j < alg.dim; ++j)
      for (Index k = 0; k < alg.dim; ++k)
        if (!alg.c(i, j, k).is_zero())
          out << "C[" << i << "," << j << "->" << k << "] = " << alg.c(i, j, k).str() << "\n";
}

void print_cochain_text(std::ostream& out, const Cochain& c) {
  out << "degree: " << c.degree << ", dim: " << c.dim << "\n";
  bool any = false;
  for (Index row = 0; row < c.coeff.rows(); ++row)
    for (Index k = 0; k < c.dim; ++k) {
      if (c.coeff(row, k).is_zero()) continue;
      any = true;
      const auto idx = decode_multi(row, c.dim, c.degree);
      out << "c[";
      for (std::size_t p = 0; p < idx.size(); ++p) out << (p ? "," : "") << idx[p];
      out << " -> " << k << "] = " << c.coeff(row, k).str() << "\n";
    }
  if (!any) out << "(zero cochain)\n";
}

int cmd_check(const std::string& path, bool json, std::ostream& out) {
  const Algebra alg = load_algebra(path);
  const bool assoc = is_associative(alg);
  if (json) {
    Json j;
    j["associative"] = assoc;
    j["unity"] = alg.unity ? Json(check_unity(alg)) : Json(nullptr);
    print_json(out, j);
  } else {
    out << "associative: " << (assoc ? "yes" : "no") << ", unity: "
        << (alg.unity ? (check_unity(alg) ? "yes" : "no") : "none") << "\n";
  }
  return 0;
}

int cmd_cohomology(const std::string& path, int degree, bool reps, bool json, std::ostream& out) {
  const Algebra alg = load_algebra(path);
  const CohomologySpace h = cohomology(alg, degree);
  if (json) {
    Json j;
    j["degree"] = h.degree;
    j["dim_Z"] = h.dim_z;
    j["dim_B"] = h.dim_b;
    j["dim_H"] = h.dim_h;
    if (reps) {
      Json r = Json::array();
      for (const Cochain& c : h.representatives) r.push_back(cochain_to_json(c));
      j["representatives"] = std::move(r);
    }
    print_json(out, j);
  } else {
    out << "degree: " << h.degree << "\n";
    out << "dim Z: " << h.dim_z << "\n";
    out << "dim B: " << h.dim_b << "\n";
    out << "dim H: " << h.dim_h << "\n";
    if (reps)
      for (std::size_t i = 0; i < h.representatives.size(); ++i) {
        out << "representative " << i << ":\n";
        print_cochain_text(out, h.representatives[i]);
      }
  }
  return 0;
}

int cmd_bracket(const std::string& lhs, const std::string& rhs, bool circle, bool json, std::ostream& out) {
  const Cochain phi = load_cochain(lhs);
  const Cochain psi = load_cochain(rhs);
  const Cochain r = circle ? circle_product(phi, psi) : gerstenhaber_bracket(phi, psi);
  if (json)
    print_json(out, cochain_to_json(r));
  else
    print_cochain_text(out, r);
  return 0;
}

int cmd_deform_extend(const std::string& path, int order, std::ostream& out) {
  const FormalDeformation def = load_deformation(path);
  auto result = extend(def, order);
  if (std::holds_alternative<ExtendFailure>(result)) {
    const auto& f = std::get<ExtendFailure>(result);
    Json j;
    j["failure_at_order"] = f.order;
    j["obstruction"] = cochain_to_json(f.omega);
    print_json(out, j);
    return 1;
  }
  print_json(out, deformation_to_json(std::get<FormalDeformation>(result)));
  return 0;
}

int cmd_deform_check(const std::string& path, int order, bool json, std::ostream& out) {
  const FormalDeformation def = load_deformation(path);
  const DeformationCheck chk = check_deformation_equation(def, order);
  if (json) {
    Json j;
    Json orders = Json::array();
    for (const OrderCheck& oc : chk.orders)
      orders.push_back({{"order", oc.order}, {"ok", oc.circle_ok}});
    j["orders"] = std::move(orders);
    j["all_ok"] = chk.all_ok;
    print_json(out, j);
  } else {
    for (const OrderCheck& oc : chk.orders)
      out << "order " << oc.order << ": " << (oc.circle_ok ? "ok" : "FAIL") << "\n";
    out << "all orders: " << (chk.all_ok ? "pass" : "fail") << "\n";
  }
  return 0;
}

int cmd_deform_trivialize(const std::string& path, int order, std::ostream& out) {
  const FormalDeformation def = load_deformation(path);
  const TrivializeResult r = trivialize(def, order);
  Json j;
  if (r.iso) {
    j["trivializable_through_order"] = order;
    j["isomorphism"] = isomorphism_to_json(*r.iso);
  } else {
    j["obstructed_at_order"] = r.obstruction->order;
    j["residual_class"] = cochain_to_json(r.obstruction->residual);
  }
  print_json(out, j);
  return 0;
}

int cmd_deform_universal(const std::string& path, const std::string& push, std::ostream& out) {
  const Algebra alg = load_algebra(path);
  const InfinitesimalBase base = universal_infinitesimal(alg);
  if (!push.empty()) {
    std::vector<Rational> coeffs;
    std::stringstream ss(push);
    std::string tok;
    while (std::getline(ss, tok, ',')) coeffs.push_back(Rational::parse(tok));
    print_json(out, deformation_to_json(push_out_infinitesimal(base, coeffs)));
    return 0;
  }
  Json j;
  j["dim_H2"] = base.dim_h2();
  j["base_ring"] = algebra_to_json(base.base_ring());
  Json r = Json::array();
  for (const Cochain& c : base.representatives) r.push_back(cochain_to_json(c));
  j["representatives"] = std::move(r);
  print_json(out, j);
  return 0;
}

int cmd_degenerate(const std::string& path, const std::string& map_path, const std::string& phi_path,
                   const std::string& at, bool strict, bool json, std::ostream& out) {
  const Algebra alg = load_algebra(path);
  if (map_path.empty() == phi_path.empty())
    fail(Errc::ParseError, "degenerate: exactly one of --map and --phi is required");

  if (!phi_path.empty()) {
    const RatMatrix phi = matrix_from_json(load_json(phi_path));
    const PhiDegeneration r = phi_degeneration(phi, alg);
    if (!r.algebra) {
      if (json) {
        Json j;
        j["condition_holds"] = false;
        j["residual"] = cochain_to_json(*r.residual);
        print_json(out, j);
      } else {
        out << "condition fails; residual tensor:\n";
        print_cochain_text(out, *r.residual);
      }
      return 1;
    }
    if (json)
      print_json(out, algebra_to_json(*r.algebra));
    else
      print_algebra_text(out, *r.algebra);
    return 0;
  }

  const ParamMatrix f = param_matrix_from_json(load_json(map_path));
  const ParamAlgebra family = conjugate_family(f, alg);
  if (!at.empty()) {
    const Algebra value = evaluate_family(family, Rational::parse(at));
    if (json)
      print_json(out, algebra_to_json(value));
    else
      print_algebra_text(out, value);
    return 0;
  }
  const LimitResult lim = limit_at_zero(family);
  if (!lim.algebra) {
    if (json) {
      Json j;
      Json poles = Json::array();
      for (const PoleEntry& p : lim.poles)
        poles.push_back({{"i", p.i}, {"j", p.j}, {"k", p.k}, {"order", p.order}});
      j["poles"] = std::move(poles);
      print_json(out, j);
    } else {
      out << "no limit at t = 0; poles:\n";
      for (const PoleEntry& p : lim.poles)
        out << "C[" << p.i << "," << p.j << "->" << p.k << "]: pole of order " << p.order << "\n";
    }
    return strict ? 1 : 0;
  }
  if (json)
    print_json(out, algebra_to_json(*lim.algebra));
  else
    print_algebra_text(out, *lim.algebra);
  return 0;
}

Json rigidity_to_json(const RigidityReport& r) {
  Json j;
  j["dim"] = r.dim;
  j["dim_Z2"] = r.dim_z2;
  j["dim_B2"] = r.dim_b2;
  j["dim_H2"] = r.dim_h2;
  j["dim_H3"] = r.dim_h3;
  j["derivation_dim"] = r.dim_der;
  j["orbit_dim"] = r.orbit_dim;
  j["algebraically_rigid"] = r.algebraically_rigid;
  j["formally_rigid"] = r.formally_rigid_via_h2 ? Json("YES (via H2=0)") : Json("undetermined");
  Json sq = Json::array();
  for (bool b : r.sq_coboundary) sq.push_back(b);
  j["sq_coboundary_per_representative"] = std::move(sq);
  j["notes"] = r.notes;
  return j;
}

int cmd_rigidity(const std::string& path, bool json, std::ostream& out) {
  const RigidityReport r = rigidity_report(load_algebra(path));
  if (json) {
    print_json(out, rigidity_to_json(r));
    return 0;
  }
  out << "dim: " << r.dim << "\n";
  out << "dim Z2: " << r.dim_z2 << "\n";
  out << "dim B2: " << r.dim_b2 << "\n";
  out << "dim H2: " << r.dim_h2 << "\n";
  out << "dim H3: " << r.dim_h3 << "\n";
  out << "derivation dim: " << r.dim_der << "\n";
  out << "orbit dim: " << r.orbit_dim << "\n";
  out << "algebraically rigid: " << (r.algebraically_rigid ? "yes" : "no") << "\n";
  out << "formally rigid: " << (r.formally_rigid_via_h2 ? "YES (via H2=0)" : "undetermined by implemented criteria")
      << "\n";
  for (std::size_t i = 0; i < r.sq_coboundary.size(); ++i)
    out << "Sq of representative " << i << ": " << (r.sq_coboundary[i] ? "coboundary" : "not a coboundary")
        << "\n";
  for (const std::string& n : r.notes) out << "note: " << n << "\n";
  return 0;
}

int cmd_census(Index dim, int jobs, bool json, std::ostream& out) {
  if (dim == 2) {
    const Census c = census_dim2();
    if (json) {
      Json j;
      Json entries = Json::array();
      for (const CensusEntry& e : c.entries)
        entries.push_back({{"id", e.id},
                           {"dim", e.dim},
                           {"derivation_dim", e.dim_der},
                           {"dim_H2", e.dim_h2},
                           {"independent_idempotents", e.idempotent_count},
                           {"associative", e.associative},
                           {"unital", e.unital},
                           {"rigid", e.rigid}});
      j["entries"] = std::move(entries);
      j["irreducible_components"] = c.component_count;
      j["rigid_algebras"] = c.rigid_count;
      j["degeneration_witness"] = c.degeneration_witness;
      j["degeneration_verified"] = c.degeneration_verified;
      j["nontrivial_deformation_of_a0"] = deformation_to_json(c.nontrivial_deformation_of_a0);
      print_json(out, j);
      return 0;
    }
    out << "id  dim  der  H2  idem  rigid\n";
    for (const CensusEntry& e : c.entries)
      out << e.id << "  " << e.dim << "    " << e.dim_der << "    " << e.dim_h2 << "   " << e.idempotent_count
          << "     " << (e.rigid ? "yes" : "no") << "\n";
    out << "irreducible components: " << c.component_count << "\n";
    out << "rigid algebras: " << c.rigid_count << "\n";
    out << "degeneration: " << c.degeneration_witness << " ["
        << (c.degeneration_verified ? "verified" : "FAILED") << "]\n";
    return 0;
  }

  // Higher dimensions: building-block data only, no completeness claim.
  std::vector<const RegistryEntry*> algs;
  for (const RegistryEntry& e : registry())
    if (e.algebra.dim == dim) algs.push_back(&e);
  std::vector<RigidityReport> reports(algs.size());
  if (jobs > 1) {
    std::vector<std::future<RigidityReport>> futs;
    for (const RegistryEntry* e : algs)
      futs.push_back(std::async(std::launch::async, [e] { return rigidity_report(e->algebra); }));
    for (std::size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
  } else {
    for (std::size_t i = 0; i < algs.size(); ++i) reports[i] = rigidity_report(algs[i]->algebra);
  }

  if (json) {
    Json j;
    j["dim"] = dim;
    j["complete"] = false;
    Json entries = Json::array();
    for (std::size_t i = 0; i < algs.size(); ++i) {
      Json e;
      e["id"] = algs[i]->id;
      e["description"] = algs[i]->description;
      e["rigidity"] = rigidity_to_json(reports[i]);
      entries.push_back(std::move(e));
    }
    j["registry_candidates"] = std::move(entries);
    print_json(out, j);
  } else {
    out << "dimension " << dim << ": registry candidates only (classification not claimed complete)\n";
    for (std::size_t i = 0; i < algs.size(); ++i)
      out << algs[i]->id << ": H2 = " << reports[i].dim_h2 << ", H3 = " << reports[i].dim_h3
          << ", der = " << reports[i].dim_der << (reports[i].algebraically_rigid ? "  [rigid]" : "") << "\n";
    out << "every entry degenerates to the null algebra via diag(1, t, ..., t)\n";
  }
  return 0;
}

int cmd_idempotents(const std::string& path, std::uint64_t seed, bool json, std::ostream& out) {
  const Algebra alg = load_algebra(path);
  const IdempotentSearch r = idempotent_search(alg, seed);
  if (json) {
    Json j;
    Json list = Json::array();
    for (const RatVector& x : r.idempotents) {
      Json v = Json::array();
      for (Index i = 0; i < x.rows(); ++i) v.push_back(x(i).str());
      list.push_back(std::move(v));
    }
    j["idempotents"] = std::move(list);
    j["independent_count"] = r.independent_count;
    print_json(out, j);
  } else {
    for (const RatVector& x : r.idempotents) {
      out << "x = (";
      for (Index i = 0; i < x.rows(); ++i) out << (i ? ", " : "") << x(i).str();
      out << ")\n";
    }
    out << "independent: " << r.independent_count << "\n";
  }
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"deformlab: exact deformation theory of finite-dimensional associative algebras"};
  app.require_subcommand(1);

  std::string alg_path, lhs_path, rhs_path, map_path, phi_path, at, push;
  int degree = 2;
  int order = 1;
  long dim = 2;
  int jobs = 1;
  std::uint64_t seed = 0;
  bool json = false, reps = false, circle = false, strict = false;

  auto* check = app.add_subcommand("check", "associativity and unity of an algebra");
  check->add_option("algebra", alg_path)->required();
  check->add_flag("--json", json);

  auto* coh = app.add_subcommand("cohomology", "Hochschild cohomology dimensions and representatives");
  coh->add_option("algebra", alg_path)->required();
  coh->add_option("--degree", degree)->check(CLI::Range(1, 6));
  coh->add_flag("--reps", reps);
  coh->add_flag("--json", json);

  auto* br = app.add_subcommand("bracket", "Gerstenhaber bracket (or circle product) of two cochains");
  br->add_option("phi", lhs_path)->required();
  br->add_option("psi", rhs_path)->required();
  br->add_flag("--circle", circle);
  br->add_flag("--json", json);

  auto* def = app.add_subcommand("deform", "formal deformation operations");
  def->require_subcommand(1);
  auto* dext = def->add_subcommand("extend", "extend order by order, solving obstructions");
  dext->add_option("deformation", alg_path)->required();
  dext->add_option("--order", order)->required();
  auto* dchk = def->add_subcommand("check", "deformation equation order by order");
  dchk->add_option("deformation", alg_path)->required();
  int check_order = -1;
  dchk->add_option("--order", check_order);
  dchk->add_flag("--json", json);
  auto* dtriv = def->add_subcommand("trivialize", "attempt an equivalence to the trivial deformation");
  dtriv->add_option("deformation", alg_path)->required();
  dtriv->add_option("--order", order)->required();
  auto* duni = def->add_subcommand("universal", "universal infinitesimal deformation base");
  duni->add_option("algebra", alg_path)->required();
  duni->add_option("--push", push, "coefficients c1,c2,... for a push-out to K[t]/(t^2)");

  auto* deg = app.add_subcommand("degenerate", "limits of conjugated families at t = 0");
  deg->add_option("algebra", alg_path)->required();
  deg->add_option("--map", map_path, "parametric basis change f_t (polynomial matrix)");
  deg->add_option("--phi", phi_path, "singular map phi for the phi + t*id criterion");
  deg->add_option("--at", at, "evaluate the family at t = p/q instead of the limit");
  deg->add_flag("--strict", strict, "exit 1 when the limit has poles");
  deg->add_flag("--json", json);

  auto* rig = app.add_subcommand("rigidity", "tangent dimensions and rigidity flags");
  rig->add_option("algebra", alg_path)->required();
  rig->add_flag("--json", json);

  auto* cen = app.add_subcommand("census", "algebra census (verified for dimension 2)");
  cen->add_option("--dim", dim)->check(CLI::Range(2L, 8L));
  cen->add_option("--jobs", jobs)->check(CLI::Range(1, 64));
  cen->add_flag("--json", json);

  auto* idem = app.add_subcommand("idempotents", "exact idempotent search");
  idem->add_option("algebra", alg_path)->required();
  idem->add_option("--seed", seed);
  idem->add_flag("--json", json);

  std::vector<const char*> argv;
  argv.push_back("deformlab");
  for (const std::string& a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (check->parsed()) return cmd_check(alg_path, json, out);
    if (coh->parsed()) return cmd_cohomology(alg_path, degree, reps, json, out);
    if (br->parsed()) return cmd_bracket(lhs_path, rhs_path, circle, json, out);
    if (def->parsed()) {
      if (dext->parsed()) return cmd_deform_extend(alg_path, order, out);
      if (dchk->parsed()) return cmd_deform_check(alg_path, check_order, json, out);
      if (dtriv->parsed()) return cmd_deform_trivialize(alg_path, order, out);
      if (duni->parsed()) return cmd_deform_universal(alg_path, push, out);
    }
    if (deg->parsed()) return cmd_degenerate(alg_path, map_path, phi_path, at, strict, json, out);
    if (rig->parsed()) return cmd_rigidity(alg_path, json, out);
    if (cen->parsed()) return cmd_census(static_cast<Index>(dim), jobs, json, out);
    if (idem->parsed()) return cmd_idempotents(alg_path, seed, json, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.code() == Errc::ParseError ? 2 : 1;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

}  // namespace deformlab::cli
