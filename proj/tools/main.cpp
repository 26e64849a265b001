// Command-line interface: presentations, family suite, H^0 analysis,
// Tjurina numbers, group-ring checks, coset enumeration and the surgery
// gate, with text or JSON reports.
#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

#include "palg/commpoly.hpp"
#include "palg/families.hpp"
#include "palg/findim.hpp"
#include "palg/gate.hpp"
#include "palg/ginzburg.hpp"
#include "palg/group.hpp"

using json = nlohmann::ordered_json;
using namespace palg;

namespace {

constexpr const char* kToolVersion = "0.1.0";

struct Emitter {
  std::string command;
  json inputs = json::object();
  CheckReport checks;
  json payloads = json::object();
  std::string output_format = "text";
  std::string out_path;

  int emit() {
    Outcome overall = checks.overall();
    if (output_format == "json") {
      json r;
      r["tool_version"] = kToolVersion;
      r["command"] = command;
      r["inputs"] = inputs;
      r["checks"] = json::array();
      for (const auto& c : checks.items) {
        json item;
        item["name"] = c.name;
        item["outcome"] = outcome_str(c.outcome);
        if (!c.detail.empty()) item["detail"] = c.detail;
        r["checks"].push_back(item);
      }
      r["payloads"] = payloads;
      r["status"] = outcome_str(overall);
      write(r.dump(2) + "\n");
    } else {
      std::ostringstream os;
      os << "command: " << command << "\n";
      for (auto& [k, v] : inputs.items()) os << "input " << k << ": " << to_text(v) << "\n";
      for (const auto& c : checks.items) {
        os << "check " << c.name << ": " << outcome_str(c.outcome);
        if (!c.detail.empty()) os << " (" << c.detail << ")";
        os << "\n";
      }
      for (auto& [k, v] : payloads.items()) os << "payload " << k << ": " << to_text(v) << "\n";
      os << "status: " << outcome_str(overall) << "\n";
      write(os.str());
    }
    switch (overall) {
      case Outcome::Pass: return 0;
      case Outcome::Fail: return 1;
      case Outcome::Inconclusive: return 2;
    }
    return 1;
  }

  static std::string to_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
  }

  void write(const std::string& text) {
    if (out_path.empty()) {
      std::cout << text;
    } else {
      std::ofstream out(out_path);
      if (!out) throw std::runtime_error("cannot open output path " + out_path);
      out << text;
    }
  }
};

long long default_budget() {
  if (const char* env = std::getenv("PALG_BUDGET")) return std::atoll(env);
  return 1ll << 24;
}

DgPresentation build_family(const std::string& family, int k, Field field,
                            const std::string& mode) {
  if (family == "wk") return build_Wk(k, field);
  if (family == "ak") return build_Ak(k, field);
  if (family == "gk") {
    GinzMode m = GinzMode::Explicit;
    if (mode == "literal") m = GinzMode::CyclicLiteral;
    else if (mode == "cyclic-orbit") m = GinzMode::CyclicOrbit;
    else if (mode != "explicit")
      throw std::invalid_argument("mode must be explicit, literal or cyclic-orbit");
    return build_Gk(k, field, m);
  }
  throw std::invalid_argument("family must be wk, ak or gk");
}

GroupPtr build_group(const std::string& spec) {
  if (spec == "a4" || spec == "A4") return alternating_group(4);
  if (spec == "a5" || spec == "A5") return alternating_group(5);
  if (spec == "s4" || spec == "S4") return symmetric_group(4);
  auto split = [&](const std::string& head) -> std::optional<std::vector<int>> {
    if (spec.compare(0, head.size(), head) != 0) return std::nullopt;
    std::vector<int> vals;
    std::istringstream is(spec.substr(head.size()));
    std::string tok;
    while (std::getline(is, tok, ',')) vals.push_back(std::stoi(tok));
    return vals;
  };
  if (auto v = split("cyclic:"); v && v->size() == 1) return cyclic_group((*v)[0]);
  if (auto v = split("dihedral:"); v && v->size() == 1) return dihedral_group_perm((*v)[0]);
  if (auto v = split("prism:"); v && v->size() == 2) {
    auto r = todd_coxeter(prism_presentation((*v)[0], (*v)[1]), 100000);
    if (r.outcome != Outcome::Pass) throw std::runtime_error("prism enumeration did not close");
    return r.group;
  }
  throw std::invalid_argument(
      "unknown group '" + spec + "' (use a4, s4, a5, cyclic:N, dihedral:N or prism:M,N)");
}

GroupPresentation presentation_from_options(const std::string& prism, int cyclic, int dihedral,
                                            const std::string& gens,
                                            const std::string& relators) {
  if (!prism.empty()) {
    std::istringstream is(prism);
    std::string a, b;
    std::getline(is, a, ',');
    std::getline(is, b, ',');
    return prism_presentation(std::stoi(a), std::stoi(b));
  }
  if (cyclic > 0) return cyclic_presentation(cyclic);
  if (dihedral > 0) return dihedral_presentation(dihedral);
  if (gens.empty() || relators.empty())
    throw std::invalid_argument("give --prism/--cyclic/--dihedral or --gens with --relators");
  GroupPresentation p;
  std::istringstream gs(gens);
  std::string tok;
  while (std::getline(gs, tok, ',')) p.generators.push_back(tok);
  std::istringstream rs(relators);
  while (std::getline(rs, tok, ';'))
    p.relators.push_back(parse_group_word(tok, p.generators));
  return p;
}

json h1_json(const std::vector<BigInt>& factors) {
  json a = json::array();
  for (const auto& f : factors) a.push_back(f.str());
  return a;
}

json trace_json(const GateVerdict& v) {
  json t = json::array();
  for (const auto& e : v.trace) {
    json item;
    item["rule"] = e.rule_id;
    item["citation"] = e.citation;
    item["message"] = e.message;
    t.push_back(item);
  }
  return t;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computer algebra for quiver dg presentations, group rings and the "
               "surgery gate"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string field_spec = "q", output_format = "text", out_path;
  long seed = 12345;
  app.add_option("--output", output_format, "report format: text or json")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", out_path, "write the report to a file instead of stdout");
  app.add_option("--seed", seed, "seed for randomized property checks");

  // present
  auto* present = app.add_subcommand("present", "emit a presentation file for W_k, A_k or G_k")->fallthrough();
  std::string pr_family = "wk", pr_mode = "explicit";
  int pr_k = 1;
  present->add_option("--family", pr_family, "wk, ak or gk");
  present->add_option("--k", pr_k, "family parameter, k >= 1")->required();
  present->add_option("--field", field_spec, "q, z or p:<prime>");
  present->add_option("--mode", pr_mode, "gk differential mode");

  // suite
  auto* suite = app.add_subcommand("suite", "run the family cross-check suite")->fallthrough();
  int su_k = 1, su_bound = 0;
  suite->add_option("--k", su_k)->required();
  suite->add_option("--field", field_spec);
  suite->add_option("--bound", su_bound, "rewriting truncation bound (default 4k+8)");

  // h0
  auto* h0cmd = app.add_subcommand("h0", "compute H^0 of a built-in family")->fallthrough();
  std::string h0_family = "wk", h0_mode = "explicit";
  int h0_k = 1, h0_bound = 0;
  bool h0_identify = false, h0_dump = false;
  h0cmd->add_option("--family", h0_family);
  h0cmd->add_option("--k", h0_k)->required();
  h0cmd->add_option("--field", field_spec);
  h0cmd->add_option("--bound", h0_bound);
  h0cmd->add_option("--mode", h0_mode);
  h0cmd->add_flag("--identify-idempotents", h0_identify,
                  "also compute the one-vertex re-presentation");
  h0cmd->add_flag("--dump-structure", h0_dump, "include the structure constants");

  // units
  auto* units = app.add_subcommand("units", "unit analysis of H^0")->fallthrough();
  std::string un_family = "wk", un_var = "x1";
  int un_k = 1, un_bound = 0;
  long long un_budget = 0;
  units->add_option("--family", un_family);
  units->add_option("--k", un_k)->required();
  units->add_option("--field", field_spec);
  units->add_option("--bound", un_bound);
  units->add_option("--budget", un_budget, "enumeration budget (default 2^24 or PALG_BUDGET)");
  units->add_option("--var", un_var, "central variable of interest");

  // tjurina
  auto* tj = app.add_subcommand("tjurina", "Tjurina dimensions of the uv - xy((x+1)^k+y-1) family")->fallthrough();
  int tj_k = 1;
  tj->add_option("--k", tj_k)->required();
  tj->add_option("--field", field_spec);

  // singular-point
  auto* sp = app.add_subcommand("singular-point", "test a point of the affine family")->fallthrough();
  int sp_k = 1;
  std::string sp_point = "0,0,-2,0";
  sp->add_option("--k", sp_k)->required();
  sp->add_option("--point", sp_point, "comma-separated u,v,x,y");
  sp->add_option("--field", field_spec);

  // group center / unit-check
  auto* group = app.add_subcommand("group", "group algebra computations")->fallthrough();
  group->require_subcommand(1);
  auto* gcenter = group->add_subcommand("center", "conjugacy class sums and the center")->fallthrough();
  std::string gc_group = "a5";
  long gc_survey_p = 0;
  long long gc_budget = 0;
  gcenter->add_option("--group", gc_group)->required();
  gcenter->add_option("--ring", field_spec);
  gcenter->add_option("--survey-p", gc_survey_p, "exhaustive center-unit survey over F_p");
  gcenter->add_option("--budget", gc_budget);
  auto* gunit = group->add_subcommand("unit-check", "verify a central unit from class sums")->fallthrough();
  std::string gu_group = "a5", gu_element;
  gunit->add_option("--group", gu_group)->required();
  gunit->add_option("--ring", field_spec);
  gunit->add_option("--element", gu_element, "e.g. \"49 + 26*C2 - 10*C3 - 16*C4\"")->required();

  // abelianize
  auto* ab = app.add_subcommand("abelianize", "invariant factors of a presentation")->fallthrough();
  std::string ab_prism, ab_gens, ab_relators;
  int ab_cyclic = 0, ab_dihedral = 0;
  ab->add_option("--prism", ab_prism, "M,N");
  ab->add_option("--cyclic", ab_cyclic);
  ab->add_option("--dihedral", ab_dihedral);
  ab->add_option("--gens", ab_gens, "comma-separated generator names");
  ab->add_option("--relators", ab_relators, "semicolon-separated relator words");

  // todd-coxeter
  auto* tc = app.add_subcommand("todd-coxeter", "coset enumeration over the trivial subgroup")->fallthrough();
  std::string tc_prism, tc_gens, tc_relators;
  int tc_cyclic = 0, tc_dihedral = 0;
  long long tc_bound = 100000;
  tc->add_option("--prism", tc_prism, "M,N");
  tc->add_option("--cyclic", tc_cyclic);
  tc->add_option("--dihedral", tc_dihedral);
  tc->add_option("--gens", tc_gens);
  tc->add_option("--relators", tc_relators);
  tc->add_option("--bound", tc_bound, "coset workspace bound");

  // gate
  auto* gate = app.add_subcommand("gate", "classification and surgery rules")->fallthrough();
  gate->require_subcommand(1);
  auto* gcls = gate->add_subcommand("classify", "summand-level filter")->fallthrough();
  long gk_cls = 1;
  std::string g_summand;
  gcls->add_option("--k", gk_cls)->required();
  gcls->add_option("--summand", g_summand)->required();
  auto* gsur = gate->add_subcommand("surgery", "full surgery case analysis")->fallthrough();
  long gk_sur = 1;
  std::string g_summands, g_knots = "one";
  gsur->add_option("--k", gk_sur)->required();
  gsur->add_option("--summands", g_summands, "semicolon-separated descriptors")->required();
  gsur->add_option("--knots", g_knots, "one or both");

  // parse-check
  auto* pc = app.add_subcommand("parse-check", "round-trip a presentation file")->fallthrough();
  std::string pc_input;
  pc->add_option("--input", pc_input)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help
    app.exit(e);
    return 64;
  }

  Emitter em;
  em.output_format = output_format;
  em.out_path = out_path;

  try {
    Field field = Field::parse(field_spec);

    if (*present) {
      DgPresentation p = build_family(pr_family, pr_k, field, pr_mode);
      Emitter raw;
      raw.out_path = out_path;
      raw.write(serialize_presentation(p));
      return 0;
    }

    if (*suite) {
      FamilyReport r = run_family_suite(su_k, field, su_bound);
      em.command = "suite";
      em.inputs["k"] = su_k;
      em.inputs["field"] = field.str();
      em.inputs["bound"] = r.bound;
      em.inputs["seed"] = seed;
      em.checks = r.checks;
      for (const auto& [name, value] : r.payloads) em.payloads[name] = value;
      return em.emit();
    }

    if (*h0cmd) {
      DgPresentation p = build_family(h0_family, h0_k, field, h0_mode);
      int bound = h0_bound > 0 ? h0_bound : default_family_bound(h0_k);
      em.command = "h0";
      em.inputs["family"] = h0_family;
      em.inputs["k"] = h0_k;
      em.inputs["field"] = field.str();
      em.inputs["bound"] = bound;
      H0Result r = h0(p, bound);
      em.checks.add("h0.finite", r.outcome, r.detail);
      if (r.algebra) {
        em.payloads["dim"] = r.algebra->dim();
        json basis = json::array();
        for (size_t i = 0; i < r.algebra->dim(); ++i)
          basis.push_back(r.algebra->basis_word_str(i));
        em.payloads["basis"] = basis;
        if (h0_dump) {
          json sc = json::array();
          for (size_t i = 0; i < r.algebra->dim(); ++i)
            for (size_t j = 0; j < r.algebra->dim(); ++j) {
              json row = json::array();
              for (const auto& c : r.algebra->table.sc[i][j]) row.push_back(c.str());
              sc.push_back(row);
            }
          em.payloads["structure_constants"] = sc;
        }
      }
      if (h0_identify) {
        H0Result ri = h0_identified(p, bound);
        em.checks.add("h0.identified.finite", ri.outcome, ri.detail);
        if (ri.algebra) {
          em.payloads["identified_dim"] = ri.algebra->dim();
          json basis = json::array();
          for (size_t i = 0; i < ri.algebra->dim(); ++i)
            basis.push_back(ri.algebra->basis_word_str(i));
          em.payloads["identified_basis"] = basis;
        }
      }
      return em.emit();
    }

    if (*units) {
      DgPresentation p = build_family(un_family, un_k, field, "explicit");
      int bound = un_bound > 0 ? un_bound : default_family_bound(un_k);
      long long budget = un_budget > 0 ? un_budget : default_budget();
      em.command = "units";
      em.inputs["family"] = un_family;
      em.inputs["k"] = un_k;
      em.inputs["field"] = field.str();
      em.inputs["budget"] = budget;
      H0Result r = h0(p, bound);
      em.checks.add("h0.finite", r.outcome, r.detail);
      if (r.algebra) {
        if (field.kind == FieldKind::PrimeField) {
          UnitGroupReport ur = unit_group(*r.algebra, un_var, budget);
          em.checks.add("units.enumeration", ur.outcome, ur.detail);
          em.payloads["unit_count"] = ur.units;
          em.payloads["scanned"] = ur.scanned;
          em.payloads["generator_order"] = ur.element_order;
        } else {
          SemisimplifiedOrderResult so =
              central_semisimplified_order(*r.algebra, un_var, 2 * un_k + 4);
          em.checks.add("units.semisimplified-order", so.outcome, so.detail);
          em.payloads["semisimplified_order"] = so.order;
        }
      }
      return em.emit();
    }

    if (*tj) {
      em.command = "tjurina";
      em.inputs["k"] = tj_k;
      em.inputs["field"] = field.str();
      TjurinaResult r = tjurina_number(tj_k, field);
      em.checks.add("tjurina.finite", r.outcome);
      em.payloads["dim_global"] = r.dim_global;
      em.payloads["dim_local_origin"] = r.dim_local_origin;
      if (r.dim_saturated >= 0) em.payloads["dim_saturated_x_plus_2"] = r.dim_saturated;
      return em.emit();
    }

    if (*sp) {
      em.command = "singular-point";
      em.inputs["k"] = sp_k;
      em.inputs["point"] = sp_point;
      em.inputs["field"] = field.str();
      CommutativePoly sigma = sigma_k(sp_k, field);
      std::vector<Scalar> pt;
      std::istringstream is(sp_point);
      std::string tok;
      while (std::getline(is, tok, ','))
        pt.push_back(Scalar(field, BigRat(BigInt(tok))));
      if (pt.size() != 4) throw std::invalid_argument("point needs 4 coordinates");
      bool sing = is_singular_point(sigma, pt);
      em.checks.add("singular-point.evaluated", Outcome::Pass);
      em.payloads["singular"] = sing;
      return em.emit();
    }

    if (*gcenter) {
      GroupPtr g = build_group(gc_group);
      em.command = "group center";
      em.inputs["group"] = gc_group;
      em.inputs["ring"] = field.str();
      json classes = json::array();
      const auto& cls = g->conjugacy_classes();
      for (size_t i = 0; i < cls.size(); ++i) {
        json c;
        c["name"] = "C" + std::to_string(i + 1);
        c["size"] = cls[i].size();
        c["representative"] = g->name_of(cls[i].front());
        classes.push_back(c);
      }
      em.payloads["order"] = g->order();
      em.payloads["classes"] = classes;
      em.payloads["center_dim"] = cls.size();
      em.checks.add("center.class-sums", Outcome::Pass,
                    std::to_string(cls.size()) + " classes");
      if (gc_survey_p > 0) {
        long long budget = gc_budget > 0 ? gc_budget : default_budget();
        CenterUnitSurvey sv = center_unit_survey(g, gc_survey_p, budget);
        em.checks.add("center.unit-survey", sv.outcome, sv.detail);
        em.payloads["survey_scanned"] = sv.scanned;
        em.payloads["survey_units"] = sv.units;
        json hist = json::object();
        for (auto [ord, cnt] : sv.order_histogram) hist[std::to_string(ord)] = cnt;
        em.payloads["survey_order_histogram"] = hist;
        em.payloads["survey_scalar_units"] = sv.scalar_units;
        em.payloads["survey_single_class_units"] = sv.single_class_units;
      }
      return em.emit();
    }

    if (*gunit) {
      GroupPtr g = build_group(gu_group);
      em.command = "group unit-check";
      em.inputs["group"] = gu_group;
      em.inputs["ring"] = field.str();
      em.inputs["element"] = gu_element;
      GroupAlgebraElement u = parse_class_sum_expr(gu_element, g, field);
      CentralUnitResult r = verify_central_unit(u);
      em.checks.add("unit-check.central-unit", r.outcome, r.detail);
      if (r.inverse) em.payloads["inverse"] = r.inverse->str();
      return em.emit();
    }

    if (*ab) {
      GroupPresentation p =
          presentation_from_options(ab_prism, ab_cyclic, ab_dihedral, ab_gens, ab_relators);
      em.command = "abelianize";
      em.inputs["generators"] = p.generators.size();
      em.inputs["relators"] = p.relators.size();
      std::vector<BigInt> factors = abelianization(p);
      em.payloads["invariant_factors"] = h1_json(factors);
      em.payloads["cyclic"] = factors.size() <= 1;
      em.checks.add("abelianize.computed", Outcome::Pass);
      return em.emit();
    }

    if (*tc) {
      GroupPresentation p =
          presentation_from_options(tc_prism, tc_cyclic, tc_dihedral, tc_gens, tc_relators);
      em.command = "todd-coxeter";
      em.inputs["generators"] = p.generators.size();
      em.inputs["relators"] = p.relators.size();
      em.inputs["bound"] = tc_bound;
      ToddCoxeterResult r = todd_coxeter(p, size_t(tc_bound));
      em.checks.add("todd-coxeter.closed", r.outcome, r.detail);
      em.payloads["cosets_defined"] = r.cosets_defined;
      if (r.group) em.payloads["order"] = r.group->order();
      if (r.group && !tc_prism.empty()) {
        std::istringstream is(tc_prism);
        std::string a, b;
        std::getline(is, a, ',');
        std::getline(is, b, ',');
        long expect = 4l * std::stol(a) * std::stol(b);
        em.checks.add("todd-coxeter.order-4mn",
                      long(r.group->order()) == expect ? Outcome::Pass : Outcome::Fail,
                      "order " + std::to_string(r.group->order()) + ", expected " +
                          std::to_string(expect));
      }
      return em.emit();
    }

    if (*gcls) {
      em.command = "gate classify";
      em.inputs["k"] = gk_cls;
      em.inputs["summand"] = g_summand;
      GateVerdict v = classify_summand(SummandDescriptor::parse(g_summand), gk_cls);
      em.checks.add("gate.evaluated", Outcome::Pass);
      em.payloads["admissible"] = v.admissible;
      em.payloads["trace"] = trace_json(v);
      return em.emit();
    }

    if (*gsur) {
      em.command = "gate surgery";
      em.inputs["k"] = gk_sur;
      em.inputs["summands"] = g_summands;
      em.inputs["knots"] = g_knots;
      std::vector<SummandDescriptor> cand;
      std::istringstream is(g_summands);
      std::string tok;
      while (std::getline(is, tok, ';')) cand.push_back(SummandDescriptor::parse(tok));
      KnotConfig kc = g_knots == "both" ? KnotConfig::BothNontrivial : KnotConfig::OneNontrivial;
      GateVerdict v = surgery_gate(gk_sur, kc, cand);
      em.checks.add("gate.evaluated", Outcome::Pass);
      em.payloads["admissible"] = v.admissible;
      if (kc == KnotConfig::OneNontrivial &&
          std::all_of(cand.begin(), cand.end(), [](const SummandDescriptor& s) {
            return s.kind == SummandKind::Lens || s.kind == SummandKind::Prism ||
                   s.kind == SummandKind::S1xS2;
          }))
        em.payloads["h1_invariant_factors"] = h1_json(candidate_h1(cand));
      em.payloads["trace"] = trace_json(v);
      return em.emit();
    }

    if (*pc) {
      em.command = "parse-check";
      em.inputs["input"] = pc_input;
      std::ifstream in(pc_input);
      if (!in) throw std::runtime_error("cannot open " + pc_input);
      std::stringstream buf;
      buf << in.rdbuf();
      DgPresentation p = parse_presentation(buf.str());
      std::string ser = serialize_presentation(p);
      DgPresentation p2 = parse_presentation(ser);
      bool same = *p.quiver == *p2.quiver && p.relations == p2.relations &&
                  p.differentials == p2.differentials;
      em.checks.add("parse-check.round-trip", same ? Outcome::Pass : Outcome::Fail);
      em.payloads["name"] = p.name;
      em.payloads["relations"] = p.relations.size();
      return em.emit();
    }
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return 65;
  } catch (const CLI::Error& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 64;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 64;
}
