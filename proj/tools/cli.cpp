#include "cli.hpp"

#include <chrono>
#include <cstdlib>
#include <functional>
#include <map>
#include <sstream>

#include "CLI11.hpp"
#include "codec.hpp"
#include "layercake/error.hpp"

namespace layercake::cli {

namespace {

using codec::Json;

struct Options {
  std::string format = "json";
  bool timing = false;
  std::size_t max_candidates = 1'000'000;
  std::size_t max_elements = 10'000'000;

  std::string category, left, right, functor, square, set_functor, group, module, cochain, twogroup, extension,
      cocycle, base, kernel, pointed, monoid;
  std::size_t degree = 0;
  std::size_t dimension = 2;
  bool unnormalized = false;
  bool brute_force = false;
  bool representatives = false;
  bool strict = false;
  bool all_sections = false;
  bool emit_category = false;
};

struct Command {
  std::string path;
  std::function<Json(std::vector<std::string>&)> handler;  // fills diagnostics
};

Json maps_json(const FinFunctor& f) {
  Json j = codec::to_json(f);
  return Json{{"objects", j["objects"]}, {"morphisms", j["morphisms"]}};
}

Json profile_json(const SurjectivityProfile& p) {
  return Json{{"surj0", p.surj0}, {"surj1", p.surj1}, {"surj2", p.surj2}};
}

SearchLimits search_limits(const Options& o) { return SearchLimits{o.max_candidates, 1u << 16}; }

CohomologyLimits cohomology_limits(const Options& o) {
  CohomologyLimits l;
  l.enumeration_bound = o.max_elements;
  return l;
}

// Category-level commands.

Json category_validate(const Options& o) {
  auto c = codec::category_from_json(codec::read_file(o.category));
  return Json{{"valid", true},
              {"objects", c->num_objects()},
              {"morphisms", c->num_morphisms()},
              {"groupoid", is_groupoid(*c)},
              {"thin", is_thin(*c)}};
}

Json category_classify(const Options& o) {
  auto c = codec::category_from_json(codec::read_file(o.category));
  auto d = classify_dimension(*c);
  int connected = -2;
  for (int k = -1; k <= 1 && k_connected(*c, k); ++k) connected = k;
  Json skel = Json::array();
  const auto sk = skeleton(c);
  for (Obj x : sk.inclusion.object_map()) skel.push_back(c->object_label(x));
  return Json{{"dimension", to_string(d)},
              {"level", dimension_level(d)},
              {"connectivity", connected},
              {"skeleton", skel}};
}

Json category_equivalent(const Options& o) {
  auto a = codec::category_from_json(codec::read_file(o.left));
  auto b = codec::category_from_json(codec::read_file(o.right));
  auto r = are_equivalent(a, b, search_limits(o));
  return Json{{"equivalent", r.equivalent},
              {"witness", r.witness ? maps_json(*r.witness) : Json(nullptr)},
              {"candidates_explored", r.candidates_explored}};
}

// Functor analysis.

Json functor_analyze(const Options& o) {
  auto p = codec::functor_from_json(codec::read_file(o.functor));
  auto profile = surjectivity_profile(p);
  auto verdict = classify_forgetfulness(profile);
  auto tower = factorize(p);
  Json stages = Json::array();
  for (auto [name, f] : {std::pair{"p2", &tower.p2}, {"p1", &tower.p1}, {"p0", &tower.p0}}) {
    stages.push_back({{"stage", name},
                      {"objects", f->codomain().num_objects()},
                      {"morphisms", f->codomain().num_morphisms()},
                      {"profile", profile_json(surjectivity_profile(*f))}});
  }
  auto report = fiber_dimension_report(p);
  Json fibers = Json::array();
  for (Obj x = 0; x < p.codomain().num_objects(); ++x) {
    fibers.push_back({{"object", p.codomain().object_label(x)},
                      {"dimension", to_string(report.fibers[x])},
                      {"level", dimension_level(report.fibers[x])}});
  }
  return Json{{"profile", profile_json(profile)},
              {"verdict", to_string(verdict.tag)},
              {"tower", stages},
              {"fibers", fibers},
              {"hypothesis",
               {{"groupoid_input", report.groupoid_input},
                {"forward", report.forward_consistent},
                {"converse", report.groupoid_input ? Json(report.converse_consistent) : Json(nullptr)}}}};
}

Json functor_factorize(const Options& o) {
  auto p = codec::functor_from_json(codec::read_file(o.functor));
  auto t = factorize(p);
  Json iso = Json::object();
  for (Obj x = 0; x < p.domain().num_objects(); ++x) {
    iso[p.domain().object_label(x)] = p.codomain().morphism_label(t.composite_iso.component(x));
  }
  return Json{{"e_prime", codec::to_json(*t.e_prime)},
              {"e_double_prime", codec::to_json(*t.e_double_prime)},
              {"p2", maps_json(t.p2)},
              {"p1", maps_json(t.p1)},
              {"p0", maps_json(t.p0)},
              {"composite_iso", iso}};
}

Json functor_fibers(const Options& o) {
  auto p = codec::functor_from_json(codec::read_file(o.functor));
  Json out = Json::array();
  for (Obj x = 0; x < p.codomain().num_objects(); ++x) {
    auto fib = essential_fiber(p, x, o.strict ? FiberKind::Strict : FiberKind::Essential);
    Json objects = Json::array();
    for (Obj y = 0; y < fib.category->num_objects(); ++y) objects.push_back(fib.category->object_label(y));
    auto d = classify_dimension(*fib.category);
    out.push_back({{"object", p.codomain().object_label(x)},
                   {"objects", objects},
                   {"morphisms", fib.category->num_morphisms()},
                   {"dimension", to_string(d)},
                   {"level", dimension_level(d)}});
  }
  return Json{{"kind", o.strict ? "strict" : "essential"}, {"fibers", out}};
}

Json functor_fill(const Options& o) {
  auto sq = codec::square_from_json(codec::read_file(o.square));
  auto r = has_diagonal_filler(sq, o.max_candidates);
  return Json{{"filler", r.filler.has_value()},
              {"h", r.filler ? maps_json(r.filler->h) : Json(nullptr)},
              {"filler_count", r.filler_count},
              {"essentially_unique", r.essentially_unique},
              {"candidates_explored", r.candidates_explored}};
}

// Grothendieck construction.

Json groth_construct(const Options& o) {
  auto f = codec::set_functor_from_json(codec::read_file(o.set_functor));
  auto g = grothendieck_construct(f);
  Json elements = Json::array();
  for (auto [b, i] : g.elements) elements.push_back({b, i});
  return Json{{"total", codec::to_json(*g.total)}, {"projection", maps_json(g.projection)}, {"elements", elements}};
}

Json groth_check(const Options& o) {
  auto p = codec::functor_from_json(codec::read_file(o.functor));
  auto op = check_discrete_opfibration(p);
  auto fib = check_grothendieck_fibration(p);
  Json ce1 = nullptr, ce2 = nullptr;
  if (op.counterexample) {
    ce1 = {{"morphism", p.codomain().morphism_label(op.counterexample->morphism)},
           {"source", p.domain().object_label(op.counterexample->source)},
           {"lifts", op.counterexample->lifts}};
  }
  if (fib.counterexample) {
    ce2 = {{"morphism", p.codomain().morphism_label(fib.counterexample->morphism)},
           {"target", p.domain().object_label(fib.counterexample->target)}};
  }
  return Json{{"discrete_opfibration", op.holds},
              {"opfibration_counterexample", ce1},
              {"grothendieck_fibration", fib.holds},
              {"fibration_counterexample", ce2}};
}

Json groth_roundtrip(const Options& o) {
  auto f = codec::set_functor_from_json(codec::read_file(o.set_functor));
  auto g = grothendieck_construct(f);
  auto verdict = check_discrete_opfibration(g.projection);
  auto back = reconstruct(g.projection);
  auto iso = set_functor_isomorphism(f, back);
  return Json{{"discrete_opfibration", verdict.holds},
              {"isomorphic", iso.has_value()},
              {"components", iso ? Json(*iso) : Json(nullptr)}};
}

// Cohomology.

Json cohomology_cmd(const Options& o, std::vector<std::string>& diagnostics) {
  FinGroup g = codec::group_from_json(codec::read_file(o.group));
  GModule m = codec::module_from_json(codec::read_file(o.module), g);
  const bool normalized = !o.unnormalized;
  if (!normalized) diagnostics.push_back("unnormalized cochains");
  auto r = cohomology(m, o.degree, normalized, cohomology_limits(o));
  Json out{{"invariant_factors", r.group.invariant_factors()}};
  if (o.representatives) {
    Json reps = Json::array();
    for (const auto& c : r.representatives) reps.push_back(codec::cochain_to_json(c, m));
    out["representatives"] = reps;
  }
  if (o.brute_force) {
    auto b = brute_force_cohomology(m, o.degree, normalized, cohomology_limits(o));
    out["brute_force"] = {{"invariant_factors", b.group.invariant_factors()},
                          {"cocycles", b.cocycle_count.str()},
                          {"coboundaries", b.coboundary_count.str()}};
  }
  return out;
}

Json cocycle_check(const Options& o) {
  FinGroup g = codec::group_from_json(codec::read_file(o.group));
  GModule m = codec::module_from_json(codec::read_file(o.module), g);
  Cochain c = codec::cochain_from_json(codec::read_file(o.cochain), m);
  const bool cocycle = is_cocycle(c, m);
  Json out{{"degree", c.degree}, {"cocycle", cocycle}, {"coboundary", nullptr}, {"primitive", nullptr},
           {"class", nullptr}};
  if (c.degree > 0) {
    auto b = is_coboundary(c, m, cohomology_limits(o));
    out["coboundary"] = b.has_value();
    if (b) out["primitive"] = codec::cochain_to_json(*b, m);
  }
  if (cocycle) {
    auto r = cohomology(m, c.degree, c.normalized, cohomology_limits(o));
    out["class"] = r.class_of(c);
    out["invariant_factors"] = r.group.invariant_factors();
  }
  return out;
}

// Two-groups.

Json twogroup_build(const Options& o) {
  auto t = codec::twogroup_from_json(codec::read_file(o.twogroup));
  auto mg = build_from_data(t);
  Json out{{"objects", mg.category().num_objects()},
           {"morphisms", mg.category().num_morphisms()},
           {"pentagon", check_pentagon(mg).holds},
           {"eckmann_hilton", eckmann_hilton_holds(mg)},
           {"pi1", codec::to_json(decategorify(mg))},
           {"pi2", codec::to_json(skeletal_data(mg).pi2())}};
  if (o.emit_category) out["category"] = codec::to_json(mg.category());
  return out;
}

Json twogroup_classify(const Options& o) {
  FinGroup g = codec::group_from_json(codec::read_file(o.group));
  GModule m = codec::module_from_json(codec::read_file(o.module), g);
  auto h3 = cohomology(m, 3);
  auto reps = classify(m);
  Json out = Json::array();
  for (const auto& t : reps) out.push_back(codec::cochain_to_json(t.alpha, t.module));
  return Json{{"h3", h3.group.invariant_factors()}, {"count", reps.size()}, {"associators", out}};
}

Json twogroup_pentagon(const Options& o) {
  auto t = codec::twogroup_from_json(codec::read_file(o.twogroup));
  auto v = check_pentagon(build_from_data(t));
  return Json{{"holds", v.holds},
              {"counterexample", v.counterexample ? Json(*v.counterexample) : Json(nullptr)},
              {"cocycle", is_cocycle(t.alpha, t.module)}};
}

// Extensions.

Json section_json(const SetSection& s, const Extension& ext) {
  Json j = Json::object();
  for (Elem b = 0; b < ext.b.order(); ++b) j[std::to_string(b)] = s.map[b];
  return j;
}

Json extension_extract(const Options& o) {
  auto ext = codec::extension_from_json(codec::read_file(o.extension));
  std::vector<SetSection> sections;
  if (o.all_sections) {
    sections = all_normalized_sections(ext, o.max_candidates);
  } else {
    sections.push_back(choose_section(ext));
  }
  Json out = Json::array();
  for (const auto& s : sections) {
    auto c = extract_cocycle(ext, s);
    out.push_back({{"section", section_json(s, ext)},
                   {"cocycle", codec::to_json(c)},
                   {"conditions_hold", check_cocycle_conditions(c).holds}});
  }
  if (!o.all_sections) return out[0];
  return Json{{"sections", out}};
}

Json extension_build(const Options& o) {
  auto c = codec::cocycle_from_json(codec::read_file(o.cocycle));
  auto v = check_cocycle_conditions(c);
  if (!v.holds) {
    std::ostringstream w;
    for (std::size_t k = 0; k < v.witness.size(); ++k) w << (k ? "," : "") << v.witness[k];
    throw Error("CocycleInvalid", v.law + " fails at (" + w.str() + ")");
  }
  return Json{{"extension", codec::to_json(build_extension(c))}};
}

Json extension_classify_central(const Options& o) {
  FinGroup b = codec::group_from_json(codec::read_file(o.base));
  FinGroup f = codec::group_from_json(codec::read_file(o.kernel));
  auto r = classify_central_extensions(b, f, o.max_elements);
  Json reps = Json::array();
  for (const auto& e : r.representatives) reps.push_back(codec::to_json(e));
  return Json{{"by_cohomology", r.by_cohomology},
              {"by_cochains", r.by_cochains},
              {"by_extensions", r.by_extensions},
              {"representatives", reps}};
}

Json aut2group_cmd(const Options& o) {
  FinGroup g = codec::group_from_json(codec::read_file(o.group));
  auto a = build_aut2group(g, o.max_candidates);
  // The identity automorphism is the least one in sorted order.
  std::size_t id = 0;
  std::size_t inner = 0;
  for (std::size_t k = 0; k < a.automorphisms.size(); ++k) {
    if (!a.two_cells[id][k].empty()) ++inner;
  }
  return Json{{"objects", a.automorphisms.size()},
              {"inner", inner},
              {"components", a.automorphisms.size() / std::max<std::size_t>(inner, 1)},
              {"center_order", a.two_cells[id][id].size()},
              {"automorphisms", a.automorphisms}};
}

// Pointed categories.

Json pointed_loop(const Options& o) {
  auto p = codec::pointed_from_json(codec::read_file(o.pointed));
  return Json{{"monoid", codec::to_json(loop(p))}};
}

Json pointed_deloop(const Options& o) {
  auto m = codec::monoid_from_json(codec::read_file(o.monoid));
  return Json{{"pointed", codec::to_json(deloop(m))}};
}

Json nerve_cmd(const Options& o) {
  auto c = codec::category_from_json(codec::read_file(o.category));
  auto n = nerve(*c, o.dimension);
  Json counts = Json::array(), nondeg = Json::array();
  for (std::size_t k = 0; k <= o.dimension; ++k) {
    counts.push_back(n.count(k));
    nondeg.push_back(n.nondegenerate_count(k, *c));
  }
  return Json{{"dimension", o.dimension}, {"simplices", counts}, {"nondegenerate", nondeg},
              {"identities_verified", true}};
}

// Text rendering: one line per top-level key.
void render_text(const Json& report, std::ostream& out) {
  out << "command: " << report["command"].get<std::string>() << "\n";
  if (report["result"].is_object()) {
    for (const auto& [k, v] : report["result"].items()) out << k << ": " << v.dump() << "\n";
  } else if (!report["result"].is_null()) {
    out << "result: " << report["result"].dump() << "\n";
  }
  for (const auto& d : report["diagnostics"]) {
    out << "diagnostic: " << (d.is_string() ? d.get<std::string>() : d.dump()) << "\n";
  }
  if (report.contains("elapsed_ms")) out << "elapsed_ms: " << report["elapsed_ms"].dump() << "\n";
}

std::optional<std::size_t> env_budget() {
  const char* v = std::getenv("LAYERCAKE_MAX_BUDGET");
  if (!v || !*v) return std::nullopt;
  try {
    std::size_t pos = 0;
    auto x = std::stoull(v, &pos);
    if (pos == std::string(v).size()) return x;
  } catch (const std::exception&) {
  }
  return std::nullopt;
}

// Builds the command tree; `commands` maps each leaf to its handler.
void build(CLI::App& app, Options& o, std::map<const CLI::App*, Command>& commands) {
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", o.timing, "Report elapsed time");
  app.add_option("--max-candidates", o.max_candidates, "Search budget for functor, filler and isomorphism searches");
  app.add_option("--max-elements", o.max_elements, "Budget for brute-force cochain enumeration");

  auto file = [](CLI::App* c, const std::string& name, std::string& target, const std::string& help) {
    c->add_option(name, target, help)->required()->check(CLI::ExistingFile);
  };
  auto leaf = [&](CLI::App* parent, const std::string& name, const std::string& help, std::string path,
                  std::function<Json(std::vector<std::string>&)> handler) {
    CLI::App* c = parent->add_subcommand(name, help);
    commands[c] = {std::move(path), std::move(handler)};
    return c;
  };
  auto simple = [&o](Json (*f)(const Options&)) {
    return [f, &o](std::vector<std::string>&) { return f(o); };
  };

  auto* category = app.add_subcommand("category", "Finite categories");
  category->require_subcommand(1);
  file(leaf(category, "validate", "Validate a category", "category validate", simple(category_validate)),
       "--category", o.category, "Category JSON");
  file(leaf(category, "classify", "Dimension, connectivity and skeleton", "category classify",
            simple(category_classify)),
       "--category", o.category, "Category JSON");
  {
    auto* c = leaf(category, "equivalent", "Search for an equivalence", "category equivalent",
                   simple(category_equivalent));
    file(c, "--left", o.left, "Category JSON");
    file(c, "--right", o.right, "Category JSON");
  }

  auto* functor = app.add_subcommand("functor", "Functor analysis");
  functor->require_subcommand(1);
  file(leaf(functor, "analyze", "Surjectivity profile, verdict, tower and fibers", "functor analyze",
            simple(functor_analyze)),
       "--functor", o.functor, "Functor JSON");
  file(leaf(functor, "factorize", "Three-stage factorization", "functor factorize", simple(functor_factorize)),
       "--functor", o.functor, "Functor JSON");
  {
    auto* c = leaf(functor, "fibers", "Essential fibers over every object", "functor fibers",
                   simple(functor_fibers));
    file(c, "--functor", o.functor, "Functor JSON");
    c->add_flag("--strict", o.strict, "Strict preimages instead of essential fibers");
  }
  file(leaf(functor, "fill", "Diagonal fillers for a lifting square", "functor fill", simple(functor_fill)),
       "--square", o.square, "Square JSON");

  auto* groth = app.add_subcommand("groth", "Grothendieck construction");
  groth->require_subcommand(1);
  file(leaf(groth, "construct", "Category of elements", "groth construct", simple(groth_construct)),
       "--set-functor", o.set_functor, "Set-valued functor JSON");
  file(leaf(groth, "check", "Discrete opfibration and fibration checks", "groth check", simple(groth_check)),
       "--functor", o.functor, "Functor JSON");
  file(leaf(groth, "roundtrip", "Construct then reconstruct", "groth roundtrip", simple(groth_roundtrip)),
       "--set-functor", o.set_functor, "Set-valued functor JSON");

  {
    auto* c = leaf(&app, "cohomology", "Group cohomology", "cohomology",
                   [&o](std::vector<std::string>& d) { return cohomology_cmd(o, d); });
    file(c, "--group", o.group, "Group JSON");
    file(c, "--module", o.module, "Module JSON");
    c->add_option("--degree", o.degree, "Degree")->required();
    c->add_flag("--unnormalized", o.unnormalized, "Use unnormalized cochains");
    c->add_flag("--brute-force", o.brute_force, "Also enumerate all cochains");
    c->add_flag("--representatives", o.representatives, "Emit class representatives");
  }

  auto* cocycle = app.add_subcommand("cocycle", "Cochains");
  cocycle->require_subcommand(1);
  {
    auto* c = leaf(cocycle, "check", "Cocycle, coboundary and class", "cocycle check", simple(cocycle_check));
    file(c, "--group", o.group, "Group JSON");
    file(c, "--module", o.module, "Module JSON");
    file(c, "--cochain", o.cochain, "Cochain JSON");
  }

  auto* twogroup = app.add_subcommand("twogroup", "Skeletal 2-groups");
  twogroup->require_subcommand(1);
  {
    auto* c = leaf(twogroup, "build", "Monoidal groupoid from data", "twogroup build", simple(twogroup_build));
    file(c, "--twogroup", o.twogroup, "2-group JSON");
    c->add_flag("--emit-category", o.emit_category, "Include the underlying category");
  }
  {
    auto* c = leaf(twogroup, "classify", "One 2-group per cohomology class", "twogroup classify",
                   simple(twogroup_classify));
    file(c, "--group", o.group, "Group JSON");
    file(c, "--module", o.module, "Module JSON");
  }
  file(leaf(twogroup, "pentagon", "Check the pentagon identity", "twogroup pentagon", simple(twogroup_pentagon)),
       "--twogroup", o.twogroup, "2-group JSON");

  auto* extension = app.add_subcommand("extension", "Group extensions");
  extension->require_subcommand(1);
  {
    auto* c = leaf(extension, "extract", "Factor set of a section", "extension extract", simple(extension_extract));
    file(c, "--extension", o.extension, "Extension JSON");
    c->add_flag("--all-sections", o.all_sections, "Every normalized section");
  }
  file(leaf(extension, "build", "Crossed product of a cocycle", "extension build", simple(extension_build)),
       "--cocycle", o.cocycle, "Cocycle JSON");
  {
    auto* c = leaf(extension, "classify-central", "Count central extensions", "extension classify-central",
                   simple(extension_classify_central));
    file(c, "--base", o.base, "Quotient group JSON");
    file(c, "--kernel", o.kernel, "Abelian kernel group JSON");
  }

  file(leaf(&app, "aut2group", "Automorphism 2-group", "aut2group", simple(aut2group_cmd)), "--group", o.group,
       "Group JSON");

  auto* pointed = app.add_subcommand("pointed", "Pointed categories and monoids");
  pointed->require_subcommand(1);
  file(leaf(pointed, "loop", "Endomorphism monoid of the basepoint", "pointed loop", simple(pointed_loop)),
       "--pointed", o.pointed, "Pointed category JSON");
  file(leaf(pointed, "deloop", "One-object category of a monoid", "pointed deloop", simple(pointed_deloop)),
       "--monoid", o.monoid, "Monoid JSON");

  {
    auto* c = leaf(&app, "nerve", "Truncated nerve", "nerve", simple(nerve_cmd));
    file(c, "--category", o.category, "Category JSON");
    c->add_option("--dimension", o.dimension, "Top dimension");
  }
}

const CLI::App* chosen_leaf(const CLI::App* app) {
  for (const CLI::App* sub : app->get_subcommands()) return chosen_leaf(sub);
  return app;
}

}  // namespace

std::vector<std::string> registry() {
  CLI::App app;
  Options o;
  std::map<const CLI::App*, Command> commands;
  build(app, o, commands);
  std::vector<std::string> out;
  for (const auto& [app_ptr, c] : commands) out.push_back(c.path);
  std::sort(out.begin(), out.end());
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite category theory, cohomology and extensions", "layercake"};
  Options o;
  if (auto b = env_budget()) o.max_candidates = o.max_elements = *b;
  std::map<const CLI::App*, Command> commands;
  build(app, o, commands);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return 2;
  }

  const Command& command = commands.at(chosen_leaf(&app));
  Json report{{"schema", 1}, {"command", command.path}, {"result", nullptr}, {"diagnostics", Json::array()}};
  std::vector<std::string> diagnostics;
  int status = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    report["result"] = command.handler(diagnostics);
    for (const auto& d : diagnostics) report["diagnostics"].push_back(d);
  } catch (const Error& e) {
    report["diagnostics"].push_back({{"error", e.name()}, {"detail", std::string(e.what()).substr(e.name().size() + 2)}});
    status = e.name() == "ParseError" ? 2 : 1;
  } catch (const Json::exception& e) {
    report["diagnostics"].push_back({{"error", "ParseError"}, {"detail", e.what()}});
    status = 2;
  } catch (const std::exception& e) {
    report["diagnostics"].push_back({{"error", "InternalError"}, {"detail", e.what()}});
    status = 1;
  }
  if (o.timing) {
    report["elapsed_ms"] =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  if (o.format == "text") {
    render_text(report, out);
  } else {
    out << report.dump(2) << "\n";
  }
  return status;
}

}  // namespace layercake::cli
