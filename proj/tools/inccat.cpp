#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "inccat/inccat.hpp"

namespace fs = std::filesystem;
using namespace inccat;
using json = nlohmann::json;

namespace {

struct Options {
  bool json_output = false;
  bool root_max = false;
  std::string family = "fin";
  std::optional<std::size_t> max_size;
  std::vector<std::string> inputs;
  std::size_t size = 0;
  std::size_t degree = 1;
  std::size_t cutoff = 4;
  bool all_constants = false;
  bool quick = false;
  std::optional<std::size_t> deep;
  bool schmitt = false;
  std::uint64_t seed = 42;
  std::string out_dir;
};

FamilySpec family_spec(const Options& o) {
  FamilySpec spec = FamilySpec::parse(o.family);
  if (o.root_max) {
    if (!spec.forest()) throw ParseError("--root-max applies only to forest families");
    spec.root_max = true;
  }
  return spec;
}

FamilyContext family_context(const Options& o, std::size_t fallback_size) {
  return FamilyContext(family_spec(o), o.max_size.value_or(fallback_size));
}

IncidenceCategory category_of(const Options& o) {
  // membership does not depend on a size bound
  return FamilyContext(family_spec(o), 0).category();
}

std::string label_set(const Poset& p, ElementSubset s) {
  std::string out = "{";
  bool first = true;
  for (const auto& name : io::subset_to_json(p, s)) {
    if (!first) out += ",";
    out += name.get<std::string>();
    first = false;
  }
  return out + "}";
}

json triple_json(const Morphism& m) {
  json j = io::morphism_to_json(m);
  j.erase("source");
  j.erase("target");
  return j;
}

std::string triple_line(const Morphism& m) {
  const Poset& a = m.source.poset();
  const Poset& b = m.target.poset();
  std::string f = "{";
  bool first = true;
  for (std::size_t x = 0; x < a.size(); ++x) {
    if (m.map[x] < 0) continue;
    if (!first) f += ",";
    f += a.label(x) + "->" + b.label(static_cast<std::size_t>(m.map[x]));
    first = false;
  }
  return "I1=" + label_set(a, m.kernel_ideal) + " I2=" + label_set(b, m.image_ideal) + " f=" + f + "}";
}

void print_json(const json& j, const Options& o) { std::cout << (o.json_output ? j.dump() : j.dump(2)) << "\n"; }

Morphism read_morphism(const std::string& path, const IncidenceCategory& cat) {
  return io::morphism_from_json(io::read_json_file(path), cat, fs::path(path).parent_path());
}

/// A poset document becomes its delta function; anything else is read as a
/// Hall element.
HallElement read_hall_input(const std::string& path, const HallAlgebra& h) {
  const json j = io::read_json_file(path);
  if (j.is_object() && j.contains("elements")) return h.delta(io::poset_from_json(j));
  return io::hall_from_json(j);
}

std::size_t max_degree(const HallElement& f) {
  std::size_t d = 0;
  for (const auto& [k, c] : f) d = std::max(d, degree(k));
  return d;
}

std::size_t input_degree(const std::string& path) {
  const json j = io::read_json_file(path);
  if (j.is_object() && j.contains("elements")) return j["elements"].size();
  return max_degree(io::hall_from_json(j));
}

int run_ideals(const Options& o) {
  const Poset p = io::read_poset_file(o.inputs.at(0));
  const auto& lattice = order_ideals(p);
  if (o.json_output) {
    json list = json::array();
    for (auto ideal : lattice) list.push_back(io::subset_to_json(p, ideal));
    std::cout << json{{"count", lattice.size()}, {"ideals", list}}.dump() << "\n";
    return 0;
  }
  std::cout << lattice.size() << " ideals\n";
  for (auto ideal : lattice) std::cout << label_set(p, ideal) << "\n";
  return 0;
}

int run_hom(const Options& o) {
  const IncidenceCategory cat = category_of(o);
  const auto a = cat.object(io::read_poset_file(o.inputs.at(0)));
  const auto b = cat.object(io::read_poset_file(o.inputs.at(1)));
  const auto homs = cat.hom_set(a, b);
  if (o.json_output) {
    json list = json::array();
    for (const auto& m : homs) list.push_back(triple_json(m));
    std::cout << list.dump() << "\n";
    return 0;
  }
  std::cout << homs.size() << " morphisms\n";
  for (const auto& m : homs) std::cout << triple_line(m) << "\n";
  return 0;
}

int run_compose(const Options& o) {
  const IncidenceCategory cat = category_of(o);
  const Morphism first = read_morphism(o.inputs.at(0), cat);
  const Morphism second = read_morphism(o.inputs.at(1), cat);
  print_json(io::morphism_to_json(cat.compose(second, first)), o);
  return 0;
}

int run_kernel(const Options& o, bool cokernel) {
  const IncidenceCategory cat = category_of(o);
  const Morphism m = read_morphism(o.inputs.at(0), cat);
  print_json(io::morphism_to_json(cokernel ? cat.cokernel(m) : cat.kernel(m)), o);
  return 0;
}

int run_ses(const Options& o) {
  const IncidenceCategory cat = category_of(o);
  const auto x = cat.object(io::read_poset_file(o.inputs.at(0)));
  const auto seqs = cat.short_exact_sequences(x);
  if (o.json_output) {
    json list = json::array();
    for (const auto& s : seqs)
      list.push_back({{"ideal", io::subset_to_json(x.poset(), s.arrows[1].image_ideal)},
                      {"sub", io::poset_to_json(s.objects[1].poset())},
                      {"quotient", io::poset_to_json(s.objects[3].poset())},
                      {"inclusion", triple_json(s.arrows[1])},
                      {"projection", triple_json(s.arrows[2])},
                      {"exact", cat.is_exact(s)}});
    std::cout << list.dump() << "\n";
    return 0;
  }
  std::cout << seqs.size() << " short exact sequences\n";
  for (const auto& s : seqs) {
    const ElementSubset ideal = s.arrows[1].image_ideal;
    std::cout << "0 -> X" << label_set(x.poset(), ideal) << " -> X_P -> X"
              << label_set(x.poset(), ideal.complement(x.size())) << " -> 0"
              << (cat.is_exact(s) ? "" : "  (not exact)") << "\n";
  }
  return 0;
}

int run_product(const Options& o) {
  const std::size_t need = input_degree(o.inputs.at(0)) + input_degree(o.inputs.at(1));
  const auto ctx = family_context(o, need);
  const HallAlgebra h(ctx);
  const auto f = read_hall_input(o.inputs.at(0), h);
  const auto g = read_hall_input(o.inputs.at(1), h);
  print_json(io::hall_to_json(h.product(f, g)), o);
  return 0;
}

int run_coproduct(const Options& o, bool antipode) {
  const auto ctx = family_context(o, input_degree(o.inputs.at(0)));
  const HallAlgebra h(ctx);
  const auto f = read_hall_input(o.inputs.at(0), h);
  if (antipode)
    print_json(io::hall_to_json(h.antipode(f)), o);
  else
    print_json(io::tensor_to_json(h.coproduct(f)), o);
  return 0;
}

int run_constants(const Options& o) {
  const auto ctx = family_context(o, o.size);
  const HallAlgebra h(ctx);
  std::cout << "P\tQ\tR\tN\n";
  for (std::size_t p = 0; p <= o.size; ++p)
    for (const auto& a : ctx.classes(p))
      for (const auto& b : ctx.classes(o.size - p))
        for (const auto& r : ctx.classes(o.size)) {
          const std::size_t n = h.structure_constant(a.key, b.key, r.key);
          if (n == 0 && !o.all_constants) continue;
          std::cout << a.key.hex() << "\t" << b.key.hex() << "\t" << r.key.hex() << "\t" << n << "\n";
        }
  return 0;
}

int run_primitives(const Options& o) {
  const auto ctx = family_context(o, o.degree);
  const HallAlgebra h(ctx);
  const auto basis = h.primitive_basis(o.degree);
  if (o.json_output) {
    json list = json::array();
    for (const auto& f : basis) list.push_back(io::hall_to_json(f));
    std::cout << json{{"degree", o.degree}, {"dimension", basis.size()}, {"basis", list}}.dump() << "\n";
    return 0;
  }
  std::cout << "dimension " << basis.size() << "\n";
  for (const auto& f : basis) std::cout << io::hall_to_json(f).dump() << "\n";
  return 0;
}

int run_k0(const Options& o) {
  const auto ctx = family_context(o, o.cutoff);
  const auto k0 = k0_truncated(ctx, o.cutoff);
  if (o.json_output) {
    json gens = json::array(), torsion = json::array();
    for (const auto& g : k0.generators) gens.push_back(g.hex());
    for (const auto& t : k0.torsion()) torsion.push_back(t.str());
    std::cout << json{{"cutoff", o.cutoff},
                      {"generators", gens},
                      {"relations", k0.relations.size()},
                      {"free_rank", k0.free_rank()},
                      {"torsion", torsion}}
                     .dump()
              << "\n";
    return 0;
  }
  std::cout << k0.describe() << "\n";
  std::cout << k0.generators.size() << " generators, " << k0.relations.size() << " relations\n";
  return 0;
}

int run_verify(const Options& o) {
  const auto ctx = family_context(o, 4);
  verify::SuiteSizes sizes;
  if (o.quick) sizes = verify::SuiteSizes::quick();
  if (o.deep) sizes = verify::SuiteSizes::deep(*o.deep);
  const auto results = verify::run_all(ctx, sizes, o.schmitt, o.seed);
  bool ok = true;
  for (const auto& r : results) ok = ok && r.ok();
  if (o.json_output) {
    json suites = json::array();
    for (const auto& r : results)
      suites.push_back(
          {{"name", r.name}, {"checks", r.checks}, {"failures", r.failures}, {"counterexamples", r.counterexamples}});
    std::cout << json{{"family", ctx.name()}, {"max_size", ctx.max_size()}, {"seed", o.seed}, {"ok", ok},
                      {"suites", suites}}
                     .dump()
              << "\n";
    return ok ? 0 : 1;
  }
  std::cout << "family " << ctx.name() << ", max size " << ctx.max_size() << ", seed " << o.seed << "\n";
  for (const auto& r : results) {
    if (r.ok()) {
      std::cout << "PASS " << r.name << " (" << r.checks << " checks)\n";
      continue;
    }
    std::cout << "FAIL " << r.name << " (" << r.failures << " of " << r.checks << " checks)\n";
    for (const auto& c : r.counterexamples) std::cout << "  " << c.dump() << "\n";
  }
  return ok ? 0 : 1;
}

int run_family_dump(const Options& o) {
  const auto ctx = family_context(o, o.size);
  const auto& classes = ctx.classes(o.size);
  if (o.out_dir.empty()) {
    for (const auto& c : classes) std::cout << io::poset_to_json(c.representative).dump() << "\n";
    return 0;
  }
  fs::create_directories(o.out_dir);
  for (const auto& c : classes) {
    const fs::path path = fs::path(o.out_dir) / ((c.size == 0 ? std::string("empty") : c.key.hex()) + ".json");
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path.string() + "'");
    out << io::poset_to_json(c.representative).dump(2) << "\n";
    std::cout << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Incidence categories of poset families and their Hall Hopf algebras"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_output, "Machine-readable JSON output");
  app.add_flag("--root-max", o.root_max, "Forests have maximal roots instead of minimal ones");

  auto family_opts = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "fin | sets | csets:k | forests | cforests:k")->capture_default_str();
    sub->add_option("--max-size", o.max_size, "Largest poset size in the truncated family");
  };
  auto files = [&](CLI::App* sub, std::size_t n, const std::string& what) {
    sub->add_option("inputs", o.inputs, what)->required()->expected(static_cast<int>(n))->check(CLI::ExistingFile);
  };

  auto* ideals = app.add_subcommand("ideals", "List the order ideals of a poset");
  files(ideals, 1, "poset JSON");
  auto* hom = app.add_subcommand("hom", "List the morphism triples A -> B");
  files(hom, 2, "source and target poset JSON");
  family_opts(hom);
  auto* compose = app.add_subcommand("compose", "Compose two morphisms: compose m1 m2 prints m2 after m1");
  files(compose, 2, "morphism JSON");
  family_opts(compose);
  auto* kernel = app.add_subcommand("kernel", "Kernel of a morphism");
  files(kernel, 1, "morphism JSON");
  family_opts(kernel);
  auto* cokernel = app.add_subcommand("cokernel", "Cokernel of a morphism");
  files(cokernel, 1, "morphism JSON");
  family_opts(cokernel);
  auto* ses = app.add_subcommand("ses", "Short exact sequences with a given middle term");
  files(ses, 1, "poset JSON");
  family_opts(ses);
  auto* product = app.add_subcommand("product", "Hall product of two deltas or Hall elements");
  files(product, 2, "poset or Hall element JSON");
  family_opts(product);
  auto* coproduct = app.add_subcommand("coproduct", "Coproduct of a delta or Hall element");
  files(coproduct, 1, "poset or Hall element JSON");
  family_opts(coproduct);
  auto* antipode = app.add_subcommand("antipode", "Antipode of a delta or Hall element");
  files(antipode, 1, "poset or Hall element JSON");
  family_opts(antipode);
  auto* constants = app.add_subcommand("constants", "Structure constants N(P,Q;R) with |R| = size, as TSV");
  family_opts(constants);
  constants->add_option("--size", o.size, "Size of R")->required();
  constants->add_flag("--all", o.all_constants, "Include zero constants");
  auto* primitives = app.add_subcommand("primitives", "Basis of the primitive elements of one degree");
  family_opts(primitives);
  primitives->add_option("--degree", o.degree, "Degree")->required();
  auto* k0 = app.add_subcommand("k0", "Truncated Grothendieck group");
  family_opts(k0);
  k0->add_option("--cutoff", o.cutoff, "Largest class size used as a generator")->required();
  auto* verify_cmd = app.add_subcommand("verify", "Run the axiom suites; exit 1 on any failure");
  family_opts(verify_cmd);
  verify_cmd->add_flag("--quick", o.quick, "Every suite at sizes <= 3");
  verify_cmd->add_option("--deep", o.deep, "Every suite at sizes <= N");
  verify_cmd->add_flag("--schmitt", o.schmitt, "Also check the incidence Hopf algebra isomorphism and relation");
  verify_cmd->add_option("--seed", o.seed, "Seed for randomized relabelings")->capture_default_str();
  auto* family = app.add_subcommand("family", "Family utilities");
  family->require_subcommand(1);
  auto* dump = family->add_subcommand("dump", "Emit every class representative of one size as poset JSON");
  family_opts(dump);
  dump->add_option("--size", o.size, "Poset size")->required();
  dump->add_option("--out-dir", o.out_dir, "Write one file per class instead of JSON lines");
  app.fallthrough();
  family->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return 2;
  }

  try {
    if (*ideals) return run_ideals(o);
    if (*hom) return run_hom(o);
    if (*compose) return run_compose(o);
    if (*kernel) return run_kernel(o, false);
    if (*cokernel) return run_kernel(o, true);
    if (*ses) return run_ses(o);
    if (*product) return run_product(o);
    if (*coproduct) return run_coproduct(o, false);
    if (*antipode) return run_coproduct(o, true);
    if (*constants) return run_constants(o);
    if (*primitives) return run_primitives(o);
    if (*k0) return run_k0(o);
    if (*verify_cmd) return run_verify(o);
    if (*dump) return run_family_dump(o);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
  std::cerr << app.help();
  return 2;
}
