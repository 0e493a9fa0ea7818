#pragma once

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>

#include "boxcat/boxcat.hpp"

namespace boxcat::cli {

using io::json;

namespace detail {

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail("BadArgument", "cannot open " + path);
  try {
    return json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    fail("ParseError", path + ": " + e.what());
  }
}

inline void emit(const json& j, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream out(out_path);
  if (!out) fail("BadArgument", "cannot open " + out_path + " for writing");
  out << j.dump(2) << "\n";
}

inline CubeMorphism read_morphism(const std::string& path) {
  return io::morphism_from_any(io::map_from_json(read_json_file(path)));
}

// Inputs that name a complex one of three ways: a ready-made complex, a
// poset to take the Boolean complex of, or a cube dimension; optionally
// truncated afterwards.
inline CubeComplex read_complex(const std::string& complex_path, const std::string& poset_path,
                                int cube_dim, int truncate_dim) {
  int given = (!complex_path.empty() ? 1 : 0) + (!poset_path.empty() ? 1 : 0) + (cube_dim >= 0 ? 1 : 0);
  if (given > 1) fail("BadArgument", "give exactly one of a complex, a poset or a cube dimension");
  CubeComplex cx;
  if (!complex_path.empty())
    cx = io::complex_from_json(read_json_file(complex_path));
  else if (!poset_path.empty())
    cx = boolean_complex(io::poset_from_json(read_json_file(poset_path)));
  else if (cube_dim >= 0)
    cx = boolean_complex(cube_poset(cube_dim));
  else
    fail("BadArgument", "an input complex, poset or cube dimension is required");
  if (truncate_dim >= 0) cx = truncate(cx, truncate_dim);
  return cx;
}

inline json coface_word_to_json(const CofaceWord& word) {
  json out = json::array();
  for (const Coface& c : word)
    out.push_back(json{{"sign", c.positive ? "+" : "-"},
                       {"position", c.position},
                       {"ambient", c.ambient}});
  return out;
}

inline json interval_to_json(const Interval& iv) {
  return json{{"lo", io::point_to_json(iv.lo.bits, iv.lo.n)},
              {"hi", io::point_to_json(iv.hi.bits, iv.hi.n)}};
}

inline json flag_check_to_json(const FinPoset& base, const CurvatureCheck& chk) {
  json out{{"ok", chk.ok}};
  if (chk.witness) {
    json edges = json::array();
    for (int c : chk.witness->edge_cells) edges.push_back(c + 1);
    out["witness"] = json{{"vertex", base.name(chk.witness->vertex)}, {"edge_cells", edges}};
  }
  return out;
}

inline json distributivity_to_json(const FinPoset& p, const DistributivityCheck& chk) {
  json out{{"ok", chk.ok}};
  if (!chk.ok) {
    json family = json::array();
    for (int x : chk.family) family.push_back(p.name(x));
    json w{{"family", family},
           {"y", p.name(chk.y)},
           {"sup_of_meets_exists", !chk.sup_missing},
           {"expected", p.name(chk.expected)}};
    if (!chk.sup_missing) w["actual"] = p.name(chk.actual);
    out["witness"] = std::move(w);
  }
  return out;
}

}  // namespace detail

inline int run(int argc, char** argv) {
  CLI::App app{"cube category toolkit: interval-preserving monotone maps of Boolean lattices"};
  app.require_subcommand(1);

  std::string out_path;
  struct {
    std::string map;
  } classify_opt;
  struct {
    std::string first, then;
  } compose_opt;
  struct {
    std::string map;
  } decompose_opt;
  struct {
    int m = 0, n = 0;
    std::string variant = "BOXPLUS";
    bool count_only = false;
  } homset_opt;
  struct {
    std::string map;
    bool all = false;
    int max_arity = 5;
  } section_opt;
  struct {
    std::string map;
  } factorize_opt;
  struct {
    int maxdim = 2;
    bool tau = false, meet = false, join = false, diag = false, surjections = false;
    bool count_only = false;
    std::vector<std::string> gen_files;
  } saturate_opt;
  struct {
    int n = -1, k = 1;
    std::string map;
  } subdivide_opt;
  struct {
    std::string poset;
    int cube = -1;
    int trunc = -1;
  } complex_opt;
  struct {
    std::string complex, poset;
    int cube = -1;
    int trunc = -1;
  } tri_opt, hom_opt, cat0_opt;
  struct {
    std::string suite = "all";
    int maxdim = 3;
  } verify_opt;

  auto add_out = [&](CLI::App* sub) {
    sub->add_option("--out", out_path, "write the JSON result to this file instead of stdout");
  };

  CLI::App* c_classify = app.add_subcommand("classify", "variant tags of a map");
  c_classify->add_option("--map", classify_opt.map, "map JSON file (coords or table form)")->required();
  add_out(c_classify);

  CLI::App* c_compose = app.add_subcommand("compose", "compose two maps");
  c_compose->add_option("--first", compose_opt.first, "map applied first")->required();
  c_compose->add_option("--then", compose_opt.then, "map applied second")->required();
  add_out(c_compose);

  CLI::App* c_decompose = app.add_subcommand("decompose", "tensor normal form of an interval-preserving map");
  c_decompose->add_option("--map", decompose_opt.map, "map JSON file")->required();
  add_out(c_decompose);

  CLI::App* c_homset = app.add_subcommand("homset", "enumerate maps between cubes");
  c_homset->add_option("-m", homset_opt.m, "source dimension")->required();
  c_homset->add_option("-n", homset_opt.n, "target dimension")->required();
  c_homset->add_option("--variant", homset_opt.variant,
                       "MONOTONE, BOXPLUS, MEET_VARIANT, JOIN_VARIANT, LATTICE_VARIANT or DELTA1_STAR");
  c_homset->add_flag("--count", homset_opt.count_only, "emit only the cardinality");
  add_out(c_homset);

  CLI::App* c_section = app.add_subcommand("section", "construct a section of a surjection");
  c_section->add_option("--map", section_opt.map, "map JSON file")->required();
  c_section->add_flag("--all", section_opt.all, "enumerate every section");
  c_section->add_option("--max-arity", section_opt.max_arity, "source size cap for --all");
  add_out(c_section);

  CLI::App* c_factorize = app.add_subcommand("factorize", "surjection-then-inclusion factorization");
  c_factorize->add_option("--map", factorize_opt.map, "map JSON file")->required();
  add_out(c_factorize);

  CLI::App* c_saturate = app.add_subcommand("saturate", "close a generator set under composition and tensor");
  c_saturate->add_option("--maxdim", saturate_opt.maxdim, "dimension bound")->required();
  c_saturate->add_flag("--tau", saturate_opt.tau, "add the coordinate swap");
  c_saturate->add_flag("--meet", saturate_opt.meet, "add the binary min");
  c_saturate->add_flag("--join", saturate_opt.join, "add the binary max");
  c_saturate->add_flag("--diag", saturate_opt.diag, "add the diagonal");
  c_saturate->add_flag("--surjections", saturate_opt.surjections,
                       "add every monotone surjection onto the interval within the bound");
  c_saturate->add_option("--gen", saturate_opt.gen_files, "extra generator map files");
  c_saturate->add_flag("--count", saturate_opt.count_only, "emit only cardinalities");
  add_out(c_saturate);

  CLI::App* c_subdivide = app.add_subcommand("subdivide", "edgewise subdivision of a cube, or the induced map");
  c_subdivide->add_option("-n", subdivide_opt.n, "cube dimension");
  c_subdivide->add_option("--k", subdivide_opt.k, "subdivision parameter: (k+1)-fold")->required();
  c_subdivide->add_option("--map", subdivide_opt.map, "emit the induced vertex map of this cube map instead");
  add_out(c_subdivide);

  CLI::App* c_complex = app.add_subcommand("complex", "Boolean complex of a poset");
  c_complex->add_option("--poset", complex_opt.poset, "poset JSON file");
  c_complex->add_option("--cube", complex_opt.cube, "use the Boolean lattice of this dimension");
  c_complex->add_option("--truncate", complex_opt.trunc, "keep cells of rank at most this");
  add_out(c_complex);

  CLI::App* c_triangulate = app.add_subcommand("triangulate", "chain triangulation of a cubical complex");
  c_triangulate->add_option("--complex", tri_opt.complex, "complex JSON file");
  c_triangulate->add_option("--poset", tri_opt.poset, "poset JSON file (Boolean complex is taken first)");
  c_triangulate->add_option("--cube", tri_opt.cube, "use the Boolean lattice of this dimension");
  c_triangulate->add_option("--truncate", tri_opt.trunc, "keep cells of rank at most this");
  add_out(c_triangulate);

  CLI::App* c_homology = app.add_subcommand("homology", "integer homology of a triangulation");
  c_homology->add_option("--simplicial,--complex", hom_opt.complex,
                         "simplicial or cubical complex JSON file");
  c_homology->add_option("--poset", hom_opt.poset, "poset JSON file (triangulated Boolean complex)");
  c_homology->add_option("--cube", hom_opt.cube, "use the Boolean lattice of this dimension");
  c_homology->add_option("--truncate", hom_opt.trunc, "keep cells of rank at most this");
  add_out(c_homology);

  CLI::App* c_cat0 = app.add_subcommand("cat0", "nonpositive-curvature verdicts for a complex");
  c_cat0->add_option("--complex", cat0_opt.complex, "complex JSON file");
  c_cat0->add_option("--poset", cat0_opt.poset, "poset JSON file (Boolean complex is taken first)");
  c_cat0->add_option("--cube", cat0_opt.cube, "use the Boolean lattice of this dimension");
  c_cat0->add_option("--truncate", cat0_opt.trunc, "keep cells of rank at most this");
  add_out(c_cat0);

  CLI::App* c_verify = app.add_subcommand("verify", "run the category verification suites");
  c_verify->add_option("--suite", verify_opt.suite, "reedy-ez, negative-control or all");
  c_verify->add_option("--maxdim", verify_opt.maxdim, "dimension bound for the reedy-ez suite");
  add_out(c_verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (c_classify->parsed()) {
      io::AnyMap any = io::map_from_json(detail::read_json_file(classify_opt.map));
      std::vector<VariantTag> tags = std::holds_alternative<RawMap>(any)
                                         ? classify(std::get<RawMap>(any))
                                         : classify(std::get<CubeMorphism>(any));
      json names = json::array();
      for (VariantTag t : tags) names.push_back(variant_name(t));
      detail::emit(json{{"tags", names}}, out_path);
    } else if (c_compose->parsed()) {
      CubeMorphism first = detail::read_morphism(compose_opt.first);
      CubeMorphism then = detail::read_morphism(compose_opt.then);
      detail::emit(io::morphism_to_json(compose(then, first)), out_path);
    } else if (c_decompose->parsed()) {
      detail::emit(io::decomposition_to_json(decompose(detail::read_morphism(decompose_opt.map))),
                   out_path);
    } else if (c_homset->parsed()) {
      auto tag = variant_from_name(homset_opt.variant);
      if (!tag) fail("BadArgument", "unknown variant: " + homset_opt.variant);
      std::vector<CubeMorphism> homs = enumerate_hom(homset_opt.m, homset_opt.n, *tag);
      json out{{"count", homs.size()}};
      if (!homset_opt.count_only) {
        json list = json::array();
        for (const auto& f : homs) list.push_back(io::morphism_to_json(f));
        out["morphisms"] = std::move(list);
      }
      detail::emit(out, out_path);
    } else if (c_section->parsed()) {
      CubeMorphism pi = detail::read_morphism(section_opt.map);
      json out{{"section", io::morphism_to_json(construct_section(pi))}};
      if (section_opt.all) {
        json list = json::array();
        for (const auto& s : sections_of(pi, section_opt.max_arity))
          list.push_back(io::morphism_to_json(s));
        out["count"] = list.size();
        out["sections"] = std::move(list);
      }
      detail::emit(out, out_path);
    } else if (c_factorize->parsed()) {
      CubeMorphism phi = detail::read_morphism(factorize_opt.map);
      Factorization f = epi_mono_factorize(phi);
      detail::emit(json{{"epi", io::morphism_to_json(f.epi)},
                        {"mono", io::morphism_to_json(eval_coface_word(f.mono, f.image.rank()))},
                        {"coface_word", detail::coface_word_to_json(f.mono)},
                        {"image", detail::interval_to_json(f.image)}},
                   out_path);
    } else if (c_saturate->parsed()) {
      std::vector<CubeMorphism> gens = delta1_generators();
      if (saturate_opt.tau) gens.push_back(basic_generator(GeneratorKind::tau));
      if (saturate_opt.meet) gens.push_back(basic_generator(GeneratorKind::gamma_minus));
      if (saturate_opt.join) gens.push_back(basic_generator(GeneratorKind::gamma_plus));
      if (saturate_opt.diag) gens.push_back(basic_generator(GeneratorKind::diag));
      if (saturate_opt.surjections)
        for (const auto& s : surjection_generators(saturate_opt.maxdim)) gens.push_back(s);
      for (const auto& path : saturate_opt.gen_files)
        gens.push_back(detail::read_morphism(path));
      Saturation s = saturate(gens, saturate_opt.maxdim);
      json homs = json::array();
      for (const auto& [key, hs] : s.homs) {
        json entry{{"m", key.first}, {"n", key.second}, {"count", hs.size()}};
        if (!saturate_opt.count_only) {
          json list = json::array();
          for (const auto& f : hs) list.push_back(io::morphism_to_json(f));
          entry["morphisms"] = std::move(list);
        }
        homs.push_back(std::move(entry));
      }
      detail::emit(json{{"maxdim", s.maxdim}, {"total", s.total()}, {"homs", std::move(homs)}},
                   out_path);
    } else if (c_subdivide->parsed()) {
      if (!subdivide_opt.map.empty()) {
        CubeMorphism phi = detail::read_morphism(subdivide_opt.map);
        SubdivisionMap sm = induced_subdivision_map(phi, subdivide_opt.k);
        json image = json::array();
        for (int v : sm.map.image) image.push_back(v + 1);
        detail::emit(json{{"k", subdivide_opt.k},
                          {"source_vertices", sm.source.poset.names()},
                          {"target_vertices", sm.target.poset.names()},
                          {"vertex_image", std::move(image)}},
                     out_path);
      } else {
        if (subdivide_opt.n < 0) {
          std::cerr << "subdivide needs -n or --map\n";
          return 2;
        }
        detail::emit(io::complex_to_json(subdivide_representable(subdivide_opt.n, subdivide_opt.k)),
                     out_path);
      }
    } else if (c_complex->parsed()) {
      CubeComplex cx = detail::read_complex("", complex_opt.poset, complex_opt.cube, complex_opt.trunc);
      detail::emit(io::complex_to_json(cx), out_path);
    } else if (c_triangulate->parsed()) {
      CubeComplex cx = detail::read_complex(tri_opt.complex, tri_opt.poset, tri_opt.cube, tri_opt.trunc);
      detail::emit(io::simplicial_to_json(triangulate(cx)), out_path);
    } else if (c_homology->parsed()) {
      std::vector<HomologyGroup> groups;
      if (!hom_opt.complex.empty()) {
        json j = detail::read_json_file(hom_opt.complex);
        SimplicialComplex sc = j.contains("cells")
                                   ? triangulate(io::complex_from_json(j))
                                   : io::simplicial_from_json(j);
        groups = homology(sc);
      } else {
        groups = homology(
            triangulate(detail::read_complex("", hom_opt.poset, hom_opt.cube, hom_opt.trunc)));
      }
      detail::emit(io::homology_to_json(groups), out_path);
    } else if (c_cat0->parsed()) {
      json out = json::object();
      CubeComplex cx =
          detail::read_complex(cat0_opt.complex, cat0_opt.poset, cat0_opt.cube, cat0_opt.trunc);
      if (cat0_opt.complex.empty())
        out["distributive_meet_semilattice"] =
            detail::distributivity_to_json(cx.base, is_distributive_meet_semilattice(cx.base));
      out["flag_link"] = detail::flag_check_to_json(cx.base, is_nonpositively_curved(cx));
      std::vector<HomologyGroup> groups = homology(triangulate(cx));
      out["reduced_h0_trivial"] = reduced_homology_trivial(groups, 0);
      out["reduced_h1_trivial"] = reduced_homology_trivial(groups, 1);
      detail::emit(out, out_path);
    } else if (c_verify->parsed()) {
      if (verify_opt.suite != "reedy-ez" && verify_opt.suite != "negative-control" &&
          verify_opt.suite != "all") {
        std::cerr << "unknown suite: " << verify_opt.suite << "\n";
        return 2;
      }
      std::ostringstream lines;
      bool all_pass = true;
      if (verify_opt.suite == "reedy-ez" || verify_opt.suite == "all") {
        VerifyReport report = verify_reedy_ez(verify_opt.maxdim);
        for (const auto& c : report.checks) {
          if (c.pass)
            lines << "PASS " << c.name << "\n";
          else
            lines << "FAIL " << c.name << ": " << c.detail << "\n";
          all_pass = all_pass && c.pass;
        }
      }
      if (verify_opt.suite == "negative-control" || verify_opt.suite == "all") {
        NegativeControl nc = negative_control();
        // the min-by-max pairing x -> (x1 ^ x2, x1 v x2), whose three-point
        // image fits no cube
        CubeMorphism expected{2, 2, {MonotoneBoolFn{2, {0b11}}, MonotoneBoolFn{2, {0b01, 0b10}}}};
        bool found = false;
        for (const auto& f : nc.unfactorable) {
          lines << "INFO unfactorable " << io::morphism_to_json(f).dump() << "\n";
          found = found || f == expected;
        }
        if (found)
          lines << "PASS negative-control\n";
        else {
          lines << "FAIL negative-control: the min-by-max pairing was not reported\n";
          all_pass = false;
        }
      }
      if (out_path.empty()) {
        std::cout << lines.str();
      } else {
        std::ofstream out(out_path);
        if (!out) fail("BadArgument", "cannot open " + out_path + " for writing");
        out << lines.str();
      }
      return all_pass ? 0 : 1;
    }
    return 0;
  } catch (const Error& e) {
    json err{{"error", e.code()}, {"message", e.what()}};
    if (!e.witness_json().empty()) {
      json w = json::parse(e.witness_json(), nullptr, false);
      err["witness"] = w.is_discarded() ? json(e.witness_json()) : w;
    }
    std::cout << err.dump(2) << "\n";
    return 1;
  }
}

}  // namespace boxcat::cli
