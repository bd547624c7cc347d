// Command line interface: validate/faces/numbering/bounds/minimize/profile
// over state documents, plus the diagram generators.

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "knotsphere/document.hpp"
#include "knotsphere/generators.hpp"
#include "knotsphere/search.hpp"
#include "knotsphere/topology.hpp"

namespace ks = knotsphere;

namespace {

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path);
  if (!in) throw ks::Error(ks::Errc::bad_params, "cannot open input file " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ks::StateDoc load_doc(const std::string& path, const std::vector<int>& punctures_flag) {
  ks::StateDoc doc = ks::parse_state_doc(read_input(path));
  if (!punctures_flag.empty())
    doc.state = ks::make_state(doc.state.diagram, punctures_flag);
  return doc;
}

int known_c_of(const ks::StateDoc& doc) {
  if (doc.meta.is_object() && doc.meta.contains("c") && doc.meta["c"].is_number_integer())
    return doc.meta["c"].get<int>();
  return -1;
}

void emit(const ks::Json& j, bool as_json, const std::string& text) {
  if (as_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"knot diagrams on a punctured sphere: restricted crossing numbers and lower bounds"};
  app.require_subcommand(1);

  std::string input = "-";
  std::vector<int> punctures_flag;
  int headroom = 2;
  long long max_states = 500000;
  uint64_t seed = 0;
  bool as_json = false;
  bool canonical = false;
  int threads = 1;
  int gen_n = 1;
  int gen_crossings = 4;
  std::string gen_name;

  auto add_common = [&](CLI::App* cmd, bool with_punctures = true) {
    cmd->add_option("input", input, "state document path, or - for stdin");
    if (with_punctures)
      cmd->add_option("--punctures", punctures_flag,
                      "override puncture faces (list of face ids)")
          ->delimiter(',');
    cmd->add_flag("--json", as_json, "machine-readable output");
  };

  auto* c_validate = app.add_subcommand("validate", "parse and echo a state document");
  add_common(c_validate);
  c_validate->add_flag("--canonical", canonical, "emit the canonical relabeling");

  auto* c_faces = app.add_subcommand("faces", "list the faces of the diagram");
  add_common(c_faces);

  auto* c_numbering = app.add_subcommand("numbering", "Alexander numbering of the faces");
  add_common(c_numbering);

  auto* c_bounds = app.add_subcommand("bounds", "lower bounds for the punctured diagram");
  add_common(c_bounds);

  auto* c_minimize = app.add_subcommand("minimize", "restricted minimal crossing number");
  add_common(c_minimize);
  c_minimize->add_option("--headroom", headroom, "extra crossings allowed above the input");
  c_minimize->add_option("--max-states", max_states, "state budget");
  c_minimize->add_option("--threads", threads, "worker cap");

  auto* c_profile = app.add_subcommand("profile", "c_min/c_max over all puncture subsets");
  add_common(c_profile, false);
  c_profile->add_option("--headroom", headroom, "extra crossings allowed above the input");
  c_profile->add_option("--max-states", max_states, "state budget per subset");
  c_profile->add_option("--threads", threads, "worker cap");

  auto* c_gen = app.add_subcommand("gen", "emit a generated state document");
  c_gen->add_option("name", gen_name, "circle | kink | trefoil | example1 | dn | random")
      ->required();
  c_gen->add_option("--n", gen_n, "clasp count for dn");
  c_gen->add_option("--crossings", gen_crossings, "crossing target for random");
  c_gen->add_option("--seed", seed, "random seed");
  c_gen->add_flag("--canonical", canonical, "emit the canonical relabeling");

  CLI11_PARSE(app, argc, argv);

  try {
    if (c_validate->parsed()) {
      ks::StateDoc doc = load_doc(input, punctures_flag);
      std::cout << ks::serialize_state_doc(doc, canonical) << "\n";
      return 0;
    }
    if (c_faces->parsed()) {
      ks::StateDoc doc = load_doc(input, punctures_flag);
      ks::FaceSet f = ks::faces(doc.state.diagram);
      ks::Json j;
      j["crossings"] = doc.state.diagram.crossings();
      j["count"] = f.count;
      ks::Json rows = ks::Json::array();
      std::ostringstream text;
      text << "crossings " << doc.state.diagram.crossings() << ", faces " << f.count << "\n";
      for (int i = 0; i < f.count; ++i) {
        rows.push_back(ks::Json{{"id", i}, {"sides", f.boundary[i]}});
        text << "  face " << i << ": " << f.boundary[i].size() << " sides\n";
      }
      j["faces"] = rows;
      emit(j, as_json, text.str());
      return 0;
    }
    if (c_numbering->parsed()) {
      ks::StateDoc doc = load_doc(input, punctures_flag);
      ks::Numbering n = ks::alexander_numbering(ks::underlying_curve(doc.state.diagram));
      ks::Json j;
      j["values"] = n.value;
      std::ostringstream text;
      for (size_t i = 0; i < n.value.size(); ++i)
        text << "face " << i << ": " << n.value[i] << "\n";
      emit(j, as_json, text.str());
      return 0;
    }
    if (c_bounds->parsed()) {
      ks::StateDoc doc = load_doc(input, punctures_flag);
      ks::Curve c = ks::underlying_curve(doc.state.diagram);
      const auto& punct = doc.state.punctures;
      int annulus = 0, u = -1, v = -1;
      ks::Numbering num = ks::alexander_numbering(c);
      for (size_t i = 0; i < punct.size(); ++i)
        for (size_t k = i + 1; k < punct.size(); ++k) {
          int b = std::max(0, std::abs(num.value[punct[i]] - num.value[punct[k]]) - 1);
          if (b > annulus) {
            annulus = b;
            u = punct[i];
            v = punct[k];
          }
        }
      int cobr = punct.empty() ? 0 : ks::cobracket_bound(c, punct);
      int lb = ks::lower_bound(c, punct);
      ks::Json j;
      j["annulus_bound"] = annulus;
      if (u >= 0) j["annulus_pair"] = ks::Json::array({u, v});
      j["cobracket_bound"] = cobr;
      j["lower_bound"] = lb;
      std::ostringstream text;
      text << "annulus bound " << annulus;
      if (u >= 0) text << " (faces " << u << "," << v << ")";
      text << "\ncobracket bound " << cobr << "\nlower bound " << lb << "\n";
      emit(j, as_json, text.str());
      return 0;
    }
    if (c_minimize->parsed()) {
      ks::StateDoc doc = load_doc(input, punctures_flag);
      ks::SearchConfig cfg;
      cfg.headroom = headroom;
      cfg.max_states = max_states;
      cfg.known_c = known_c_of(doc);
      cfg.threads = threads;
      ks::CrossingResult r = ks::restricted_crossing_number(doc.state, cfg);
      ks::Json j = ks::result_to_json(r);
      std::ostringstream text;
      text << "crossings " << r.initial_crossings << ", lower bound " << r.lower_bound
           << ", min found " << r.min_found << (r.certified ? " (certified)" : " (uncertified)")
           << "\nexplored " << r.explored << " states, witness length " << r.witness.size()
           << "\n";
      emit(j, as_json, text.str());
      return r.certified ? 0 : 2;
    }
    if (c_profile->parsed()) {
      ks::StateDoc doc = load_doc(input, {});
      ks::SearchConfig cfg;
      cfg.headroom = headroom;
      cfg.max_states = max_states;
      cfg.known_c = known_c_of(doc);
      cfg.threads = threads;
      ks::Profile p = ks::profile(doc.state.diagram, cfg);
      ks::Json j = ks::profile_to_json(p);
      std::ostringstream text;
      text << "n  c_min  c_max\n";
      bool all_certified = true;
      for (size_t n = 0; n < p.cmax.size(); ++n) {
        auto cell = [&](const ks::IntInterval& iv) {
          all_certified = all_certified && iv.certified();
          if (iv.certified()) return std::to_string(iv.lo);
          return "[" + std::to_string(iv.lo) + "," + std::to_string(iv.hi) + "]";
        };
        std::string lo = cell(p.cmin[n]), hi = cell(p.cmax[n]);
        text << n << "  " << lo << "  " << hi << "\n";
      }
      text << "alpha " << ks::threshold_to_string(p.alpha) << ", beta "
           << ks::threshold_to_string(p.beta) << ", gamma "
           << ks::threshold_to_string(p.gamma) << ", delta "
           << ks::threshold_to_string(p.delta) << "\n";
      emit(j, as_json, text.str());
      return all_certified ? 0 : 2;
    }
    if (c_gen->parsed()) {
      ks::StateDoc doc;
      if (gen_name == "circle") {
        doc.state = ks::PuncturedState{ks::gen_circle(), {}};
        doc.meta = ks::Json{{"name", "circle"}, {"c", 0}};
      } else if (gen_name == "kink") {
        doc.state = ks::PuncturedState{ks::gen_kink(), {}};
        doc.meta = ks::Json{{"name", "kink"}, {"c", 0}};
      } else if (gen_name == "trefoil") {
        doc.state = ks::PuncturedState{ks::gen_trefoil(), {}};
        doc.meta = ks::Json{{"name", "trefoil"}, {"c", 3}};
      } else if (gen_name == "example1") {
        ks::Example1 ex = ks::gen_example1();
        doc.state = ex.state;
        ks::Json regions;
        for (const auto& [k, v] : ex.regions) regions[k] = v;
        doc.meta = ks::Json{{"name", "example1"},
                            {"c", 0},
                            {"reconstruction", true},
                            {"regions", regions}};
      } else if (gen_name == "dn") {
        ks::Dn dn = ks::gen_dn(gen_n);
        doc.state = dn.state;
        doc.meta = ks::Json{{"name", "d" + std::to_string(gen_n)},
                            {"c", 0},
                            {"reconstruction", true},
                            {"bigons", dn.bigons}};
      } else if (gen_name == "random") {
        doc.state = ks::PuncturedState{ks::gen_random(gen_crossings, seed), {}};
        doc.meta = ks::Json{{"name", "random"}, {"c", 0}, {"seed", seed}};
      } else {
        throw ks::Error(ks::Errc::bad_params, "unknown generator " + gen_name);
      }
      std::cout << ks::serialize_state_doc(doc, canonical) << "\n";
      return 0;
    }
  } catch (const ks::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
