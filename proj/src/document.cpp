#include "knotsphere/document.hpp"

#include <sstream>

namespace knotsphere {

StateDoc parse_state_doc(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const std::exception& e) {
    throw Error(Errc::bad_params, std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object() || !j.contains("code"))
    throw Error(Errc::bad_params, "document needs a \"code\" field");
  Diagram d = j["code"].is_string() ? parse_diagram(j["code"].get<std::string>())
                                    : parse_diagram(j["code"].dump());
  std::vector<int> punct;
  if (j.contains("punctures") && !j["punctures"].is_null()) {
    const Json& pj = j["punctures"];
    if (pj.is_array()) {
      for (const auto& v : pj) punct.push_back(v.get<int>());
    } else if (pj.is_object()) {
      std::vector<std::pair<std::string, int>> items;
      for (auto it = pj.begin(); it != pj.end(); ++it)
        items.push_back({it.key(), it.value().get<int>()});
      std::sort(items.begin(), items.end());
      for (size_t i = 0; i < items.size(); ++i) {
        if (items[i].first != "p" + std::to_string(i))
          throw Error(Errc::bad_params, "puncture labels must be p0..pk");
        punct.push_back(items[i].second);
      }
    } else {
      throw Error(Errc::bad_params, "punctures must be a list or a labeled map");
    }
  }
  StateDoc doc;
  doc.state = make_state(std::move(d), std::move(punct));
  doc.meta = j.contains("meta") ? j["meta"] : Json();
  return doc;
}

std::string serialize_state_doc(const StateDoc& doc, bool canonical) {
  PuncturedState s = canonical ? canonicalize(doc.state) : doc.state;
  Json j;
  std::string code = serialize_diagram(s.diagram);
  std::vector<int> punct = s.punctures;
  if (!s.diagram.is_circle()) {
    // Face ids in the document refer to the diagram as serialized; the PD form
    // rotates crossing slots, so remap through the reparsed labeling.
    std::vector<int> dart_map = pd_relabel_map(s.diagram);
    FaceSet before = faces(s.diagram);
    FaceSet after = faces(parse_diagram(code));
    for (int& p : punct) p = after.of_dart[dart_map[before.boundary[p][0]]];
  }
  j["code"] = s.diagram.is_circle() ? Json(code) : Json::parse(code);
  Json pj = Json::object();
  for (size_t i = 0; i < punct.size(); ++i) pj["p" + std::to_string(i)] = punct[i];
  j["punctures"] = pj;
  if (!doc.meta.is_null()) j["meta"] = doc.meta;
  return j.dump();
}

Json move_to_json(const Move& m) {
  Json j;
  j["kind"] = move_kind_name(m.kind);
  switch (m.kind) {
    case MoveKind::r1_delete:
      j["monogon_dart"] = m.a;
      break;
    case MoveKind::r1_insert:
      if (m.circle_face >= 0)
        j["circle_face"] = m.circle_face;
      else
        j["side_dart"] = m.a;
      j["over"] = m.flag;
      break;
    case MoveKind::r2_delete:
      j["bigon_dart"] = m.a;
      break;
    case MoveKind::r2_insert:
      j["push_dart"] = m.a;
      j["across_dart"] = m.b;
      j["push_over"] = m.flag;
      j["split"] = m.split;
      break;
    case MoveKind::r3:
      j["triangle_dart"] = m.a;
      break;
  }
  return j;
}

Move move_from_json(const Json& j) {
  Move m;
  std::string kind = j.at("kind").get<std::string>();
  if (kind == "R1-") {
    m.kind = MoveKind::r1_delete;
    m.a = j.at("monogon_dart").get<int>();
  } else if (kind == "R1+") {
    m.kind = MoveKind::r1_insert;
    if (j.contains("circle_face"))
      m.circle_face = j.at("circle_face").get<int>();
    else
      m.a = j.at("side_dart").get<int>();
    m.flag = j.at("over").get<bool>();
  } else if (kind == "R2-") {
    m.kind = MoveKind::r2_delete;
    m.a = j.at("bigon_dart").get<int>();
  } else if (kind == "R2+") {
    m.kind = MoveKind::r2_insert;
    m.a = j.at("push_dart").get<int>();
    m.b = j.at("across_dart").get<int>();
    m.flag = j.at("push_over").get<bool>();
    m.split = j.at("split").get<std::vector<int>>();
  } else if (kind == "R3") {
    m.kind = MoveKind::r3;
    m.a = j.at("triangle_dart").get<int>();
  } else {
    throw Error(Errc::bad_params, "unknown move kind " + kind);
  }
  return m;
}

Json result_to_json(const CrossingResult& r) {
  Json j;
  j["initial_crossings"] = r.initial_crossings;
  j["lower_bound"] = r.lower_bound;
  j["min_found"] = r.min_found;
  j["certified"] = r.certified;
  j["exhausted"] = r.exhausted;
  j["explored"] = r.explored;
  j["violations"] = r.violations;
  Json w = Json::array();
  for (const Move& m : r.witness) w.push_back(move_to_json(m));
  j["witness"] = w;
  return j;
}

std::string threshold_to_string(const Threshold& t) {
  switch (t.kind) {
    case ThresholdKind::value: return std::to_string(t.n);
    case ThresholdKind::none: return "none";
    case ThresholdKind::unknown: return "unknown";
  }
  return "unknown";
}

Json profile_to_json(const Profile& p) {
  Json j;
  j["crossings"] = p.m;
  Json rows = Json::array();
  for (int n = 0; n < static_cast<int>(p.cmax.size()); ++n) {
    Json row;
    row["n"] = n;
    row["c_min"] = Json{{"lo", p.cmin[n].lo}, {"hi", p.cmin[n].hi},
                        {"certified", p.cmin[n].certified()}};
    row["c_max"] = Json{{"lo", p.cmax[n].lo}, {"hi", p.cmax[n].hi},
                        {"certified", p.cmax[n].certified()}};
    rows.push_back(row);
  }
  j["table"] = rows;
  auto thr = [](const Threshold& t) -> Json {
    if (t.kind == ThresholdKind::value) return t.n;
    return threshold_to_string(t);
  };
  j["alpha"] = thr(p.alpha);
  j["beta"] = thr(p.beta);
  j["gamma"] = thr(p.gamma);
  j["delta"] = thr(p.delta);
  j["explored"] = p.total_explored;
  j["violations"] = p.violations;
  return j;
}

}  // namespace knotsphere
