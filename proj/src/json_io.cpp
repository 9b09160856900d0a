#include "trigroup/json_io.hpp"

#include "trigroup/error.hpp"

namespace trigroup::json {

namespace {

[[noreturn]] void bad(const std::string& field, const std::string& why) { fail(ErrorCode::Parse, field + ": " + why); }

const Json& member(const Json& obj, const char* name, const std::string& path) {
  if (!obj.is_object()) bad(path, "expected an object");
  auto it = obj.find(name);
  if (it == obj.end()) bad(path + "." + name, "missing field");
  return *it;
}

std::uint64_t as_uint(const Json& j, const std::string& field) {
  if (!j.is_number_integer() || (j.is_number_integer() && !j.is_number_unsigned() && j.get<std::int64_t>() < 0)) {
    bad(field, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::int64_t as_int(const Json& j, const std::string& field) {
  if (!j.is_number_integer()) bad(field, "expected an integer");
  return j.get<std::int64_t>();
}

const Json& as_array(const Json& j, const std::string& field) {
  if (!j.is_array()) bad(field, "expected an array");
  return j;
}

std::string idx(const std::string& base, std::size_t i) { return base + "[" + std::to_string(i) + "]"; }

// Rewrites library errors raised while building from parsed data as parse errors naming the field.
template <class F>
auto with_field(const std::string& field, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const Error& e) {
    const std::string what = e.what();
    if (what.rfind(field, 0) == 0) throw;  // already names a field inside this one
    bad(field, what);
  }
}

}  // namespace

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::Parse, std::string("malformed JSON: ") + e.what());
  }
}

Json word_to_json(const Word& w) {
  if (w.alphabet_size() <= 26) return w.to_string();
  return w.to_signed();
}

Word word_from_json(std::uint32_t m, const Json& j, const std::string& field) {
  return with_field(field, [&] {
    if (j.is_string()) return Word::parse(m, j.get<std::string>());
    std::vector<std::int64_t> idx_list;
    for (std::size_t i = 0; i < as_array(j, field).size(); ++i) idx_list.push_back(as_int(j[i], idx(field, i)));
    return Word::from_signed(m, idx_list);
  });
}

Json presentation_to_json(const TriangularPresentation& p) {
  Json j;
  j["m"] = p.m;
  j["d"] = to_string(p.density);
  j["seed"] = p.seed;
  j["relator_count"] = p.relators.size();
  Json rel = Json::array();
  for (const Word& r : p.relators) rel.push_back(word_to_json(r));
  j["relators"] = rel;
  return j;
}

TriangularPresentation presentation_from_json(const Json& j) {
  const auto m = static_cast<std::uint32_t>(as_uint(member(j, "m", "presentation"), "presentation.m"));
  Rational d = 0;
  if (j.contains("d")) {
    const Json& dj = j["d"];
    if (dj.is_string()) {
      d = with_field("presentation.d", [&] { return parse_rational(dj.get<std::string>()); });
    } else if (dj.is_number_integer()) {
      d = Rational(dj.get<std::int64_t>());
    } else {
      bad("presentation.d", "expected a rational string such as \"2/5\"");
    }
  }
  std::uint64_t seed = 0;
  if (j.contains("seed")) seed = as_uint(j["seed"], "presentation.seed");
  std::vector<Word> relators;
  const Json& rel = as_array(member(j, "relators", "presentation"), "presentation.relators");
  for (std::size_t i = 0; i < rel.size(); ++i) {
    const std::string field = idx("presentation.relators", i);
    relators.push_back(word_from_json(m, rel[i], field));
    if (relators.back().size() != 3 || !relators.back().is_cyclically_reduced()) {
      bad(field, "\"" + relators.back().to_string() + "\" is not a cyclically reduced word of length 3");
    }
  }
  return with_field("presentation", [&] { return make_presentation(m, d, seed, std::move(relators)); });
}

Json complex_to_json(const AbstractLabelledComplex& y) {
  Json j;
  j["vertices"] = y.base.vertex_count();
  Json edges = Json::array();
  for (const Edge& e : y.base.edges()) edges.push_back({e.tail, e.head});
  j["edges"] = edges;
  Json faces = Json::array();
  for (std::uint32_t f = 0; f < y.base.face_count(); ++f) {
    Json b = Json::array();
    for (const OrientedEdge& oe : y.base.face(f).boundary) {
      const std::int64_t id = static_cast<std::int64_t>(oe.edge) + 1;
      b.push_back(oe.reversed ? -id : id);
    }
    faces.push_back({{"index", y.pi[f]}, {"boundary", b}});
  }
  j["faces"] = faces;
  return j;
}

AbstractLabelledComplex complex_from_json(const Json& j) {
  const Json& faces_j = as_array(member(j, "faces", "complex"), "complex.faces");
  const Json& edges_j = member(j, "edges", "complex");
  std::vector<Edge> edges;
  std::uint64_t edge_count = 0;
  if (edges_j.is_array()) {
    for (std::size_t i = 0; i < edges_j.size(); ++i) {
      const std::string f = idx("complex.edges", i);
      if (!edges_j[i].is_array() || edges_j[i].size() != 2) bad(f, "expected a [tail, head] pair");
      edges.push_back({static_cast<std::uint32_t>(as_uint(edges_j[i][0], f + "[0]")),
                       static_cast<std::uint32_t>(as_uint(edges_j[i][1], f + "[1]"))});
    }
    edge_count = edges.size();
  } else {
    edge_count = as_uint(edges_j, "complex.edges");
  }
  std::vector<Face> faces;
  std::vector<std::uint32_t> pi;
  std::uint32_t n = 0;
  for (std::size_t f = 0; f < faces_j.size(); ++f) {
    const std::string path = idx("complex.faces", f);
    const auto label = as_uint(member(faces_j[f], "index", path), path + ".index");
    if (label == 0) bad(path + ".index", "labels are 1-based");
    pi.push_back(static_cast<std::uint32_t>(label));
    n = std::max(n, static_cast<std::uint32_t>(label));
    const Json& b = as_array(member(faces_j[f], "boundary", path), path + ".boundary");
    Face face;
    for (std::size_t k = 0; k < b.size(); ++k) {
      const std::string bf = idx(path + ".boundary", k);
      const std::int64_t id = as_int(b[k], bf);
      if (id == 0 || static_cast<std::uint64_t>(id < 0 ? -id : id) > edge_count) {
        bad(bf, "edge reference " + std::to_string(id) + " out of range 1.." + std::to_string(edge_count));
      }
      face.boundary.push_back({static_cast<std::uint32_t>((id < 0 ? -id : id) - 1), id < 0});
    }
    faces.push_back(std::move(face));
  }
  if (j.contains("n")) n = static_cast<std::uint32_t>(as_uint(j["n"], "complex.n"));
  return with_field("complex", [&] {
    TwoComplex base = j.contains("vertices")
                          ? TwoComplex(static_cast<std::uint32_t>(as_uint(j["vertices"], "complex.vertices")), std::move(edges), std::move(faces))
                          : TwoComplex::from_gluing(static_cast<std::uint32_t>(edge_count), std::move(faces));
    return AbstractLabelledComplex(std::move(base), n, std::move(pi));
  });
}

Json diagram_to_json(const VanKampenDiagram& d, std::uint32_t m) {
  auto signed_ref = [](OrientedEdge oe) {
    const std::int64_t id = static_cast<std::int64_t>(oe.edge) + 1;
    return oe.reversed ? -id : id;
  };
  Json j;
  j["vertices"] = d.vertex_count;
  Json edges = Json::array();
  for (const DiagramEdge& e : d.edges) edges.push_back({e.tail, e.head, word_to_json(Word(m, {e.label}))});
  j["edges"] = edges;
  Json faces = Json::array();
  for (std::uint32_t f = 0; f < d.faces.size(); ++f) {
    Json b = Json::array();
    for (const OrientedEdge& oe : d.boundary_path(f)) b.push_back(signed_ref(oe));
    faces.push_back({{"relator", d.faces[f].relator}, {"corners", d.faces[f].corners}, {"boundary", b}});
  }
  j["faces"] = faces;
  Json boundary = Json::array();
  for (const OrientedEdge& oe : d.boundary) boundary.push_back(signed_ref(oe));
  j["boundary"] = boundary;
  return j;
}

Json ball_to_json(const BallGraph& g) {
  Json j;
  j["m"] = g.m;
  j["radius"] = g.radius;
  j["vertex_count"] = g.vertex_count();
  Json vs = Json::array();
  for (std::uint32_t v = 0; v < g.vertex_count(); ++v) {
    Json next = Json::array();
    for (std::uint32_t c = 0; c < 2 * g.m; ++c) {
      const std::uint32_t w = g.next(v, c);
      if (w == kNoVertex) {
        next.push_back(nullptr);
      } else {
        next.push_back(w);
      }
    }
    vs.push_back({{"distance", g.distance[v]}, {"closed", g.closed(v)}, {"next", next}});
  }
  j["vertices"] = vs;
  return j;
}

BallGraph ball_from_json(const Json& j) {
  BallGraph g;
  g.m = static_cast<std::uint32_t>(as_uint(member(j, "m", "graph"), "graph.m"));
  if (g.m == 0) bad("graph.m", "must be positive");
  g.radius = static_cast<std::uint32_t>(as_uint(member(j, "radius", "graph"), "graph.radius"));
  const Json& vs = as_array(member(j, "vertices", "graph"), "graph.vertices");
  g.targets.assign(vs.size() * 2 * g.m, kNoVertex);
  for (std::size_t v = 0; v < vs.size(); ++v) {
    const std::string path = idx("graph.vertices", v);
    g.distance.push_back(static_cast<std::uint32_t>(as_uint(member(vs[v], "distance", path), path + ".distance")));
    const Json& next = as_array(member(vs[v], "next", path), path + ".next");
    if (next.size() != 2 * g.m) bad(path + ".next", "expected " + std::to_string(2 * g.m) + " entries");
    for (std::uint32_t c = 0; c < 2 * g.m; ++c) {
      if (next[c].is_null()) continue;
      const auto w = as_uint(next[c], idx(path + ".next", c));
      if (w >= vs.size()) bad(idx(path + ".next", c), "vertex out of range");
      g.targets[v * 2 * g.m + c] = static_cast<std::uint32_t>(w);
    }
  }
  if (!ball_is_consistent(g)) bad("graph", "edges are not inverse-consistent or distances do not match a breadth-first search");
  return g;
}

Json rational_to_json(const Rational& q) { return to_string(q); }

Json surd_to_json(const Surd& x, unsigned precision) {
  return {{"exact", x.to_exact_string()}, {"decimal", x.to_decimal(precision)}};
}

Json isoperimetric_to_json(const IsoperimetricReport& r, bool include_records) {
  Json j;
  j["d"] = to_string(r.density);
  j["epsilon"] = to_string(r.epsilon);
  j["max_faces"] = r.max_faces;
  j["diagram_count"] = r.records.size();
  j["diagrams_by_area"] = r.diagrams_by_area;
  j["cancel_violations"] = r.cancel_violations;
  j["boundary_violations"] = r.boundary_violations;
  j["identity_failures"] = r.identity_failures;
  j["euler_failures"] = r.euler_failures;
  j["equivalence_failures"] = r.equivalence_failures;
  j["red_nonzero"] = r.red_nonzero;
  if (include_records) {
    Json recs = Json::array();
    for (const DiagramRecord& d : r.records) {
      recs.push_back({{"area", d.area},
                      {"perimeter", d.perimeter},
                      {"cancel", d.cancel},
                      {"red", d.red},
                      {"cancel_bound", d.cancel_bound},
                      {"boundary_bound", d.boundary_bound},
                      {"identity", d.identity},
                      {"euler", d.euler},
                      {"reduced", d.reduced}});
    }
    j["records"] = recs;
  }
  return j;
}

Json constants_to_json(const ConstantsReport& r, unsigned precision) {
  Json j;
  j["d0"] = to_string(r.params.d0);
  j["A1"] = to_string(r.params.A1);
  j["A2"] = to_string(r.params.A2);
  j["A3"] = to_string(r.A3);
  j["margin"] = to_string(r.params.margin);
  j["slim_factor"] = r.params.slim_factor;
  j["d_crit"] = surd_to_json(r.d_crit, precision);
  j["d_prime"] = surd_to_json(r.d_prime, precision);
  j["epsilon"] = surd_to_json(r.epsilon, precision);
  j["delta"] = to_string(r.delta);
  j["lhs"] = surd_to_json(r.lhs, precision);
  j["rhs"] = surd_to_json(r.rhs, precision);
  j["gap"] = surd_to_json(r.gap, precision);
  j["k"] = r.k;
  j["pairs"] = r.pairs;
  j["L_floor"] = r.L_floor.str();
  j["L_strict"] = r.L_strict.str();
  j["L"] = r.L.str();
  j["N"] = r.N.str();
  j["lower_at_L"] = surd_to_json(r.lower_at_L, precision);
  j["upper_at_L"] = surd_to_json(r.upper_at_L, precision);
  j["e1_bound"] = surd_to_json(r.e1_bound, precision);
  j["contradiction"] = r.contradiction;
  j["note"] = "modulo additive constants A1, A2";
  return j;
}

Json fig1_to_json(const Fig1Report& r) {
  Json j;
  j["radius"] = r.radius;
  j["ball_vertices"] = r.ball_vertices;
  j["gamma"] = r.gamma;
  j["gamma_distance"] = r.gamma_distance;
  j["translate"] = r.translate;
  j["translate_distance"] = r.translate_distance;
  j["gamma_geodesic"] = r.gamma_geodesic;
  j["translate_geodesic"] = r.translate_geodesic;
  j["disjoint"] = r.disjoint;
  j["hausdorff"] = r.hausdorff;
  Json strips = Json::array();
  for (const StripCheck& s : r.strips) {
    strips.push_back({{"t", s.t},
                      {"faces", s.faces},
                      {"cancel", s.cancel},
                      {"expected_cancel", s.expected_cancel},
                      {"euler", s.euler},
                      {"reduced", s.reduced},
                      {"E0", s.e0},
                      {"E1", s.e1},
                      {"E2", s.e2},
                      {"realized", s.realized},
                      {"ok", s.ok}});
  }
  j["strips"] = strips;
  j["ok"] = r.ok;
  return j;
}

Json chain_to_json(const ChainReport& r) {
  Json j;
  j["samples"] = r.samples;
  j["seed"] = r.seed;
  j["violations"] = r.violations;
  j["tight"] = r.tight;
  Json fails = Json::array();
  for (const ChainSample& s : r.failures) {
    fails.push_back({{"index", s.index}, {"faces", s.faces}, {"cancel", s.cancel}, {"red", s.red}, {"delta_sum", s.delta_sum}});
  }
  j["failures"] = fails;
  return j;
}

Json slim_to_json(const SlimEstimate& e) {
  Json j;
  j["defect"] = e.defect;
  j["triangles"] = e.triangles;
  j["closed_vertices"] = e.closed_vertices;
  if (e.witness[0] != kNoVertex) j["witness"] = e.witness;
  return j;
}

}  // namespace trigroup::json
