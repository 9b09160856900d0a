#include "trigroup/trigroup.h"

#include <cmath>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <new>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include "trigroup/error.hpp"
#include "trigroup/json_io.hpp"
#include "trigroup/stats.hpp"

#ifndef TRIGROUP_VERSION
#define TRIGROUP_VERSION "0.0.0"
#endif

struct tg_presentation {
  trigroup::TriangularPresentation p;
};

struct tg_complex {
  trigroup::AbstractLabelledComplex y;
};

struct tg_ball {
  trigroup::BallGraph g;
  std::optional<trigroup::TriangularPresentation> p;
};

namespace {

using namespace trigroup;
using json::Json;

thread_local std::string last_error;

tg_status status_of(ErrorCode c) {
  switch (c) {
    case ErrorCode::InvalidArgument:
      return TG_ERR_INVALID_ARGUMENT;
    case ErrorCode::Parse:
      return TG_ERR_PARSE;
    case ErrorCode::CapExceeded:
      return TG_ERR_CAP_EXCEEDED;
    case ErrorCode::Precondition:
      return TG_ERR_PRECONDITION;
  }
  return TG_ERR_INTERNAL;
}

template <class F>
tg_status guard(F&& f) {
  try {
    f();
    last_error.clear();
    return TG_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return TG_ERR_INTERNAL;
  } catch (const std::exception& e) {
    last_error = std::string("internal error: ") + e.what();
    return TG_ERR_INTERNAL;
  }
}

void need(const void* p, const char* name) {
  if (!p) fail(ErrorCode::InvalidArgument, std::string(name) + " must not be null");
}

char* copy_out(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) { *out = copy_out(j.dump(2) + "\n"); }

Rational rational_arg(const char* text, const char* name, const char* fallback) {
  if (!text) text = fallback;
  if (!text) fail(ErrorCode::InvalidArgument, std::string(name) + " must not be null");
  try {
    return parse_rational(text);
  } catch (const Error& e) {
    fail(e.code(), std::string(name) + ": " + e.what());
  }
}

Json lemma_bound_json(const AbstractLabelledComplex& y) {
  Json out = Json::array();
  for (const auto& [level, delta] : lemma_bound(y)) out.push_back({{"level", level}, {"delta", delta}});
  return out;
}

}  // namespace

extern "C" {

const char* tg_version(void) { return TRIGROUP_VERSION; }

const char* tg_last_error(void) { return last_error.c_str(); }

void tg_string_free(char* s) { std::free(s); }

tg_status tg_words_enumerate(uint32_t m, uint32_t cap, char** out_json) {
  return guard([&] {
    need(out_json, "out_json");
    const std::vector<Word> words = enumerate_cyc_reduced_len3(m, cap);
    Json j;
    j["m"] = m;
    j["count_formula"] = count_cyc_reduced_len3(m);
    j["count_enumerated"] = words.size();
    j["match"] = words.size() == count_cyc_reduced_len3(m);
    Json list = Json::array();
    for (const Word& w : words) list.push_back(json::word_to_json(w));
    j["words"] = list;
    emit(j, out_json);
  });
}

tg_status tg_words_reduce(uint32_t m, const char* word, char** out_json) {
  return guard([&] {
    need(word, "word");
    need(out_json, "out_json");
    const Word w = Word::parse(m, word);
    Json j;
    j["m"] = m;
    j["word"] = w.to_string();
    j["reduced"] = w.is_reduced();
    j["cyclically_reduced"] = w.is_cyclically_reduced();
    j["free_reduction"] = free_reduce(w).to_string();
    j["cyclic_reduction"] = cyclic_reduce(w).to_string();
    j["inverse"] = w.inverse().to_string();
    emit(j, out_json);
  });
}

tg_status tg_words_sample(uint32_t m, uint64_t draws, uint64_t seed, char** out_json) {
  return guard([&] {
    need(out_json, "out_json");
    if (draws == 0) fail(ErrorCode::InvalidArgument, "draws must be positive");
    const WordHistogram h = sample_word_histogram(m, draws, seed);
    const ChiSquareResult chi = chi_square_uniform(h.counts);
    Json j;
    j["m"] = m;
    j["draws"] = draws;
    j["seed"] = seed;
    Json support = Json::array();
    for (const Word& w : h.support) support.push_back(json::word_to_json(w));
    j["support"] = support;
    j["counts"] = h.counts;
    j["chi_square"] = {{"statistic", chi.statistic}, {"df", chi.df}, {"p_value", chi.p_value}};
    emit(j, out_json);
  });
}

tg_status tg_relator_count(uint32_t m, const char* density, uint64_t* out_count) {
  return guard([&] {
    need(out_count, "out_count");
    *out_count = relator_count(m, rational_arg(density, "density", nullptr));
  });
}

tg_status tg_presentation_sample(uint32_t m, const char* density, uint64_t seed, tg_presentation** out) {
  return guard([&] {
    need(out, "out");
    *out = new tg_presentation{sample_presentation(m, rational_arg(density, "density", nullptr), seed)};
  });
}

tg_status tg_presentation_from_json(const char* text, tg_presentation** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    *out = new tg_presentation{json::presentation_from_json(json::parse(text))};
  });
}

tg_status tg_presentation_to_json(const tg_presentation* p, char** out_json) {
  return guard([&] {
    need(p, "presentation");
    need(out_json, "out_json");
    emit(json::presentation_to_json(p->p), out_json);
  });
}

tg_status tg_presentation_report(const tg_presentation* p, char** out_json) {
  return guard([&] {
    need(p, "presentation");
    need(out_json, "out_json");
    std::set<Word> classes;
    for (const Word& r : p->p.relators) classes.insert(symmetry_class_representative(r));
    Json j;
    j["presentation"] = json::presentation_to_json(p->p);
    j["support"] = count_cyc_reduced_len3(p->p.m);
    j["symmetry_classes"] = classes.size();
    j["distinct_up_to_symmetry"] = relators_distinct_up_to_symmetry(p->p);
    j["has_proper_power"] = has_proper_power(p->p);
    emit(j, out_json);
  });
}

void tg_presentation_free(tg_presentation* p) { delete p; }

tg_status tg_complex_from_json(const char* text, tg_complex** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    *out = new tg_complex{json::complex_from_json(json::parse(text))};
  });
}

tg_status tg_complex_to_json(const tg_complex* y, char** out_json) {
  return guard([&] {
    need(y, "complex");
    need(out_json, "out_json");
    emit(json::complex_to_json(y->y), out_json);
  });
}

void tg_complex_free(tg_complex* y) { delete y; }

tg_status tg_complex_cancel_report(const tg_complex* y, char** out_json) {
  return guard([&] {
    need(y, "complex");
    need(out_json, "out_json");
    Json j;
    j["vertices"] = y->y.base.vertex_count();
    j["edges"] = y->y.base.edge_count();
    j["faces"] = y->y.base.face_count();
    j["degrees"] = edge_degrees(y->y.base);
    j["cancel"] = cancel(y->y.base);
    emit(j, out_json);
  });
}

tg_status tg_complex_red_report(const tg_complex* y, char** out_json) {
  return guard([&] {
    need(y, "complex");
    need(out_json, "out_json");
    const AbstractLabelledComplex& c = y->y;
    Json j;
    j["red"] = red(c);
    Json contributions = Json::array();
    for (const RedContribution& r : red_contributions(c.base, c.pi)) {
      contributions.push_back(
          {{"edge", r.edge + 1}, {"label", r.label}, {"tied_faces", r.tied_faces}, {"contribution", r.contribution}});
    }
    j["contributions"] = contributions;
    j["cancel"] = cancel(c.base);
    try {
      require_all_edges_in_faces(c.base);
    } catch (const Error& e) {
      j["delta"] = nullptr;
      j["delta_error"] = e.what();
      emit(j, out_json);
      return;
    }
    std::vector<std::uint32_t> deltas;
    std::uint64_t sum = 0;
    for (std::uint32_t f = 0; f < c.base.face_count(); ++f) {
      deltas.push_back(delta_face(c, f));
      sum += deltas.back();
    }
    j["delta"] = deltas;
    j["lemma_bound"] = lemma_bound_json(c);
    j["chain"] = {{"red", red(c)}, {"delta_sum", sum}, {"cancel", cancel(c.base)}, {"holds", red(c) + sum >= cancel(c.base)}};
    emit(j, out_json);
  });
}

tg_status tg_chain_check(uint64_t samples, uint32_t max_faces, uint64_t seed, unsigned workers, char** out_json,
                         int* all_hold) {
  return guard([&] {
    need(out_json, "out_json");
    RandomComplexConfig config;
    config.max_faces = max_faces;
    const ChainReport r = chain_check(samples, seed, config, workers);
    Json j = json::chain_to_json(r);
    j["max_faces"] = max_faces;
    emit(j, out_json);
    if (all_hold) *all_hold = r.violations == 0;
  });
}

tg_status tg_fulfil_exact(const tg_complex* y, uint32_t m, uint32_t max_m, uint32_t max_n, unsigned workers,
                          char** out_json, int* all_hold) {
  return guard([&] {
    need(y, "complex");
    need(out_json, "out_json");
    const FulfillmentProbe probe = exact_probabilities(y->y, m, ExactCaps{max_m, max_n}, workers);
    const auto checks = check_ratio_bounds(y->y, probe);
    bool ok = true;
    Json levels = Json::array();
    levels.push_back({{"level", 0}, {"consistent", "1"}, {"probability", "1"}, {"probability_decimal", 1.0}});
    for (const LevelCheck& c : checks) {
      ok = ok && c.holds;
      levels.push_back({{"level", c.level},
                        {"delta", c.delta},
                        {"consistent", probe.consistent[c.level].str()},
                        {"probability", to_string(probe.probability[c.level])},
                        {"probability_decimal", to_double(probe.probability[c.level])},
                        {"ratio", to_string(c.ratio)},
                        {"bound", to_string(c.bound)},
                        {"holds", c.holds}});
    }
    const bool product = product_bound_holds(y->y, probe);
    Json j;
    j["m"] = m;
    j["support"] = probe.support;
    j["faces"] = y->y.base.face_count();
    j["n"] = y->y.n;
    j["cancel"] = cancel(y->y.base);
    j["red"] = red(y->y);
    j["lemma_bound"] = lemma_bound_json(y->y);
    j["levels"] = levels;
    j["product_bound_holds"] = product;
    j["all_hold"] = ok && product;
    emit(j, out_json);
    if (all_hold) *all_hold = ok && product;
  });
}

tg_status tg_fulfil_montecarlo(const tg_complex* y, uint32_t m, uint64_t trials, uint64_t seed, unsigned workers,
                               char** out_json) {
  return guard([&] {
    need(y, "complex");
    need(out_json, "out_json");
    const MonteCarloEstimate est = montecarlo_fulfillment(y->y, m, trials, seed, workers);
    std::uint64_t delta_sum = 0;
    for (const auto& [level, delta] : lemma_bound(y->y)) delta_sum += delta;
    const double bound = std::pow(2.0 * m - 1.0, -static_cast<double>(delta_sum));
    Json j;
    j["m"] = m;
    j["trials"] = est.trials;
    j["seed"] = est.seed;
    j["successes"] = est.successes;
    j["estimate"] = est.estimate;
    j["interval"] = {{"level", 0.99}, {"lower", est.lower}, {"upper", est.upper}};
    j["lemma_bound"] = lemma_bound_json(y->y);
    j["bound_product"] = bound;
    j["consistent_with_bound"] = est.lower <= bound;
    emit(j, out_json);
  });
}

tg_status tg_fulfil_presentation(const tg_complex* y, const tg_presentation* p, const char* epsilon, size_t limit,
                                 char** out_json, int* all_hold) {
  return guard([&] {
    need(y, "complex");
    need(p, "presentation");
    need(out_json, "out_json");
    const Rational eps = rational_arg(epsilon, "epsilon", "1/100");
    const auto hits = find_fulfilling_subtuples(y->y, p->p, limit);
    std::vector<BoundComplex> bound;
    for (const auto& iota : hits) bound.push_back({y->y, iota});
    const LabelledComplexReport rep = labelled_complex_report(p->p, eps, bound);
    Json j;
    j["d"] = to_string(p->p.density);
    j["epsilon"] = to_string(eps);
    j["limit"] = limit;
    j["fulfilling_subtuples"] = hits;
    Json recs = Json::array();
    for (const LabelledComplexRecord& r : rep.records) {
      recs.push_back({{"faces", r.faces},
                      {"cancel", r.cancel},
                      {"red", r.red},
                      {"cancel_minus_red", r.lhs},
                      {"rhs", to_string(r.rhs)},
                      {"holds", r.holds}});
    }
    j["records"] = recs;
    j["violations"] = rep.violations;
    j["final_bound_exponent"] = to_string(final_bound_exponent(y->y, p->p.density));
    j["final_probability_bound"] = final_probability_bound(y->y, p->p.m, p->p.density);
    emit(j, out_json);
    if (all_hold) *all_hold = rep.violations == 0;
  });
}

tg_status tg_enumerate_diagrams(const tg_presentation* p, uint32_t max_faces, uint32_t cap, const char* epsilon,
                                unsigned workers, int include_diagrams, char** out_json, int* all_hold) {
  return guard([&] {
    need(p, "presentation");
    need(out_json, "out_json");
    DiagramBudget b;
    b.max_faces = max_faces;
    b.cap = cap;
    b.presentation = p->p;
    b.epsilon = rational_arg(epsilon, "epsilon", "1/100");
    const auto diagrams = enumerate_reduced_diagrams(b, workers);
    const IsoperimetricReport rep = isoperimetric_report(b, diagrams);
    Json j = json::isoperimetric_to_json(rep, include_diagrams != 0);
    if (include_diagrams) {
      Json ds = Json::array();
      for (const VanKampenDiagram& d : diagrams) ds.push_back(json::diagram_to_json(d, p->p.m));
      j["diagrams"] = ds;
    }
    const bool ok = rep.identity_failures == 0 && rep.euler_failures == 0 && rep.red_nonzero == 0 &&
                    rep.equivalence_failures == 0;
    j["all_hold"] = ok;
    emit(j, out_json);
    if (all_hold) *all_hold = ok;
  });
}

tg_status tg_constants_pipeline(const char* d0, const char* a1, const char* a2, const char* margin, int slim_factor,
                                unsigned precision, char** out_json, int* contradiction) {
  return guard([&] {
    need(out_json, "out_json");
    PipelineParams params;
    params.d0 = rational_arg(d0, "d0", nullptr);
    params.A1 = rational_arg(a1, "A1", "0");
    params.A2 = rational_arg(a2, "A2", "0");
    params.margin = rational_arg(margin, "margin", "0");
    params.slim_factor = slim_factor;
    const ConstantsReport r = constants_pipeline(params);
    emit(json::constants_to_json(r, precision), out_json);
    if (contradiction) *contradiction = r.contradiction;
  });
}

tg_status tg_sweep_csv(const char* const* grid, size_t count, const char* a1, const char* a2, int slim_factor,
                       unsigned precision, char** out_csv) {
  return guard([&] {
    need(grid, "grid");
    need(out_csv, "out_csv");
    std::vector<Rational> values;
    for (size_t i = 0; i < count; ++i) values.push_back(rational_arg(grid[i], "grid value", nullptr));
    PipelineParams base;
    base.A1 = rational_arg(a1, "A1", "0");
    base.A2 = rational_arg(a2, "A2", "0");
    base.slim_factor = slim_factor;
    std::ostringstream os;
    os << "d0,d_prime,k,L,N\n";
    for (const SweepRow& row : sweep(values, base)) {
      os << to_string(row.d0) << ',' << row.d_prime.to_decimal(precision) << ',' << row.k << ',' << row.L << ','
         << row.N << '\n';
    }
    *out_csv = copy_out(os.str());
  });
}

tg_status tg_ball_build(const tg_presentation* p, uint32_t radius, uint32_t max_radius, uint64_t max_vertices,
                        tg_ball** out) {
  return guard([&] {
    need(p, "presentation");
    need(out, "out");
    *out = new tg_ball{build_ball(p->p, radius, BallCaps{max_radius, max_vertices}), p->p};
  });
}

tg_status tg_ball_from_json(const char* text, tg_ball** out) {
  return guard([&] {
    need(text, "json");
    need(out, "out");
    const Json j = json::parse(text);
    auto ball = std::make_unique<tg_ball>();
    ball->g = json::ball_from_json(j);
    if (j.contains("presentation")) ball->p = json::presentation_from_json(j["presentation"]);
    *out = ball.release();
  });
}

tg_status tg_ball_to_json(const tg_ball* g, char** out_json) {
  return guard([&] {
    need(g, "ball");
    need(out_json, "out_json");
    Json j = json::ball_to_json(g->g);
    if (g->p) {
      j["presentation"] = json::presentation_to_json(*g->p);
      j["relators_close_at_closed_vertices"] = relators_close_at_closed_vertices(g->g, *g->p);
    }
    emit(j, out_json);
  });
}

void tg_ball_free(tg_ball* g) { delete g; }

tg_status tg_delta_estimate(const tg_ball* g, uint64_t samples, uint64_t seed, unsigned workers, char** out_json) {
  return guard([&] {
    need(g, "ball");
    need(out_json, "out_json");
    const SlimEstimate est = slim_delta_estimate(g->g, samples, seed, workers);
    Json j = json::slim_to_json(est);
    j["samples"] = samples;
    j["exhaustive"] = samples == 0;
    j["seed"] = seed;
    j["radius"] = g->g.radius;
    if (g->p && g->p->density < Rational(1, 2)) {
      const Rational line = delta_hyp(g->p->density);
      j["delta_hyp"] = to_string(line);
      j["below_delta_hyp"] = Rational(est.defect) <= line;
    }
    emit(j, out_json);
  });
}

tg_status tg_fig1_demo(char** out_json, int* all_hold) {
  return guard([&] {
    need(out_json, "out_json");
    const Fig1Report r = fig1_demo();
    emit(json::fig1_to_json(r), out_json);
    if (all_hold) *all_hold = r.ok;
  });
}

}  // extern "C"
