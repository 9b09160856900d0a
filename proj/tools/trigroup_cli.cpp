// Command-line front end. Talks to the library only through trigroup.h.
#include <CLI11.hpp>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <json.hpp>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "trigroup/trigroup.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitChecksFailed = 1;
constexpr int kExitError = 2;

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Owns a library string.
struct LibString {
  char* s = nullptr;
  ~LibString() { tg_string_free(s); }
  std::string str() const { return s ? s : ""; }
};

// Flags that lift each subcommand's safety caps.
const std::map<std::string, std::string> kCapFlags = {
    {"words", "--cap"},
    {"enum-diagrams", "--max-faces-cap"},
    {"fulfil", "--max-m / --max-n"},
    {"ball", "--max-radius / --max-vertices"},
};

std::string g_subcommand;

void check(tg_status st, const std::string& what) {
  if (st == TG_OK) return;
  std::string msg = what + ": " + tg_last_error();
  if (st == TG_ERR_CAP_EXCEEDED && msg.find("raise it") == std::string::npos) {
    const auto it = kCapFlags.find(g_subcommand);
    msg += it == kCapFlags.end() ? " (cap exceeded)" : " (cap exceeded; raise it with " + it->second + ")";
  }
  throw Failure(msg);
}

std::string read_file(const std::string& path, const std::string& flag) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Failure(flag + ": cannot read \"" + path + "\"");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <class T, void (*Free)(T*)>
struct Handle {
  T* p = nullptr;
  ~Handle() { Free(p); }
};
using Presentation = Handle<tg_presentation, tg_presentation_free>;
using Complex = Handle<tg_complex, tg_complex_free>;
using Ball = Handle<tg_ball, tg_ball_free>;

// Accepts either a bare document or a report written by this tool.
std::string unwrap(const std::string& text, const char* key) {
  Json j = Json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_object()) return text;
  if (j.contains("result") && j.contains("tool")) j = j["result"];
  if (key && j.is_object() && j.contains(key) && j[key].is_object()) j = j[key];
  return j.dump();
}

void load_presentation(const std::string& path, Presentation& out) {
  const std::string text = unwrap(read_file(path, "--presentation"), "presentation");
  check(tg_presentation_from_json(text.c_str(), &out.p), "--presentation " + path);
}

void load_complex(const std::string& path, Complex& out) {
  const std::string text = unwrap(read_file(path, "--complex"), "complex");
  check(tg_complex_from_json(text.c_str(), &out.p), "--complex " + path);
}

struct Global {
  std::uint64_t seed = 0;
  std::string out;
  unsigned workers = 1;
  unsigned precision = 20;
  bool timing = false;
};

// Option text as a JSON scalar: integers stay numeric, everything else is a string.
Json scalar(const std::string& v) {
  if (!v.empty() && v.size() < 19 && v.find_first_not_of("0123456789") == std::string::npos) return std::stoull(v);
  return v;
}

// Every option of the subcommand with its effective value.
Json config_of(const CLI::App* sub, const Global& g) {
  Json cfg;
  cfg["subcommand"] = sub->get_name();
  cfg["seed"] = g.seed;
  cfg["out"] = g.out;
  cfg["workers"] = g.workers;
  cfg["precision"] = g.precision;
  for (const CLI::Option* opt : sub->get_options()) {
    const std::string name = opt->get_single_name();
    if (name == "help") continue;
    if (opt->get_expected_max() == 0) {
      cfg[name] = opt->count() > 0;
    } else if (opt->count() > 0) {
      const auto& r = opt->results();
      if (r.size() == 1) {
        cfg[name] = scalar(r[0]);
      } else {
        Json arr = Json::array();
        for (const auto& v : r) arr.push_back(scalar(v));
        cfg[name] = arr;
      }
    } else {
      cfg[name] = scalar(opt->get_default_str());
    }
  }
  return cfg;
}

void write_output(const Global& g, const std::string& text) {
  if (g.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(g.out, std::ios::binary);
  if (!out) throw Failure("--out: cannot write \"" + g.out + "\"");
  out << text;
}

struct Outcome {
  Json result;
  bool ok = true;
  std::string text;  // replaces the JSON document when set

  Outcome() = default;
  explicit Outcome(Json r, bool pass = true) : result(std::move(r)), ok(pass) {}
};

std::string degree_table(const Json& r) {
  std::ostringstream os;
  os << "edge  degree\n";
  const auto& deg = r["degrees"];
  for (std::size_t e = 0; e < deg.size(); ++e) os << std::setw(4) << e + 1 << "  " << deg[e].get<std::uint64_t>() << "\n";
  os << "Cancel = " << r["cancel"].get<std::uint64_t>() << "\n";
  return os.str();
}

std::string red_table(const Json& r) {
  std::ostringstream os;
  os << "edge  label  tied  contribution\n";
  for (const auto& c : r["contributions"]) {
    os << std::setw(4) << c["edge"].get<std::uint64_t>() << "  " << std::setw(5) << c["label"].get<std::uint64_t>() << "  "
       << std::setw(4) << c["tied_faces"].get<std::uint64_t>() << "  " << c["contribution"].get<std::uint64_t>() << "\n";
  }
  os << "Red = " << r["red"].get<std::uint64_t>() << "\n";
  if (r.contains("chain")) {
    os << "Red + sum delta = " << r["chain"]["red"].get<std::uint64_t>() + r["chain"]["delta_sum"].get<std::uint64_t>()
       << " >= Cancel = " << r["chain"]["cancel"].get<std::uint64_t>() << " : "
       << (r["chain"]["holds"].get<bool>() ? "holds" : "FAILS") << "\n";
  }
  return os.str();
}

std::vector<std::string> split_grid(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Random triangular groups: sampling, diagrams, fulfilment and constants"};
  app.set_version_flag("--version", std::string(tg_version()));
  app.require_subcommand(1);
  app.fallthrough();
  app.option_defaults()->always_capture_default();

  Global g;
  app.add_option("--seed", g.seed, "Random seed (default from TRIGROUP_SEED)")->envname("TRIGROUP_SEED");
  app.add_option("--out", g.out, "Write the report here instead of stdout");
  app.add_option("--workers", g.workers, "Worker threads")->check(CLI::Range(1U, 256U));
  app.add_option("--precision", g.precision, "Decimal digits for irrational constants")->check(CLI::Range(1U, 90U));
  app.add_flag("--timing", g.timing, "Add wall-clock time to the report (breaks byte-identical output)");

  std::map<CLI::App*, std::function<Outcome()>> handlers;

  // sample
  {
    auto* sub = app.add_subcommand("sample", "Sample a random triangular presentation");
    auto m = std::make_shared<std::uint32_t>(2);
    auto d = std::make_shared<std::string>();
    sub->add_option("--m", *m, "Number of generators")->required();
    sub->add_option("--d", *d, "Density p/q")->required();
    handlers[sub] = [=, &g] {
      Presentation p;
      check(tg_presentation_sample(*m, d->c_str(), g.seed, &p.p), "sample");
      LibString s;
      check(tg_presentation_report(p.p, &s.s), "sample");
      return Outcome{Json::parse(s.str())};
    };
  }

  // words
  {
    auto* sub = app.add_subcommand("words", "Enumerate, reduce or sample cyclically reduced words");
    auto m = std::make_shared<std::uint32_t>(2);
    auto cap = std::make_shared<std::uint32_t>(6);
    auto reduce = std::make_shared<std::string>();
    auto draws = std::make_shared<std::uint64_t>(0);
    sub->add_option("--m", *m, "Number of generators")->required();
    sub->add_option("--cap", *cap, "Largest m for full enumeration");
    auto* r = sub->add_option("--reduce", *reduce, "Reduce this word (a-z generators, A-Z inverses)");
    sub->add_option("--sample", *draws, "Draw this many words and test uniformity")->excludes(r);
    handlers[sub] = [=, &g] {
      LibString s;
      if (!reduce->empty()) {
        check(tg_words_reduce(*m, reduce->c_str(), &s.s), "words --reduce");
        return Outcome{Json::parse(s.str())};
      }
      if (*draws > 0) {
        check(tg_words_sample(*m, *draws, g.seed, &s.s), "words --sample");
        Json j = Json::parse(s.str());
        const bool ok = j["chi_square"]["p_value"].get<double>() >= 0.01;
        return Outcome{j, ok};
      }
      check(tg_words_enumerate(*m, *cap, &s.s), "words");
      Json j = Json::parse(s.str());
      return Outcome{j, j["match"].get<bool>()};
    };
  }

  // cancel / red
  for (const char* name : {"cancel", "red"}) {
    const bool is_red = std::string(name) == "red";
    auto* sub = app.add_subcommand(name, is_red ? "Red with per-edge contributions and the chain inequality"
                                                : "Edge degrees and Cancel of a complex");
    auto path = std::make_shared<std::string>();
    auto format = std::make_shared<std::string>("json");
    sub->add_option("--complex", *path, "Complex JSON file")->required();
    sub->add_option("--format", *format, "json or text")->check(CLI::IsMember({"json", "text"}));
    handlers[sub] = [=] {
      Complex y;
      load_complex(*path, y);
      LibString s;
      check(is_red ? tg_complex_red_report(y.p, &s.s) : tg_complex_cancel_report(y.p, &s.s), name);
      Outcome o{Json::parse(s.str())};
      if (is_red && o.result.contains("chain")) o.ok = o.result["chain"]["holds"].get<bool>();
      if (*format == "text") o.text = is_red ? red_table(o.result) : degree_table(o.result);
      return o;
    };
  }

  // enum-diagrams
  {
    auto* sub = app.add_subcommand("enum-diagrams", "Enumerate reduced van Kampen diagrams and check isoperimetry");
    auto path = std::make_shared<std::string>();
    auto faces = std::make_shared<std::uint32_t>(3);
    auto cap = std::make_shared<std::uint32_t>(5);
    auto eps = std::make_shared<std::string>("1/100");
    auto diagrams = std::make_shared<bool>(false);
    sub->add_option("--presentation", *path, "Presentation JSON file")->required();
    sub->add_option("--max-faces", *faces, "Largest diagram area");
    sub->add_option("--max-faces-cap", *cap, "Safety cap on --max-faces");
    sub->add_option("--epsilon", *eps, "Slack epsilon in the isoperimetric bound");
    sub->add_flag("--diagrams", *diagrams, "Include every diagram in the report");
    handlers[sub] = [=, &g] {
      Presentation p;
      load_presentation(*path, p);
      LibString s;
      int ok = 0;
      check(tg_enumerate_diagrams(p.p, *faces, *cap, eps->c_str(), g.workers, *diagrams ? 1 : 0, &s.s, &ok),
            "enum-diagrams");
      return Outcome{Json::parse(s.str()), ok != 0};
    };
  }

  // fulfil
  {
    auto* sub = app.add_subcommand("fulfil", "Fulfilment probabilities of an abstract labelled complex");
    auto path = std::make_shared<std::string>();
    auto m = std::make_shared<std::uint32_t>(2);
    auto exact = std::make_shared<bool>(false);
    auto trials = std::make_shared<std::uint64_t>(0);
    auto max_m = std::make_shared<std::uint32_t>(3);
    auto max_n = std::make_shared<std::uint32_t>(3);
    auto pres = std::make_shared<std::string>();
    auto eps = std::make_shared<std::string>("1/100");
    auto limit = std::make_shared<std::size_t>(1000);
    sub->add_option("--complex", *path, "Complex JSON file")->required();
    sub->add_option("--m", *m, "Number of generators");
    auto* ex = sub->add_flag("--exact", *exact, "Exhaustive exact probabilities");
    sub->add_option("--trials", *trials, "Monte Carlo trials")->excludes(ex);
    sub->add_option("--max-m", *max_m, "Largest m for the exact search (cost grows like ((2m-1)^3+1)^n)");
    sub->add_option("--max-n", *max_n, "Largest relator count for the exact search");
    sub->add_option("--presentation", *pres, "Also bind the complex to this presentation");
    sub->add_option("--epsilon", *eps, "Slack epsilon for the bound check against the presentation");
    sub->add_option("--limit", *limit, "Most fulfilling sub-tuples to list");
    handlers[sub] = [=, &g] {
      Complex y;
      load_complex(*path, y);
      Json result;
      bool ok = true;
      if (*exact || *trials == 0) {
        LibString s;
        int hold = 0;
        check(tg_fulfil_exact(y.p, *m, *max_m, *max_n, g.workers, &s.s, &hold), "fulfil --exact");
        result["exact"] = Json::parse(s.str());
        ok = hold != 0;
      } else {
        LibString s;
        check(tg_fulfil_montecarlo(y.p, *m, *trials, g.seed, g.workers, &s.s), "fulfil --trials");
        result["montecarlo"] = Json::parse(s.str());
      }
      if (!pres->empty()) {
        Presentation p;
        load_presentation(*pres, p);
        LibString s;
        int hold = 0;
        check(tg_fulfil_presentation(y.p, p.p, eps->c_str(), *limit, &s.s, &hold), "fulfil --presentation");
        result["presentation"] = Json::parse(s.str());
      }
      return Outcome{result, ok};
    };
  }

  // pipeline
  {
    auto* sub = app.add_subcommand("pipeline", "Constants d', delta, k, L, N for a density d0");
    auto d0 = std::make_shared<std::string>();
    auto a1 = std::make_shared<std::string>("0");
    auto a2 = std::make_shared<std::string>("0");
    auto margin = std::make_shared<std::string>("0");
    auto factor = std::make_shared<int>(800);
    sub->add_option("--d0", *d0, "Density below d_crit, as p/q or a decimal")->required();
    sub->add_option("--A1", *a1, "Additive constant of the E1 bound");
    sub->add_option("--A2", *a2, "Additive constant of the Red lower bound");
    sub->add_option("--margin", *margin, "Safety margin in the strict inequality for L");
    sub->add_option("--slim-factor", *factor, "Slim-triangle conversion factor (800, or 100 for the four-point variant)");
    handlers[sub] = [=, &g] {
      LibString s;
      int contradiction = 0;
      check(tg_constants_pipeline(d0->c_str(), a1->c_str(), a2->c_str(), margin->c_str(), *factor, g.precision, &s.s,
                                  &contradiction),
            "pipeline");
      return Outcome{Json::parse(s.str()), contradiction != 0};
    };
  }

  // sweep
  {
    auto* sub = app.add_subcommand("sweep", "Constants pipeline over a grid of d0 values (CSV)");
    auto grid = std::make_shared<std::string>();
    auto a1 = std::make_shared<std::string>("0");
    auto a2 = std::make_shared<std::string>("0");
    auto factor = std::make_shared<int>(800);
    auto csv = std::make_shared<std::string>();
    sub->add_option("--d0-grid", *grid, "Comma-separated d0 values")->required();
    sub->add_option("--A1", *a1, "Additive constant of the E1 bound");
    sub->add_option("--A2", *a2, "Additive constant of the Red lower bound");
    sub->add_option("--slim-factor", *factor, "Slim-triangle conversion factor");
    sub->add_option("--csv", *csv, "Also write the CSV table here");
    handlers[sub] = [=, &g] {
      const std::vector<std::string> values = split_grid(*grid);
      std::vector<const char*> ptrs;
      for (const auto& v : values) ptrs.push_back(v.c_str());
      LibString s;
      check(tg_sweep_csv(ptrs.data(), ptrs.size(), a1->c_str(), a2->c_str(), *factor, g.precision, &s.s), "sweep");
      if (!csv->empty()) {
        std::ofstream out(*csv, std::ios::binary);
        if (!out) throw Failure("--csv: cannot write \"" + *csv + "\"");
        out << s.str();
      }
      Outcome o;
      o.result["csv"] = s.str();
      return o;
    };
  }

  // ball
  {
    auto* sub = app.add_subcommand("ball", "Folded Cayley ball of a presentation");
    auto path = std::make_shared<std::string>();
    auto radius = std::make_shared<std::uint32_t>(3);
    auto max_radius = std::make_shared<std::uint32_t>(12);
    auto max_vertices = std::make_shared<std::uint64_t>(2'000'000);
    sub->add_option("--presentation", *path, "Presentation JSON file")->required();
    sub->add_option("--radius", *radius, "Ball radius");
    sub->add_option("--max-radius", *max_radius, "Cap on --radius");
    sub->add_option("--max-vertices", *max_vertices, "Vertex budget during folding");
    handlers[sub] = [=] {
      Presentation p;
      load_presentation(*path, p);
      Ball b;
      check(tg_ball_build(p.p, *radius, *max_radius, *max_vertices, &b.p), "ball");
      LibString s;
      check(tg_ball_to_json(b.p, &s.s), "ball");
      Json j = Json::parse(s.str());
      return Outcome{j, j.value("relators_close_at_closed_vertices", true)};
    };
  }

  // delta-est
  {
    auto* sub = app.add_subcommand("delta-est", "Slim-triangle defect estimate on a ball graph");
    auto path = std::make_shared<std::string>();
    auto samples = std::make_shared<std::uint64_t>(1000);
    sub->add_option("--graph", *path, "Graph JSON written by the ball subcommand")->required();
    sub->add_option("--samples", *samples, "Sampled triangles (0 = every triangle)");
    handlers[sub] = [=, &g] {
      Ball b;
      const std::string text = unwrap(read_file(*path, "--graph"), nullptr);
      check(tg_ball_from_json(text.c_str(), &b.p), "--graph " + *path);
      LibString s;
      check(tg_delta_estimate(b.p, *samples, g.seed, g.workers, &s.s), "delta-est");
      return Outcome{Json::parse(s.str())};
    };
  }

  // fig1-demo
  {
    auto* sub = app.add_subcommand("fig1-demo", "Parallel geodesics in <a,b | abb> and their strip diagrams");
    handlers[sub] = [] {
      LibString s;
      int ok = 0;
      check(tg_fig1_demo(&s.s, &ok), "fig1-demo");
      return Outcome{Json::parse(s.str()), ok != 0};
    };
  }

  // chain-check
  {
    auto* sub = app.add_subcommand("chain-check", "Fuzz Red + sum delta >= Cancel on random complexes");
    auto samples = std::make_shared<std::uint64_t>(10000);
    auto faces = std::make_shared<std::uint32_t>(6);
    sub->add_option("--samples", *samples, "Random complexes");
    sub->add_option("--max-faces", *faces, "Largest face count");
    handlers[sub] = [=, &g] {
      LibString s;
      int ok = 0;
      check(tg_chain_check(*samples, *faces, g.seed, g.workers, &s.s, &ok), "chain-check");
      return Outcome{Json::parse(s.str()), ok != 0};
    };
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    // help and version exit 0, usage errors share the error code
    return app.exit(e) == 0 ? 0 : 2;
  }

  CLI::App* sub = app.get_subcommands().front();
  g_subcommand = sub->get_name();
  try {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = handlers.at(sub)();
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (!o.text.empty()) {
      write_output(g, o.text);
    } else {
      Json doc;
      doc["tool"] = {{"name", "trigroup"}, {"version", tg_version()}};
      doc["config"] = config_of(sub, g);
      doc["seed"] = g.seed;
      doc["result"] = o.result;
      doc["checks_pass"] = o.ok;
      if (g.timing) doc["wall_clock_seconds"] = seconds;
      write_output(g, doc.dump(2) + "\n");
    }
    return o.ok ? 0 : kExitChecksFailed;
  } catch (const Failure& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
