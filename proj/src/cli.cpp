#include "skewdual/cli.hpp"

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "skewdual/inseparable.hpp"
#include "skewdual/serialize.hpp"

namespace skewdual::cli {

namespace {

using serialize::json;

struct Config {
  std::string command;
  std::uint64_t q = 0;
  unsigned r = 2;
  unsigned k = 1;
  std::vector<long long> modulus;
  std::vector<std::uint32_t> field_modulus;
  std::uint64_t seed = 1;
  std::uint64_t limit = 0;
  std::string dedup = "on";
  std::string format = "json";
  std::string output;
  unsigned threads = 1;
  int y0 = 1;
  std::string generator;
  std::uint64_t budget = 1'000'000;
  bool with_matrix = false;
};

CodeParameters to_params(const Config& c) {
  if (c.q == 0) throw std::invalid_argument("--q is required");
  CodeParameters p;
  p.q = c.q;
  p.r = c.r;
  p.k = c.k;
  if (!c.modulus.empty()) p.modulus = c.modulus;
  if (!c.field_modulus.empty()) p.field_modulus = c.field_modulus;
  p.validate();
  return p;
}

class Emitter {
 public:
  Emitter(const Config& c, std::ostream& out) : text_(c.format == "text"), out_(&out) {}
  bool text() const { return text_; }
  void record(const json& j) { *out_ << j.dump() << '\n'; }
  void line(const std::string& s) { *out_ << s << '\n'; }
  void header(const Config& c, const json& params) {
    if (!text_) record(serialize::header(c.command, params));
  }

 private:
  bool text_;
  std::ostream* out_;
};

void emit_code(Emitter& em, const Config& c, const CodeParameters& p, const QuotientAlgebra& E, const OrePoly& f) {
  if (em.text()) {
    em.line(f.to_string());
  } else {
    em.record(serialize::code(p, E, f, c.with_matrix));
  }
}

// generator from --generator or stdin: a coefficient list, or the first
// record carrying "generator"
std::pair<json, std::optional<json>> read_generator(const Config& c) {
  std::string text = c.generator;
  if (text.empty() || text == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    text = os.str();
  }
  std::istringstream is(text);
  std::string ln;
  while (std::getline(is, ln)) {
    if (ln.find_first_not_of(" \t\r") == std::string::npos) continue;
    json j = json::parse(ln, nullptr, false);
    if (j.is_discarded()) break;
    if (j.is_array()) return {j, std::nullopt};
    if (j.is_object() && j.contains("generator")) {
      std::optional<json> params;
      if (j.contains("params")) params = j["params"];
      return {j["generator"], params};
    }
  }
  json j = json::parse(text, nullptr, false);
  if (j.is_array()) return {j, std::nullopt};
  throw std::invalid_argument("malformed generator input");
}

int cmd_exists(const Config& c, Emitter& em) {
  const CodeParameters p = to_params(c);
  const Existence ex = exists_selfdual(p);
  em.header(c, serialize::params(p));
  if (em.text()) {
    em.line(ex.exists ? "true" : "false");
    em.line(ex.reason);
  } else {
    em.record({{"exists", ex.exists}, {"reason", ex.reason}});
  }
  return ok;
}

int cmd_count(const Config& c, Emitter& em) {
  const CodeParameters p = to_params(c);
  const BigInt n = count_selfdual(p);
  em.header(c, serialize::params(p));
  if (em.text()) {
    em.line(n.str());
  } else {
    em.record({{"count", serialize::big(n)}});
  }
  return ok;
}

int cmd_random(const Config& c, Emitter& em) {
  const CodeParameters p = to_params(c);
  SelfDualCodes C(p, c.seed);
  Rng rng(c.seed);
  const OrePoly f = C.random(rng);
  em.header(c, serialize::params(p));
  emit_code(em, c, p, C.algebra(), f);
  return ok;
}

int cmd_enumerate(const Config& c, Emitter& em) {
  const CodeParameters p = to_params(c);
  SelfDualCodes C(p, c.seed);
  em.header(c, serialize::params(p));
  auto it = C.enumerate();
  std::uint64_t n = 0;
  while (c.limit == 0 || n < c.limit) {
    auto f = it.next();
    if (!f) break;
    emit_code(em, c, p, C.algebra(), *f);
    ++n;
  }
  return ok;
}

QuotientAlgebra algebra_of(const CodeParameters& p) {
  const FieldRef F = p.F();
  auto ring = std::make_shared<const OreRing>(F, p.K());
  return QuotientAlgebra(ring, p.central(*F));
}

int cmd_verify_or_dual(const Config& c, Emitter& em, bool dual) {
  auto [gen, embedded] = read_generator(c);
  const CodeParameters p = c.q == 0 && embedded ? serialize::parse_params(*embedded) : to_params(c);
  const QuotientAlgebra E = algebra_of(p);
  const OrePoly raw = serialize::parse_ore_poly(E.ring(), gen);
  if (raw.is_zero()) throw std::invalid_argument("generator is zero");
  const OrePoly f = normalize_generator(E, raw);
  em.header(c, serialize::params(p));
  if (dual) {
    emit_code(em, c, p, E, dual_generator(E, f));
    return ok;
  }
  const bool so = is_selforthogonal(E, f), sd = is_selfdual(E, f);
  const bool divides = right_divides(raw, E.modulus());
  if (em.text()) {
    em.line("generator " + f.to_string());
    em.line(std::string("divides_modulus ") + (divides ? "true" : "false"));
    em.line("dim " + std::to_string(E.length() - static_cast<std::size_t>(f.degree())));
    em.line(std::string("selforthogonal ") + (so ? "true" : "false"));
    em.line(std::string("selfdual ") + (sd ? "true" : "false"));
  } else {
    em.record({{"generator", serialize::ore_poly(f)},
               {"divides_modulus", divides},
               {"dim", E.length() - static_cast<std::size_t>(f.degree())},
               {"selforthogonal", so},
               {"selfdual", sd}});
  }
  return ok;
}

int cmd_inseparable(const Config& c, Emitter& em) {
  CodeParameters p = to_params(c);
  if (p.modulus) throw std::invalid_argument("inseparable-enum takes --k, not --modulus");
  const bool dedup = c.dedup == "on";
  InseparableEnumerator it(p.F(), p.K(), p.k, dedup, c.y0, c.seed);
  json params = serialize::params(p);
  params["y0"] = c.y0;
  params["dedup"] = dedup;
  em.header(c, params);
  std::uint64_t n = 0;
  while (c.limit == 0 || n < c.limit) {
    auto f = it.next();
    if (!f) break;
    if (em.text()) {
      em.line(f->to_string());
    } else {
      em.record({{"generator", serialize::ore_poly(*f)}});
    }
    ++n;
  }
  const bool complete = c.limit == 0 || n < c.limit;
  if (em.text()) {
    em.line("# raw " + std::to_string(it.raw_count()) + " yielded " + std::to_string(it.yielded()) + " twists " +
            std::to_string(it.twists_built()) + (complete ? "" : " (truncated)"));
  } else {
    em.record({{"summary",
                {{"raw", it.raw_count()},
                 {"yielded", it.yielded()},
                 {"twists", it.twists_built()},
                 {"complete", complete}}}});
  }
  return ok;
}

int cmd_oracle(const Config& c, Emitter& em) {
  const CodeParameters p = to_params(c);
  const QuotientAlgebra E = algebra_of(p);
  const auto rep = oracle::brute_codes(E, c.budget, c.threads);
  em.header(c, serialize::params(p));
  if (em.text()) {
    em.line("subspaces " + std::to_string(rep.subspaces));
    em.line("ideals " + std::to_string(rep.ideals));
    em.line("selforthogonal " + std::to_string(rep.selforthogonal));
    em.line("selfdual " + std::to_string(rep.selfdual.size()));
  } else {
    em.record(serialize::oracle_report(E.ring()->K(), rep));
  }
  return ok;
}

int cmd_decompose(const Config& c, Emitter& em) {
  const CodeParameters p = to_params(c);
  Rng rng(c.seed);
  const FieldRef F = p.F();
  Decomposition D(F, p.K(), p.central(*F), rng);
  em.header(c, serialize::params(p));
  if (!em.text()) {
    em.record(serialize::decomposition(D));
    return ok;
  }
  for (const auto& comp : D.components()) {
    std::ostringstream os;
    os << comp.index << " P=[";
    for (std::size_t i = 0; i < comp.shape.P.size(); ++i) os << (i ? "," : "") << F->to_string(comp.shape.P[i]);
    os << "] q_l=" << comp.L->order() << ' ' << to_string(comp.cls()) << " tau=" << comp.tau();
    em.line(os.str());
  }
  return ok;
}

int dispatch(const Config& c, std::ostream& out) {
  Emitter em(c, out);
  if (c.command == "exists") return cmd_exists(c, em);
  if (c.command == "count") return cmd_count(c, em);
  if (c.command == "random") return cmd_random(c, em);
  if (c.command == "enumerate") return cmd_enumerate(c, em);
  if (c.command == "verify") return cmd_verify_or_dual(c, em, false);
  if (c.command == "dual") return cmd_verify_or_dual(c, em, true);
  if (c.command == "inseparable-enum") return cmd_inseparable(c, em);
  if (c.command == "oracle") return cmd_oracle(c, em);
  if (c.command == "decompose") return cmd_decompose(c, em);
  throw std::invalid_argument("unknown command " + c.command);
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Selfdual skew cyclic codes over finite fields of odd characteristic", "skewdual"};
  app.require_subcommand(1);
  Config c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--q", c.q, "order of the base field F");
    sub->add_option("--r", c.r, "degree of K over F")->check(CLI::PositiveNumber);
    sub->add_option("--k", c.k, "modulus Y^k - 1")->check(CLI::PositiveNumber);
    sub->add_option("--modulus", c.modulus, "P(Y) coefficients, constant term first")->delimiter(',');
    sub->add_option("--field-modulus", c.field_modulus, "modulus of K over GF(p), constant term first")
        ->delimiter(',');
    sub->add_option("--seed", c.seed, "seed for every random choice");
    sub->add_option("--format", c.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--output", c.output, "write here instead of stdout");
  };
  struct Sub {
    const char* name;
    const char* help;
  };
  const std::vector<Sub> subs = {{"exists", "decide whether selfdual codes exist"},
                                 {"count", "number of selfdual codes"},
                                 {"random", "one uniformly random selfdual code"},
                                 {"enumerate", "stream every selfdual code"},
                                 {"verify", "check a generator for selforthogonality and selfduality"},
                                 {"dual", "generator of the dual code"},
                                 {"inseparable-enum", "selfdual codes for (Y - y0)^k, k a power of p"},
                                 {"oracle", "brute-force census of all codes"},
                                 {"decompose", "the factor components of the modulus"}};
  for (const auto& s : subs) {
    CLI::App* sub = app.add_subcommand(s.name, s.help);
    common(sub);
    const std::string name = s.name;
    if (name == "enumerate" || name == "inseparable-enum") sub->add_option("--limit", c.limit, "stop after N codes");
    if (name == "enumerate" || name == "random" || name == "dual")
      sub->add_flag("--matrix", c.with_matrix, "include the generator matrix");
    if (name == "verify" || name == "dual")
      sub->add_option("--generator", c.generator, "coefficient list as JSON, or a code record; stdin if absent");
    if (name == "inseparable-enum") {
      sub->add_option("--dedup", c.dedup, "on or off")->check(CLI::IsMember({"on", "off"}));
      sub->add_option("--y0", c.y0, "1 or -1")->check(CLI::IsMember({1, -1}));
    }
    if (name == "oracle") {
      sub->add_option("--budget", c.budget, "maximum number of subspaces to scan");
      sub->add_option("--threads", c.threads, "worker threads")->check(CLI::Range(1u, 256u));
    }
    sub->callback([&c, name] { c.command = name; });
  }

  std::vector<const char*> argv{"skewdual"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e, out, err);
    return rc == 0 ? ok : invalid;
  }

  try {
    if (c.output.empty()) return dispatch(c, out);
    std::ofstream f(c.output, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open " + c.output);
    return dispatch(c, f);
  } catch (const NoSelfdualCodes& e) {
    err << e.what() << '\n';
    return none_exist;
  } catch (const InseparableModulus& e) {
    err << "inseparable modulus: " << e.what() << '\n';
    return invalid;
  } catch (const std::invalid_argument& e) {
    err << e.what() << '\n';
    return invalid;
  } catch (const serialize::json::exception& e) {
    err << "malformed input: " << e.what() << '\n';
    return invalid;
  } catch (const std::length_error& e) {
    err << e.what() << '\n';
    return invalid;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return failure;
  }
}

}  // namespace skewdual::cli
