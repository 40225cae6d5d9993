#include "bgg/bggcli.hpp"

#include "bgg/error.hpp"

#include "CLI11.hpp"
#include "json.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <ostream>
#include <sstream>

namespace bgg::cli {
namespace {

const char* kMod = "bggcli";
const std::vector<std::string> kFormats = {"text", "dot", "json"};

[[noreturn]] void parse_fail(const std::string& msg) { throw Error(ErrorKind::ParseError, kMod, msg); }
[[noreturn]] void invalid(const std::string& msg) { throw Error(ErrorKind::ValidationError, kMod, msg); }

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

// Splits on `sep`, remembering where each piece starts.
std::vector<std::pair<std::string, std::size_t>> split(const std::string& s, char sep) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t start = 0;
  while (true) {
    auto k = s.find(sep, start);
    out.emplace_back(s.substr(start, k == std::string::npos ? std::string::npos : k - start), start);
    if (k == std::string::npos) break;
    start = k + 1;
  }
  return out;
}

int to_int(const std::string& what, const std::string& tok, std::size_t pos, std::size_t offset = 0) {
  std::string t = trim(tok);
  int v = 0;
  auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
  if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
    parse_fail(what + ": '" + tok + "' at character " + std::to_string(offset + pos + 1) + " is not an integer");
  return v;
}

std::vector<int> int_list(const std::string& what, const std::string& text) {
  std::vector<int> out;
  for (const auto& [tok, pos] : split(text, ',')) out.push_back(to_int(what, tok, pos));
  return out;
}

std::string join(const std::vector<int>& v, const char* sep = ",") {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + std::to_string(v[i]);
  return s;
}

std::string frac(const Rational& q) {
  std::string s = q.str();
  return s.find('/') == std::string::npos ? s + "/1" : s;
}

const char* command_name(Command c) {
  switch (c) {
    case Command::Cohomology: return "cohomology";
    case Command::Diagram: return "diagram";
    case Command::Verify: return "verify";
  }
  return "diagram";
}

std::string label_text(const IrrepLabel& l) { return "(" + join(l.coords) + ")"; }

// Raw option values, before interpretation; config entries fill what the flags left empty.
struct Raw {
  std::map<std::string, std::string> v;
  std::string command;
};

void read_config(const std::string& path, Raw& raw, const std::map<std::string, bool>& given) {
  std::ifstream in(path);
  if (!in) invalid("cannot read config file '" + path + "'");
  static const std::vector<std::string> keys = {"algebra", "cartan", "cross", "weight", "emit", "output",
                                                "max-module-dim", "max-cochain-dim", "max-jet-dim", "command"};
  std::string line;
  for (int no = 1; std::getline(in, line); ++no) {
    if (auto h = line.find('#'); h != std::string::npos) line.resize(h);
    line = trim(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) parse_fail(path + ":" + std::to_string(no) + ": expected key=value");
    std::string key = trim(line.substr(0, eq)), val = trim(line.substr(eq + 1));
    if (val.size() >= 2 && val.front() == '"' && val.back() == '"') val = val.substr(1, val.size() - 2);
    if (std::find(keys.begin(), keys.end(), key) == keys.end())
      parse_fail(path + ":" + std::to_string(no) + ": unknown key '" + key + "'");
    if (key == "command") {
      if (raw.command.empty()) raw.command = val;
    } else if (!given.count(key)) {
      raw.v[key] = val;
    }
  }
}

JobSpec interpret(const Raw& raw) {
  JobSpec job;
  auto get = [&](const std::string& k) -> std::optional<std::string> {
    auto it = raw.v.find(k);
    if (it == raw.v.end()) return std::nullopt;
    return it->second;
  };
  if (raw.command == "cohomology") job.command = Command::Cohomology;
  else if (raw.command == "diagram" || raw.command.empty()) job.command = Command::Diagram;
  else if (raw.command == "verify") job.command = Command::Verify;
  else parse_fail("unknown command '" + raw.command + "'");

  auto alg = get("algebra");
  auto cm = get("cartan");
  if (alg && cm) invalid("give either --algebra or --cartan, not both");
  if (!alg && !cm) invalid("no algebra given (--algebra or --cartan)");
  if (alg) job.algebra = trim(*alg);
  if (cm)
    for (const auto& [row, rpos] : split(*cm, ';')) {
      std::vector<int> r;
      for (const auto& [tok, pos] : split(row, ',')) r.push_back(to_int("--cartan", tok, pos, rpos));
      job.cartan.push_back(std::move(r));
    }
  CartanMatrix c = cartan_of(job);
  const int rank = c.rank();

  auto cross = get("cross");
  if (!cross || trim(*cross).empty()) invalid("no crossed nodes given (--cross)");
  for (int s : int_list("--cross", *cross)) {
    if (s < 1 || s > rank)
      invalid("--cross: node " + std::to_string(s) + " out of range 1.." + std::to_string(rank) + " (nodes are numbered from 1)");
    job.sigma.push_back(s);
  }
  std::sort(job.sigma.begin(), job.sigma.end());
  job.sigma.erase(std::unique(job.sigma.begin(), job.sigma.end()), job.sigma.end());

  auto weight = get("weight");
  if (!weight) {
    job.weight.assign(rank, 0);
  } else {
    job.weight = int_list("--weight", *weight);
    if (static_cast<int>(job.weight.size()) != rank)
      invalid("--weight has " + std::to_string(job.weight.size()) + " entries, the algebra has rank " + std::to_string(rank));
    for (int i = 0; i < rank; ++i)
      if (job.weight[i] < 0)
        invalid("--weight: coordinate " + std::to_string(job.weight[i]) + " at node " + std::to_string(i + 1) +
                " is negative; the coefficient module must have a dominant highest weight");
  }

  if (auto e = get("emit")) {
    std::vector<std::string> want;
    for (const auto& [tok, pos] : split(*e, ',')) {
      std::string t = trim(tok);
      if (std::find(kFormats.begin(), kFormats.end(), t) == kFormats.end())
        invalid("--emit: unknown format '" + t + "' at character " + std::to_string(pos + 1));
      want.push_back(t);
    }
    job.emit.clear();
    for (const auto& f : kFormats)
      if (std::find(want.begin(), want.end(), f) != want.end()) job.emit.push_back(f);
  }
  auto budget = [&](const std::string& k, int& into) {
    if (auto b = get(k)) {
      into = to_int("--" + k, *b, 0);
      if (into <= 0) invalid("--" + k + " must be positive");
    }
  };
  budget("max-module-dim", job.budgets.module_dim);
  budget("max-cochain-dim", job.budgets.cochain_dim);
  budget("max-jet-dim", job.budgets.jet_dim);
  if (auto o = get("output")) job.output = *o;
  return job;
}

}  // namespace

CartanMatrix cartan_of(const JobSpec& job) {
  if (!job.cartan.empty()) {
    CartanMatrix c = CartanMatrix::from_entries(job.cartan);
    validate_cartan(c);
    return c;
  }
  return CartanMatrix::from_label(job.algebra);
}

std::string algebra_name(const JobSpec& job) {
  if (job.cartan.empty()) return job.algebra;
  std::string s = "cartan:";
  for (std::size_t i = 0; i < job.cartan.size(); ++i) s += (i ? ";" : "") + join(job.cartan[i]);
  return s;
}

JobSpec parse_args(const std::vector<std::string>& args, std::string* help) {
  CLI::App app{"BGG sequences for parabolic geometries: cohomology, operators and checks", "bggtool"};
  app.fallthrough();
  app.require_subcommand(0, 1);
  std::map<std::string, std::string> flag;
  auto opt = [&](const std::string& name, const std::string& desc) { return app.add_option("--" + name, flag[name], desc); };
  opt("algebra", "series label, e.g. A3, B2, G2 (Bourbaki numbering)");
  opt("cartan", "explicit Cartan matrix, rows separated by ';', entries by ','");
  opt("cross", "crossed nodes, 1-based, e.g. 1,3");
  opt("weight", "highest weight of the coefficient module in fundamental weights, e.g. 1,0,0");
  opt("emit", "output formats: any of text,dot,json");
  opt("output", "write output here instead of standard output");
  opt("max-module-dim", "largest coefficient module to build");
  opt("max-cochain-dim", "largest cochain space to build");
  opt("max-jet-dim", "largest jet module to build");
  std::string config;
  app.add_option("--config", config, "key=value file mirroring the flags; flags win");
  auto* coh = app.add_subcommand("cohomology", "harmonic cohomology components per level");
  auto* dia = app.add_subcommand("diagram", "cohomology plus the operators between neighbouring levels");
  auto* ver = app.add_subcommand("verify", "diagram plus the identity battery");

  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    if (help) *help = app.help();
    return JobSpec{};
  } catch (const CLI::ParseError& e) {
    parse_fail(e.what());
  }

  Raw raw;
  std::map<std::string, bool> given;
  for (const auto& [name, val] : flag)
    if (app.count("--" + name) > 0) {
      raw.v[name] = val;
      given[name] = true;
    }
  if (coh->parsed()) raw.command = "cohomology";
  if (dia->parsed()) raw.command = "diagram";
  if (ver->parsed()) raw.command = "verify";
  if (!config.empty()) read_config(config, raw, given);
  return interpret(raw);
}

std::vector<std::string> format_args(const JobSpec& job) {
  std::vector<std::string> a;
  if (job.cartan.empty()) {
    a.insert(a.end(), {"--algebra", job.algebra});
  } else {
    std::string s;
    for (std::size_t i = 0; i < job.cartan.size(); ++i) s += (i ? ";" : "") + join(job.cartan[i]);
    a.insert(a.end(), {"--cartan", s});
  }
  a.insert(a.end(), {"--cross", join(job.sigma), "--weight", join(job.weight)});
  std::string e;
  for (std::size_t i = 0; i < job.emit.size(); ++i) e += (i ? "," : "") + job.emit[i];
  a.insert(a.end(), {"--emit", e});
  a.insert(a.end(), {"--max-module-dim", std::to_string(job.budgets.module_dim), "--max-cochain-dim",
                     std::to_string(job.budgets.cochain_dim), "--max-jet-dim", std::to_string(job.budgets.jet_dim)});
  if (!job.output.empty()) a.insert(a.end(), {"--output", job.output});
  a.push_back(command_name(job.command));
  return a;
}

bool Report::passed() const {
  return std::all_of(verify.begin(), verify.end(), [](const auto& kv) { return kv.second; });
}

Report run(const JobSpec& job) {
  Report r;
  r.job = job;
  CartanMatrix c = cartan_of(job);
  AlgebraPtr g = build_graded_algebra(c, make_parabolic(c.rank(), job.sigma));
  if (job.command == Command::Cohomology) {
    r.ctx = make_context(g, job.weight, job.budgets);
    return r;
  }
  BGGDiagram D = build_bgg_diagram(g, job.weight, job.budgets, true);
  r.ctx = D.ctx;
  r.arrows = std::move(D.arrows);
  r.notes = std::move(D.notes);
  if (job.command != Command::Verify) return r;

  const BGGContext& ctx = *r.ctx;
  std::int64_t work = 0;
  for (int n = 0; n < ctx.cc.top; ++n) work += static_cast<std::int64_t>(ctx.cc.dim(n)) * g->dim_p();
  std::optional<Sampling> sample;
  if (work > 50000) {
    sample = Sampling{};
    r.notes.push_back("wedge and defect identities checked on " + std::to_string(sample->count) + " seeded random choices");
  }
  r.verify = verify_complex(ctx, sample);
  for (int n = 0; n < ctx.levels(); ++n)
    for (int k = 0; k < static_cast<int>(ctx.coh[n].components.size()); ++k) {
      GeneratedSubmodule gs = generate_submodule(r.ctx, n, k);
      std::map<std::string, bool> checks;
      try {
        checks = verify_component(gs, compose_splitter(gs));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::DimensionOverBudget) throw;
        r.notes.push_back("H" + std::to_string(n) + label_text(ctx.component(n, k).label) + ": splitting checks over the jet budget");
        continue;
      }
      for (const auto& [name, ok] : checks) {
        auto it = r.verify.find(name);
        if (it == r.verify.end())
          r.verify[name] = ok;
        else
          it->second = it->second && ok;
      }
    }
  r.verify["operators certified as p-homomorphisms"] =
      std::all_of(r.arrows.begin(), r.arrows.end(), [](const BGGArrow& a) { return a.certified; });
  return r;
}

std::string emit_text(const Report& r) {
  const BGGContext& ctx = *r.ctx;
  std::ostringstream os;
  os << "algebra " << algebra_name(r.job) << ", crossed nodes {" << join(r.job.sigma) << "}, weight (" << join(r.job.weight)
     << ")\n";
  for (int n = 0; n < ctx.levels(); ++n) {
    os << "H^" << n << ":";
    if (ctx.coh[n].components.empty()) os << " 0";
    for (const auto& c : ctx.coh[n].components)
      os << "  " << label_text(c.label) << " [E=" << c.label.e_eigenvalue.str() << ", dim " << c.dim() << "]";
    os << "\n";
  }
  if (r.job.command != Command::Cohomology) {
    os << "operators:\n";
    for (const auto& a : r.arrows)
      os << "  H^" << a.from_level << label_text(ctx.component(a.from_level, a.from_idx).label) << " -> H^" << a.to_level
         << label_text(ctx.component(a.to_level, a.to_idx).label) << "  order " << a.order
         << (a.certified ? "" : "  (uncertified)") << "\n";
  }
  if (!r.verify.empty()) {
    os << "checks:\n";
    for (const auto& [name, ok] : r.verify) os << "  " << (ok ? "pass" : "FAIL") << "  " << name << "\n";
  }
  for (const auto& n : r.notes) os << "note: " << n << "\n";
  return os.str();
}

std::string emit_dot(const Report& r) {
  const BGGContext& ctx = *r.ctx;
  std::ostringstream os;
  os << "digraph bgg {\n  rankdir=TB;\n  node [shape=box, fontname=\"Helvetica\"];\n";
  for (int n = 0; n < ctx.levels(); ++n) {
    os << "  { rank=same;";
    for (int k = 0; k < static_cast<int>(ctx.coh[n].components.size()); ++k) {
      const auto& c = ctx.coh[n].components[k];
      os << " h" << n << "_" << k << " [label=\"" << label_text(c.label) << "\\ndim " << c.dim() << "\"];";
    }
    os << " }\n";
  }
  for (const auto& a : r.arrows)
    os << "  h" << a.from_level << "_" << a.from_idx << " -> h" << a.to_level << "_" << a.to_idx << " [label=\"" << a.order
       << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string emit_json(const Report& r) {
  using nlohmann::ordered_json;
  const BGGContext& ctx = *r.ctx;
  ordered_json j;
  j["algebra"] = algebra_name(r.job);
  j["sigma"] = r.job.sigma;
  j["weight"] = r.job.weight;
  ordered_json cols = ordered_json::array();
  for (int n = 0; n < ctx.levels(); ++n) {
    ordered_json comps = ordered_json::array();
    for (const auto& c : ctx.coh[n].components)
      comps.push_back({{"label", label_text(c.label)}, {"e_eigenvalue", frac(c.label.e_eigenvalue)}, {"dim", c.dim()}});
    cols.push_back({{"level", n}, {"components", comps}});
  }
  j["columns"] = cols;
  ordered_json arrows = ordered_json::array();
  for (const auto& a : r.arrows)
    arrows.push_back({{"from", {a.from_level, a.from_idx}}, {"to", {a.to_level, a.to_idx}}, {"order", a.order}});
  j["arrows"] = arrows;
  ordered_json v = ordered_json::object();
  for (const auto& [name, ok] : r.verify) v[name] = ok ? "pass" : "fail";
  j["verify"] = v;
  return j.dump(2) + "\n";
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  JobSpec job;
  try {
    std::string help;
    job = parse_args(args, &help);
    if (!help.empty()) {
      out << help;
      return 0;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  Report r;
  try {
    r = run(job);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return e.kind() == ErrorKind::ValidationError || e.kind() == ErrorKind::ParseError ? 2 : 3;
  }
  std::vector<std::pair<std::string, std::string>> docs;
  for (const auto& f : job.emit) {
    if (f == "text") docs.emplace_back("txt", emit_text(r));
    if (f == "dot") docs.emplace_back("dot", emit_dot(r));
    if (f == "json") docs.emplace_back("json", emit_json(r));
  }
  for (const auto& [ext, text] : docs) {
    if (job.output.empty()) {
      out << text;
      continue;
    }
    std::string path = docs.size() == 1 ? job.output : job.output + "." + ext;
    std::ofstream f(path, std::ios::binary);
    if (!f) {
      err << "error: cannot write '" << path << "'\n";
      return 3;
    }
    f << text;
  }
  return r.passed() ? 0 : 1;
}

}  // namespace bgg::cli
