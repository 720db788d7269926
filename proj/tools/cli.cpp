#include "cli.hpp"

#include <cgc/galois.hpp>
#include <cgc/gradual.hpp>
#include <cgc/sign.hpp>
#include <cgc/while_lang.hpp>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

namespace cgc::cli {

namespace {

using nlohmann::json;

struct Input {
  std::string inline_src;
  std::string path;
};

// Throws std::runtime_error when no source is given or the file is unreadable.
std::string read_source(const Input& in) {
  if (!in.inline_src.empty()) {
    return in.inline_src;
  }
  if (in.path.empty()) {
    throw std::runtime_error("no input: pass a file, '-' for stdin, or -e SOURCE");
  }
  std::ostringstream buf;
  if (in.path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream file(in.path);
  if (!file) {
    throw std::runtime_error("cannot read " + in.path);
  }
  buf << file.rdbuf();
  return buf.str();
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("input", in.path, "Source file, or '-' for stdin");
  cmd->add_option("-e,--expr", in.inline_src, "Inline source");
}

void add_format(CLI::App* cmd, Format& f) {
  cmd->add_option("--format", f, "Output format")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"json", Format::Json}, {"text", Format::Text}}));
}

void add_window(CLI::App* cmd, Config& cfg) {
  cmd->add_option("--window", cfg.window, "Integer window bound W (values in -W..W)")
      ->check(CLI::Range(1, 1 << 20));
}

std::string binding_text(const Binding& b) {
  std::string s;
  for (const auto& [k, v] : b) {
    s += (s.empty() ? "" : ", ") + k + "=" + v;
  }
  return s;
}

// --- analyze ---

std::map<std::string, sign::Sign> parse_inits(const std::vector<std::string>& specs) {
  std::map<std::string, sign::Sign> out;
  for (const auto& s : specs) {
    const auto eq = s.find('=');
    if (eq == std::string::npos || eq == 0) {
      throw CLI::ValidationError("--init", "expected VAR=SIGN, got '" + s + "'");
    }
    auto sign = sign::parse_sign(s.substr(eq + 1));
    if (!sign) {
      throw CLI::ValidationError("--init", "unknown sign '" + s.substr(eq + 1) + "'");
    }
    out[s.substr(0, eq)] = *sign;
  }
  return out;
}

// Every concrete reachable state must be covered by the result at its point.
std::size_t verify(const whilelang::CexpPtr& program, const sign::AbsEnv& init,
                   const sign::AnalysisResult& result, const Config& cfg, std::ostream& err) {
  const IntWindow w(cfg.window);
  std::vector<whilelang::Env> starts{whilelang::Env{}};
  for (const auto& [x, s] : init) {
    std::vector<whilelang::Env> next;
    for (const auto& env : starts) {
      for (long long v : w.values()) {
        if (sign::in_mu(v, s)) {
          auto e = env;
          e[x] = v;
          next.push_back(std::move(e));
        }
      }
    }
    starts = std::move(next);
    if (starts.size() > 4096) {
      throw AnalysisError("--verify: too many initial environments; lower --window");
    }
  }
  std::size_t violations = 0;
  for (const auto& env : starts) {
    const auto reach = whilelang::reachable({env, program}, w, cfg.fuel);
    for (const auto& st : reach.states) {
      const int p = whilelang::point_of(*st.cmd);
      if (!sign::leq(sign::eta_env(st.env), result.at(p))) {
        if (violations++ == 0) {
          err << "verify: state " << whilelang::state_key(st) << " not covered at point " << p
              << "\n";
        }
      }
    }
  }
  return violations;
}

int cmd_analyze(const Input& in, const Config& cfg, const std::vector<std::string>& inits,
                bool check, std::ostream& out, std::ostream& err) {
  const std::string src = read_source(in);
  whilelang::CexpPtr program;
  try {
    program = whilelang::parse(src);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  }
  try {
    sign::AbsEnv init;
    for (const auto& x : whilelang::assigned_vars(*program)) {
      init[x] = sign::Sign::Any;
    }
    for (const auto& [x, s] : parse_inits(inits)) {
      init[x] = s;
    }
    const auto result = sign::analyze(program, init);
    if (check) {
      if (const auto bad = verify(program, init, result, cfg, err); bad > 0) {
        err << "verify: " << bad << " uncovered concrete state(s)\n";
        return 2;
      }
    }
    if (cfg.format == Format::Json) {
      out << sign::to_json(result).dump(2) << "\n";
    } else {
      out << sign::to_text(result);
    }
    return 0;
  } catch (const AnalysisError& e) {
    err << "analysis error: " << e.what() << "\n";
    return 2;
  }
}

// --- laws ---

int cmd_laws(const std::string& domain, const Config& cfg, std::ostream& out,
             std::ostream& err) {
  std::vector<LawReport> reports;
  try {
    reports = law_suite(domain, cfg);
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
  const bool ok = std::all_of(reports.begin(), reports.end(),
                              [](const LawReport& r) { return r.passed(); });
  if (cfg.format == Format::Json) {
    json j = json::array();
    for (const auto& r : reports) {
      j.push_back(r);
    }
    out << j.dump(2) << "\n";
  } else {
    for (const auto& r : reports) {
      out << r.summary();
      for (const auto& n : r.notes()) {
        out << " (" << n << ")";
      }
      out << "\n";
      const auto& ces = r.counterexamples();
      for (std::size_t i = 0; i < std::min<std::size_t>(3, ces.size()); ++i) {
        out << "  " << binding_text(ces[i]) << "\n";
      }
    }
    out << (ok ? "all laws pass" : "some laws FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

// --- gtc ---

int cmd_gtc(const Input& in, const Config& cfg, std::ostream& out, std::ostream& err) {
  const std::string src = read_source(in);
  gradual::TermPtr term;
  try {
    term = gradual::parse_term(src);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return 1;
  }
  const auto r = gradual::typecheck_gradual({}, *term);
  if (const auto* t = std::get_if<gradual::TypePtr>(&r)) {
    if (cfg.format == Format::Json) {
      out << json{{"term", gradual::to_string(*term)}, {"type", gradual::to_string(**t)}}.dump(2)
          << "\n";
    } else {
      out << gradual::to_string(**t) << "\n";
    }
    return 0;
  }
  const auto& e = std::get<gradual::TypeError>(r);
  if (cfg.format == Format::Json) {
    out << json{{"term", gradual::to_string(*term)},
                {"error", {{"rule", e.rule}, {"subterm", e.subterm}, {"detail", e.detail}}}}
               .dump(2)
        << "\n";
  } else {
    out << "ill-typed: " << e.message() << "\n";
  }
  return 3;
}

// --- tables ---

struct TableSpec {
  std::string op;
  MonotoneFn table;
  MonotoneFn best;
  const ProductDomain* pairs;
};

int cmd_tables(const Config& cfg, std::ostream& out) {
  using namespace sign;
  const IntWindow w(cfg.window);
  const IntWindow wide = result_window(w);
  const auto gc = sign_gc(w);
  const auto pairs = product_gc(gc, gc);
  std::vector<TableSpec> specs;
  for (AOp op : {AOp::Add, AOp::Sub, AOp::Mul, AOp::Div}) {
    specs.push_back({std::string(whilelang::symbol(op)), aop_sharp_fn(op, pairs.abstract),
                     best_abstraction(aop_fn(op, pairs.concrete, w, wide), pairs.gc,
                                      sign_gc(wide)),
                     &pairs.abstract});
  }
  for (CmpOp op : {CmpOp::Lt, CmpOp::Eq}) {
    specs.push_back({std::string(whilelang::symbol(op)), cmp_sharp_fn(op, pairs.abstract),
                     best_abstraction(cmp_fn(op, pairs.concrete, w), pairs.gc, absbool_gc()),
                     &pairs.abstract});
  }

  json j = json::array();
  for (const auto& s : specs) {
    const auto& cod = *s.table.cod();
    json rows = json::object();
    json diffs = json::array();
    std::ostringstream text;
    text << "op " << s.op << "  (window " << cfg.window << ")\n" << std::left
         << std::setw(6) << "";
    for (Sign b : kAllSigns) {
      text << std::setw(6) << name(b);
    }
    text << "\n";
    for (Sign a : kAllSigns) {
      text << std::setw(6) << name(a);
      json row = json::object();
      for (Sign b : kAllSigns) {
        const ElemId q = s.pairs->pair(id(a), id(b));
        const auto& v = cod.label(s.table(q));
        row[std::string(name(b))] = v;
        text << std::setw(6) << v;
        if (s.table(q) != s.best(q)) {
          diffs.push_back({{"left", name(a)}, {"right", name(b)}, {"table", v},
                           {"best", cod.label(s.best(q))}});
        }
      }
      rows[std::string(name(a))] = std::move(row);
      text << "\n";
    }
    if (diffs.empty()) {
      text << "best-abstraction diff: none\n";
    } else {
      text << "best-abstraction diff: " << diffs.size() << " entr"
           << (diffs.size() == 1 ? "y" : "ies") << "\n";
      for (const auto& d : diffs) {
        text << "  " << d["left"].get<std::string>() << " " << s.op << " "
             << d["right"].get<std::string>() << ": table " << d["table"].get<std::string>()
             << ", best " << d["best"].get<std::string>() << "\n";
      }
    }
    if (cfg.format == Format::Text) {
      out << text.str() << "\n";
    }
    j.push_back({{"op", s.op}, {"window", cfg.window}, {"table", rows}, {"diff", diffs}});
  }
  if (cfg.format == Format::Json) {
    out << j.dump(2) << "\n";
  }
  return 0;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Abstract interpretation with constructive Galois connections", "cgc"};
  app.require_subcommand(1);

  Config cfg;
  Input input;
  std::vector<std::string> inits;
  bool check = false;
  std::string domain;
  Format analyze_fmt = Format::Json;
  Format laws_fmt = Format::Json;
  Format gtc_fmt = Format::Text;
  Format tables_fmt = Format::Text;

  auto* analyze = app.add_subcommand("analyze", "Sign analysis of a WHILE program");
  add_input(analyze, input);
  add_window(analyze, cfg);
  add_format(analyze, analyze_fmt);
  analyze->add_option("--fuel", cfg.fuel, "Step bound for --verify")->check(CLI::NonNegativeNumber);
  analyze->add_option("--init", inits, "Initial sign of a variable, VAR=SIGN (repeatable)")
      ->allow_extra_args(false);
  analyze->add_flag("--verify", check,
                    "Check the result against bounded concrete runs in the window");

  auto* laws = app.add_subcommand("laws", "Run the law suite of a fixture");
  laws->add_option("domain", domain, "parity | parity+ | sign | env | gradual")->required();
  add_window(laws, cfg);
  add_format(laws, laws_fmt);
  laws->add_option("--seed", cfg.seed, "Seed for sampled downset families");
  laws->add_option("--depth", cfg.depth, "Type depth bound for the gradual fixture")
      ->check(CLI::Range(1, 3));

  auto* gtc = app.add_subcommand("gtc", "Gradually type-check a term");
  add_input(gtc, input);
  add_format(gtc, gtc_fmt);

  auto* tables = app.add_subcommand("tables", "Dump sign operator tables with optimality diffs");
  add_window(tables, cfg);
  add_format(tables, tables_fmt);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }

  try {
    if (analyze->parsed()) {
      cfg.format = analyze_fmt;
      return cmd_analyze(input, cfg, inits, check, out, err);
    }
    if (laws->parsed()) {
      cfg.format = laws_fmt;
      return cmd_laws(domain, cfg, out, err);
    }
    if (gtc->parsed()) {
      cfg.format = gtc_fmt;
      return cmd_gtc(input, cfg, out, err);
    }
    cfg.format = tables_fmt;
    return cmd_tables(cfg, out);
  } catch (const CLI::ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  }
}

} // namespace cgc::cli
