#include "dg/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dg/axioms.hpp"
#include "dg/convert.hpp"
#include "dg/error.hpp"
#include "dg/formats.hpp"
#include "dg/functional.hpp"
#include "dg/grammar.hpp"
#include "dg/parser.hpp"

namespace dg::cli {

namespace {

using nlohmann::json;

// Raised for problems that map to exit code 2.
struct UsageError : Error {
  using Error::Error;
};

class Input {
 public:
  Input(const std::string& path, std::istream& fallback) {
    if (path == "-") {
      stream_ = &fallback;
      return;
    }
    file_.open(path);
    if (!file_) throw UsageError("cannot open input '" + path + "'");
    stream_ = &file_;
  }

  std::istream& stream() { return *stream_; }

  std::string slurp() {
    std::ostringstream ss;
    ss << stream_->rdbuf();
    return ss.str();
  }

 private:
  std::ifstream file_;
  std::istream* stream_ = nullptr;
};

std::string read_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw UsageError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

Grammar load_grammar(const RunConfig& config, std::ostream& err) {
  Grammar g = parse_grammar(read_file(*config.grammar_path));
  auto diagnostics = validate_grammar(g);
  for (const auto& d : diagnostics) {
    err << (d.severity == Diagnostic::Severity::Error ? "error: " : "warning: ") << d.message << '\n';
  }
  if (has_errors(diagnostics)) throw UsageError("grammar '" + *config.grammar_path + "' is invalid");
  return g;
}

bool blank(const std::string& s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c); });
}

// DS JSON input: one document (object or array of objects), or one object
// per line.
std::vector<DependencyStructure> read_ds_json(const std::string& text) {
  std::vector<DependencyStructure> out;
  auto take = [&out](const json& j) {
    if (j.is_array()) {
      for (const auto& item : j) out.push_back(ds_from_json(item));
    } else {
      out.push_back(ds_from_json(j));
    }
  };
  if (blank(text)) return out;
  try {
    take(json::parse(text));
    return out;
  } catch (const json::parse_error&) {
  }
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    if (blank(line)) continue;
    try {
      take(json::parse(line));
    } catch (const json::parse_error& e) {
      throw StructureError(std::string("malformed DS JSON: ") + e.what());
    }
  }
  return out;
}

std::vector<DependencyStructure> read_ds(Input& input, const std::string& format) {
  auto text = input.slurp();
  return format == "json" ? read_ds_json(text) : read_conll_all(text);
}

struct Rendered {
  std::string pm;
  json fstruct;
  std::string sem;
  std::vector<CorefNote> notes;
  SemanticTerm term;
};

int run_parse(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (config.format == "sexp") throw UsageError("parse supports --format conll or json");
  const Grammar g = load_grammar(config, err);
  const bool as_json = config.format == "json";
  const ParseOptions options{config.max_analyses};
  Input input(config.input_path, in);
  const bool need_functional = config.emit.count("fstruct") || config.emit.count("sem");

  int code = 0;
  std::size_t sentence_index = 0;
  std::string line;
  while (std::getline(input.stream(), line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (blank(line)) continue;
    ++sentence_index;
    const std::string where = "sentence " + std::to_string(sentence_index);

    std::vector<Analysis> analyses;
    try {
      analyses = parse(g, Sentence::from_text(line), options);
    } catch (const TruncationError& e) {
      err << where << ": " << e.what() << '\n';
      if (as_json) {
        out << json::array({{{"sentence_index", sentence_index}, {"truncated", true}, {"limit", e.limit()}}}).dump()
            << '\n';
      } else {
        out << "# sentence " << sentence_index << " truncated: more than " << e.limit() << " analyses\n\n";
      }
      code = std::max(code, 1);
      continue;
    } catch (const ParseError& e) {
      err << where << ": " << e.what() << '\n';
      code = std::max(code, 1);
      continue;
    }
    if (analyses.empty()) {
      err << where << ": no parse\n";
      code = std::max(code, 1);
    }

    json batch = json::array();
    for (std::size_t k = 0; k < analyses.size(); ++k) {
      const auto& a = analyses[k];
      Rendered r{};
      if (config.emit.count("pm")) r.pm = write_sexp(ds_to_pm(a.ds));
      if (need_functional) {
        try {
          auto [fs, notes] = resolve_control(build_fstructure(a, g), a, g);
          r.fstruct = fstructure_to_json(fs);
          if (config.emit.count("sem")) {
            r.term = to_semantics(fs, g, notes);
            r.sem = render_semantics(r.term, notes);
            r.notes = notes;
          }
        } catch (const FunctionalError& e) {
          err << where << " analysis " << k + 1 << ": " << e.what() << '\n';
          code = std::max(code, 1);
          continue;
        }
      }
      if (as_json) {
        json item{{"sentence_index", sentence_index}, {"analysis_index", k + 1}};
        if (config.emit.count("ds")) item["ds"] = ds_to_json(a.ds);
        if (config.emit.count("pm")) item["pm"] = r.pm;
        if (config.emit.count("fstruct")) item["fstruct"] = r.fstruct;
        if (config.emit.count("sem")) {
          json coref = json::array();
          for (const auto& n : r.notes) coref.push_back({{"variable", n.variable}, {"antecedent", n.antecedent}});
          item["sem"] = {{"term", r.sem.substr(0, r.sem.find('\n'))}, {"coref", coref}};
        }
        batch.push_back(std::move(item));
        continue;
      }
      out << "# sentence " << sentence_index << " analysis " << k + 1 << '\n';
      if (config.emit.count("pm")) out << "# pm = " << r.pm << '\n';
      if (config.emit.count("fstruct")) out << "# fstruct = " << r.fstruct.dump() << '\n';
      if (config.emit.count("sem")) {
        std::istringstream sem(r.sem);
        std::string sem_line;
        std::getline(sem, sem_line);
        out << "# sem = " << sem_line << '\n';
        while (std::getline(sem, sem_line)) out << sem_line << '\n';
      }
      if (config.emit.count("ds")) out << write_conll(a.ds);
      out << '\n';
    }
    if (as_json && !analyses.empty()) out << batch.dump() << '\n';
  }
  return code;
}

int run_validate(const RunConfig& config, std::istream& in, std::ostream& out) {
  Input input(config.input_path, in);
  const std::string format = config.format.empty() ? "json" : config.format;
  if (format == "sexp") throw UsageError("validate reads --format json or conll");
  int code = 0;
  for (const auto& ds : read_ds(input, format)) {
    auto violations = validate(ds);
    if (!violations.empty()) code = 1;
    out << violations_to_json(violations).dump() << '\n';
  }
  return code;
}

int run_convert(const RunConfig& config, std::istream& in, std::ostream& out, std::ostream& err) {
  if (config.from.empty() || config.to.empty()) throw UsageError("convert needs --from and --to");
  const std::string format = config.format.empty() ? "conll" : config.format;
  if (format == "sexp") throw UsageError("--format selects the DS encoding: conll or json");
  Input input(config.input_path, in);

  std::vector<PhraseMarker> pms;
  std::vector<DependencyStructure> dss;
  int code = 0;
  if (config.from == "pm") {
    std::string line;
    while (std::getline(input.stream(), line)) {
      if (!blank(line)) pms.push_back(read_sexp(line));
    }
  } else {
    dss = read_ds(input, format);
  }

  if (config.to == "pm") {
    if (config.from == "ds") {
      for (std::size_t k = 0; k < dss.size(); ++k) {
        try {
          pms.push_back(ds_to_pm(dss[k]));
        } catch (const IllFormedStructure& e) {
          err << "structure " << k + 1 << ": " << e.what() << '\n';
          code = 1;
        }
      }
    }
    for (const auto& pm : pms) out << write_sexp(pm) << '\n';
    return code;
  }

  for (const auto& pm : pms) dss.push_back(pm_to_ds(pm));
  for (const auto& ds : dss) {
    if (format == "json") {
      out << ds_to_json(ds).dump() << '\n';
    } else {
      out << write_conll(ds) << '\n';
    }
  }
  return code;
}

int run_cfg(const RunConfig& config, std::ostream& out, std::ostream& err) {
  out << render_cfg(gaifman_cfg(load_grammar(config, err)));
  return 0;
}

std::size_t env_max_analyses() {
  const char* value = std::getenv("DG_MAX_ANALYSES");
  if (!value || !*value) return ParseOptions::kDefaultMaxAnalyses;
  std::string s(value);
  if (s.find_first_not_of("0123456789") != std::string::npos || std::stoull(s) == 0) {
    throw UsageError("DG_MAX_ANALYSES must be a positive integer, got '" + s + "'");
  }
  return std::stoull(s);
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Dependency grammar toolkit", "dg"};
  app.require_subcommand(1);
  RunConfig config;
  std::vector<std::string> emit;
  std::size_t max_analyses = 0;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("-i,--input", config.input_path, "input file, '-' for standard input");
  };
  auto add_format = [&](CLI::App* cmd, std::vector<std::string> allowed) {
    cmd->add_option("--format", config.format, "encoding")->check(CLI::IsMember(allowed));
  };

  auto* parse_cmd = app.add_subcommand("parse", "print every analysis of each input sentence");
  parse_cmd->add_option("-g,--grammar", config.grammar_path, "grammar file")->required();
  add_input(parse_cmd);
  parse_cmd->add_option("--emit", emit, "comma list of ds, pm, fstruct, sem")
      ->delimiter(',')
      ->check(CLI::IsMember({"ds", "pm", "fstruct", "sem"}));
  add_format(parse_cmd, {"conll", "json", "sexp"});
  auto* max_opt = parse_cmd->add_option("--max-analyses", max_analyses, "analysis cap per sentence")
                      ->check(CLI::PositiveNumber);

  auto* validate_cmd = app.add_subcommand("validate", "check dependency structures against the axioms");
  validate_cmd->add_option("-g,--grammar", config.grammar_path, "unused; accepted for symmetry");
  add_input(validate_cmd);
  add_format(validate_cmd, {"conll", "json", "sexp"});

  auto* convert_cmd = app.add_subcommand("convert", "convert between dependency structures and phrase markers");
  convert_cmd->add_option("--from", config.from, "ds or pm")->required()->check(CLI::IsMember({"ds", "pm"}));
  convert_cmd->add_option("--to", config.to, "ds or pm")->required()->check(CLI::IsMember({"ds", "pm"}));
  add_input(convert_cmd);
  add_format(convert_cmd, {"conll", "json", "sexp"});

  auto* cfg_cmd = app.add_subcommand("cfg", "print the equivalent context-free grammar");
  cfg_cmd->add_option("-g,--grammar", config.grammar_path, "grammar file")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "dg: " << e.what() << '\n';
    return static_cast<int>(ExitCode::UsageError);
  }

  try {
    if (!emit.empty()) config.emit = std::set<std::string>(emit.begin(), emit.end());
    config.max_analyses = max_opt->count() ? max_analyses : env_max_analyses();
    if (parse_cmd->parsed()) {
      config.subcommand = "parse";
      return run_parse(config, in, out, err);
    }
    if (validate_cmd->parsed()) {
      config.subcommand = "validate";
      return run_validate(config, in, out);
    }
    if (convert_cmd->parsed()) {
      config.subcommand = "convert";
      return run_convert(config, in, out, err);
    }
    config.subcommand = "cfg";
    return run_cfg(config, out, err);
  } catch (const Error& e) {
    err << "dg: " << e.what() << '\n';
    return static_cast<int>(ExitCode::UsageError);
  }
}

}  // namespace dg::cli
