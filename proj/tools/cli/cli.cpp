#include "cli/cli.hpp"

#include "cli/commands.hpp"
#include "cli/config.hpp"
#include "escrate/errors.hpp"

#include <fstream>
#include <map>

#include <CLI11.hpp>

namespace escrate::cli {

namespace {

const std::map<std::string, std::string>& descriptions() {
  static const std::map<std::string, std::string> d{
      {"rate", "escape rate of one hole"},
      {"scan", "all holes of one length ordered by escape rate"},
      {"max", "maximal escape rate, regime and witnesses"},
      {"bounds", "two-symbol bounds for the maximal escape rate"},
      {"oracle", "cross-check survival probabilities three ways"},
      {"families", "prime holes of maximal measure and holes of maximal measure"},
      {"markov-scan", "Markov escape rates, argmax and pair classification"},
      {"figure", "figure data: fig1, relerr or markov-r3"},
  };
  return d;
}

const std::map<std::string, std::string>& option_help() {
  static const std::map<std::string, std::string> h{
      {"word", "hole word, e.g. aab or x,y,x"},
      {"bernoulli", "symbol probabilities, e.g. 3/5,2/5"},
      {"p", "two-symbol measure (p, 1-p)"},
      {"markov", "transition matrix pi_aa,pi_ab,pi_ba,pi_bb"},
      {"alphabet", "comma-separated symbol names"},
      {"r", "word length, or lo:hi"},
      {"tol", "relative root tolerance, at most 1e-6"},
      {"format", "csv or json"},
      {"out", "write output to FILE"},
      {"jobs", "worker threads for sweeps"},
      {"cap", "enumeration cap on A^r"},
      {"grid", "p=lo:hi:step or p=v1,v2,..."},
      {"markov-grid", "values for pi_aa and pi_bb: lo:hi:step or list"},
      {"n", "number of survival terms beyond p_0"},
      {"pairs", "markov-scan: list word pairs instead of words"},
      {"series", "oracle: print the survival series"},
  };
  return h;
}

struct Parsed {
  std::string command;
  std::string figure;
  RawOptions raw;
};

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact escape rates for cylinder holes in full shifts and two-symbol Markov shifts"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "show help for every subcommand");

  std::map<std::string, std::string> values;
  std::map<std::string, bool> flags;
  std::string config_path;
  std::string figure;
  std::map<std::string, std::map<std::string, CLI::Option*>> bound;

  for (const std::string& command : command_names()) {
    CLI::App* sub = app.add_subcommand(command, descriptions().at(command));
    sub->add_option("--config", config_path, "JSON file with option values");
    if (command == "figure")
      sub->add_option("name", figure, "fig1, relerr or markov-r3")
          ->required()
          ->check(CLI::IsMember({"fig1", "relerr", "markov-r3"}));
    for (const std::string& key : option_names()) {
      const bool is_flag = std::find(flag_names().begin(), flag_names().end(), key) != flag_names().end();
      if (is_flag) bound[command][key] = sub->add_flag("--" + key, flags[key], option_help().at(key));
      else bound[command][key] = sub->add_option("--" + key, values[key], option_help().at(key));
    }
  }

  std::vector<const char*> argv{"escrate"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? ExitCode::ok : ExitCode::usage;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    RawOptions raw;
    if (!config_path.empty()) raw = read_json_config(config_path);
    for (const auto& [key, opt] : bound[command]) {
      if (opt->count() == 0) continue;
      const bool is_flag = flags.count(key) != 0;
      raw[key] = is_flag ? (flags[key] ? "true" : "false") : values[key];
    }
    RunConfig cfg = build_config(command, raw);
    cfg.figure = figure;
    const Table table = run_command(cfg);
    if (cfg.out) {
      std::ofstream file(*cfg.out, std::ios::binary);
      if (!file) throw ParseError("cannot open output file '" + *cfg.out + "'");
      write_table(file, table, cfg.format);
      if (!file) throw ParseError("failed writing '" + *cfg.out + "'");
    } else {
      write_table(out, table, cfg.format);
    }
    return ExitCode::ok;
  } catch (const ForbiddenWord& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::forbidden_word;
  } catch (const NoPositiveRoot& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::no_positive_root;
  } catch (const CapExceeded& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::cap_exceeded;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return ExitCode::usage;
  }
}

} // namespace escrate::cli
