// Command-line front end: Monte-Carlo simulation, radius computation,
// one-shot decoding, and the default reproduction table.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "hermipd/simulator.hpp"

namespace {

using namespace hermipd;

std::optional<int> parse_tau(const std::string& tau_str) {
  if (tau_str.empty() || tau_str == "auto") return std::nullopt;
  return std::stoi(tau_str);
}

ModulusMode parse_mode(const std::string& s) {
  if (s == "equality") return ModulusMode::equality;
  if (s == "truncated") return ModulusMode::truncated;
  throw CLI::ValidationError("--mode must be equality or truncated");
}

void write_rows(const std::vector<TrialStats>& rows, const std::string& format,
                const std::string& out_path) {
  std::ostringstream os;
  if (format == "csv") {
    os << stats_csv_header() << '\n';
    for (const auto& st : rows) os << stats_csv_row(st) << '\n';
  } else {
    os << "[\n";
    for (std::size_t i = 0; i < rows.size(); ++i)
      os << "  " << stats_json_row(rows[i]) << (i + 1 < rows.size() ? ",\n" : "\n");
    os << "]\n";
  }
  if (out_path.empty() || out_path == "-") {
    std::cout << os.str();
  } else {
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file: " + out_path);
    f << os.str();
  }
}

std::vector<Fq> read_word(const std::string& path, int n, int field_size) {
  std::ifstream f(path);
  if (!f) throw std::runtime_error("cannot open word file: " + path);
  std::vector<Fq> word;
  long long v;
  while (f >> v) {
    if (v < 0 || v >= field_size)
      throw std::runtime_error("word symbol out of range: " + std::to_string(v));
    word.push_back(Fq(v));
  }
  if (int(word.size()) != n)
    throw std::runtime_error("word file has " + std::to_string(word.size()) +
                             " symbols, expected n=" + std::to_string(n));
  return word;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"One-point Hermitian codes: improved power decoding and "
               "failure-rate simulation"};
  app.require_subcommand(1);

  int q = 4, m = 15, s = 2, ell = 4;
  std::string tau_str = "auto";
  long long trials = 100;
  std::uint64_t seed = 0;
  bool sweep = false;
  std::string mode_str = "equality";
  std::string format = "csv";
  std::string out_path;
  std::string word_path;

  auto add_code_opts = [&](CLI::App* cmd) {
    cmd->add_option("--q", q, "subfield order (2,3,4,5,7,8)")->required();
    cmd->add_option("--m", m, "code parameter m, 2g-2 < m < n")->required();
    cmd->add_option("--s", s, "decoder power parameter s");
    cmd->add_option("--ell", ell, "decoder power parameter ell");
  };

  CLI::App* sim = app.add_subcommand("simulate", "Monte-Carlo failure rate");
  add_code_opts(sim);
  sim->add_option("--tau", tau_str, "error weight per trial (int or 'auto')");
  sim->add_option("--trials", trials, "number of trials")->required();
  sim->add_option("--seed", seed, "master seed");
  sim->add_flag("--sweep", sweep, "retry smaller tau on failure");
  sim->add_option("--mode", mode_str, "early-congruence cap: equality|truncated");
  sim->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  sim->add_option("--out", out_path, "output path ('-' for stdout)");

  CLI::App* rad = app.add_subcommand("radius", "print decoding radii");
  add_code_opts(rad);

  CLI::App* dec = app.add_subcommand("decode", "decode one received word");
  add_code_opts(dec);
  dec->add_option("--tau", tau_str, "decoding radius (int or 'auto')");
  dec->add_option("--word", word_path, "file of n whitespace-separated symbols")
      ->required();
  dec->add_option("--mode", mode_str, "early-congruence cap: equality|truncated");
  dec->add_flag("--sweep", sweep, "retry smaller tau on failure");

  CLI::App* tab = app.add_subcommand("table", "run the default reproduction rows");
  tab->add_option("--seed", seed, "master seed");
  tab->add_option("--format", format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  tab->add_option("--out", out_path, "output path ('-' for stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sim->parsed()) {
      TrialConfig cfg;
      cfg.q = q;
      cfg.m = m;
      cfg.s = s;
      cfg.ell = ell;
      cfg.tau = parse_tau(tau_str);
      cfg.trials = trials;
      cfg.master_seed = seed;
      cfg.sweep = sweep;
      cfg.mode = parse_mode(mode_str);
      write_rows({run_trials(cfg)}, format, out_path);
    } else if (rad->parsed()) {
      Rational tn = radius_guaranteed(q, m, s, ell);
      std::cout << "tau_guaranteed: " << tn.str() << " (" << tn.to_double()
                << ")\n"
                << "radius: " << radius_practical(q, m, s, ell) << "\n";
    } else if (dec->parsed()) {
      HermitianCode code = make_code(q, m, ExecMode::parallel);
      std::vector<Fq> word = read_word(word_path, code.n, code.field.size());
      DecodeOptions opts;
      opts.s = s;
      opts.ell = ell;
      opts.tau = parse_tau(tau_str);
      opts.mode = parse_mode(mode_str);
      opts.exec = ExecMode::parallel;
      DecodeOutcome out = sweep ? decode_with_sweep(code, word, opts)
                                : decode(code, word, opts);
      nlohmann::json j;
      j["status"] = out.success ? "success" : "failure";
      j["tau"] = out.tau_used;
      j["nullspace_dim"] = out.nullspace_dim;
      if (out.success) {
        j["errors_corrected"] = out.errors_corrected;
        j["message"] = std::vector<int>(out.message.begin(), out.message.end());
        j["codeword"] = std::vector<int>(out.codeword.begin(), out.codeword.end());
      } else {
        j["reason"] = to_string(out.reason);
      }
      std::cout << j.dump(2) << "\n";
    } else if (tab->parsed()) {
      write_rows(reproduce_table(default_table_rows(seed)), format, out_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
