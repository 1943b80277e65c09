#include "nimcash/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>

#include <CLI11.hpp>

#include "nimcash/classes.hpp"
#include "nimcash/classic.hpp"
#include "nimcash/fast.hpp"
#include "nimcash/lab.hpp"
#include "nimcash/oracle.hpp"
#include "nimcash/service.hpp"

namespace nimcash {

namespace {

// Every supported family with L <= 8.
const std::vector<std::string> kDefaultSweep = {"1,2",   "1,4",   "1,6",   "1,8",
                                                "1,2,3", "1,4,5", "1,6,7", "1,8,9",
                                                "1,3,4", "1,5,6", "1,7,8"};

struct Position {
  std::string moves;
  Count n = -1;
  std::string d = "inf";
  std::string e = "inf";
};

void add_position(CLI::App* cmd, Position& p, bool with_cash) {
  cmd->add_option("-A,--moves", p.moves, "move set, e.g. 1,3,4")->required();
  cmd->add_option("-n,--stones", p.n, "pile size")->required()->check(CLI::NonNegativeNumber);
  if (with_cash) {
    cmd->add_option("-d,--cash1", p.d, "Player 1 cash (integer or inf)")->capture_default_str();
    cmd->add_option("-e,--cash2", p.e, "Player 2 cash (integer or inf)")->capture_default_str();
  }
}

// Writes to --out when given, else to `out`.
void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw Error(ErrorCode::BadRequest, "cannot write " + path);
  file << text;
}

std::string band_line(const char* who, const Cash& c, ClassBand b) {
  return std::string(who) + " cash " + to_string(c) + ": " + std::string(to_string(b)) + "\n";
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"NIM with cash: solver, class thresholds and theorem checks", "nimcash"};
  app.require_subcommand(1);

  Position pos;
  bool use_oracle = false;
  bool strict_text = false;
  std::string format = "csv";
  std::string out_path;

  auto* solve = app.add_subcommand("solve", "winner of NIM(A;n;d,e) with Player 1 to move");
  add_position(solve, pos, true);
  solve->add_flag("--oracle", use_oracle, "use exhaustive search instead of the closed forms");
  solve->add_flag("--strict-text", strict_text, "literal reading of the {1,L} staircase cases");

  auto* classic = app.add_subcommand("classic", "winner of NIM(A;n) without cash");
  add_position(classic, pos, false);

  auto* classes = app.add_subcommand("classes", "U and M thresholds and class bands");
  add_position(classes, pos, true);

  Range d_range, e_range;
  auto* staircase = app.add_subcommand("staircase", "winner grid over (d,e)");
  add_position(staircase, pos, false);
  staircase->add_option("--dlo", d_range.lo)->required()->check(CLI::NonNegativeNumber);
  staircase->add_option("--dhi", d_range.hi)->required()->check(CLI::NonNegativeNumber);
  staircase->add_option("--elo", e_range.lo)->required()->check(CLI::NonNegativeNumber);
  staircase->add_option("--ehi", e_range.hi)->required()->check(CLI::NonNegativeNumber);
  staircase->add_flag("--oracle", use_oracle, "fill the grid by exhaustive search");
  staircase->add_flag("--strict-text", strict_text);
  staircase->add_option("--format", format)->check(CLI::IsMember({"csv", "json", "svg"}))
      ->capture_default_str();
  staircase->add_option("--out", out_path, "output file (default stdout)");

  std::vector<std::string> sweep_moves;
  Count n_max = 60;
  Count cash_max = -1;
  auto* sweep_cmd = app.add_subcommand("sweep", "compare closed forms against the oracle");
  sweep_cmd->add_option("-A,--moves", sweep_moves, "move sets (repeatable; default all L <= 8)");
  sweep_cmd->add_option("--n-max", n_max)->capture_default_str()->check(CLI::NonNegativeNumber);
  sweep_cmd->add_option("--cash-max", cash_max, "largest finite cash (default n + 2 at each n)");
  sweep_cmd->add_flag("--strict-text", strict_text);
  sweep_cmd->add_option("--out", out_path, "write the discrepancy CSV here (default stdout)");

  ServeOptions serve_opts;
  auto* serve_cmd = app.add_subcommand("serve", "run the HTTP game service");
  serve_cmd->add_option("--host", serve_opts.host)->capture_default_str();
  auto* port_opt = serve_cmd->add_option("--port", serve_opts.port, "default $NIMCASH_PORT or 8080");
  serve_cmd->add_option("--state-file", serve_opts.state_file, "JSON session snapshot");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  const FastOptions options{strict_text};
  try {
    if (*solve) {
      const RuleSet rules = parse_rules(pos.moves);
      const Cash d = parse_cash(pos.d);
      const Cash e = parse_cash(pos.e);
      const WinnerVerdict v =
          use_oracle ? solve_cash(rules, pos.n, d, e) : winner_fast(rules, pos.n, d, e, options);
      out << to_string(v.winner) << " (" << describe(v.detail) << ")\n";
    } else if (*classic) {
      out << to_string(solve_classic(parse_rules(pos.moves), pos.n).winner) << "\n";
    } else if (*classes) {
      const RuleSet rules = parse_rules(pos.moves);
      const Cash d = parse_cash(pos.d);
      const Cash e = parse_cash(pos.e);
      const ClassProfile p = classify(rules, pos.n, d, e);
      out << "U1 " << p.u.u1 << "\nU2 " << p.u.u2 << "\nM1 " << p.m.m1 << "\nM2 " << p.m.m2
          << "\n"
          << band_line("P1", d, p.band1) << band_line("P2", e, p.band2)
          << "classic winner " << to_string(p.classic_winner) << "\n";
    } else if (*staircase) {
      if (d_range.hi < d_range.lo || e_range.hi < e_range.lo) {
        err << "empty range\n";
        return 2;
      }
      const StaircaseGrid grid =
          build_grid(parse_rules(pos.moves), pos.n, d_range, e_range,
                     use_oracle ? GridSource::Oracle : GridSource::Fast, options);
      emit(out_path, render_grid(grid, parse_format(format)), out);
    } else if (*sweep_cmd) {
      std::vector<RuleSet> sets;
      for (const auto& m : sweep_moves.empty() ? kDefaultSweep : sweep_moves)
        sets.push_back(parse_rules(m));
      const CashBound cmax = cash_max < 0 ? CashBound::n_plus(2) : CashBound(cash_max);
      const auto reports = sweep_all(sets, n_max, cmax, options);
      std::string csv;
      bool clean = true;
      for (const auto& r : reports) {
        out << to_string(*r.rules) << ": ";
        if (r.skipped) {
          out << "skipped (no closed forms)\n";
          continue;
        }
        out << r.total_checked() << " points, " << r.entries.size() << " discrepancies\n";
        clean = clean && r.empty();
        const std::string part = render_report_csv(r);
        csv += csv.empty() ? part : part.substr(part.find('\n') + 1);
      }
      if (!clean || !out_path.empty()) emit(out_path, csv, out);
      return clean ? 0 : 1;
    } else if (*serve_cmd) {
      if (port_opt->count() == 0) {
        if (const char* env = std::getenv("NIMCASH_PORT")) {
          try {
            serve_opts.port = std::stoi(env);
          } catch (const std::exception&) {
            err << "NIMCASH_PORT is not a number\n";
            return 2;
          }
        }
      }
      return serve(serve_opts);
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    const bool usage = e.code() == ErrorCode::BadRequest || e.code() == ErrorCode::InvalidRules;
    return usage ? 2 : 1;
  }
  return 0;
}

}  // namespace nimcash
