#include "pn2sc/cli.h"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <optional>
#include <sstream>

#include "pn2sc/bench.h"
#include "pn2sc/checks.h"
#include "pn2sc/cleanup.h"
#include "pn2sc/initialise.h"
#include "pn2sc/inverse.h"
#include "pn2sc/pipeline.h"
#include "pn2sc/reduce.h"
#include "pn2sc/text_format.h"

namespace pn2sc {

namespace {

// Signals an input or validation problem already reported on the error stream.
struct InputError {};

std::string read_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    err << path << ": error: cannot open for reading\n";
    throw InputError{};
  }
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text, std::ostream& err) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out || !(out << text) || !out.flush()) {
    err << path << ": error: cannot write\n";
    throw InputError{};
  }
}

template <class T>
T unwrap(ParseResult<T> result, const std::string& source, std::ostream& err) {
  for (const auto& d : result.diagnostics) err << format_diagnostic(d, source) << '\n';
  if (!result.ok()) throw InputError{};
  return std::move(*result.value);
}

PetriNet load_net(const std::string& path, std::ostream& err) {
  return unwrap(parse_petri_net(read_file(path, err)), path, err);
}

ScModel load_statechart(const std::string& path, std::ostream& err) {
  return unwrap(parse_statechart(read_file(path, err)), path, err);
}

void report_failure(const ModelReport& report, const std::string& source,
                    std::ostream& err) {
  for (const auto& v : report.violations) {
    err << source << ": error: " << v.invariant << ": " << v.message << '\n';
  }
}

std::string join_lines(const std::vector<std::string>& lines) {
  std::string out;
  for (const auto& l : lines) out += l + "\n";
  return out;
}

struct ReduceFlags {
  std::string trace;
  std::optional<std::uint64_t> seed;
  bool no_nac_opt = false;
  bool paranoid = false;

  void attach(CLI::App* cmd) {
    cmd->add_option("--trace", trace, "Write the rule application trace to PATH");
    cmd->add_option("--seed", seed, "Shuffle the match order with seed N");
    cmd->add_flag("--no-nac-opt", no_nac_opt,
                  "Evaluate each rule's result predicate before applying it");
    cmd->add_flag("--paranoid", paranoid,
                  "Check all model invariants after every rewrite step");
  }

  ReduceOptions options() const {
    ReduceOptions o;
    o.skip_succedent_check = !no_nac_opt;
    o.order_seed = seed;
    o.paranoid = paranoid;
    o.record_trace = !trace.empty();
    return o;
  }
};

void print_check(const std::string& name, const ModelReport& report,
                 std::ostream& out, bool& all_passed) {
  if (report.passed()) {
    out << "PASS " << name << '\n';
    return;
  }
  all_passed = false;
  out << "FAIL " << name << '\n';
  for (const auto& v : report.violations) {
    out << "  " << v.element << ": " << v.message << '\n';
  }
}

std::vector<std::size_t> parse_sizes(const std::string& csv, std::ostream& err) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      long long v = std::stoll(item, &used);
      if (used != item.size() || v < 1) throw std::invalid_argument(item);
      sizes.push_back(static_cast<std::size_t>(v));
    } catch (const std::exception&) {
      err << "error: --sizes expects positive integers, got '" << item << "'\n";
      throw InputError{};
    }
  }
  if (sizes.empty()) {
    err << "error: --sizes is empty\n";
    throw InputError{};
  }
  return sizes;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Petri net to statechart transformer", "pn2sc"};
  app.require_subcommand(1);

  std::string in, out_path, sc_in, net_out, csv;
  ReduceFlags reduce_flags;

  auto* convert_cmd = app.add_subcommand("convert", "Net (.pn) to statechart (.sc): initialise, reduce, cleanup");
  convert_cmd->add_option("--in", in, "Input net")->required();
  convert_cmd->add_option("--out", out_path, "Output statechart")->required();
  convert_cmd->add_option("--net-out", net_out, "Also write the reduced net");
  reduce_flags.attach(convert_cmd);

  auto* init_cmd = app.add_subcommand("init-only", "Net (.pn) to flat statechart (.sc)");
  init_cmd->add_option("--in", in, "Input net")->required();
  init_cmd->add_option("--out", out_path, "Output statechart")->required();

  auto* reduce_cmd = app.add_subcommand(
      "reduce-only", "Reduce a net together with its initialised statechart; no cleanup");
  reduce_cmd->add_option("--in", in, "Input net")->required();
  reduce_cmd->add_option("--sc-in", sc_in, "Input statechart")->required();
  reduce_cmd->add_option("--out", out_path, "Output statechart")->required();
  reduce_cmd->add_option("--net-out", net_out, "Output reduced net");
  reduce_flags.attach(reduce_cmd);

  auto* invert_cmd = app.add_subcommand("invert", "Flat statechart (.sc) back to its net (.pn)");
  invert_cmd->add_option("--in", in, "Input statechart")->required();
  invert_cmd->add_option("--out", out_path, "Output net")->required();

  auto* check_cmd = app.add_subcommand("check", "Check the invariants of a .pn or .sc file");
  check_cmd->add_option("--in", in, "Input model")->required();

  std::size_t places = 0;
  double pprob = 0.3;
  std::uint64_t gen_seed = 0;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a series-parallel net");
  gen_cmd->add_option("--places", places, "Number of places")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--pprob", pprob, "Parallel composition probability")->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--seed", gen_seed, "Generator seed");
  gen_cmd->add_option("--out", out_path, "Output net")->required();

  std::string sizes_csv;
  std::size_t reps = 3;
  auto* bench_cmd = app.add_subcommand("bench", "Time the pipeline on generated nets");
  bench_cmd->add_option("--sizes", sizes_csv, "Comma-separated place counts")->required();
  bench_cmd->add_option("--reps", reps, "Timed repetitions per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--seed", gen_seed, "Generator seed");
  bench_cmd->add_option("--pprob", pprob, "Parallel composition probability")->check(CLI::Range(0.0, 1.0));
  bench_cmd->add_option("--csv", csv, "Also write size,phase,median_ms,final_places to PATH");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    const CLI::App* failed = &app;
    for (const CLI::App* sub : app.get_subcommands()) failed = sub;
    err << failed->help();
    return kExitInputError;
  }

  try {
    if (*convert_cmd || *reduce_cmd) {
      PetriNet pn = load_net(in, err);
      ReduceOptions opts = reduce_flags.options();
      ScModel sc;
      PetriNet reduced;
      RunStats stats;
      if (*convert_cmd) {
        ConversionOutcome outcome = convert(std::move(pn), opts);
        if (!outcome.result) {
          report_failure(outcome.preconditions, in, err);
          return kExitInputError;
        }
        for (const auto& w : outcome.result->cleanup.warnings) err << "cleanup: " << w << '\n';
        sc = std::move(outcome.result->statechart);
        reduced = std::move(outcome.result->net);
        stats = std::move(outcome.result->run);
      } else {
        sc = load_statechart(sc_in, err);
        if (sc.count(StateKind::kAnd) != 0) {
          err << sc_in << ": error: statechart already contains AND states\n";
          return kExitInputError;
        }
        ModelReport pre = check_inv(pn, sc);
        pre.merge(check_name_uniqueness(pn, sc));
        if (!pre.passed()) {
          report_failure(pre, sc_in, err);
          return kExitInputError;
        }
        stats = run_to_fixpoint(pn, sc, opts);
        reduced = std::move(pn);
      }
      write_file(out_path, serialize_statechart(sc), err);
      if (!net_out.empty()) write_file(net_out, serialize_petri_net(reduced), err);
      if (!reduce_flags.trace.empty()) write_file(reduce_flags.trace, join_lines(stats.trace), err);
      return kExitOk;
    }

    if (*init_cmd) {
      PetriNet pn = load_net(in, err);
      InitResult init = initialise(pn);
      if (!init.model) {
        report_failure(init.preconditions, in, err);
        return kExitInputError;
      }
      write_file(out_path, serialize_statechart(*init.model), err);
      return kExitOk;
    }

    if (*invert_cmd) {
      ScModel sc = load_statechart(in, err);
      PetriNet pn = unwrap(invert_initialisation(sc), in, err);
      write_file(out_path, serialize_petri_net(pn), err);
      return kExitOk;
    }

    if (*check_cmd) {
      bool all_passed = true;
      std::string text = read_file(in, err);
      bool is_sc = in.size() >= 3 && in.compare(in.size() - 3, 3, ".sc") == 0;
      if (is_sc) {
        ScModel sc = unwrap(parse_statechart(text), in, err);
        ModelReport uniqueness = check_name_uniqueness(PetriNet{}, sc);
        print_check("name-uniqueness", uniqueness, out, all_passed);
        print_check("statechart-structure", check_sc_structure(sc), out, all_passed);
      } else {
        PetriNet pn = unwrap(parse_petri_net(text), in, err);
        print_check("name-uniqueness", check_name_uniqueness(pn, ScModel{}), out, all_passed);
        print_check("net-links", check_net_links(pn), out, all_passed);
        print_check("init-preconditions", check_init_preconditions(pn, ScModel{}), out, all_passed);
        InitResult init = initialise(pn);
        if (init.model) {
          print_check("inv-after-initialise", check_inv(pn, *init.model), out, all_passed);
          print_check("target-uniqueness-after-initialise",
                      check_name_uniqueness(pn, *init.model), out, all_passed);
        }
      }
      out << (all_passed ? "all invariants passed" : "invariant violations found") << '\n';
      return all_passed ? kExitOk : kExitInputError;
    }

    if (*gen_cmd) {
      PetriNet pn = generate_sp({places, gen_seed, pprob});
      write_file(out_path, serialize_petri_net(pn), err);
      return kExitOk;
    }

    if (*bench_cmd) {
      BenchConfig config{parse_sizes(sizes_csv, err), gen_seed, reps, pprob};
      auto rows = run_bench(config);
      write_bench_table(rows, out);
      if (!csv.empty()) {
        std::ostringstream buf;
        write_bench_csv(rows, buf);
        write_file(csv, buf.str(), err);
      }
      bool reduced = std::all_of(rows.begin(), rows.end(), [](const BenchRow& r) {
        return r.final_places == 1 && r.final_transitions == 0 && r.has_statechart;
      });
      if (!reduced) {
        err << "error: a generated net did not reduce to a single place\n";
        return kExitInvariantFailure;
      }
      return kExitOk;
    }
  } catch (const InputError&) {
    return kExitInputError;
  } catch (const InvariantViolation& e) {
    err << "error: " << e.what();
    return kExitInvariantFailure;
  } catch (const InternalFault& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitInvariantFailure;
  }
  return kExitInputError;
}

}  // namespace pn2sc
