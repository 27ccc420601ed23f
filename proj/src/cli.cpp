#include "ldsets/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "ldsets/error.hpp"
#include "ldsets/generators.hpp"
#include "ldsets/io.hpp"
#include "ldsets/nonroundable.hpp"
#include "ldsets/roundable.hpp"
#include "ldsets/structure.hpp"
#include "ldsets/supervising.hpp"

namespace ldsets {

namespace {

const char* yes_no(bool value) { return value ? "yes" : "no"; }

std::string pair_list(const std::vector<Arc>& pairs) {
  if (pairs.empty()) return "none";
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs.size(); ++i) out << (i ? ", " : "") << pairs[i].first << '-' << pairs[i].second;
  return out.str();
}

std::string block_list(const std::vector<VertexList>& blocks) {
  std::ostringstream out;
  for (std::size_t i = 0; i < blocks.size(); ++i) out << (i ? " " : "") << '{' << join_vertices(blocks[i]) << '}';
  return out.str();
}

SetKind parse_kind(const std::string& kind) {
  if (kind == "ld") return SetKind::LocatingDominating;
  if (kind == "locating") return SetKind::Locating;
  if (kind == "dominating") return SetKind::Dominating;
  throw InputError("unknown kind '" + kind + "'");
}

struct ParamRange {
  std::size_t first = 0;
  std::size_t last = 0;
};

ParamRange parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const auto v = std::stoull(text);
      return {v, v};
    }
    ParamRange range{std::stoull(text.substr(0, dots)), std::stoull(text.substr(dots + 2))};
    if (range.first > range.last) throw InputError("empty parameter range '" + text + "'");
    return range;
  } catch (const std::logic_error&) {
    throw InputError("malformed parameter range '" + text + "'");
  }
}

struct FamilyParams {
  std::size_t k = 1;
  std::size_t n = 8;
  double p = 0.3;
  std::uint64_t seed = 1;
  std::string filter = "none";
};

Digraph generate(const std::string& family, const FamilyParams& params) {
  if (family == "fig1") return gen_fig1(params.k);
  if (family == "fig4") return gen_fig4(params.k);
  if (family == "fig4-reverse") return reverse(gen_fig4(params.k));
  if (family == "random-tournament") return gen_random_tournament(params.n, params.seed);
  if (family == "random-local-tournament") return gen_random_local_tournament(params.n, params.seed).graph;
  if (family == "random-in-semicomplete") return gen_random_in_semicomplete(params.n, params.seed);
  if (family == "random-digraph") {
    return gen_random_digraph(params.n, params.p, params.seed, DigraphFilter::parse(params.filter));
  }
  throw InputError("unknown family '" + family + "'");
}

bool family_uses_k(const std::string& family) { return family.rfind("fig", 0) == 0; }

void print_check(const Digraph& d, std::ostream& out) {
  const auto c = classify(d);
  const auto conn = connectivity(d);
  const auto twins = twin_report(d);
  std::string kind = c.tournament ? "tournament" : c.local_tournament ? "local tournament" : "not a local tournament";
  std::string reach = conn.strong ? "strong" : conn.connected ? "connected" : "not connected";
  std::string twin = twins.quasi_twin_free() ? "quasi-twin-free" : twins.twin_free() ? "twin-free, has quasi-twins" : "has twins";
  out << "order: " << d.order() << '\n';
  out << "arcs: " << d.arc_count() << '\n';
  out << "summary: " << kind << ", " << reach << ", " << twin << '\n';
  out << "simple: " << yes_no(c.simple) << '\n';
  out << "tournament: " << yes_no(c.tournament) << '\n';
  out << "local tournament: " << yes_no(c.local_tournament) << '\n';
  out << "locally in-semicomplete: " << yes_no(c.locally_in_semicomplete) << '\n';
  out << "locally out-semicomplete: " << yes_no(c.locally_out_semicomplete) << '\n';
  out << "connected: " << yes_no(conn.connected) << '\n';
  out << "strong: " << yes_no(conn.strong) << '\n';
  out << "open twins: " << pair_list(twins.open_twins) << '\n';
  out << "closed twins: " << pair_list(twins.closed_twins) << '\n';
  out << "quasi-twins: " << pair_list(twins.quasi_twins) << '\n';
  if (!c.local_tournament) {
    out << "roundable: not applicable (not a local tournament)\n";
  } else if (!conn.connected) {
    out << "roundable: not applicable (not connected)\n";
  } else if (c.tournament) {
    out << "roundable: not applicable (tournament)\n";
  } else if (const auto dec = round_decomposition(d)) {
    out << "roundable: yes (" << (dec->canonical ? "canonical" : "strong") << ", " << dec->size() << " blocks)\n";
    out << "blocks: " << block_list(dec->blocks) << '\n';
  } else {
    out << "roundable: no\n";
  }
  const auto s = find_supervising_vertex(d);
  out << "supervising vertex: " << (s ? std::to_string(*s) : std::string("none")) << '\n';
}

int cmd_check(const std::string& path, std::ostream& out) {
  print_check(read_instance_file(path), out);
  return kExitOk;
}

struct SolveFlags {
  std::string path;
  std::string algorithm = "auto";
  bool verify = true;
  std::size_t exact_cutoff = kDefaultCutoff;
  std::string format = "text";
  bool timing = false;
};

int cmd_solve(const SolveFlags& flags, std::ostream& out, std::ostream& err) {
  const auto d = read_instance_file(flags.path);
  const auto start = std::chrono::steady_clock::now();
  auto set = solve_by_name(d, flags.algorithm, SolveOptions{flags.exact_cutoff});
  const auto elapsed = std::chrono::steady_clock::now() - start;
  bool ok = true;
  if (flags.verify) ok = verify(d, set);
  if (flags.format == "dot") {
    out << render_dot(d, set.vertices);
  } else {
    out << "algorithm: " << set.trace_tag << '\n';
    out << "set: " << join_vertices(set.vertices) << '\n';
    out << "size: " << set.size() << '\n';
    out << "bound: " << set.claimed_bound << '\n';
    out << "verified: " << (flags.verify ? (ok ? "true" : "false") : "skipped") << '\n';
    if (flags.timing) {
      out << "time_ms: " << std::chrono::duration<double, std::milli>(elapsed).count() << '\n';
    }
  }
  if (!ok) {
    err << "error: certificate failed verification\n";
    return kExitDomain;
  }
  return kExitOk;
}

int cmd_exact(const std::string& path, const std::string& kind, std::size_t cutoff, std::ostream& out) {
  const auto d = read_instance_file(path);
  const auto set = exact_min_set(d, parse_kind(kind), cutoff);
  out << "kind: " << to_string(set.kind) << '\n';
  out << "set: " << join_vertices(set.vertices) << '\n';
  out << "value: " << set.size() << '\n';
  return kExitOk;
}

struct ExperimentFlags {
  std::string family;
  std::string range = "1";
  std::size_t trials = 1;
  std::uint64_t seed = 1;
  std::string out = "-";
  double p = 0.3;
  std::string filter = "strong+quasi-twin-free";
  std::size_t exact_cutoff = 14;
  std::size_t solve_cutoff = kDefaultCutoff;
  std::string algorithm = "auto";
};

int cmd_experiment(const ExperimentFlags& flags, std::ostream& out, std::ostream& err) {
  const auto range = parse_range(flags.range);
  const bool fixed = family_uses_k(flags.family);
  std::ostringstream csv;
  csv << "family,params,seed,n,algorithm,size,bound,exact,verified,ratio\n";
  std::size_t rows = 0;
  std::size_t violations = 0;
  for (std::size_t param = range.first; param <= range.last; ++param) {
    const std::size_t trials = fixed ? 1 : flags.trials;
    for (std::size_t trial = 0; trial < trials; ++trial) {
      FamilyParams params;
      params.k = param;
      params.n = param;
      params.p = flags.p;
      params.filter = flags.filter;
      params.seed = flags.seed + trial;
      const auto d = generate(flags.family, params);
      auto set = solve_by_name(d, flags.algorithm, SolveOptions{flags.solve_cutoff});
      const bool ok = verify(d, set);
      std::string exact;
      bool below_exact = false;
      if (d.order() <= flags.exact_cutoff) {
        const auto best = exact_min_set(d, SetKind::LocatingDominating, flags.exact_cutoff).size();
        exact = std::to_string(best);
        below_exact = set.size() < best;
      }
      if (!ok || below_exact) ++violations;
      std::ostringstream label;
      if (fixed) {
        label << "k=" << param;
      } else if (flags.family == "random-digraph") {
        label << "n=" << param << ";p=" << flags.p << ";filter=" << flags.filter;
      } else {
        label << "n=" << param;
      }
      csv << flags.family << ',' << label.str() << ',' << (fixed ? 0 : params.seed) << ',' << d.order() << ','
          << set.trace_tag << ',' << set.size() << ',' << set.claimed_bound << ',' << exact << ','
          << (ok ? "true" : "false") << ',' << std::fixed << std::setprecision(4)
          << static_cast<double>(set.size()) / static_cast<double>(set.claimed_bound) << '\n';
      csv.unsetf(std::ios::fixed);
      ++rows;
    }
  }
  if (flags.out == "-") {
    out << csv.str();
  } else {
    std::ofstream file(flags.out, std::ios::binary);
    if (!file) throw InputError("cannot write '" + flags.out + "'");
    file << csv.str();
    out << "rows: " << rows << ", violations: " << violations << '\n';
  }
  if (violations > 0) {
    err << "error: " << violations << " rows failed verification or undercut the exact optimum\n";
    return kExitDomain;
  }
  return kExitOk;
}

}  // namespace

CertifiedSet solve_by_name(const Digraph& d, const std::string& algorithm, const SolveOptions& options) {
  if (d.order() == 0) throw InputError("input is empty");
  if (algorithm == "tournament") return tournament_ld_set(d, options.exact_cutoff);
  if (algorithm == "roundable") return solve_roundable(d, options).ld_set;
  if (algorithm == "nonroundable") return combine_cases(d, separator_decomposition(d), options);
  if (algorithm == "supervising") return solve_supervising(d);
  if (algorithm != "auto") throw InputError("unknown algorithm '" + algorithm + "'");
  const auto c = classify(d);
  if (c.local_tournament) {
    if (!is_connected(d)) throw InputError("input is not connected");
    return solve_local_tournament(d, options);
  }
  if (!find_supervising_vertex(d)) {
    throw DomainError("input is not a local tournament and has no supervising vertex");
  }
  return solve_supervising(d);
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Locating-dominating sets in digraphs", "ldtool"};
  app.require_subcommand(1);

  std::string check_path;
  auto* check = app.add_subcommand("check", "Report structural properties of an instance");
  check->add_option("path", check_path, "Instance file")->required();

  SolveFlags solve_flags;
  auto* solve = app.add_subcommand("solve", "Build a certified locating-dominating set");
  solve->add_option("path", solve_flags.path, "Instance file")->required();
  solve->add_option("--algorithm", solve_flags.algorithm, "auto|tournament|roundable|nonroundable|supervising")
      ->check(CLI::IsMember({"auto", "tournament", "roundable", "nonroundable", "supervising"}));
  solve->add_flag("--verify,!--no-verify", solve_flags.verify, "Re-check the certificate (default on)");
  solve->add_option("--exact-cutoff", solve_flags.exact_cutoff, "Order limit for exhaustive subroutines")
      ->check(CLI::Range(std::size_t{1}, kMaxCutoff));
  solve->add_option("--format", solve_flags.format, "text|dot")->check(CLI::IsMember({"text", "dot"}));
  solve->add_flag("--timing", solve_flags.timing, "Print wall time");

  std::string exact_path;
  std::string exact_kind = "ld";
  std::size_t exact_cutoff = kDefaultCutoff;
  auto* exact = app.add_subcommand("exact", "Minimum set by exhaustive search");
  exact->add_option("path", exact_path, "Instance file")->required();
  exact->add_option("--kind", exact_kind, "ld|locating|dominating")
      ->check(CLI::IsMember({"ld", "locating", "dominating"}));
  exact->add_option("--cutoff", exact_cutoff, "Largest order searched")->check(CLI::Range(std::size_t{1}, kMaxCutoff));

  std::string gen_family;
  FamilyParams gen_params;
  std::string gen_format = "text";
  auto* gen = app.add_subcommand("gen", "Print a generated instance");
  gen->add_option("family", gen_family,
                  "fig1|fig4|fig4-reverse|random-tournament|random-local-tournament|random-in-semicomplete|random-digraph")
      ->required();
  gen->add_option("--k", gen_params.k, "Triangle count for fig families");
  gen->add_option("--n", gen_params.n, "Order for random families");
  gen->add_option("--p", gen_params.p, "Arc probability")->check(CLI::Range(0.0, 1.0));
  gen->add_option("--seed", gen_params.seed, "Seed");
  gen->add_option("--filter", gen_params.filter, "none or +-joined connected|strong|twin-free|quasi-twin-free");
  gen->add_option("--format", gen_format, "text|dot")->check(CLI::IsMember({"text", "dot"}));

  ExperimentFlags exp_flags;
  auto* experiment = app.add_subcommand("experiment", "Generate, solve and certify a batch of instances as CSV");
  experiment->add_option("--family", exp_flags.family, "Family name as for gen")->required();
  experiment->add_option("--params-range", exp_flags.range, "k (fig families) or n, as a or a..b");
  experiment->add_option("--trials", exp_flags.trials, "Instances per parameter for random families");
  experiment->add_option("--seed", exp_flags.seed, "Seed of the first trial");
  experiment->add_option("--out", exp_flags.out, "CSV path, - for stdout");
  experiment->add_option("--p", exp_flags.p, "Arc probability for random-digraph")->check(CLI::Range(0.0, 1.0));
  experiment->add_option("--filter", exp_flags.filter, "Filter for random-digraph");
  experiment->add_option("--exact-cutoff", exp_flags.exact_cutoff, "Fill the exact column up to this order")
      ->check(CLI::Range(std::size_t{0}, kMaxCutoff));
  experiment->add_option("--solve-cutoff", exp_flags.solve_cutoff, "Order limit for exhaustive subroutines")
      ->check(CLI::Range(std::size_t{1}, kMaxCutoff));
  experiment->add_option("--algorithm", exp_flags.algorithm, "Solver, as for solve")
      ->check(CLI::IsMember({"auto", "tournament", "roundable", "nonroundable", "supervising"}));

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitMalformed;
  }

  try {
    if (*check) return cmd_check(check_path, out);
    if (*solve) return cmd_solve(solve_flags, out, err);
    if (*exact) return cmd_exact(exact_path, exact_kind, exact_cutoff, out);
    if (*gen) {
      const auto d = generate(gen_family, gen_params);
      out << (gen_format == "dot" ? render_dot(d) : render_instance(d));
      return kExitOk;
    }
    if (*experiment) return cmd_experiment(exp_flags, out, err);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMalformed;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitMalformed;
}

}  // namespace ldsets
