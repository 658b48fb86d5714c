#include "addcomp/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "addcomp/complement.hpp"
#include "addcomp/greedy_builder.hpp"
#include "addcomp/report.hpp"
#include "addcomp/residue_cover.hpp"
#include "addcomp/serialization.hpp"
#include "addcomp/verifier.hpp"

namespace addcomp {

namespace fs = std::filesystem;

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailed = 1;
constexpr int kUsageError = 2;

fs::path artifact_dir() {
  const char* dir = std::getenv("ADDCOMP_SEED_DIR");
  return (dir && *dir) ? fs::path(dir) : fs::path(".");
}

fs::path or_default(const std::string& given, const char* name) {
  return given.empty() ? artifact_dir() / name : fs::path(given);
}

struct Caps {
  std::uint64_t exact = std::uint64_t{1} << 14;
  std::uint64_t sieve = 100'000'000;
  std::uint64_t enumeration = 10'000'000;
};

struct Options {
  Caps caps;

  // construct
  std::size_t levels = 2;
  std::size_t terms = 0;
  std::string growth = "linear";
  int exponent = 4;
  std::size_t max_terms = 64;

  // complement
  std::size_t blocks = 0;
  std::string strategy = "auto";
  std::size_t extras_cap = 0;

  // cover
  std::string modulus;
  std::vector<std::string> elements;
  std::string mode = "exact";
  std::uint64_t step = 0;

  // verify-coverage, criterion, report
  std::vector<std::string> at;
  std::vector<std::size_t> at_level;

  // lemma
  int lemma_max = 6;
  std::uint64_t random_pairs = 0;
  int random_max = 50;
  std::uint64_t seed = 20240601;

  std::string seq_path;
  std::string comp_path;
  std::string out_path;
  std::string format;
};

struct Loaded {
  Sequence seq;
  ComplementBlocks blocks;
};

Loaded load_artifacts(const Options& o) {
  Sequence seq = sequence_from_json(read_text_file(or_default(o.seq_path, "seq.json")));
  ComplementBlocks blocks = blocks_from_json(read_text_file(or_default(o.comp_path, "comp.json")));
  check_blocks_match(seq, blocks);
  return {std::move(seq), std::move(blocks)};
}

std::vector<BigInt> requested_points(const Options& o, const Loaded& in) {
  std::vector<BigInt> points;
  for (const auto& s : o.at) points.push_back(parse_bigint(s));
  if (!o.at_level.empty()) {
    const LevelLadder ladder = level_ladder(in.seq);
    for (std::size_t k : o.at_level) {
      if (k < 1 || k > ladder.levels.size() || !ladder.levels[k - 1].x) {
        throw Error(ErrorKind::span, "x_" + std::to_string(k) + " is not available in the stored prefix");
      }
      points.push_back(*ladder.levels[k - 1].x);
    }
  }
  if (points.empty()) points = default_sweep_points(in.seq, in.blocks);
  return points;
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out_path.empty()) {
    out << text;
  } else {
    write_text_file(o.out_path, text);
  }
}

int cmd_construct(const Options& o, std::ostream& out) {
  const GrowthRule rule = parse_growth_rule(o.growth);
  BuildLimits limits{o.max_terms};
  BuildResult built = o.terms > 0 ? build_terms(o.terms, rule, limits, o.exponent)
                                  : build_sequence(o.levels, rule, limits, o.exponent);
  const fs::path path = or_default(o.out_path, "seq.json");
  write_text_file(path, sequence_to_json(built.seq));
  out << "wrote " << path.string() << " (" << built.seq.size() << " terms)\n";
  for (const auto& level : built.ladder.levels) {
    out << "level " << level.k << ": n = " << level.n;
    if (level.x) out << ", x = " << *level.x;
    out << '\n';
  }
  return kOk;
}

int cmd_complement(const Options& o, std::ostream& out, std::ostream& err) {
  Sequence seq = sequence_from_json(read_text_file(or_default(o.seq_path, "seq.json")));
  std::size_t count = o.blocks;
  if (count == 0) count = seq.size() >= 3 ? seq.size() - 2 : 1;
  BlockOptions options;
  options.exact.modulus_cap = o.caps.exact;
  if (o.strategy == "greedy") {
    options.strategy = CoverStrategy::greedy;
  } else if (o.strategy != "auto") {
    throw Error(ErrorKind::parse, "unknown cover strategy '" + o.strategy + "'");
  }
  if (o.extras_cap > 0) options.extras_cap = o.extras_cap;
  ComplementBuild built = build_blocks(seq, count, options);
  const fs::path path = or_default(o.out_path, "comp.json");
  write_text_file(path, blocks_to_json(built.blocks));
  out << "wrote " << path.string() << " (" << built.blocks.size() << " blocks)\n";
  for (const auto& d : built.diagnostics) {
    const Block& b = built.blocks.block(d.k);
    out << "block " << d.k << ": a_k = " << b.a << ", |U_k| = " << b.translates.size()
        << ", cover = " << cover_kind_name(d.kind) << ", A(a_k)|U_k|/a_k = " << to_string(d.ratio) << '\n';
    if (!d.fallback_reason.empty()) {
      err << "warning: block " << d.k << " used the greedy cover: " << d.fallback_reason << '\n';
    }
  }
  return kOk;
}

int cmd_cover(const Options& o, std::ostream& out) {
  const BigInt m = parse_bigint(o.modulus);
  std::vector<BigInt> elements;
  for (const auto& e : o.elements) elements.push_back(parse_bigint(e));
  CoverInstance inst = CoverInstance::from_elements(m, elements);
  CoverSolution sol;
  if (o.mode == "exact") {
    sol = cover_exact(inst, ExactSearchLimits{o.caps.exact});
  } else if (o.mode == "greedy") {
    sol = cover_greedy(inst);
  } else if (o.mode == "structured") {
    if (o.step == 0) throw Error(ErrorKind::parse, "structured mode needs --n");
    std::optional<std::size_t> extras;
    if (o.extras_cap > 0) extras = o.extras_cap;
    sol = cover_structured(o.step, inst, extras);
  } else {
    throw Error(ErrorKind::parse, "unknown cover mode '" + o.mode + "'");
  }
  if (!cover_validate(inst, sol.translates).complete) {
    out << cover_to_json(sol) << '\n';
    return kVerificationFailed;
  }
  out << cover_to_json(sol) << '\n';
  return kOk;
}

int cmd_verify_coverage(const Options& o, std::ostream& out) {
  Loaded in = load_artifacts(o);
  BigInt limit;
  if (!o.at.empty()) {
    limit = parse_bigint(o.at.front());
  } else {
    limit = std::min({truncation_bound(in.seq, in.blocks), in.seq.back(), BigInt(o.caps.sieve)});
  }
  CoverageReport report = sumset_coverage(in.seq, in.blocks, limit, o.caps.sieve);

  // Re-add a witness for a spread of covered integers.
  std::size_t failures = 0;
  std::size_t checked = 0;
  const BigInt span = limit - report.threshold + 1;
  const BigInt stride = span > 1000 ? span / 1000 : BigInt(1);
  for (BigInt n = report.threshold; n <= limit; n += stride) {
    auto w = coverage_witness(in.seq, in.blocks, n);
    ++checked;
    if (!w || w->first + w->second != n) ++failures;
  }

  // Pair statistics must sum to A(X)B(X) both ways; only when enumerable.
  std::string pair_check = "skipped (enumeration cap)";
  const BigInt b_total = in.blocks.count(std::min(limit, in.blocks.extent()));
  const BigInt a_total = count(in.seq, std::min(limit, in.seq.back()));
  if (a_total * b_total <= o.caps.enumeration) {
    auto members = in.blocks.members(1, limit, o.caps.enumeration);
    PairStats st = pair_stats(in.seq.terms(), members, limit, o.caps.enumeration);
    std::uint64_t sigma = 0, delta = 0;
    for (const auto& [n, c] : st.sigma) sigma += c;
    for (const auto& [n, c] : st.delta) delta += c;
    const bool ok = sigma == st.a_count * st.b_count && delta == st.a_count * st.b_count;
    pair_check = ok ? "ok" : "mismatch";
    if (!ok) ++failures;
  }

  nlohmann::ordered_json j;
  j["X"] = to_decimal(report.limit);
  j["N0"] = to_decimal(report.threshold);
  nlohmann::ordered_json gaps = nlohmann::ordered_json::array();
  for (const auto& g : report.gaps) gaps.push_back(to_decimal(g));
  j["gaps"] = std::move(gaps);
  j["witnesses_checked"] = checked;
  j["witness_failures"] = failures;
  j["pair_sums"] = pair_check;
  emit(o, out, j.dump() + "\n");
  return failures == 0 ? kOk : kVerificationFailed;
}

int cmd_criterion(const Options& o, std::ostream& out, std::ostream& err) {
  Loaded in = load_artifacts(o);
  auto reports = criterion_sweep(in.seq, in.blocks, requested_points(o, in));
  // Recount B(x) by enumeration wherever the window is small enough.
  bool consistent = true;
  for (const auto& r : reports) {
    if (r.x > o.caps.enumeration) continue;
    if (BigInt(in.blocks.members(1, r.x, o.caps.enumeration).size()) != r.b_count) {
      err << "error: B(" << r.x << ") disagrees with enumeration\n";
      consistent = false;
    }
  }
  const std::string format = o.format.empty() ? "csv" : o.format;
  if (format == "csv") {
    emit(o, out, criterion_csv(reports));
  } else if (format == "json") {
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
      nlohmann::ordered_json item;
      item["x"] = to_decimal(r.x);
      item["A"] = to_decimal(r.a_count);
      item["B"] = to_decimal(r.b_count);
      item["a_star"] = to_decimal(r.a_star);
      item["T"] = to_string(r.excess);
      item["scale"] = to_string(r.scale);
      item["R"] = r.normalized ? to_string(*r.normalized) : std::string();
      item["exactness"] = to_string(r.exactness);
      list.push_back(std::move(item));
    }
    emit(o, out, list.dump() + "\n");
  } else {
    throw Error(ErrorKind::parse, "criterion supports --format csv or json");
  }
  for (const auto& step : ladder_trend(in.seq, reports)) {
    if (step.decreasing) {
      err << "trend: R(x_" << step.level + 1 << ") = " << to_string(step.to_r) << " < R(x_" << step.level
          << ") = " << to_string(step.from_r) << '\n';
    } else {
      err << "warning: R(x_" << step.level + 1 << ") = " << to_string(step.to_r) << " is not below R(x_"
          << step.level << ") = " << to_string(step.from_r)
          << "; consider a faster growth rule (--growth quadratic or exponential) and check the block"
             " cover ratios reported by 'complement'\n";
    }
  }
  return consistent ? kOk : kVerificationFailed;
}

int cmd_lemma(const Options& o, std::ostream& out) {
  LemmaTally all = lemma_exhaustive(o.lemma_max);
  out << all.held << '/' << all.checked << " hold\n";
  bool ok = all.held == all.checked;
  if (o.random_pairs > 0) {
    LemmaTally rnd = lemma_random(o.random_pairs, o.random_max, o.seed);
    out << rnd.held << '/' << rnd.checked << " hold (random, max " << o.random_max << ")\n";
    ok = ok && rnd.held == rnd.checked;
  }
  return ok ? kOk : kVerificationFailed;
}

int cmd_report(const Options& o, std::ostream& out) {
  if (!o.format.empty() && o.format != "svg") throw Error(ErrorKind::parse, "report supports --format svg");
  Loaded in = load_artifacts(o);
  auto reports = criterion_sweep(in.seq, in.blocks, requested_points(o, in));
  const fs::path path = or_default(o.out_path, "report.svg");
  write_text_file(path, criterion_svg(reports));
  out << "wrote " << path.string() << " (" << reports.size() << " points)\n";
  return kOk;
}

void report_error(std::ostream& err, std::string_view category, const std::string& message) {
  nlohmann::ordered_json j;
  j["error"] = std::string(category);
  j["message"] = message;
  err << j.dump() << '\n';
}

}  // namespace

int run_cli(int argc, char** argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact additive complements of thin sequences: construction and verification"};
  app.require_subcommand(1);
  Options o;

  auto add_caps = [&](CLI::App* sub) {
    sub->add_option("--exact-cap", o.caps.exact, "Largest modulus for the exact cover search");
    sub->add_option("--sieve-cap", o.caps.sieve, "Largest X for the coverage sieve");
    sub->add_option("--enum-cap", o.caps.enumeration, "Largest enumeration window");
  };
  auto add_inputs = [&](CLI::App* sub) {
    sub->add_option("--seq", o.seq_path, "Sequence file (default $ADDCOMP_SEED_DIR/seq.json)");
    sub->add_option("--comp", o.comp_path, "Block file (default $ADDCOMP_SEED_DIR/comp.json)");
  };

  auto* construct = app.add_subcommand("construct", "Build the greedy sequence and write seq.json");
  construct->add_option("--levels", o.levels, "Complete levels to build")->check(CLI::PositiveNumber);
  construct->add_option("--terms", o.terms, "Build exactly this many terms instead");
  construct->add_option("--growth", o.growth, "Growth factor rule: linear, quadratic, exponential");
  construct->add_option("--exponent", o.exponent, "Polynomial growth exponent");
  construct->add_option("--max-terms", o.max_terms, "Term cap");
  construct->add_option("--out", o.out_path, "Output path");

  auto* complement = app.add_subcommand("complement", "Build complement blocks and write comp.json");
  complement->add_option("--seq", o.seq_path, "Sequence file (default $ADDCOMP_SEED_DIR/seq.json)");
  complement->add_option("--blocks", o.blocks, "Number of blocks K (default: N - 2)");
  complement->add_option("--strategy", o.strategy, "auto or greedy");
  complement->add_option("--extras-cap", o.extras_cap, "Repair translates allowed in structured covers");
  complement->add_option("--out", o.out_path, "Output path");
  add_caps(complement);

  auto* cover = app.add_subcommand("cover", "Compute a residue cover for a single modulus");
  cover->add_option("--m", o.modulus, "Modulus")->required();
  cover->add_option("--elements", o.elements, "Comma separated elements")->delimiter(',')->required();
  cover->add_option("--mode", o.mode, "exact, greedy or structured");
  cover->add_option("--n", o.step, "Progression step for the structured mode");
  cover->add_option("--extras-cap", o.extras_cap, "Repair translates allowed in structured mode");
  add_caps(cover);

  auto* coverage = app.add_subcommand("verify-coverage", "Sieve A + B over [1, X]");
  add_inputs(coverage);
  coverage->add_option("--at", o.at, "X (default: the truncation bound)");
  coverage->add_option("--out", o.out_path, "Output path (default stdout)");
  add_caps(coverage);

  auto* crit = app.add_subcommand("criterion", "Exact criterion reports as CSV or JSON");
  add_inputs(crit);
  crit->add_option("--at", o.at, "Evaluation point (repeatable)");
  crit->add_option("--at-level", o.at_level, "Evaluate at the ladder point x_k (repeatable)");
  crit->add_option("--format", o.format, "csv or json");
  crit->add_option("--out", o.out_path, "Output path (default stdout)");
  add_caps(crit);

  auto* lemma = app.add_subcommand("lemma", "Exhaustive and random checks of the sum/difference inequality");
  lemma->add_option("--max", o.lemma_max, "Exhaustive over subsets of {1..max}");
  lemma->add_option("--random", o.random_pairs, "Additional random pairs");
  lemma->add_option("--random-max", o.random_max, "Largest element in random pairs");
  lemma->add_option("--seed", o.seed, "Random seed");

  auto* report = app.add_subcommand("report", "SVG plot of R(x) and A(x)B(x)/x");
  add_inputs(report);
  report->add_option("--at", o.at, "Evaluation point (repeatable)");
  report->add_option("--at-level", o.at_level, "Evaluate at the ladder point x_k (repeatable)");
  report->add_option("--format", o.format, "svg");
  report->add_option("--out", o.out_path, "Output path (default $ADDCOMP_SEED_DIR/report.svg)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    report_error(err, "parse", e.what());
    return kUsageError;
  }

  const std::vector<std::pair<CLI::App*, std::function<int()>>> handlers = {
      {construct, [&] { return cmd_construct(o, out); }},
      {complement, [&] { return cmd_complement(o, out, err); }},
      {cover, [&] { return cmd_cover(o, out); }},
      {coverage, [&] { return cmd_verify_coverage(o, out); }},
      {crit, [&] { return cmd_criterion(o, out, err); }},
      {lemma, [&] { return cmd_lemma(o, out); }},
      {report, [&] { return cmd_report(o, out); }},
  };
  try {
    for (const auto& [sub, handler] : handlers) {
      if (sub->parsed()) return handler();
    }
  } catch (const Error& e) {
    report_error(err, error_kind_name(e.kind()), e.what());
    return kUsageError;
  } catch (const std::exception& e) {
    report_error(err, "precondition", e.what());
    return kUsageError;
  }
  return kUsageError;
}

}  // namespace addcomp
