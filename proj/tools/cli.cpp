// Copyright 2026 The evalsense Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <pthread.h>

#include <csignal>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <memory>
#include <optional>
#include <thread>

#include <CLI11.hpp>
#include <fmt/format.h>
#include <fmt/ostream.h>
#include <json.hpp>

#include "evalsense/evalsense.hpp"
#include "evalsense/text.hpp"

namespace evalsense::cli {
namespace {

using Json = nlohmann::ordered_json;
namespace fs = std::filesystem;

struct PipelineOptions {
  std::vector<std::string> inputs;
  std::string lexicon_path;
  std::string stopwords_path;
  std::string topics_path;
  std::string thresholds;
  std::string remote_scorer;
  unsigned threads = 0;
};

struct Pipeline {
  Dataset dataset;
  std::vector<Phrase> phrases;
  Lexicon lexicon;
  EngineConfig config;
  std::unique_ptr<Scorer> scorer;
};

// Writes to a file, or to `fallback` when the path is "-" or empty.
class Output {
 public:
  Output(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary | std::ios::trunc);
      if (!file_) throw IoError(path + ": cannot open for writing");
      stream_ = &file_;
    }
  }
  std::ostream& stream() { return *stream_; }

 private:
  std::ofstream file_;
  std::ostream* stream_;
};

Thresholds ParseThresholds(const std::string& spec) {
  Thresholds t{};
  std::string_view rest = spec;
  for (std::size_t i = 0; i < t.size(); ++i) {
    const std::size_t comma = rest.find(',');
    const std::string field(text::Trim(rest.substr(0, comma)));
    char* end = nullptr;
    t[i] = std::strtod(field.c_str(), &end);
    if (field.empty() || end != field.c_str() + field.size() ||
        (i + 1 < t.size()) == (comma == std::string_view::npos)) {
      throw InvalidArgument(fmt::format(
          "--thresholds expects four comma-separated numbers, got '{}'", spec));
    }
    rest.remove_prefix(comma == std::string_view::npos ? rest.size()
                                                       : comma + 1);
  }
  return t;
}

void AddPipelineOptions(CLI::App* cmd, PipelineOptions& opts) {
  cmd->add_option("-i,--input", opts.inputs,
                  "Review CSV files or directories of *.csv")
      ->required();
  cmd->add_option("--lexicon", opts.lexicon_path,
                  "Valence lexicon TSV (default: built-in)");
  cmd->add_option("--thresholds", opts.thresholds,
                  "Fine-score cut points t1,t2,t3,t4 on the compound scale");
  cmd->add_option("--remote-scorer", opts.remote_scorer,
                  "Score with an HTTP model at this base URL instead of the "
                  "built-in engine");
}

void AddTopicOptions(CLI::App* cmd, PipelineOptions& opts) {
  cmd->add_option("--stopwords", opts.stopwords_path,
                  "Stop-word list (default: built-in)");
  cmd->add_option("--topics", opts.topics_path,
                  "Fixed-topic definitions (default: built-in)");
}

Pipeline LoadPipeline(const PipelineOptions& opts) {
  Pipeline p;
  std::vector<fs::path> inputs(opts.inputs.begin(), opts.inputs.end());
  p.dataset = LoadReviews(inputs);
  p.phrases = ParseDataset(p.dataset);
  p.lexicon = opts.lexicon_path.empty() ? Lexicon::Default()
                                        : Lexicon::Load(opts.lexicon_path);
  if (!opts.thresholds.empty()) {
    p.config.thresholds = ParseThresholds(opts.thresholds);
  }
  p.config.Validate();
  if (opts.remote_scorer.empty()) {
    p.scorer = std::make_unique<LexiconScorer>(p.lexicon, p.config);
  } else {
    p.scorer = std::make_unique<RemoteScorer>(opts.remote_scorer);
  }
  return p;
}

BundleOptions MakeBundleOptions(const PipelineOptions& opts, std::size_t k,
                                std::size_t m) {
  BundleOptions b;
  b.fixed_topics = opts.topics_path.empty() ? DefaultFixedTopics()
                                            : LoadFixedTopics(opts.topics_path);
  b.stopwords = opts.stopwords_path.empty() ? DefaultStopWords()
                                            : LoadStopWords(opts.stopwords_path);
  b.auto_topics = k;
  b.exemplars_per_score = m;
  b.threads = opts.threads;
  return b;
}

std::string Today() {
  if (const char* epoch = std::getenv("SOURCE_DATE_EPOCH")) {
    const std::time_t t = std::strtoll(epoch, nullptr, 10);
    std::tm tm{};
    gmtime_r(&t, &tm);
    return fmt::format("{:04}-{:02}-{:02}", tm.tm_year + 1900, tm.tm_mon + 1,
                       tm.tm_mday);
  }
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  localtime_r(&now, &tm);
  return fmt::format("{:04}-{:02}-{:02}", tm.tm_year + 1900, tm.tm_mon + 1,
                     tm.tm_mday);
}

Json PhraseJson(const Phrase& p) {
  return {{"phrase_id", p.phrase_id}, {"review_id", p.review_id},
          {"author_id", p.author_id}, {"ordinal", p.ordinal},
          {"raw", p.raw_text},        {"normalized", p.normalized_text}};
}

int CmdParse(const PipelineOptions& opts, const std::string& out_path,
             std::ostream& out) {
  std::vector<fs::path> inputs(opts.inputs.begin(), opts.inputs.end());
  const Dataset dataset = LoadReviews(inputs);
  Output sink(out_path, out);
  for (const Phrase& phrase : ParseDataset(dataset)) {
    sink.stream() << PhraseJson(phrase).dump() << '\n';
  }
  return kExitOk;
}

int CmdScore(const PipelineOptions& opts, const std::string& out_path,
             std::ostream& out) {
  const Pipeline p = LoadPipeline(opts);
  const auto scored =
      ScorePhrases(p.phrases, *p.scorer, p.lexicon, p.config, opts.threads);
  Output sink(out_path, out);
  for (const ScoredPhrase& s : scored) {
    Json j = PhraseJson(s.phrase);
    j["score"] = s.fine.value();
    j["compound"] = s.binary.compound;
    j["polarity"] = PolarityName(s.binary.label);
    j["agrees"] = s.agrees;
    sink.stream() << j.dump() << '\n';
  }
  return kExitOk;
}

struct ReportOptions {
  std::string format = "latex";
  std::string out;
  std::optional<std::uint64_t> seed;
  std::size_t auto_topics = kDefaultAutoTopics;
  std::size_t exemplars = kDefaultExemplarsPerScore;
  std::string date;
  std::string title;
};

std::shared_ptr<Snapshot> BuildSnapshot(const PipelineOptions& opts,
                                        const ReportOptions& ropts) {
  Pipeline p = LoadPipeline(opts);
  auto snapshot = std::make_shared<Snapshot>();
  snapshot->scored =
      ScorePhrases(p.phrases, *p.scorer, p.lexicon, p.config, opts.threads);
  if (snapshot->scored.empty()) {
    throw ValidationError("the input reviews produced no phrases to report on");
  }
  ReportMetadata meta;
  if (!ropts.title.empty()) meta.title = ropts.title;
  meta.date = ropts.date.empty() ? Today() : ropts.date;
  meta.scorer_id = p.scorer->Id();
  meta.seed = ropts.seed;
  snapshot->bundle =
      BuildBundle(p.dataset, snapshot->scored,
                  MakeBundleOptions(opts, ropts.auto_topics, ropts.exemplars),
                  std::move(meta));
  snapshot->dataset = std::move(p.dataset);
  return snapshot;
}

int CmdReport(const PipelineOptions& opts, const ReportOptions& ropts,
              std::ostream& out) {
  const Format format = ParseFormat(ropts.format);
  const auto snapshot = BuildSnapshot(opts, ropts);
  if (ropts.out.empty() || ropts.out == "-") {
    out << Render(snapshot->bundle, format);
  } else {
    RenderToFile(snapshot->bundle, format, ropts.out);
  }
  return kExitOk;
}

struct EvalOptions {
  std::string labeled;
  std::string subset = "all";
  std::uint64_t seed = 0;
  double consensus = 0.7;
  double grid_step = 0.05;
  std::string lexicon_path;
  std::string thresholds;
  std::string format = "text";
  unsigned threads = 0;
};

std::vector<LabeledPhrase> SelectSubset(std::vector<LabeledPhrase> items,
                                        const std::string& subset,
                                        std::uint64_t seed) {
  if (subset == "all") return items;
  auto split = SplitItems<LabeledPhrase>(items, seed);
  if (subset == "train") return split.train;
  if (subset == "validation") return split.validation;
  if (subset == "test") return split.test;
  throw InvalidArgument(fmt::format(
      "--subset must be all, train, validation or test, got '{}'", subset));
}

std::vector<LabeledText> ToLabeledText(std::span<const LabeledPhrase> items) {
  std::vector<LabeledText> out;
  out.reserve(items.size());
  for (const auto& item : items) {
    out.push_back({item.normalized_text, item.true_score});
  }
  return out;
}

void PrintConfusion(std::ostream& out, const ConfusionMatrix& cm,
                    const Metrics& m) {
  out << "confusion matrix (rows: actual, columns: predicted)\n";
  out << fmt::format("{:>8}", "");
  for (int p = 1; p <= kNumClasses; ++p) out << fmt::format("{:>14}", p);
  out << '\n';
  for (int a = 0; a < kNumClasses; ++a) {
    out << fmt::format("{:>8}", a + 1);
    for (int p = 0; p < kNumClasses; ++p) {
      out << fmt::format("{:>6} ({:>5.1f}%)", cm.counts[a][p],
                         m.row_percent[a][p]);
    }
    out << '\n';
  }
  out << fmt::format("{:<12}{:>8.2f}%\n", "accuracy", 100.0 * m.accuracy);
  out << fmt::format("{:<12}{:>8.2f}%\n", "within-1", 100.0 * m.within_one);
  out << fmt::format("{:<12}{:>8}\n", "phrases", cm.total);
}

int CmdEvaluate(const EvalOptions& opts, std::ostream& out) {
  const auto items =
      SelectSubset(LoadLabeled(opts.labeled), opts.subset, opts.seed);
  if (items.empty()) throw ValidationError(opts.labeled + ": no labeled rows");
  const Lexicon lexicon = opts.lexicon_path.empty()
                              ? Lexicon::Default()
                              : Lexicon::Load(opts.lexicon_path);
  EngineConfig config;
  if (!opts.thresholds.empty()) config.thresholds = ParseThresholds(opts.thresholds);
  config.Validate();

  std::vector<int> predictions;
  std::vector<int> truths;
  for (const LabeledPhrase& item : items) {
    predictions.push_back(
        MapToFine(CompoundScore(item.normalized_text, lexicon, config), config)
            .value());
    truths.push_back(item.true_score);
  }
  const ConfusionMatrix cm = Confusion(predictions, truths);
  const Metrics m = ComputeMetrics(cm);
  const double consensus = ConsensusFraction(items, opts.consensus);

  if (opts.format == "json") {
    Json j;
    j["subset"] = opts.subset;
    j["phrases"] = cm.total;
    j["counts"] = cm.counts;
    j["row_percent"] = m.row_percent;
    j["row_within_one"] = m.row_within_one;
    j["accuracy"] = m.accuracy;
    j["within_one"] = m.within_one;
    j["consensus_threshold"] = opts.consensus;
    j["consensus_fraction"] = consensus;
    out << j.dump(2) << '\n';
  } else if (opts.format == "text") {
    PrintConfusion(out, cm, m);
    out << fmt::format("{:<12}{:>8.2f}% (labeler agreement >= {:g})\n",
                       "consensus", 100.0 * consensus, opts.consensus);
  } else {
    throw InvalidArgument("--format must be text or json");
  }
  return kExitOk;
}

int CmdCalibrate(const EvalOptions& opts, std::ostream& out) {
  const auto items = LoadLabeled(opts.labeled);
  const auto split = SplitItems<LabeledPhrase>(items, opts.seed);
  const Lexicon lexicon = opts.lexicon_path.empty()
                              ? Lexicon::Default()
                              : Lexicon::Load(opts.lexicon_path);
  EngineConfig config;
  if (!opts.thresholds.empty()) config.thresholds = ParseThresholds(opts.thresholds);

  const auto train = ToLabeledText(split.train);
  const auto validation = ToLabeledText(split.validation);
  const EngineConfig tuned =
      CalibrateThresholds(train, lexicon, config, opts.grid_step, opts.threads);
  const auto before_train = MeasureAccuracy(train, lexicon, config);
  const auto after_train = MeasureAccuracy(train, lexicon, tuned);
  const auto before_val = MeasureAccuracy(validation, lexicon, config);
  const auto after_val = MeasureAccuracy(validation, lexicon, tuned);

  if (opts.format == "json") {
    Json j;
    j["thresholds"] = tuned.thresholds;
    j["initial_thresholds"] = config.thresholds;
    j["grid_step"] = opts.grid_step;
    j["seed"] = opts.seed;
    j["train"] = {{"size", train.size()},
                  {"accuracy_before", before_train.exact},
                  {"accuracy_after", after_train.exact}};
    j["validation"] = {{"size", validation.size()},
                       {"accuracy_before", before_val.exact},
                       {"accuracy_after", after_val.exact}};
    out << j.dump(2) << '\n';
  } else {
    out << fmt::format("thresholds {:g},{:g},{:g},{:g}\n", tuned.thresholds[0],
                       tuned.thresholds[1], tuned.thresholds[2],
                       tuned.thresholds[3]);
    out << fmt::format("train       n={:<5} accuracy {:.3f} -> {:.3f}\n",
                       train.size(), before_train.exact, after_train.exact);
    out << fmt::format("validation  n={:<5} accuracy {:.3f} -> {:.3f}\n",
                       validation.size(), before_val.exact, after_val.exact);
  }
  return kExitOk;
}

int CmdServe(const PipelineOptions& opts, const ReportOptions& ropts,
             const std::string& host, int port, std::ostream& out) {
  std::shared_ptr<const Snapshot> snapshot = BuildSnapshot(opts, ropts);
  ReviewService service(snapshot);

  sigset_t signals;
  sigemptyset(&signals);
  sigaddset(&signals, SIGINT);
  sigaddset(&signals, SIGTERM);
  pthread_sigmask(SIG_BLOCK, &signals, nullptr);

  const int bound = service.Bind(host, port);
  out << fmt::format("serving {} phrases on http://{}:{}\n",
                     snapshot->scored.size(), host, bound)
      << std::flush;

  std::thread watcher([&] {
    int received = 0;
    sigwait(&signals, &received);
    service.Stop();
  });
  service.Run();
  // Run only returns after Stop(), which only the watcher calls.
  watcher.join();
  pthread_sigmask(SIG_UNBLOCK, &signals, nullptr);
  out << "stopped\n";
  return kExitOk;
}

void ReportError(std::ostream& err, bool json, const std::string& message,
                 int code) {
  if (json) {
    err << Json{{"error", message}, {"exit_code", code}}.dump() << '\n';
  } else {
    err << "evalsense: " << message << '\n';
  }
}

}  // namespace

int Run(std::span<const std::string> args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Course-review sentiment reports and evaluation tools",
               "evalsense"};
  app.set_version_flag("--version", EVALSENSE_VERSION);
  app.set_config("--config", "", "Read options from a key=value file");
  bool json_errors = false;
  app.add_flag("--json-errors", json_errors,
               "Print errors as JSON objects on stderr");
  PipelineOptions pipeline;
  app.add_option("--threads", pipeline.threads,
                 "Worker threads (0 = hardware concurrency)")
      ->capture_default_str();
  app.require_subcommand(1);
  app.fallthrough();

  std::string parse_out = "-";
  auto* parse = app.add_subcommand("parse", "Split reviews into phrases (JSON lines)");
  parse->add_option("-i,--input", pipeline.inputs,
                    "Review CSV files or directories of *.csv")
      ->required();
  parse->add_option("-o,--out", parse_out, "Output file ('-' for stdout)");

  std::string score_out = "-";
  auto* score = app.add_subcommand("score", "Score phrases (JSON lines)");
  AddPipelineOptions(score, pipeline);
  score->add_option("-o,--out", score_out, "Output file ('-' for stdout)");

  ReportOptions report_opts;
  auto* report = app.add_subcommand("report", "Build the summative report");
  AddPipelineOptions(report, pipeline);
  AddTopicOptions(report, pipeline);
  report->add_option("-f,--format", report_opts.format, "latex, html or json")
      ->capture_default_str();
  report->add_option("-o,--out", report_opts.out, "Output file")->required();
  report->add_option("--seed", report_opts.seed, "Run seed recorded in metadata");
  report->add_option("-k,--auto-topics", report_opts.auto_topics,
                     "Automatically selected topics")
      ->capture_default_str();
  report->add_option("-m,--exemplars", report_opts.exemplars,
                     "Table rows per score level")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);
  report->add_option("--date", report_opts.date,
                     "Report date (default: SOURCE_DATE_EPOCH or today)");
  report->add_option("--title", report_opts.title, "Report title");

  EvalOptions eval_opts;
  auto add_eval_common = [&](CLI::App* cmd) {
    cmd->add_option("-l,--labeled", eval_opts.labeled,
                    "Labeled CSV: text,label_1,...,label_k")
        ->required();
    cmd->add_option("--seed", eval_opts.seed, "Split seed")->capture_default_str();
    cmd->add_option("--lexicon", eval_opts.lexicon_path, "Valence lexicon TSV");
    cmd->add_option("--thresholds", eval_opts.thresholds,
                    "Starting cut points t1,t2,t3,t4");
    cmd->add_option("--format", eval_opts.format, "text or json")
        ->capture_default_str();
  };
  auto* evaluate =
      app.add_subcommand("evaluate", "Confusion matrix and accuracy on labeled data");
  add_eval_common(evaluate);
  evaluate->add_option("--subset", eval_opts.subset,
                       "all, train, validation or test")
      ->capture_default_str();
  evaluate->add_option("--consensus", eval_opts.consensus,
                       "Labeler agreement threshold for the consensus fraction")
      ->capture_default_str();

  auto* calibrate = app.add_subcommand(
      "calibrate", "Grid-search fine-score thresholds on the training split");
  add_eval_common(calibrate);
  calibrate->add_option("--grid-step", eval_opts.grid_step, "Grid spacing")
      ->capture_default_str();

  SampleSizeParams ss;
  auto* sample = app.add_subcommand("sample-size", "Minimum labeler sample size");
  sample->add_option("--population", ss.population, "Population size N")
      ->required();
  sample->add_option("--confidence", ss.confidence, "Confidence level")
      ->capture_default_str();
  sample->add_option("--proportion", ss.proportion, "Estimated proportion p")
      ->capture_default_str();
  sample->add_option("--margin", ss.margin, "Margin of error E")
      ->capture_default_str();

  long moe_n = 0;
  double moe_p = 0.5;
  double moe_conf = 0.95;
  auto* moe = app.add_subcommand("margin-of-error", "Margin of error for a sample");
  moe->add_option("-n,--n", moe_n, "Sample size")->required();
  moe->add_option("--proportion", moe_p, "Observed proportion p")
      ->capture_default_str();
  moe->add_option("--confidence", moe_conf, "Confidence level")
      ->capture_default_str();

  std::string host = "127.0.0.1";
  int port = 8080;
  auto* serve = app.add_subcommand("serve", "Serve the scored data over HTTP");
  AddPipelineOptions(serve, pipeline);
  AddTopicOptions(serve, pipeline);
  serve->add_option("--bind", host, "Address to listen on")->capture_default_str();
  serve->add_option("--port", port, "Port (0 picks a free port)")
      ->capture_default_str();
  serve->add_option("-k,--auto-topics", report_opts.auto_topics,
                    "Automatically selected topics")
      ->capture_default_str();
  serve->add_option("-m,--exemplars", report_opts.exemplars,
                    "Exemplars per score level")
      ->capture_default_str()
      ->check(CLI::PositiveNumber);

  if (args.size() <= 1) {
    out << app.help();
    return kExitUsage;
  }

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::CallForVersion&) {
    out << EVALSENSE_VERSION << '\n';
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    ReportError(err, json_errors, e.what(), kExitUsage);
    if (!json_errors) err << "Run with --help for usage.\n";
    return kExitUsage;
  }

  eval_opts.threads = pipeline.threads;
  try {
    if (parse->parsed()) return CmdParse(pipeline, parse_out, out);
    if (score->parsed()) return CmdScore(pipeline, score_out, out);
    if (report->parsed()) return CmdReport(pipeline, report_opts, out);
    if (evaluate->parsed()) return CmdEvaluate(eval_opts, out);
    if (calibrate->parsed()) return CmdCalibrate(eval_opts, out);
    if (sample->parsed()) {
      out << SampleSize(ss) << '\n';
      return kExitOk;
    }
    if (moe->parsed()) {
      out << fmt::format("{:.4f}\n", MarginOfError(moe_n, moe_p, moe_conf));
      return kExitOk;
    }
    if (serve->parsed()) return CmdServe(pipeline, report_opts, host, port, out);
  } catch (const std::exception& e) {
    ReportError(err, json_errors, e.what(), kExitFailure);
    return kExitFailure;
  }
  ReportError(err, json_errors, "no subcommand given", kExitUsage);
  return kExitUsage;
}

}  // namespace evalsense::cli
