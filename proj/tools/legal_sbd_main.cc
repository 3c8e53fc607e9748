// Copyright 2026 The Legal SBD Authors.
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

// legal-sbd: sentence boundary detection for legal text.
//
//   legal-sbd synth     --out corpus.jsonl
//   legal-sbd split     --corpus corpus.jsonl --out split.json
//   legal-sbd train     --corpus corpus.jsonl --split split.json --out model.json
//   legal-sbd predict   --model model.json --in corpus.jsonl --out pred.jsonl
//   legal-sbd eval      --gold corpus.jsonl --pred pred.jsonl
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 internal error.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "legal_sbd/baseline.h"
#include "legal_sbd/config.h"
#include "legal_sbd/corpus.h"
#include "legal_sbd/crf.h"
#include "legal_sbd/errors.h"
#include "legal_sbd/eval.h"
#include "legal_sbd/features.h"
#include "legal_sbd/pipeline.h"
#include "legal_sbd/synthetic.h"
#include "legal_sbd/tokenizer.h"
#include "legal_sbd/unicode.h"

namespace legal_sbd {
namespace {

enum ExitCode { kOk = 0, kUsage = 1, kData = 2, kInternal = 3 };

enum class LogLevel { kError, kWarn, kInfo, kDebug };

struct GlobalOptions {
  std::uint64_t seed = 42;
  std::string config;
  unsigned threads = 0;
  std::string log_level = "info";
};

LogLevel g_log_level = LogLevel::kInfo;

void log(LogLevel level, const std::string& message) {
  if (level > g_log_level) return;
  static constexpr const char* kNames[] = {"error", "warn", "info", "debug"};
  std::cerr << "[" << kNames[static_cast<int>(level)] << "] " << message << '\n';
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

// Output stream that is stdout for "-" or an empty path.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path, std::ios::binary);
      if (!file_) throw DataError("cannot write " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_jsonl(const std::string& path, const std::string& format) {
  if (format == "jsonl") return true;
  if (format == "text") return false;
  auto ends_with = [&](std::string_view suffix) {
    return path.size() >= suffix.size() &&
           path.compare(path.size() - suffix.size(), suffix.size(), suffix) == 0;
  };
  return ends_with(".jsonl") || ends_with(".json");
}

// Raw text becomes one synthetic document.
std::vector<Document> read_input(const std::string& path,
                                 const std::string& format,
                                 const std::string& language) {
  if (looks_like_jsonl(path, format)) return load_corpus(path, false);
  std::string text = read_file(path);
  if (!unicode::is_valid_utf8(text)) throw DataError(path + ": not valid UTF-8");
  std::string folded;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '\r' && i + 1 < text.size() && text[i + 1] == '\n') continue;
    folded.push_back(text[i]);
  }
  if (folded.empty()) return {};
  Document doc;
  doc.id = "input";
  doc.language = language;
  doc.text = std::move(folded);
  return {doc};
}

std::string escape_tsv(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '\t': out += "\\t"; break;
      case '\n': out += "\\n"; break;
      case '\r': out += "\\r"; break;
      case '\\': out += "\\\\"; break;
      default: out.push_back(c);
    }
  }
  return out;
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

// Applies config-file values to options not given on the command line.
void apply_config(CLI::App& app, CLI::App* sub,
                  const std::map<std::string, std::string>& values) {
  for (const auto& [key, value] : values) {
    CLI::Option* opt = nullptr;
    if (sub != nullptr) opt = sub->get_option_no_throw("--" + key);
    if (opt == nullptr) opt = app.get_option_no_throw("--" + key);
    if (opt == nullptr || key == "config") {
      throw ConfigError("unknown config key '" + key + "'");
    }
    if (opt->count() > 0) continue;
    opt->add_result(value);
    opt->run_callback();
  }
}

// ---------------------------------------------------------------------------

struct TokenizeArgs {
  std::string in, out, format = "auto";
};

int run_tokenize(const TokenizeArgs& a) {
  Output out(a.out);
  std::ostream& os = out.stream();
  os << "doc_id\tstart\tend\tkind\ttext\n";
  for (const Document& doc : read_input(a.in, a.format, "und")) {
    for (const Token& t : tokenize(doc.text, doc.id).tokens) {
      os << doc.id << '\t' << t.start << '\t' << t.end << '\t'
         << token_kind_name(t.kind) << '\t' << escape_tsv(t.text) << '\n';
    }
  }
  return kOk;
}

struct SplitArgs {
  std::string corpus, out;
};

int run_split(const SplitArgs& a, const GlobalOptions& g) {
  const auto docs = load_corpus(a.corpus);
  const CorpusSplit split = split_corpus(docs, g.seed);
  Output out(a.out);
  out.stream() << split_to_json(split) << '\n';
  log(LogLevel::kInfo, "split " + std::to_string(docs.size()) + " documents: " +
                           std::to_string(split.train.size()) + " train, " +
                           std::to_string(split.validation.size()) +
                           " validation, " + std::to_string(split.test.size()) +
                           " test");
  return kOk;
}

struct StatsArgs {
  std::string corpus, out;
};

int run_stats(const StatsArgs& a) {
  const auto docs = load_corpus(a.corpus);
  Output out(a.out);
  write_stats_csv(corpus_stats(docs), out.stream());
  return kOk;
}

struct HistogramArgs {
  std::string corpus, out;
  std::size_t bin_size = 5;
  std::size_t cutoff = 101;
};

int run_histogram(const HistogramArgs& a) {
  const auto docs = load_corpus(a.corpus);
  Output out(a.out);
  write_histogram_csv(length_histogram(docs, a.bin_size, a.cutoff), a.cutoff,
                      out.stream());
  return kOk;
}

struct TrainArgs {
  std::string corpus, split, out, log_path;
  std::string subset = "both";
  std::string languages = "all";
  std::string partition = "train";
  double c1 = 1.0;
  double c2 = 1e-3;
  int max_iterations = 100;
  int lbfgs_memory = 10;
  double tol = 1e-6;
  std::size_t max_seq_len = 0;
};

int run_train(const TrainArgs& a, const GlobalOptions& g) {
  const auto docs = load_corpus(a.corpus);
  std::set<std::string> allowed_ids;
  if (!a.split.empty()) {
    const CorpusSplit split = load_split(a.split);
    check_split(split, docs);
    const std::vector<std::string>* part = &split.train;
    if (a.partition == "validation") part = &split.validation;
    if (a.partition == "test") part = &split.test;
    allowed_ids.insert(part->begin(), part->end());
  }
  const std::vector<std::string> langs = split_list(a.languages);
  const bool all_languages =
      a.languages == "all" || langs.empty();
  std::vector<Document> selected;
  for (const Document& doc : docs) {
    if (!a.split.empty() && !allowed_ids.count(doc.id)) continue;
    if (a.subset == "judgments" && doc.doc_type != DocType::kJudgment) continue;
    if (a.subset == "laws" && doc.doc_type != DocType::kLaw) continue;
    if (!all_languages &&
        std::find(langs.begin(), langs.end(), doc.language) == langs.end()) {
      continue;
    }
    selected.push_back(doc);
  }
  if (selected.empty()) {
    throw DataError("empty training set after filtering (subset=" + a.subset +
                    ", languages=" + a.languages + ")");
  }

  const TrainingSet data = build_training_set(selected, a.max_seq_len);
  log(LogLevel::kInfo, "training on " + std::to_string(selected.size()) +
                           " documents, " +
                           std::to_string(data.sequences.size()) +
                           " sequences, " +
                           std::to_string(data.attributes.size()) +
                           " attributes");

  crf::TrainingConfig config;
  config.c1 = a.c1;
  config.c2 = a.c2;
  config.max_iterations = a.max_iterations;
  config.lbfgs_memory = a.lbfgs_memory;
  config.convergence_tol = a.tol;
  config.seed = g.seed;
  config.threads = resolve_threads(g.threads);

  std::ofstream log_file;
  if (!a.log_path.empty()) {
    log_file.open(a.log_path);
    if (!log_file) throw DataError("cannot write " + a.log_path);
    log_file << "iteration\tobjective\tstep\tactive_weights\tevaluations\n";
  }
  auto on_iteration = [&](const crf::IterationLog& it) {
    std::ostringstream line;
    line << std::setprecision(10) << it.iteration << '\t' << it.objective << '\t'
         << it.step << '\t' << it.active_weights << '\t' << it.evaluations;
    if (log_file.is_open()) log_file << line.str() << '\n';
    log(LogLevel::kDebug, "iteration " + line.str());
  };
  crf::Model model =
      crf::train(data.attributes, data.sequences, config, on_iteration);
  model.metadata.extra["subset"] = a.subset;
  model.metadata.extra["languages"] = a.languages;
  model.metadata.extra["partition"] = a.split.empty() ? "all" : a.partition;
  model.metadata.extra["documents"] = std::to_string(selected.size());
  crf::save_model(model, a.out);
  log(LogLevel::kInfo, "stopped after " +
                           std::to_string(model.metadata.iterations_run) +
                           " iterations (" + model.metadata.stop_reason +
                           "), " + std::to_string(model.num_attributes()) +
                           " active attributes");
  return kOk;
}

struct PredictArgs {
  std::string model, in, out, dump_labels, format = "auto", language = "und";
};

int run_predict(const PredictArgs& a, const GlobalOptions& g) {
  const crf::Model model = crf::load_model(a.model);
  const auto docs = read_input(a.in, a.format, a.language);
  const Segmenter segmenter(model);
  Output out(a.out);
  if (a.dump_labels.empty()) {
    for (const Document& doc :
         predict_documents(segmenter, docs, resolve_threads(g.threads))) {
      out.stream() << to_jsonl(doc) << '\n';
    }
    return kOk;
  }
  std::ofstream dump(a.dump_labels, std::ios::binary);
  if (!dump) throw DataError("cannot write " + a.dump_labels);
  dump << "doc_id\tstart\tend\tkind\ttext\tlabel\n";
  for (Document doc : docs) {
    const Prediction p = segmenter.predict(doc.text, doc.id);
    for (std::size_t i = 0; i < p.tokens.size(); ++i) {
      const Token& t = p.tokens[i];
      dump << doc.id << '\t' << t.start << '\t' << t.end << '\t'
           << token_kind_name(t.kind) << '\t' << escape_tsv(t.text) << '\t'
           << label_char(p.labels[i]) << '\n';
    }
    doc.spans = p.spans;
    out.stream() << to_jsonl(doc) << '\n';
  }
  return kOk;
}

struct BaselineArgs {
  std::string in, out, format = "auto", language = "und";
  bool no_colon_rule = false;
};

int run_baseline(const BaselineArgs& a) {
  RuleConfig config;
  config.colon_newline_rule = !a.no_colon_rule;
  Output out(a.out);
  for (Document doc : read_input(a.in, a.format, a.language)) {
    doc.spans = rule_split(doc.text, config);
    out.stream() << to_jsonl(doc) << '\n';
  }
  return kOk;
}

struct EvalArgs {
  std::string gold, pred, report, boundary = "both";
  bool allow_missing = false;
};

int run_eval(const EvalArgs& a) {
  const auto mode = parse_boundary_mode(a.boundary);
  if (!mode) throw ConfigError("--boundary must be both, start or end");
  const auto gold = load_corpus(a.gold);
  const PredictionMap pred = import_foreign_predictions(a.pred);
  EvalOptions options;
  options.boundary = *mode;
  options.allow_missing = a.allow_missing;
  const EvalReport report = evaluate(gold, pred, options);

  std::cout << "language\ttype\tdocs\tmacro_p\tmacro_r\tmacro_f1\tmicro_f1\n";
  std::cout << std::fixed << std::setprecision(4);
  for (const auto& [key, s] : report.per_subset) {
    std::cout << key.first << '\t' << doc_type_name(key.second) << '\t'
              << s.n_docs << '\t' << s.macro_precision << '\t'
              << s.macro_recall << '\t' << s.macro_f1 << '\t' << s.micro.f1
              << '\n';
  }
  if (!a.report.empty()) {
    Output out(a.report);
    if (a.report.size() >= 4 &&
        a.report.compare(a.report.size() - 4, 4, ".csv") == 0) {
      write_report_csv(report, out.stream());
    } else {
      write_report_json(report, out.stream());
    }
  }
  return kOk;
}

struct FeaturesArgs {
  std::string in, text, doc, format = "auto";
  std::size_t position = 0;
};

int run_features(const FeaturesArgs& a) {
  std::string text;
  if (!a.text.empty()) {
    text = a.text;
  } else if (!a.in.empty()) {
    const auto docs = read_input(a.in, a.format, "und");
    auto it = std::find_if(docs.begin(), docs.end(), [&](const Document& d) {
      return a.doc.empty() || d.id == a.doc;
    });
    if (it == docs.end()) throw DataError("document '" + a.doc + "' not found");
    text = it->text;
  } else {
    throw ConfigError("features needs --text or --in");
  }
  const TokenSequence seq = tokenize(text);
  if (a.position >= seq.size()) {
    throw DataError("position " + std::to_string(a.position) +
                    " out of range for " + std::to_string(seq.size()) +
                    " tokens");
  }
  std::cout << to_python_literal(extract(seq, a.position)) << '\n';
  return kOk;
}

struct BenchArgs {
  std::string model, corpus;
  int repeat = 3;
};

double median(std::vector<double> v) {
  std::sort(v.begin(), v.end());
  const std::size_t n = v.size();
  return n % 2 == 1 ? v[n / 2] : 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

int run_bench(const BenchArgs& a, const GlobalOptions& g) {
  if (a.repeat < 1) throw ConfigError("--repeat must be at least 1");
  const crf::Model model = crf::load_model(a.model);
  const auto docs = load_corpus(a.corpus, false);
  const Segmenter segmenter(model);
  std::size_t sentences = 0;
  for (const Document& d : docs) sentences += d.spans.size();

  auto time_run = [&](unsigned threads, std::size_t* predicted) {
    const auto t0 = std::chrono::steady_clock::now();
    const auto out = predict_documents(segmenter, docs, threads);
    const auto t1 = std::chrono::steady_clock::now();
    *predicted = 0;
    for (const Document& d : out) *predicted += d.spans.size();
    return std::chrono::duration<double, std::milli>(t1 - t0).count();
  };

  const unsigned multi = resolve_threads(g.threads);
  std::cout << std::fixed << std::setprecision(3);
  for (unsigned threads : {1u, multi}) {
    std::vector<double> timings;
    std::size_t predicted = 0;
    for (int r = 0; r < a.repeat; ++r) timings.push_back(time_run(threads, &predicted));
    const std::size_t n = sentences > 0 ? sentences : predicted;
    const double ms = median(timings);
    std::cout << "threads=" << threads << " documents=" << docs.size()
              << " sentences=" << n << " timings_ms=";
    for (std::size_t i = 0; i < timings.size(); ++i) {
      std::cout << (i ? "," : "") << timings[i];
    }
    std::cout << " median_ms=" << ms;
    if (n > 0 && ms > 0.0) {
      std::cout << " sentences_per_s=" << (1000.0 * static_cast<double>(n) / ms)
                << " ms_per_sentence=" << ms / static_cast<double>(n);
    } else {
      std::cout << " sentences_per_s=0 ms_per_sentence=0";
    }
    std::cout << '\n';
    if (multi == 1) break;
  }
  return kOk;
}

struct SynthArgs {
  std::string out;
  std::size_t docs = 50;
  double abbreviation_rate = 0.0;
};

int run_synth(const SynthArgs& a, const GlobalOptions& g) {
  SyntheticOptions options;
  options.documents = a.docs;
  options.seed = g.seed;
  options.abbreviation_rate = a.abbreviation_rate;
  Output out(a.out);
  write_corpus(generate_synthetic_corpus(options), out.stream());
  return kOk;
}

int main_impl(int argc, char** argv) {
  CLI::App app{"Sentence boundary detection for legal text"};
  app.require_subcommand(1);
  app.fallthrough();
  GlobalOptions g;
  app.add_option("--seed", g.seed, "Random seed")->capture_default_str();
  app.add_option("--config", g.config,
                 "Flat key=value config file (default: $LEGAL_SBD_CONFIG)");
  app.add_option("--threads", g.threads, "Worker threads (0 = all cores)");
  app.add_option("--log-level", g.log_level, "error, warn, info or debug")
      ->check(CLI::IsMember({"error", "warn", "info", "debug"}));

  TokenizeArgs tok;
  auto* tokenize_cmd = app.add_subcommand("tokenize", "Print tokens as TSV");
  tokenize_cmd->add_option("--in", tok.in, "Text or corpus JSONL")->required();
  tokenize_cmd->add_option("--out", tok.out, "Output TSV (default stdout)");
  tokenize_cmd->add_option("--format", tok.format, "auto, text or jsonl");

  SplitArgs split;
  auto* split_cmd = app.add_subcommand("split", "60/20/20 document split");
  split_cmd->add_option("--corpus", split.corpus)->required();
  split_cmd->add_option("--out", split.out, "Split JSON (default stdout)");

  StatsArgs stats;
  auto* stats_cmd = app.add_subcommand("stats", "Corpus statistics as CSV");
  stats_cmd->add_option("--corpus", stats.corpus)->required();
  stats_cmd->add_option("--out", stats.out);

  HistogramArgs hist;
  auto* hist_cmd =
      app.add_subcommand("histogram", "Sentence length histogram as CSV");
  hist_cmd->add_option("--corpus", hist.corpus)->required();
  hist_cmd->add_option("--out", hist.out);
  hist_cmd->add_option("--bin-size", hist.bin_size)->check(CLI::PositiveNumber);
  hist_cmd->add_option("--cutoff", hist.cutoff);

  TrainArgs train;
  auto* train_cmd = app.add_subcommand("train", "Train a CRF model");
  train_cmd->add_option("--corpus", train.corpus)->required();
  train_cmd->add_option("--split", train.split, "Split JSON; trains on its train part");
  train_cmd->add_option("--partition", train.partition)
      ->check(CLI::IsMember({"train", "validation", "test"}));
  train_cmd->add_option("--subset", train.subset)
      ->check(CLI::IsMember({"judgments", "laws", "both"}));
  train_cmd->add_option("--languages", train.languages,
                        "Comma-separated language codes or 'all'");
  train_cmd->add_option("--out", train.out, "Model file")->required();
  train_cmd->add_option("--log", train.log_path, "Per-iteration training log (TSV)");
  train_cmd->add_option("--c1", train.c1)->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--c2", train.c2)->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--max-iterations", train.max_iterations)
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--lbfgs-memory", train.lbfgs_memory)
      ->check(CLI::PositiveNumber);
  train_cmd->add_option("--tol", train.tol)->check(CLI::NonNegativeNumber);
  train_cmd->add_option("--max-seq-len", train.max_seq_len,
                        "Cut long documents at O-labeled whitespace (0 = off)");

  PredictArgs predict;
  auto* predict_cmd = app.add_subcommand("predict", "Predict sentence spans");
  predict_cmd->add_option("--model", predict.model)->required();
  predict_cmd->add_option("--in", predict.in, "Corpus JSONL or raw text")->required();
  predict_cmd->add_option("--out", predict.out, "Output JSONL (default stdout)");
  predict_cmd->add_option("--format", predict.format, "auto, text or jsonl");
  predict_cmd->add_option("--language", predict.language,
                          "Language recorded for raw text input");
  predict_cmd->add_option("--dump-labels", predict.dump_labels,
                          "Write per-token labels as TSV");

  BaselineArgs base;
  auto* baseline_cmd = app.add_subcommand("baseline", "Rule-based splitter");
  baseline_cmd->add_option("--in", base.in)->required();
  baseline_cmd->add_option("--out", base.out);
  baseline_cmd->add_option("--format", base.format, "auto, text or jsonl");
  baseline_cmd->add_option("--language", base.language);
  baseline_cmd->add_flag("--no-colon-rule", base.no_colon_rule);

  EvalArgs ev;
  auto* eval_cmd = app.add_subcommand("eval", "Token-binary boundary evaluation");
  eval_cmd->add_option("--gold", ev.gold)->required();
  eval_cmd->add_option("--pred", ev.pred)->required();
  eval_cmd->add_option("--boundary", ev.boundary)
      ->check(CLI::IsMember({"both", "start", "end"}));
  eval_cmd->add_option("--report", ev.report, "Report path (.csv or .json)");
  eval_cmd->add_flag("--allow-missing", ev.allow_missing);

  FeaturesArgs feat;
  auto* features_cmd =
      app.add_subcommand("features", "Print the feature map of one token");
  features_cmd->add_option("--text", feat.text);
  features_cmd->add_option("--in", feat.in);
  features_cmd->add_option("--doc", feat.doc);
  features_cmd->add_option("--format", feat.format);
  features_cmd->add_option("--position", feat.position)->required();

  BenchArgs bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time prediction throughput");
  bench_cmd->add_option("--model", bench.model)->required();
  bench_cmd->add_option("--corpus", bench.corpus)->required();
  bench_cmd->add_option("--repeat", bench.repeat);

  SynthArgs synth;
  auto* synth_cmd =
      app.add_subcommand("synth", "Generate a synthetic annotated corpus");
  synth_cmd->add_option("--out", synth.out);
  synth_cmd->add_option("--docs", synth.docs);
  synth_cmd->add_option("--abbreviation-rate", synth.abbreviation_rate)
      ->check(CLI::Range(0.0, 1.0));

  try {
    app.parse(argc, argv);
    CLI::App* sub = app.get_subcommands().front();
    std::string config_path = g.config;
    if (config_path.empty()) {
      if (const char* env = std::getenv("LEGAL_SBD_CONFIG")) config_path = env;
    }
    if (!config_path.empty()) {
      apply_config(app, sub, load_flat_config(config_path));
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  if (g.log_level == "error") g_log_level = LogLevel::kError;
  if (g.log_level == "warn") g_log_level = LogLevel::kWarn;
  if (g.log_level == "info") g_log_level = LogLevel::kInfo;
  if (g.log_level == "debug") g_log_level = LogLevel::kDebug;

  if (tokenize_cmd->parsed()) return run_tokenize(tok);
  if (split_cmd->parsed()) return run_split(split, g);
  if (stats_cmd->parsed()) return run_stats(stats);
  if (hist_cmd->parsed()) return run_histogram(hist);
  if (train_cmd->parsed()) return run_train(train, g);
  if (predict_cmd->parsed()) return run_predict(predict, g);
  if (baseline_cmd->parsed()) return run_baseline(base);
  if (eval_cmd->parsed()) return run_eval(ev);
  if (features_cmd->parsed()) return run_features(feat);
  if (bench_cmd->parsed()) return run_bench(bench, g);
  if (synth_cmd->parsed()) return run_synth(synth, g);
  return kUsage;
}

}  // namespace
}  // namespace legal_sbd

int main(int argc, char** argv) {
  using namespace legal_sbd;
  try {
    return main_impl(argc, argv);
  } catch (const ConfigError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const DataError& e) {
    std::cerr << "data error: " << e.what() << '\n';
    return kData;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kInternal;
  }
}
