#include "cli.hpp"

#include <filesystem>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "morpheval/bpe.hpp"
#include "morpheval/error_taxonomy.hpp"
#include "morpheval/errors.hpp"
#include "morpheval/fingerprint.hpp"
#include "morpheval/io.hpp"
#include "morpheval/metrics.hpp"
#include "morpheval/pretokenize.hpp"
#include "morpheval/report.hpp"
#include "morpheval/wordpiece.hpp"

namespace morpheval::cli {
namespace {

// Bad combination of otherwise well-formed flags; exit 2.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A core error raised while reading a specific input file; exit 1.
struct InputError : std::runtime_error {
  InputError(const std::string& path, const Error& cause, std::size_t row)
      : std::runtime_error(Describe(path, cause, row)) {}

  static std::string Describe(const std::string& path, const Error& cause,
                              std::size_t row) {
    std::string where = path;
    if (row > 0) where += ":" + std::to_string(row);
    return where + ": " + std::string(ErrorCodeName(cause.code())) + ": " +
           cause.detail();
  }
};

struct Options {
  // Global
  std::string marker;
  bool lowercase = false;
  bool no_lowercase = false;
  std::string unicode_form = "NFC";
  std::string unk_token;
  std::string tokenizer_config;
  bool suffix_match_unmarked = false;
  bool anchor_suffixes = false;
  bool no_anchor_suffixes = false;
  int jobs = 0;
  std::string out;
  std::string format = "json";

  // Per command
  std::string algo = "wordpiece";
  std::string vocab;
  std::string merges;
  std::string corpus;
  std::size_t vocab_size = 0;
  std::uint64_t min_frequency = 2;
  std::vector<std::string> special_tokens;
  std::string vocab_out;
  std::string merges_out;
  std::vector<std::string> words;
  std::string words_file;
  std::size_t max_input_chars = 0;
  std::string inventory;
  std::string pairs;
  std::string gold;
  std::string examples;
  std::string vocab_a;
  std::string vocab_b;
  std::string label_a;
  std::string label_b;
  std::string strategy = "inventory-prefixes";
  std::string in;
};

std::string YesNo(bool b) { return b ? "true" : "false"; }

// Reads `path`, records its digest and runs `parse`, attributing any core
// error to the file.
template <typename Parse>
auto LoadInput(RunManifest& manifest, const std::string& role,
               const std::string& path, Parse&& parse) {
  const std::string bytes = ReadFile(path);
  manifest.AddInput(role, path, bytes);
  try {
    return parse(bytes);
  } catch (const Error& e) {
    throw InputError(path, e, e.row());
  }
}

// Marker and unknown token from a tokenizer JSON, either the full
// tokenizer file ("model" object) or a flat tokenizer config.
void ApplyTokenizerConfig(const std::string& path, NormalizationConfig& cfg,
                          RunManifest& manifest, bool marker_fixed,
                          bool unk_fixed) {
  LoadInput(manifest, "tokenizer_config", path, [&](const std::string& bytes) {
    const auto j = nlohmann::json::parse(bytes, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
      throw Error(ErrorCode::kParseError, "tokenizer config is not a JSON object");
    }
    auto pick = [&](const char* key) -> std::optional<std::string> {
      for (const auto* scope : {j.contains("model") ? &j["model"] : nullptr, &j}) {
        if (!scope || !scope->is_object() || !scope->contains(key)) continue;
        const auto& v = (*scope)[key];
        if (v.is_string()) return v.get<std::string>();
        if (v.is_object() && v.contains("content") && v["content"].is_string()) {
          return v["content"].get<std::string>();
        }
      }
      return std::nullopt;
    };
    if (auto marker = pick("continuing_subword_prefix"); marker && !marker_fixed) {
      cfg.continuation_marker = *marker;
    }
    if (auto unk = pick("unk_token"); unk && !unk_fixed) cfg.unknown_token = *unk;
    return 0;
  });
}

class Command {
 public:
  Command(const Options& opts, std::string name, std::ostream& out)
      : opts_(opts), out_(out) {
    manifest_.command = std::move(name);
    manifest_.timestamp = CurrentTimestamp();

    norm_.lowercase = !opts.no_lowercase;
    norm_.unicode_form = ParseUnicodeForm(opts.unicode_form);
    if (!opts.marker.empty()) norm_.continuation_marker = opts.marker;
    if (!opts.unk_token.empty()) norm_.unknown_token = opts.unk_token;
    if (!opts.tokenizer_config.empty()) {
      ApplyTokenizerConfig(opts.tokenizer_config, norm_, manifest_,
                           !opts.marker.empty(), !opts.unk_token.empty());
    }
    norm_.Validate();

    metrics_.normalization = norm_;
    metrics_.suffix_match_unmarked = opts.suffix_match_unmarked;
    metrics_.anchor_suffixes = !opts.no_anchor_suffixes;
    metrics_.jobs = opts.jobs;

    Config("marker", norm_.continuation_marker);
    Config("unknown_token", norm_.unknown_token);
    Config("lowercase", YesNo(norm_.lowercase));
    Config("unicode_form", std::string(UnicodeFormName(norm_.unicode_form)));
  }

  void Config(std::string key, std::string value) {
    manifest_.config.emplace_back(std::move(key), std::move(value));
  }

  void MetricFlags() {
    Config("suffix_match_unmarked", YesNo(metrics_.suffix_match_unmarked));
    Config("anchor_suffixes", YesNo(metrics_.anchor_suffixes));
  }

  std::shared_ptr<const Vocabulary> LoadVocab(const std::string& role,
                                              const std::string& path) {
    return LoadInput(manifest_, role, path, [&](const std::string& bytes) {
      return std::make_shared<const Vocabulary>(LoadVocabulary(bytes, norm_));
    });
  }

  // Encoder selected by --algo over the loaded vocabulary.
  std::unique_ptr<Segmenter> MakeSegmenter(std::shared_ptr<const Vocabulary> vocab) {
    Config("algo", opts_.algo);
    if (opts_.algo == "wordpiece") {
      if (!opts_.merges.empty()) {
        throw UsageError("--merges only applies to --algo bpe");
      }
      WordpieceOptions wp;
      wp.max_input_chars_per_word = opts_.max_input_chars;
      Config("max_input_chars", std::to_string(wp.max_input_chars_per_word));
      return std::make_unique<WordpieceEncoder>(std::move(vocab), norm_, wp);
    }
    if (opts_.merges.empty()) throw UsageError("--algo bpe requires --merges");
    if (opts_.max_input_chars != 0) {
      throw UsageError("--max-input-chars only applies to --algo wordpiece");
    }
    auto merges = LoadInput(manifest_, "merges", opts_.merges,
                            [&](const std::string& bytes) {
      auto table = std::make_shared<const MergeTable>(LoadMergeTable(bytes));
      try {
        table->ValidateAgainst(*vocab);
      } catch (const Error& e) {
        // Rule rows are 1-based among rules; shift past the header line.
        const bool header = !bytes.empty() && bytes.front() == '#';
        throw InputError(opts_.merges, e, e.row() + (header ? 1 : 0));
      }
      return table;
    });
    return std::make_unique<BpeEncoder>(std::move(vocab), std::move(merges), norm_);
  }

  void Emit(ReportBody body) {
    const Report report{manifest_, std::move(body)};
    EmitRendered(Render(report, ParseOutputFormat(opts_.format)));
  }

  void EmitRendered(const std::string& text) {
    if (opts_.out.empty()) {
      out_ << text;
    } else {
      WriteFile(opts_.out, text);
    }
  }

  const Options& opts() const { return opts_; }
  RunManifest& manifest() { return manifest_; }
  const NormalizationConfig& norm() const { return norm_; }
  const MetricsConfig& metrics() const { return metrics_; }

 private:
  const Options& opts_;
  std::ostream& out_;
  RunManifest manifest_;
  NormalizationConfig norm_;
  MetricsConfig metrics_;
};

void RunTrain(Command& cmd) {
  const Options& o = cmd.opts();
  if (o.algo == "wordpiece" && !o.merges_out.empty()) {
    throw UsageError("--merges-out only applies to --algo bpe");
  }
  if (o.algo == "bpe" && o.merges_out.empty()) {
    throw UsageError("--algo bpe requires --merges-out");
  }
  TrainerConfig cfg;
  cfg.target_vocab_size = o.vocab_size;
  cfg.min_pair_frequency = o.min_frequency;
  cfg.normalization = cmd.norm();
  cfg.special_tokens = o.special_tokens;
  cfg.jobs = o.jobs;

  cmd.Config("algo", o.algo);
  cmd.Config("vocab_size", std::to_string(cfg.target_vocab_size));
  cmd.Config("min_frequency", std::to_string(cfg.min_pair_frequency));
  std::string specials;
  for (const auto& s : cfg.EffectiveSpecialTokens()) {
    specials += (specials.empty() ? "" : ",") + s;
  }
  cmd.Config("special_tokens", specials);

  const WordCounts counts = LoadInput(
      cmd.manifest(), "corpus", o.corpus, [&](const std::string& bytes) {
        std::vector<std::string> sentences;
        std::size_t row = 0;
        for (std::string_view line : SplitLines(bytes)) {
          ++row;
          if (!IsValidUtf8(line)) {
            throw Error(ErrorCode::kEncodingError, "invalid UTF-8", row);
          }
          sentences.emplace_back(line);
        }
        return CountWords(sentences, cfg.normalization, cfg.jobs);
      });

  TrainSummary summary;
  summary.algorithm = o.algo;
  summary.target_vocab_size = cfg.target_vocab_size;
  summary.distinct_words = counts.size();
  if (o.algo == "bpe") {
    const BpeModel model = TrainBpe(counts, cfg);
    WriteFile(o.vocab_out, WriteVocabulary(model.vocab));
    WriteFile(o.merges_out, WriteMergeTable(model.merges));
    summary.vocab_size = model.vocab.size();
    summary.merges = model.merges.size();
    summary.outputs = {{"vocab", o.vocab_out}, {"merges", o.merges_out}};
  } else {
    const Vocabulary vocab = TrainWordpiece(counts, cfg);
    WriteFile(o.vocab_out, WriteVocabulary(vocab));
    summary.vocab_size = vocab.size();
    summary.merges = vocab.size() - cfg.EffectiveSpecialTokens().size();
    summary.outputs = {{"vocab", o.vocab_out}};
  }
  cmd.Emit(std::move(summary));
}

void RunTokenize(Command& cmd) {
  const Options& o = cmd.opts();
  std::vector<std::string> words = o.words;
  std::vector<std::size_t> file_rows;  // row for each word read from a file
  if (!o.words_file.empty()) {
    LoadInput(cmd.manifest(), "words", o.words_file, [&](const std::string& bytes) {
      std::size_t row = 0;
      for (std::string_view line : SplitLines(bytes)) {
        ++row;
        if (line.empty()) continue;
        words.emplace_back(line);
        file_rows.push_back(row);
      }
      return 0;
    });
  }
  if (words.empty()) throw UsageError("tokenize needs --word or --words");

  auto segmenter = cmd.MakeSegmenter(cmd.LoadVocab("vocab", o.vocab));
  TokenizeResult result;
  try {
    result.segmentations = TokenizeBatch(*segmenter, words, o.jobs);
  } catch (const BatchError& e) {
    const std::size_t first_file_word = o.words.size();
    if (e.index() >= first_file_word) {
      throw InputError(o.words_file, e, file_rows[e.index() - first_file_word]);
    }
    throw InputError("--word", e, e.index() + 1);
  }
  cmd.Emit(std::move(result));
}

MorphemeInventory LoadInventoryFile(Command& cmd, const std::string& path) {
  return LoadInput(cmd.manifest(), "inventory", path, [&](const std::string& bytes) {
    return LoadInventory(bytes, cmd.norm());
  });
}

GoldSegmentations LoadGoldFile(Command& cmd, const std::string& path) {
  return LoadInput(cmd.manifest(), "gold", path, [&](const std::string& bytes) {
    return LoadGoldSegmentations(bytes, cmd.norm());
  });
}

void RunRelevance(Command& cmd) {
  const Options& o = cmd.opts();
  cmd.MetricFlags();
  const auto vocab = cmd.LoadVocab("vocab", o.vocab);
  const MorphemeInventory inventory = LoadInventoryFile(cmd, o.inventory);
  cmd.Emit(EvalRelevance(*vocab, inventory, cmd.metrics()));
}

void RunCoherence(Command& cmd) {
  const Options& o = cmd.opts();
  cmd.MetricFlags();
  auto segmenter = cmd.MakeSegmenter(cmd.LoadVocab("vocab", o.vocab));
  const auto pairs = LoadInput(cmd.manifest(), "pairs", o.pairs,
                               [&](const std::string& bytes) {
    return LoadCoherencePairs(bytes, cmd.norm());
  });
  try {
    cmd.Emit(EvalCoherence(*segmenter, pairs, cmd.metrics()));
  } catch (const BatchError& e) {
    throw InputError(o.pairs, e, e.index() + 1);
  }
}

void RunAccuracy(Command& cmd) {
  const Options& o = cmd.opts();
  cmd.MetricFlags();
  auto segmenter = cmd.MakeSegmenter(cmd.LoadVocab("vocab", o.vocab));
  const GoldSegmentations gold = LoadGoldFile(cmd, o.gold);
  try {
    cmd.Emit(EvalAccuracy(*segmenter, gold, cmd.metrics()));
  } catch (const BatchError& e) {
    throw InputError(o.gold, e, 0);
  }
}

void RunClassifyErrors(Command& cmd) {
  const Options& o = cmd.opts();
  cmd.MetricFlags();
  const auto vocab = cmd.LoadVocab("vocab", o.vocab);
  auto segmenter = cmd.MakeSegmenter(vocab);
  const GoldSegmentations gold = LoadGoldFile(cmd, o.gold);
  ErrorAnalysis analysis;
  try {
    analysis = AnalyzeErrors(*segmenter, gold, *vocab, cmd.metrics());
  } catch (const BatchError& e) {
    throw InputError(o.gold, e, 0);
  }
  if (!o.examples.empty()) {
    WriteFile(o.examples, RenderExamplesTsv(analysis, vocab->marker()));
  }
  cmd.Emit(std::move(analysis));
}

void RunCompareVocabs(Command& cmd) {
  const Options& o = cmd.opts();
  const CharacteristicStrategy strategy = ParseStrategy(o.strategy);
  const bool needs_inventory = strategy == CharacteristicStrategy::kInventoryPrefixes ||
                               strategy == CharacteristicStrategy::kInventorySuffixes;
  if (needs_inventory && o.inventory.empty()) {
    throw UsageError("--strategy " + o.strategy + " requires --inventory");
  }
  cmd.Config("strategy", o.strategy);
  const auto a = cmd.LoadVocab("vocab_a", o.vocab_a);
  const auto b = cmd.LoadVocab("vocab_b", o.vocab_b);
  MorphemeInventory inventory;
  if (!o.inventory.empty()) inventory = LoadInventoryFile(cmd, o.inventory);

  FingerprintComparison cmp;
  cmp.label_a = o.label_a.empty() ? std::filesystem::path(o.vocab_a).stem().string()
                                  : o.label_a;
  cmp.label_b = o.label_b.empty() ? std::filesystem::path(o.vocab_b).stem().string()
                                  : o.label_b;
  cmp.strategy = o.strategy;
  try {
    cmp.similarity = CompareTokenSets(ExtractCharacteristicSet(*a, inventory, strategy),
                                      ExtractCharacteristicSet(*b, inventory, strategy));
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kMissingInventory) throw InputError(o.inventory, e, 0);
    throw;
  }
  cmd.Emit(std::move(cmp));
}

void RunReport(Command& cmd) {
  const Options& o = cmd.opts();
  const Report report = LoadInput(cmd.manifest(), "report", o.in,
                                  [](const std::string& bytes) {
    return ParseReportJson(bytes);
  });
  cmd.EmitRendered(Render(report, ParseOutputFormat(o.format)));
}

}  // namespace

int Run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Train subword tokenizers and evaluate their morphological quality",
               "morpheval"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(kToolVersion));

  const CLI::Validator non_empty(
      [](std::string& v) { return v.empty() ? std::string("value is empty") : std::string(); },
      "NONEMPTY");

  // Global flags.
  app.add_option("--marker", o.marker, "Continuation marker (default \"##\")")->check(non_empty);
  auto* lower = app.add_flag("--lowercase", o.lowercase, "Lowercase evaluated words (default)");
  auto* no_lower = app.add_flag("--no-lowercase", o.no_lowercase, "Keep case");
  lower->excludes(no_lower);
  app.add_option("--unicode-form", o.unicode_form, "NFC, NFD or none")
      ->check(CLI::IsMember({"NFC", "NFD", "nfc", "nfd", "none"}))
      ->capture_default_str();
  app.add_option("--unk-token", o.unk_token, "Unknown token (default \"[UNK]\")")
      ->check(non_empty);
  app.add_option("--tokenizer-config", o.tokenizer_config,
                 "Tokenizer JSON supplying the marker and unknown token");
  app.add_flag("--suffix-match-unmarked", o.suffix_match_unmarked,
               "Also accept bare suffix/clitic forms as vocabulary matches");
  auto* anchor = app.add_flag("--anchor-suffixes", o.anchor_suffixes,
                              "Require suffixes/clitics to end the word (default)");
  auto* no_anchor = app.add_flag("--no-anchor-suffixes", o.no_anchor_suffixes,
                                 "Accept suffix/clitic tokens anywhere");
  anchor->excludes(no_anchor);
  app.add_option("--jobs", o.jobs, "Worker threads; 0 uses every core")
      ->check(CLI::Range(0, 4096))
      ->capture_default_str();
  app.add_option("--out", o.out, "Write the report here instead of stdout");
  app.add_option("--format", o.format, "json, table or csv")
      ->check(CLI::IsMember({"json", "table", "csv"}))
      ->capture_default_str();

  auto algo = [&](CLI::App* sub) {
    sub->add_option("--algo", o.algo, "wordpiece or bpe")
        ->check(CLI::IsMember({"wordpiece", "bpe"}))
        ->capture_default_str();
  };
  auto encoder = [&](CLI::App* sub) {
    algo(sub);
    sub->add_option("--vocab", o.vocab, "Vocabulary file")->required()->check(non_empty);
    sub->add_option("--merges", o.merges, "Merges file (bpe)");
    sub->add_option("--max-input-chars", o.max_input_chars,
                    "Wordpiece: longer words become the unknown token (0 = no limit)");
  };

  auto* train = app.add_subcommand("train", "Train a BPE or Wordpiece vocabulary");
  algo(train);
  train->add_option("--corpus", o.corpus, "One sentence per line")->required()->check(non_empty);
  train->add_option("--vocab-size", o.vocab_size, "Target vocabulary size")->required();
  train->add_option("--min-frequency", o.min_frequency, "Minimum pair frequency")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  train->add_option("--special-tokens", o.special_tokens,
                    "Special tokens placed first (default: the unknown token)")
      ->delimiter(',');
  train->add_option("--vocab-out", o.vocab_out, "Vocabulary output")->required()->check(non_empty);
  train->add_option("--merges-out", o.merges_out, "Merges output (bpe)");

  auto* tokenize = app.add_subcommand("tokenize", "Segment words");
  encoder(tokenize);
  tokenize->add_option("--word", o.words, "Word to segment (repeatable)");
  tokenize->add_option("--words", o.words_file, "File with one word per line");

  auto* relevance = app.add_subcommand("eval-relevance",
                                       "Inventory morphemes present in a vocabulary");
  relevance->add_option("--vocab", o.vocab, "Vocabulary file")->required()->check(non_empty);
  relevance->add_option("--inventory", o.inventory, "Morpheme inventory JSON")->required()->check(non_empty);

  auto* coherence = app.add_subcommand("eval-coherence",
                                       "Whether segmentations keep morphemes whole");
  encoder(coherence);
  coherence->add_option("--pairs", o.pairs, "word/morpheme/type TSV")->required()->check(non_empty);

  auto* accuracy = app.add_subcommand("eval-accuracy",
                                      "Exact agreement with gold segmentations");
  encoder(accuracy);
  accuracy->add_option("--gold", o.gold, "Gold segmentation JSON")->required()->check(non_empty);

  auto* classify = app.add_subcommand("classify-errors",
                                      "Four-type profile of segmentation errors");
  encoder(classify);
  classify->add_option("--gold", o.gold, "Gold segmentation JSON")->required()->check(non_empty);
  classify->add_option("--examples", o.examples, "Per-word examples TSV output");

  auto* compare = app.add_subcommand("compare-vocabs",
                                     "Set similarity of two vocabularies");
  compare->add_option("--vocab-a", o.vocab_a, "First vocabulary")->required()->check(non_empty);
  compare->add_option("--vocab-b", o.vocab_b, "Second vocabulary")->required()->check(non_empty);
  compare->add_option("--label-a", o.label_a, "Label for the first vocabulary");
  compare->add_option("--label-b", o.label_b, "Label for the second vocabulary");
  compare->add_option("--strategy", o.strategy, "Characteristic set")
      ->check(CLI::IsMember({"inventory-prefixes", "inventory-suffixes",
                             "all-word-initial", "all-continuation"}))
      ->capture_default_str();
  compare->add_option("--inventory", o.inventory, "Morpheme inventory JSON");

  auto* report = app.add_subcommand("report", "Re-render a JSON report");
  report->add_option("--in", o.in, "Report JSON")->required()->check(non_empty);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    Command cmd(o, sub->get_name(), out);
    if (sub == train) RunTrain(cmd);
    else if (sub == tokenize) RunTokenize(cmd);
    else if (sub == relevance) RunRelevance(cmd);
    else if (sub == coherence) RunCoherence(cmd);
    else if (sub == accuracy) RunAccuracy(cmd);
    else if (sub == classify) RunClassifyErrors(cmd);
    else if (sub == compare) RunCompareVocabs(cmd);
    else RunReport(cmd);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const InputError& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::kInvalidConfig) {
      err << "usage error: " << e.detail() << "\n";
      return 2;
    }
    err << "error: " << (e.code() == ErrorCode::kIoError
                             ? e.detail()
                             : std::string(ErrorCodeName(e.code())) + ": " + e.detail())
        << "\n";
    return 1;
  }
  return 0;
}

}  // namespace morpheval::cli
