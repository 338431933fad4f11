#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "va/veronese.hpp"

namespace va::cli {

/// One record of a corpus file. Expectations left unset are not checked.
struct CorpusEntry {
  std::string name;
  std::size_t n = 0;
  std::optional<unsigned> d;
  std::string poly;
  std::optional<bool> verdict;
  std::optional<long> condition_I;
  std::optional<bool> condition_II_empty;
  std::optional<std::string> witness;         ///< linear form text
  std::optional<std::string> inverse_system;  ///< form in y1..yn
  std::optional<std::size_t> singular_points;
  std::optional<std::size_t> nodes;
  std::optional<bool> general_position;
  std::optional<std::string> predicted;  ///< "true", "false" or "none"
  std::optional<std::string> scope_error;
  std::string provenance;  ///< reported, derived or identity
  std::string source;
  std::size_t line = 0;
};

/// Parses `key: value` records separated by blank lines; `#` starts a comment.
/// Throws va::Error with a line number on malformed input.
std::vector<CorpusEntry> parse_corpus(std::string_view text);

/// Text of the corpus shipped with the tool.
std::string_view builtin_corpus_text();
std::vector<CorpusEntry> builtin_corpus();

struct EntryResult {
  std::string name;
  bool pass = false;
  std::vector<std::string> diffs;
  double millis = 0;
};

EntryResult run_entry(const CorpusEntry& e, const CheckOptions& options);

/// Runs entries on `jobs` worker threads; results keep corpus order.
std::vector<EntryResult> run_corpus(const std::vector<CorpusEntry>& entries, const CheckOptions& options,
                                    std::size_t jobs);

}  // namespace va::cli
