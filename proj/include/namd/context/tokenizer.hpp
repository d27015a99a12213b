#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace namd::context {

/// Word-level tokenizer over the report template lexicon.
///
/// Words are maximal runs of letters; "," and "." are their own tokens; every
/// digit is a token and the decimal point inside a number is "<pt>". Encoding
/// appends <EOS>. Decoding joins words with single spaces, attaches punctuation
/// to the previous token and glues digits and <pt> into numbers, so
/// decode(encode(s)) == s for every rendered report.
class Tokenizer {
 public:
  static constexpr int64_t kPad = 0;
  static constexpr int64_t kEos = 1;
  static constexpr std::size_t kDefaultMaxLength = 64;

  /// Vocabulary built from every phrase the report template can emit.
  Tokenizer();
  explicit Tokenizer(std::vector<std::string> vocabulary, std::size_t max_length = kDefaultMaxLength);

  /// Throws Error("schema") on out-of-vocabulary words and Error("invalid_argument")
  /// when the result would exceed max_length.
  std::vector<int64_t> encode(std::string_view text) const;
  std::string decode(std::span<const int64_t> ids) const;

  std::size_t size() const { return vocab_.size(); }
  std::size_t max_length() const { return max_length_; }
  const std::string& token(int64_t id) const;

  nlohmann::json to_json() const;
  static Tokenizer from_json(const nlohmann::json& j);

 private:
  std::vector<std::string> vocab_;
  std::map<std::string, int64_t, std::less<>> index_;
  std::size_t max_length_;
};

}  // namespace namd::context
