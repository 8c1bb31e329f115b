// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qnas {

// Plain-text key-value configuration.
//
//   # comment
//   [section]
//   key = value value *value
//
// Values are whitespace-separated tokens. A token prefixed with '*' marks
// the seed choice of a choice list (at most one per key). Section and key
// names are case-sensitive.
class KeyValueConfig {
 public:
  struct Entry {
    std::vector<std::string> tokens;
    int seed_index = -1;  // index of the '*'-marked token, -1 if none
  };

  static KeyValueConfig parse_file(const std::string& path);
  static KeyValueConfig parse_string(const std::string& text,
                                     const std::string& origin = "<string>");

  bool has_section(const std::string& section) const;
  bool has(const std::string& section, const std::string& key) const;
  std::vector<std::string> sections() const;

  const Entry& entry(const std::string& section, const std::string& key) const;

  // Scalar accessors; the entry must hold exactly one token.
  std::string get_string(const std::string& sec, const std::string& key) const;
  std::string get_string(const std::string& sec, const std::string& key,
                         const std::string& fallback) const;
  long long get_int(const std::string& sec, const std::string& key) const;
  long long get_int(const std::string& sec, const std::string& key,
                    long long fallback) const;
  double get_double(const std::string& sec, const std::string& key) const;
  double get_double(const std::string& sec, const std::string& key,
                    double fallback) const;
  bool get_bool(const std::string& sec, const std::string& key,
                bool fallback) const;

  // List accessors.
  std::vector<long long> get_ints(const std::string& sec,
                                  const std::string& key) const;
  std::vector<double> get_doubles(const std::string& sec,
                                  const std::string& key) const;
  // Seed index of the '*'-marked token (-1 if none).
  int seed_index(const std::string& sec, const std::string& key) const;

 private:
  std::map<std::string, std::map<std::string, Entry>> sections_;
  std::string origin_;

  [[noreturn]] void fail(const std::string& what) const;
};

long long parse_int_token(const std::string& tok, const std::string& context);
double parse_double_token(const std::string& tok, const std::string& context);

}  // namespace qnas
