// Copyright 2026 The kerrqnd Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef KERRQND_CONFIG_H
#define KERRQND_CONFIG_H

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>

namespace kerrqnd {

/// Malformed or inconsistent configuration. The message names the source and
/// line when one is known.
class ConfigError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

/// Flat `key = value` configuration with `#` comments.
///
/// Entries remember where they came from so that later validation errors
/// can point at the offending line.
class KeyValueConfig {
   public:
    struct Entry {
        std::string value;
        std::string origin;  // "file.cfg:12" or "--set"
    };

    static KeyValueConfig parse(std::istream &in, const std::string &source = "<config>");
    static KeyValueConfig parse_string(const std::string &text, const std::string &source = "<config>");
    static KeyValueConfig load_file(const std::string &path);

    /// Applies a `key=value` override on top of parsed entries.
    void apply_override(const std::string &assignment);
    void set(const std::string &key, const std::string &value, const std::string &origin = "--set");

    bool empty() const { return entries_.empty(); }
    bool has(const std::string &key) const { return entries_.count(key) > 0; }
    const std::map<std::string, Entry> &entries() const { return entries_; }

    /// Rejects any key not in `known`.
    void require_known(const std::set<std::string> &known) const;

    double get_double(const std::string &key) const;
    double get_double(const std::string &key, double fallback) const;
    std::optional<double> find_double(const std::string &key) const;
    std::int64_t get_int(const std::string &key, std::int64_t fallback) const;
    bool get_bool(const std::string &key, bool fallback) const;

   private:
    [[noreturn]] void fail(const std::string &key, const std::string &what) const;
    std::map<std::string, Entry> entries_;
};

}  // namespace kerrqnd

#endif
