#pragma once
// Key-value text config, the one format shared by scenario files and the
// CLI's --config flag. Lines are `key = value`; '#' starts a comment; blank
// lines are skipped. Keys are unique per file (duplicates are an error, not
// a silent override).

#include <cstdint>
#include <istream>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace flexisec {

class Config {
  public:
    Config() = default;

    static Config parse(std::istream& in);        // throws std::runtime_error on bad syntax
    static Config parse_file(const std::string& path);
    static Config parse_string(std::string_view text);

    bool has(const std::string& key) const;
    std::optional<std::string> get(const std::string& key) const;

    // Typed getters fall back to fallback when the key is absent and throw
    // std::runtime_error when the value does not parse cleanly.
    std::string get_string(const std::string& key, std::string fallback) const;
    std::uint64_t get_u64(const std::string& key, std::uint64_t fallback) const;
    double get_double(const std::string& key, double fallback) const;
    bool get_bool(const std::string& key, bool fallback) const;  // true/false/1/0/on/off

    // Typo guard: throws listing any keys outside the allowed set.
    void require_known_keys(std::initializer_list<std::string_view> allowed) const;

    const std::map<std::string, std::string>& entries() const { return entries_; }

  private:
    std::map<std::string, std::string> entries_;
};

}  // namespace flexisec
