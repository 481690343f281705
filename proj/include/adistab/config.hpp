#pragma once

#include "adistab/model.hpp"

#include <map>
#include <string>
#include <vector>

namespace adistab {

/// Plain `key = value` text. Blank lines and lines starting with '#' are
/// skipped; keys are case-sensitive; a repeated key is an error.
class KeyValueConfig
{
public:
    static KeyValueConfig parse(const std::string& text);
    static KeyValueConfig load(const std::string& path);

    bool has(const std::string& key) const { return values_.count(key) != 0; }
    const std::string& get(const std::string& key) const;
    std::string get_or(const std::string& key, const std::string& fallback) const;
    double number(const std::string& key) const;
    const std::map<std::string, std::string>& entries() const noexcept { return values_; }

private:
    std::map<std::string, std::string> values_;
};

/// Split on commas, semicolons and whitespace, dropping empty tokens.
std::vector<std::string> split_list(const std::string& text);

/// Evaluate a product such as `0.05*gamma` or `2*gamma/3`; the only
/// identifier allowed is `gamma`.
double evaluate_term(const std::string& term, double gamma);

/// Problem description:
///   k       = 2
///   gamma   = 0.9                 (optional, default 0; substituted into D)
///   D       = 0.025, 0.05*gamma; 0.05*gamma, 0.1     (row-major k*k)
///   beta    = 0 0; 0 0            (optional row-major k*k, diagonal ignored)
///   initial = exp-sincos-2d       (catalog name)
ProblemSpec problem_from_config(const KeyValueConfig& cfg);
ProblemSpec load_problem(const std::string& path);

} // namespace adistab
