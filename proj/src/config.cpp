#include "adistab/config.hpp"

#include "adistab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <sstream>

namespace adistab {

namespace {

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

double parse_number(const std::string& s)
{
    double v = 0.0;
    const char* first = s.data();
    const char* last = s.data() + s.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc() || ptr != last)
        throw StructuralError("not a number: '" + s + "'");
    return v;
}

} // namespace

KeyValueConfig KeyValueConfig::parse(const std::string& text)
{
    KeyValueConfig cfg;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::string t = trim(line);
        if (t.empty() || t.front() == '#')
            continue;
        const auto eq = t.find('=');
        if (eq == std::string::npos)
            throw StructuralError("line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(t.substr(0, eq));
        if (key.empty())
            throw StructuralError("line " + std::to_string(lineno) + ": empty key");
        if (!cfg.values_.emplace(key, trim(t.substr(eq + 1))).second)
            throw StructuralError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    }
    return cfg;
}

KeyValueConfig KeyValueConfig::load(const std::string& path)
{
    std::ifstream f(path);
    if (!f)
        throw StructuralError("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << f.rdbuf();
    return parse(ss.str());
}

const std::string& KeyValueConfig::get(const std::string& key) const
{
    auto it = values_.find(key);
    if (it == values_.end())
        throw StructuralError("missing config key '" + key + "'");
    return it->second;
}

std::string KeyValueConfig::get_or(const std::string& key, const std::string& fallback) const
{
    auto it = values_.find(key);
    return it == values_.end() ? fallback : it->second;
}

double KeyValueConfig::number(const std::string& key) const
{
    return parse_number(get(key));
}

std::vector<std::string> split_list(const std::string& text)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ';' || std::isspace(static_cast<unsigned char>(c))) {
            if (!cur.empty())
                out.push_back(std::move(cur));
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty())
        out.push_back(std::move(cur));
    return out;
}

double evaluate_term(const std::string& term, double gamma)
{
    double value = 1.0;
    char op = '*';
    std::size_t pos = 0;
    while (pos <= term.size()) {
        const auto next = term.find_first_of("*/", pos);
        const std::string factor = trim(term.substr(pos, next == std::string::npos ? std::string::npos : next - pos));
        if (factor.empty())
            throw StructuralError("malformed term '" + term + "'");
        const double f = factor == "gamma" ? gamma : parse_number(factor);
        value = op == '*' ? value * f : value / f;
        if (next == std::string::npos)
            break;
        op = term[next];
        pos = next + 1;
    }
    return value;
}

ProblemSpec problem_from_config(const KeyValueConfig& cfg)
{
    const double kd = cfg.number("k");
    if (kd < 2 || kd != static_cast<double>(static_cast<std::size_t>(kd)))
        throw StructuralError("k must be an integer >= 2");
    const auto k = static_cast<std::size_t>(kd);
    const double gamma = cfg.has("gamma") ? cfg.number("gamma") : 0.0;

    auto read_matrix = [&](const std::string& key) {
        const auto tokens = split_list(cfg.get(key));
        if (tokens.size() != k * k)
            throw StructuralError("'" + key + "' needs " + std::to_string(k * k) + " entries, got " +
                                  std::to_string(tokens.size()));
        std::vector<double> vals;
        for (const auto& t : tokens)
            vals.push_back(evaluate_term(t, gamma));
        return SquareMatrix(k, std::move(vals));
    };

    DiffusionMatrix d(read_matrix("D"));
    MixedStencilParams beta = cfg.has("beta") ? MixedStencilParams(read_matrix("beta"))
                                              : MixedStencilParams(k);
    std::string init = cfg.get_or("initial", k == 2 ? "exp-sincos-2d" : "exp-cos-3d");
    return ProblemSpec(std::move(d), std::move(beta), initial_function(init));
}

ProblemSpec load_problem(const std::string& path)
{
    return problem_from_config(KeyValueConfig::load(path));
}

} // namespace adistab
