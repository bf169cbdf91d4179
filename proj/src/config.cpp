#include "recf/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "recf/errors.hpp"

namespace recf {

namespace {

std::string trim(const std::string& s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::size_t start = 0;
    while (true) {
        const std::size_t pos = s.find(sep, start);
        if (pos == std::string::npos) {
            parts.push_back(s.substr(start));
            break;
        }
        parts.push_back(s.substr(start, pos - start));
        start = pos + 1;
    }
    return parts;
}

double to_double(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    if (t.empty())
        throw config_error(what + ": empty number");
    char* end = nullptr;
    const double v = std::strtod(t.c_str(), &end);
    if (end != t.c_str() + t.size())
        throw config_error(what + ": cannot parse number '" + t + "'");
    return v;
}

long to_long(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    char* end = nullptr;
    const long v = std::strtol(t.c_str(), &end, 10);
    if (t.empty() || end != t.c_str() + t.size())
        throw config_error(what + ": cannot parse integer '" + t + "'");
    return v;
}

std::uint64_t to_uint64(const std::string& s, const std::string& what) {
    const std::string t = trim(s);
    if (t.empty() || t[0] == '-')
        throw config_error(what + ": cannot parse unsigned integer '" + t + "'");
    char* end = nullptr;
    const unsigned long long v = std::strtoull(t.c_str(), &end, 10);
    if (end != t.c_str() + t.size())
        throw config_error(what + ": cannot parse unsigned integer '" + t + "'");
    return static_cast<std::uint64_t>(v);
}

// Shortest decimal form that parses back to the same double.
std::string roundtrip_double(double v) {
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string join_ints(const std::vector<int>& xs) {
    std::ostringstream os;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        if (i) os << ',';
        os << xs[i];
    }
    return os.str();
}

} // namespace

Population parse_population(const std::string& text) {
    const std::vector<std::string> parts = split(trim(text), ':');
    if (parts.size() != 3)
        throw config_error("population: expected FAMILY:PARAM:PARAM, got '" + text + "'");
    const std::string family = trim(parts[0]);
    if (family == "gamma") {
        const double shape = to_double(parts[1], "population shape");
        const double scale = to_double(parts[2], "population scale");
        if (!(shape > 0.0) || !(scale > 0.0))
            throw config_error("population: gamma shape and scale must be positive");
        return GammaPopulation{shape, scale};
    }
    if (family == "lognormal") {
        const double mu = to_double(parts[1], "population mu");
        const double sigma = to_double(parts[2], "population sigma");
        if (!(sigma > 0.0))
            throw config_error("population: lognormal sigma must be positive");
        return LogNormalPopulation{mu, sigma};
    }
    throw config_error("population: unknown family '" + family + "'");
}

void parse_interval(const std::string& text, double& lo, double& hi) {
    const std::vector<std::string> parts = split(trim(text), ':');
    if (parts.size() != 2)
        throw config_error("interval: expected LO:HI, got '" + text + "'");
    lo = to_double(parts[0], "interval lower");
    hi = to_double(parts[1], "interval upper");
    if (!(lo < hi))
        throw config_error("interval: lower must be below upper in '" + text + "'");
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    for (const std::string& part : split(trim(text), ','))
        out.push_back(static_cast<int>(to_long(part, "integer list")));
    if (out.empty())
        throw config_error("integer list: empty");
    return out;
}

namespace {

void apply_key(ExperimentConfig& cfg, const std::string& key, const std::string& value) {
    if (key == "population") {
        parse_population(value); // validate eagerly
        cfg.population = trim(value);
    } else if (key == "n") {
        cfg.sample_sizes = parse_int_list(value);
    } else if (key == "order") {
        cfg.orders = parse_int_list(value);
    } else if (key == "cdf-interval") {
        parse_interval(value, cfg.cdf_lower, cfg.cdf_upper);
    } else if (key == "q-interval") {
        parse_interval(value, cfg.q_lower, cfg.q_upper);
    } else if (key == "mesh") {
        cfg.mesh = static_cast<int>(to_long(value, "mesh"));
    } else if (key == "weight") {
        cfg.weight = trim(value);
    } else if (key == "draws") {
        cfg.draws = to_long(value, "draws");
    } else if (key == "seed") {
        cfg.seed = to_uint64(value, "seed");
    } else if (key == "out") {
        cfg.out_dir = trim(value);
    } else {
        throw config_error("unknown config key '" + key + "'");
    }
}

} // namespace

ExperimentConfig parse_config_text(const std::string& text, ExperimentConfig base) {
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const std::size_t hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        line = trim(line);
        if (line.empty()) continue;
        const std::size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) + ": expected key = value");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error("config line " + std::to_string(lineno) + ": empty key");
        apply_key(base, key, value);
    }
    return base;
}

ExperimentConfig load_config_file(const std::filesystem::path& path, ExperimentConfig base) {
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open config file '" + path.string() + "'");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str(), std::move(base));
}

std::string serialize_config(const ExperimentConfig& config) {
    std::ostringstream os;
    os << "population = " << config.population << '\n';
    os << "n = " << join_ints(config.sample_sizes) << '\n';
    os << "order = " << join_ints(config.orders) << '\n';
    os << "cdf-interval = " << roundtrip_double(config.cdf_lower) << ':'
       << roundtrip_double(config.cdf_upper) << '\n';
    os << "q-interval = " << roundtrip_double(config.q_lower) << ':'
       << roundtrip_double(config.q_upper) << '\n';
    os << "mesh = " << config.mesh << '\n';
    if (!config.weight.empty()) os << "weight = " << config.weight << '\n';
    os << "draws = " << config.draws << '\n';
    os << "seed = " << config.seed << '\n';
    os << "out = " << config.out_dir << '\n';
    return os.str();
}

std::uint64_t config_hash(const ExperimentConfig& config) {
    const std::string text = serialize_config(config);
    std::uint64_t h = 0xcbf29ce484222325ULL; // FNV-1a offset basis
    for (unsigned char ch : text) {
        h ^= ch;
        h *= 0x100000001b3ULL; // FNV prime
    }
    return h;
}

void validate_config(const ExperimentConfig& config) {
    parse_population(config.population);
    if (config.sample_sizes.empty())
        throw config_error("n: need at least one sample size");
    for (int n : config.sample_sizes)
        if (n < 1)
            throw config_error("n: sample sizes must be >= 1");
    if (config.orders.empty())
        throw config_error("order: need at least one order");
    for (int j : config.orders)
        if (j < 1 || j > 3)
            throw config_error("order: orders must lie in {1, 2, 3}");
    if (!(config.cdf_lower < config.cdf_upper))
        throw config_error("cdf-interval: lower must be below upper");
    if (!(config.q_lower > 0.0 && config.q_lower < config.q_upper && config.q_upper < 1.0))
        throw config_error("q-interval: need 0 < lower < upper < 1");
    if (config.mesh < 2)
        throw config_error("mesh: need at least two nodes");
    if (config.draws < 1)
        throw config_error("draws: must be >= 1");
    if (!config.weight.empty() && config.weight != "uniform" && config.weight != "normal")
        throw config_error("weight: must be 'uniform' or 'normal'");
    if (config.out_dir.empty())
        throw config_error("out: output directory must be nonempty");
}

EvalInterval cdf_interval(const ExperimentConfig& config) {
    return EvalInterval(EvalInterval::Kind::distribution_domain,
                        config.cdf_lower, config.cdf_upper);
}

EvalInterval quantile_interval(const ExperimentConfig& config) {
    return EvalInterval(EvalInterval::Kind::quantile_domain,
                        config.q_lower, config.q_upper);
}

WeightKind weight_kind(const ExperimentConfig& config) {
    if (config.weight.empty()) return WeightKind::none;
    if (config.weight == "uniform") return WeightKind::uniform;
    if (config.weight == "normal") return WeightKind::normal;
    throw config_error("weight: must be 'uniform' or 'normal'");
}

} // namespace recf
