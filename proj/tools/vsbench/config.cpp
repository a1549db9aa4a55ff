#include "config.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

namespace vsbench {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) return "";
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(const std::string& v, const std::string& key) {
    try {
        std::size_t used = 0;
        const double x = std::stod(v, &used);
        if (used != v.size()) throw std::invalid_argument(v);
        return x;
    } catch (const std::exception&) {
        throw config_error("config: bad numeric value '" + v + "' for key '" + key + "'");
    }
}

std::int64_t parse_int(const std::string& v, const std::string& key) {
    std::int64_t x = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size())
        throw config_error("config: bad integer value '" + v + "' for key '" + key + "'");
    return x;
}

std::uint64_t parse_u64(const std::string& v, const std::string& key) {
    std::uint64_t x = 0;
    const auto [p, ec] = std::from_chars(v.data(), v.data() + v.size(), x);
    if (ec != std::errc() || p != v.data() + v.size())
        throw config_error("config: bad seed value '" + v + "' for key '" + key + "'");
    return x;
}

std::vector<double> parse_probs(const std::string& v, const std::string& key) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_double(trim(item), key));
    if (out.empty()) throw config_error("config: empty probability list");
    return out;
}

} // namespace

std::vector<std::pair<std::string, std::string>> RunConfig::echo() const {
    auto num = [](double v) {
        std::ostringstream o;
        o.precision(17);
        o << v;
        return o.str();
    };
    std::vector<std::pair<std::string, std::string>> kv = {
        {"problem", problem},
        {"solver", solver},
        {"m", std::to_string(m)},
        {"n", std::to_string(n)},
        {"alpha", num(alpha)},
        {"noise_sigma", num(noise_sigma)},
        {"blur_size", std::to_string(blur_size)},
        {"blur_sigma", num(blur_sigma)},
        {"b_param", num(b_param)},
        {"iters", std::to_string(iters)},
        {"trace_every", std::to_string(trace_every)},
        {"seed", std::to_string(seed)},
        {"ref_iters", std::to_string(ref_iters)},
    };
    if (!probs.empty()) {
        std::string p;
        for (std::size_t i = 0; i < probs.size(); ++i) {
            if (i) p += ",";
            p += num(probs[i]);
        }
        kv.emplace_back("probs", p);
    }
    return kv;
}

RunConfig parse_config_text(const std::string& text) {
    RunConfig cfg;
    bool alpha_given = false;
    std::istringstream in(text);
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        const auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        line = trim(line);
        if (line.empty()) continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config: line " + std::to_string(lineno) +
                               " is not of the form key=value");
        const std::string key = trim(line.substr(0, eq));
        const std::string val = trim(line.substr(eq + 1));
        if (val.empty())
            throw config_error("config: empty value for key '" + key + "'");

        if (key == "problem") {
            if (val != "denoise" && val != "deblur")
                throw config_error("config: problem must be denoise or deblur");
            cfg.problem = val;
        } else if (key == "solver") {
            static const char* known[] = {"vast", "vast-constmu", "svast", "pdhg", "spdhg"};
            if (std::find(std::begin(known), std::end(known), val) == std::end(known))
                throw config_error("config: unknown solver '" + val + "'");
            cfg.solver = val;
        } else if (key == "m") {
            cfg.m = parse_int(val, key);
        } else if (key == "n") {
            cfg.n = parse_int(val, key);
        } else if (key == "alpha") {
            cfg.alpha = parse_double(val, key);
            alpha_given = true;
        } else if (key == "noise_sigma") {
            cfg.noise_sigma = parse_double(val, key);
        } else if (key == "blur_size") {
            cfg.blur_size = parse_int(val, key);
        } else if (key == "blur_sigma") {
            cfg.blur_sigma = parse_double(val, key);
        } else if (key == "b_param") {
            cfg.b_param = parse_double(val, key);
        } else if (key == "iters") {
            cfg.iters = parse_int(val, key);
        } else if (key == "trace_every") {
            cfg.trace_every = parse_int(val, key);
        } else if (key == "seed") {
            cfg.seed = parse_u64(val, key);
        } else if (key == "ref_iters") {
            cfg.ref_iters = parse_int(val, key);
        } else if (key == "probs") {
            cfg.probs = parse_probs(val, key);
        } else {
            throw config_error("config: unknown key '" + key + "'");
        }
    }
    if (!alpha_given && cfg.problem == "deblur") cfg.alpha = 10.0;

    if (cfg.m < 8 || cfg.n < 8) throw config_error("config: m, n must be >= 8");
    if (cfg.alpha <= 0) throw config_error("config: alpha must be > 0");
    if (cfg.noise_sigma < 0) throw config_error("config: noise_sigma must be >= 0");
    if (cfg.b_param <= 0) throw config_error("config: b_param must be > 0");
    if (cfg.iters < 1 || cfg.ref_iters < 1)
        throw config_error("config: iters and ref_iters must be >= 1");
    if (cfg.trace_every < 1) throw config_error("config: trace_every must be >= 1");
    for (double p : cfg.probs)
        if (!(p > 0.0) || p > 1.0) throw config_error("config: probs must lie in (0, 1]");
    return cfg;
}

RunConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw config_error("config: cannot open '" + path.string() + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

} // namespace vsbench
