#include "rbmcs/config.hpp"

#include "rbmcs/errors.hpp"
#include "rbmcs/rng.hpp"

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace rbmcs {

std::string method_name(MethodKind method)
{
    switch (method) {
    case MethodKind::ips: return "ips";
    case MethodKind::rbm1: return "rbm1";
    case MethodKind::rbmr: return "rbmr";
    case MethodKind::rbmr_equiv: return "rbmr_equiv";
    case MethodKind::mc: return "mc";
    }
    return "?";
}

MethodKind parse_method(const std::string& name)
{
    if (name == "ips") return MethodKind::ips;
    if (name == "rbm1") return MethodKind::rbm1;
    if (name == "rbmr") return MethodKind::rbmr;
    if (name == "rbmr_equiv" || name == "rbmr-equiv") return MethodKind::rbmr_equiv;
    if (name == "mc") return MethodKind::mc;
    throw config_error("unknown method '" + name + "' (expected ips|rbm1|rbmr|rbmr_equiv|mc)");
}

long SimConfig::windows() const
{
    return std::lround(t_end / tau);
}

void SimConfig::validate() const
{
    if (n < 2)
        throw config_error("config: n must be >= 2");
    if (d < 1)
        throw config_error("config: d must be >= 1");
    if (method != MethodKind::ips) {
        if (p < 2)
            throw config_error("config: p must be >= 2");
        if (p > n)
            throw config_error("config: p must be <= n");
    }
    if (!(tau > 0.0))
        throw config_error("config: tau must be > 0");
    if (!(dt > 0.0) || dt > tau * (1.0 + 1e-9))
        throw config_error("config: requires 0 < dt <= tau");
    const long n_sub = std::lround(tau / dt);
    if (n_sub < 1 || std::abs(n_sub * dt - tau) > 1e-9 * tau)
        throw config_error("config: tau must be an integer multiple of dt");
    if ((method == MethodKind::rbm1 || method == MethodKind::rbmr_equiv) && n % p != 0)
        throw config_error("config: p must divide n for rbm1 and rbmr_equiv");
    if (t_end < 0.0)
        throw config_error("config: t_end must be >= 0");
    if (t_end > 0.0) {
        const long w = windows();
        if (w < 1 || std::abs(w * tau - t_end) > 1e-9 * t_end)
            throw config_error("config: t_end must be an integer multiple of tau");
    }
    if (replications < 1)
        throw config_error("config: replications must be >= 1");
    if (!(init.box_length > 0.0) || !(init.velocity_range > 0.0))
        throw config_error("config: init box_length and velocity_range must be > 0");
    if (!(kappa > 0.0))
        throw config_error("config: kappa must be > 0");
}

namespace {

std::string trim(const std::string& s)
{
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos)
        return "";
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

} // namespace

Kernel parse_kernel_spec(const std::string& spec)
{
    const auto colon = spec.find(':');
    const std::string name = (colon == std::string::npos) ? spec : spec.substr(0, colon);
    const std::string arg = (colon == std::string::npos) ? "" : spec.substr(colon + 1);
    if (name == "constant")
        return Kernel::constant(arg.empty() ? 1.0 : std::stod(arg));
    if (name == "invpow")
        return Kernel::inverse_power(arg.empty() ? 0.25 : std::stod(arg));
    throw config_error("unknown kernel spec '" + spec + "' (expected constant:V or invpow:BETA)");
}

SimConfig load_config_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw config_error("cannot open config file '" + path + "'");

    SimConfig config;
    std::string kernel_variant = "invpow";
    double kernel_value = 1.0;
    double kernel_beta = 0.25;

    std::string section = "sim";
    std::string line;
    while (std::getline(in, line)) {
        const auto comment = line.find('#');
        if (comment != std::string::npos)
            line = line.substr(0, comment);
        line = trim(line);
        if (line.empty())
            continue;
        if (line.front() == '[' && line.back() == ']') {
            section = trim(line.substr(1, line.size() - 2));
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config file: expected 'key = value', got '" + line + "'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));

        if (section == "sim") {
            if (key == "n") config.n = std::stoi(value);
            else if (key == "d") config.d = std::stoi(value);
            else if (key == "p") config.p = std::stoi(value);
            else if (key == "tau") config.tau = std::stod(value);
            else if (key == "dt") config.dt = std::stod(value);
            else if (key == "kappa") config.kappa = std::stod(value);
            else if (key == "method") config.method = parse_method(value);
            else if (key == "t_end") config.t_end = std::stod(value);
            else if (key == "seed") config.seed = std::stoull(value);
            else if (key == "replications") config.replications = std::stoi(value);
            else throw config_error("config file: unknown key [sim] " + key);
        } else if (section == "kernel") {
            if (key == "variant") kernel_variant = value;
            else if (key == "value") kernel_value = std::stod(value);
            else if (key == "beta") kernel_beta = std::stod(value);
            else throw config_error("config file: unknown key [kernel] " + key);
        } else if (section == "init") {
            if (key == "box_length") config.init.box_length = std::stod(value);
            else if (key == "velocity_range") config.init.velocity_range = std::stod(value);
            else throw config_error("config file: unknown key [init] " + key);
        } else if (section == "output") {
            if (key == "dir") config.out_dir = value;
            else if (key == "snapshots") config.record_snapshots = (value == "true" || value == "1");
            else throw config_error("config file: unknown key [output] " + key);
        } else {
            throw config_error("config file: unknown section [" + section + "]");
        }
    }

    if (kernel_variant == "constant")
        config.kernel = Kernel::constant(kernel_value);
    else if (kernel_variant == "invpow")
        config.kernel = Kernel::inverse_power(kernel_beta);
    else
        throw config_error("config file: unknown kernel variant '" + kernel_variant + "'");
    return config;
}

Ensemble initial_ensemble(const SimConfig& config)
{
    RngStream rng(config.seed, 0);
    Ensemble e(config.n, config.d);
    for (int i = 0; i < config.n; ++i)
        for (int k = 0; k < config.d; ++k)
            e.xat(i, k) = rng.uniform(0.0, config.init.box_length);
    for (int i = 0; i < config.n; ++i)
        for (int k = 0; k < config.d; ++k)
            e.vat(i, k) = rng.uniform(-config.init.velocity_range, config.init.velocity_range);
    // mean-subtract so the total momentum starts at zero
    for (int k = 0; k < config.d; ++k) {
        double mean = 0.0;
        for (int i = 0; i < config.n; ++i)
            mean += e.vat(i, k);
        mean /= config.n;
        for (int i = 0; i < config.n; ++i)
            e.vat(i, k) -= mean;
    }
    return e;
}

} // namespace rbmcs
