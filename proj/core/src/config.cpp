#include "dho/config.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "dho/errors.hpp"

namespace dho {
namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& msg) { throw Error("cli", msg); }

std::string join(const std::string& path, const std::string& key) {
    return path.empty() ? key : path + "." + key;
}

void require_object(const json& j, const std::string& path) {
    if (!j.is_object())
        fail("schema error: '" + (path.empty() ? std::string("<root>") : path) +
             "' must be an object");
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool ok = false;
        for (const char* a : allowed)
            if (it.key() == a) {
                ok = true;
                break;
            }
        if (!ok) fail("schema error: unknown key '" + join(path, it.key()) + "'");
    }
}

double get_number(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail("schema error: missing key '" + join(path, key) + "'");
    if (!it->is_number())
        fail("schema error: '" + join(path, key) + "' must be a number");
    return it->get<double>();
}

double get_number_or(const json& obj, const std::string& path, const char* key,
                     double dflt) {
    if (obj.find(key) == obj.end()) return dflt;
    return get_number(obj, path, key);
}

long get_integer(const json& obj, const std::string& path, const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail("schema error: missing key '" + join(path, key) + "'");
    if (!it->is_number_integer())
        fail("schema error: '" + join(path, key) + "' must be an integer");
    return it->get<long>();
}

long get_integer_or(const json& obj, const std::string& path, const char* key,
                    long dflt) {
    if (obj.find(key) == obj.end()) return dflt;
    return get_integer(obj, path, key);
}

std::string get_string(const json& obj, const std::string& path,
                       const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail("schema error: missing key '" + join(path, key) + "'");
    if (!it->is_string())
        fail("schema error: '" + join(path, key) + "' must be a string");
    return it->get<std::string>();
}

void range_check(bool ok, const std::string& path, const char* key,
                 const char* what, double got) {
    if (ok) return;
    std::ostringstream os;
    os << "range error: '" << join(path, key) << "' " << what << " (got " << got
       << ")";
    fail(os.str());
}

std::vector<double> get_positive_array(const json& obj, const std::string& path,
                                       const char* key) {
    auto it = obj.find(key);
    if (it == obj.end())
        fail("schema error: missing key '" + join(path, key) + "'");
    if (!it->is_array())
        fail("schema error: '" + join(path, key) + "' must be an array");
    std::vector<double> out;
    out.reserve(it->size());
    for (std::size_t i = 0; i < it->size(); ++i) {
        const json& e = (*it)[i];
        if (!e.is_number())
            fail("schema error: '" + join(path, key) + "[" + std::to_string(i) +
                 "]' must be a number");
        const double v = e.get<double>();
        range_check(v > 0.0, path, key, "entries must be > 0", v);
        out.push_back(v);
    }
    if (out.size() < 4)
        fail("range error: '" + join(path, key) + "' needs at least 4 samples");
    return out;
}

FrictionProfile parse_friction(const json& j, const std::string& path,
                               json& canon) {
    require_object(j, path);
    const std::string kind = get_string(j, path, "kind");
    canon["kind"] = kind;
    if (kind == "unit") {
        check_keys(j, path, {"kind"});
        return FrictionProfile::unit();
    }
    if (kind == "exponential") {
        check_keys(j, path, {"kind", "gamma"});
        const double g = get_number(j, path, "gamma");
        range_check(g > 0.0, path, "gamma", "must be > 0", g);
        canon["gamma"] = g;
        return FrictionProfile::exponential_decay(g);
    }
    if (kind == "tabulated") {
        check_keys(j, path, {"kind", "dt", "values"});
        const double dt = get_number(j, path, "dt");
        range_check(dt > 0.0, path, "dt", "must be > 0", dt);
        auto values = get_positive_array(j, path, "values");
        range_check(std::abs(values.front() - 1.0) <= 1e-9, path, "values",
                    "must start at f(0) = 1", values.front());
        canon["dt"] = dt;
        canon["values"] = values;
        return FrictionProfile::tabulated(dt, std::move(values));
    }
    fail("schema error: '" + join(path, "kind") +
         "' must be one of unit|exponential|tabulated");
}

FrequencyProfile parse_frequency(const json& j, const std::string& path,
                                 json& canon) {
    require_object(j, path);
    const std::string kind = get_string(j, path, "kind");
    canon["kind"] = kind;
    if (kind == "constant") {
        check_keys(j, path, {"kind", "omega0"});
        const double w0 = get_number(j, path, "omega0");
        range_check(w0 > 0.0, path, "omega0", "must be > 0", w0);
        canon["omega0"] = w0;
        return FrequencyProfile::constant(w0);
    }
    if (kind == "exphalf" || kind == "exp") {
        check_keys(j, path, {"kind", "omega0", "gamma"});
        const double w0 = get_number(j, path, "omega0");
        range_check(w0 > 0.0, path, "omega0", "must be > 0", w0);
        const double g = get_number(j, path, "gamma");
        range_check(g > 0.0, path, "gamma", "must be > 0", g);
        canon["omega0"] = w0;
        canon["gamma"] = g;
        return kind == "exphalf" ? FrequencyProfile::exp_half(w0, g)
                                 : FrequencyProfile::exp_full(w0, g);
    }
    if (kind == "tabulated") {
        check_keys(j, path, {"kind", "dt", "values"});
        const double dt = get_number(j, path, "dt");
        range_check(dt > 0.0, path, "dt", "must be > 0", dt);
        auto values = get_positive_array(j, path, "values");
        canon["dt"] = dt;
        canon["values"] = values;
        return FrequencyProfile::tabulated(dt, std::move(values));
    }
    fail("schema error: '" + join(path, "kind") +
         "' must be one of constant|exphalf|exp|tabulated");
}

} // namespace

RunConfig parse_config(const std::string& text) {
    json root;
    try {
        root = json::parse(text);
    } catch (const json::exception& e) {
        fail(std::string("config is not valid JSON: ") + e.what());
    }
    require_object(root, "");
    check_keys(root, "",
               {"oscillator", "time", "mode", "coherent", "ermakov", "output"});

    RunConfig rc;
    json canon;

    // --- oscillator ---
    auto osc_it = root.find("oscillator");
    if (osc_it == root.end()) fail("schema error: missing key 'oscillator'");
    const json& osc = *osc_it;
    require_object(osc, "oscillator");
    check_keys(osc, "oscillator", {"m", "nu", "friction", "frequency"});

    rc.oscillator.m = get_number_or(osc, "oscillator", "m", 1.0);
    range_check(rc.oscillator.m > 0.0, "oscillator", "m", "must be > 0",
                rc.oscillator.m);
    rc.oscillator.nu = get_number_or(osc, "oscillator", "nu", 1.0);
    range_check(rc.oscillator.nu > 0.0, "oscillator", "nu", "must be > 0",
                rc.oscillator.nu);
    canon["oscillator"]["m"] = rc.oscillator.m;
    canon["oscillator"]["nu"] = rc.oscillator.nu;

    if (auto it = osc.find("friction"); it != osc.end())
        rc.oscillator.friction = parse_friction(*it, "oscillator.friction",
                                                canon["oscillator"]["friction"]);
    else
        canon["oscillator"]["friction"]["kind"] = "unit";

    auto freq_it = osc.find("frequency");
    if (freq_it == osc.end())
        fail("schema error: missing key 'oscillator.frequency'");
    rc.oscillator.frequency = parse_frequency(*freq_it, "oscillator.frequency",
                                              canon["oscillator"]["frequency"]);
    rc.oscillator.validate();

    // --- time ---
    if (auto it = root.find("time"); it != root.end()) {
        const json& tm = *it;
        require_object(tm, "time");
        check_keys(tm, "time", {"t_end", "samples", "tol"});
        rc.t_end = get_number_or(tm, "time", "t_end", 5.0);
        range_check(rc.t_end > 0.0, "time", "t_end", "must be > 0", rc.t_end);
        const long samples = get_integer_or(tm, "time", "samples", 512);
        range_check(samples >= 2 && samples <= 10000000, "time", "samples",
                    "must lie in [2, 1e7]", double(samples));
        rc.samples = std::size_t(samples);
        rc.tol = get_number_or(tm, "time", "tol", 1e-10);
        range_check(rc.tol > 0.0 && rc.tol <= 0.1, "time", "tol",
                    "must lie in (0, 0.1]", rc.tol);
    }
    canon["time"]["t_end"] = rc.t_end;
    canon["time"]["samples"] = rc.samples;
    canon["time"]["tol"] = rc.tol;

    // --- mode ---
    if (auto it = root.find("mode"); it != root.end()) {
        const json& md = *it;
        require_object(md, "mode");
        const bool helicity =
            md.find("n_plus") != md.end() || md.find("n_minus") != md.end();
        const bool radial = md.find("n") != md.end() || md.find("ell") != md.end();
        if (helicity && radial)
            fail("schema error: 'mode' mixes (n_plus, n_minus) with (n, ell)");
        if (radial) {
            check_keys(md, "mode", {"n", "ell"});
            const long n = get_integer_or(md, "mode", "n", 0);
            range_check(n >= 0, "mode", "n", "must be >= 0", double(n));
            const long ell = get_integer_or(md, "mode", "ell", 0);
            rc.mode = ModeIndex::from_radial(int(n), int(ell));
        } else {
            check_keys(md, "mode", {"n_plus", "n_minus"});
            const long np = get_integer_or(md, "mode", "n_plus", 0);
            const long nm = get_integer_or(md, "mode", "n_minus", 0);
            range_check(np >= 0, "mode", "n_plus", "must be >= 0", double(np));
            range_check(nm >= 0, "mode", "n_minus", "must be >= 0", double(nm));
            rc.mode = ModeIndex{int(np), int(nm)};
        }
    }
    canon["mode"]["n_plus"] = rc.mode.n_plus;
    canon["mode"]["n_minus"] = rc.mode.n_minus;

    // --- coherent --- (default parameter valid for both families: |0.5| < 1)
    rc.coherent_state.parameter = coherent::complexd(0.5, 0.0);
    if (auto it = root.find("coherent"); it != root.end()) {
        const json& ch = *it;
        require_object(ch, "coherent");
        check_keys(ch, "coherent", {"family", "re", "im", "ell", "truncation"});
        const std::string family = get_string(ch, "coherent", "family");
        if (family == "barut-girardello")
            rc.coherent_state.family = coherent::Family::BarutGirardello;
        else if (family == "perelomov")
            rc.coherent_state.family = coherent::Family::Perelomov;
        else
            fail("schema error: 'coherent.family' must be "
                 "barut-girardello|perelomov");
        const double re = get_number_or(ch, "coherent", "re", 0.5);
        const double im = get_number_or(ch, "coherent", "im", 0.0);
        rc.coherent_state.parameter = coherent::complexd(re, im);
        const long ell = get_integer_or(ch, "coherent", "ell", 0);
        range_check(ell >= 0, "coherent", "ell", "must be >= 0", double(ell));
        rc.coherent_state.ell = int(ell);
        const long trunc = get_integer_or(ch, "coherent", "truncation", 0);
        range_check(trunc >= 0 && trunc <= 512, "coherent", "truncation",
                    "must lie in [0, 512]", double(trunc));
        rc.coherent_state.truncation = int(trunc);
        if (rc.coherent_state.family == coherent::Family::Perelomov)
            range_check(std::abs(rc.coherent_state.parameter) < 1.0, "coherent",
                        "re", "needs |eta| < 1",
                        std::abs(rc.coherent_state.parameter));
    }
    canon["coherent"]["family"] =
        rc.coherent_state.family == coherent::Family::BarutGirardello
            ? "barut-girardello"
            : "perelomov";
    canon["coherent"]["re"] = rc.coherent_state.parameter.real();
    canon["coherent"]["im"] = rc.coherent_state.parameter.imag();
    canon["coherent"]["ell"] = rc.coherent_state.ell;
    canon["coherent"]["truncation"] = rc.coherent_state.truncation;

    // --- ermakov ---
    if (auto it = root.find("ermakov"); it != root.end()) {
        const json& em = *it;
        require_object(em, "ermakov");
        check_keys(em, "ermakov", {"rho0", "rhodot0"});
        const double rho0 = get_number(em, "ermakov", "rho0");
        range_check(rho0 > 0.0, "ermakov", "rho0", "must be > 0", rho0);
        const double rhodot0 = get_number_or(em, "ermakov", "rhodot0", 0.0);
        rc.ermakov_ic = std::make_pair(rho0, rhodot0);
        canon["ermakov"]["rho0"] = rho0;
        canon["ermakov"]["rhodot0"] = rhodot0;
    }

    // --- output ---
    if (auto it = root.find("output"); it != root.end()) {
        if (!it->is_string()) fail("schema error: 'output' must be a string");
        rc.output = it->get<std::string>();
    }
    canon["output"] = rc.output;

    rc.canonical_text = canon.dump();
    return rc;
}

RunConfig load_config(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail("cannot open config file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace dho
