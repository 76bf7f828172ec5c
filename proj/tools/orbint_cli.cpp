/* Command-line front end.  Parses curve files and query parameters, calls
 * the shared-library C interface, and prints one exact report per run.
 * Exit codes: 0 success, 1 mathematical failure (e.g. a non-removable
 * pole), 2 usage or input error.
 */

#include "orbint/capi.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

namespace {

using nlohmann::json;

struct Options {
    std::string curve_path;
    std::string t = "0";
    int n = 1;
    int d = 1;
    long e = 0;
    long degD = 0;
    unsigned salt = 0;
    unsigned seed = 1;
    std::string format = "json";
};

/* owned C string -> std::string */
std::string take(char* s) {
    std::string out = s ? s : "";
    orbint_string_free(s);
    return out;
}

int fail(int code, const std::string& msg) {
    std::cerr << "error: " << msg << "\n";
    return code;
}

int load_curve(const std::string& path, orbint_curve** out) {
    std::ifstream in(path);
    if (!in)
        return fail(ORBINT_USAGE_ERROR, "cannot open curve file: " + path);
    std::ostringstream text;
    text << in.rdbuf();
    char* err = nullptr;
    int rc = orbint_curve_parse_json(text.str().c_str(), out, &err);
    if (rc != ORBINT_OK)
        return fail(rc, path + ": " + take(err));
    return ORBINT_OK;
}

void print_value_text(std::ostream& os, const std::string& key, const json& v, int width) {
    os << key << std::string((size_t)(width - (int)key.size()), ' ') << " = ";
    if (v.is_object() && v.contains("sqrtq_coeff"))
        os << v["rational"].get<std::string>() << " + " << v["sqrtq_coeff"].get<std::string>()
           << " * sqrt(q)";
    else if (v.is_string())
        os << v.get<std::string>();
    else
        os << v.dump();
    os << "\n";
}

int emit(const std::string& command, const json& inputs, const json& body, long elapsed_ms,
         const std::string& format) {
    json report;
    report["command"] = command;
    report["inputs"] = inputs;
    report["elapsed_ms"] = elapsed_ms;
    for (const auto& [k, v] : body.items())
        report[k] = v;
    if (format == "json") {
        std::cout << report.dump() << "\n";
        return 0;
    }
    int width = 0;
    for (const auto& [k, v] : report.items())
        width = std::max(width, (int)k.size());
    for (const auto& [k, v] : report.items())
        print_value_text(std::cout, k, v, width);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact curve zeta volumes and block-regular contributions"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--format", opt.format, "output format")
        ->check(CLI::IsMember({"json", "text"}));

    auto add_curve = [&](CLI::App* cmd) {
        cmd->fallthrough(); /* lets --format appear after the subcommand */
        cmd->add_option("--curve", opt.curve_path, "curve JSON file")->required();
    };
    auto add_query = [&](CLI::App* cmd) {
        cmd->add_option("--n", opt.n, "rank")->required();
        cmd->add_option("--d", opt.d, "Jordan block count")->required();
        cmd->add_option("--e", opt.e, "degree");
        cmd->add_option("--degD", opt.degD, "twisting divisor degree");
        cmd->add_option("--direction-salt", opt.salt, "generic direction selector");
    };

    CLI::App* zeta = app.add_subcommand("zeta", "evaluate Z_C at a rational point");
    add_curve(zeta);
    zeta->add_option("--t", opt.t, "evaluation point p/q")->required();

    CLI::App* volume = app.add_subcommand("volume", "rank-n volume of the degree-zero quotient");
    add_curve(volume);
    volume->add_option("--n", opt.n, "rank")->required();

    CLI::App* integral = app.add_subcommand("integral", "full block-regular value");
    add_curve(integral);
    add_query(integral);

    CLI::App* psi = app.add_subcommand("psi", "symmetrized average at 1 alone");
    add_curve(psi);
    add_query(psi);

    CLI::App* checks = app.add_subcommand("check-identities", "run every identity suite");
    checks->fallthrough();
    checks->add_option("--n", opt.n, "maximal rank");
    checks->add_option("--seed", opt.seed, "random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return ORBINT_USAGE_ERROR;
    }

    auto t0 = std::chrono::steady_clock::now();
    auto elapsed = [&] {
        return (long)std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - t0)
            .count();
    };

    orbint_curve* curve = nullptr;
    char* out = nullptr;
    char* err = nullptr;
    int rc = ORBINT_OK;

    if (checks->parsed()) {
        rc = orbint_check_identities(opt.n, opt.seed, &out, &err);
        json body = json::parse(take(out), nullptr, false);
        if (body.is_discarded())
            return fail(ORBINT_MATH_ERROR, take(err));
        json inputs{{"n", opt.n}, {"seed", opt.seed}};
        emit("check-identities", inputs, json{{"checks", body}}, elapsed(), opt.format);
        if (rc != ORBINT_OK)
            std::cerr << "error: " << take(err) << "\n";
        return rc;
    }

    if (int lrc = load_curve(opt.curve_path, &curve); lrc != ORBINT_OK)
        return lrc;

    std::string command;
    json inputs{{"curve", opt.curve_path}};
    json body;

    if (zeta->parsed()) {
        command = "zeta";
        inputs["t"] = opt.t;
        rc = orbint_zeta_at(curve, opt.t.c_str(), &out, &err);
        if (rc == ORBINT_OK)
            body["value"] = take(out);
    } else if (volume->parsed()) {
        command = "volume";
        inputs["n"] = opt.n;
        rc = orbint_volume(curve, opt.n, &out, &err);
        if (rc == ORBINT_OK)
            body["value"] = take(out);
    } else if (psi->parsed()) {
        command = "psi";
        inputs.update({{"n", opt.n}, {"d", opt.d}, {"e", opt.e}, {"degD", opt.degD},
                       {"direction_salt", opt.salt}});
        rc = orbint_psi(curve, opt.degD, opt.n, opt.d, opt.e, opt.salt, &out, &err);
        if (rc == ORBINT_OK)
            body["value"] = take(out);
    } else { /* integral */
        command = "integral";
        inputs.update({{"n", opt.n}, {"d", opt.d}, {"e", opt.e}, {"degD", opt.degD},
                       {"direction_salt", opt.salt}});
        rc = orbint_integral(curve, opt.degD, opt.n, opt.d, opt.e, opt.salt, &out, &err);
        if (rc == ORBINT_OK) {
            json res = json::parse(take(out));
            body["value"] = res["value"];
            res.erase("value");
            body["factors"] = res;
        }
    }

    orbint_curve_free(curve);
    if (rc != ORBINT_OK)
        return fail(rc, take(err));
    return emit(command, inputs, body, elapsed(), opt.format);
}
