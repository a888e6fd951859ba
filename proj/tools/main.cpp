#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "jelonek/errors.hpp"
#include "jelonek/pipeline.hpp"

using namespace jelonek;

int main(int argc, char** argv) {
    CLI::App app{"jelonek: non-proper value sets of polynomial plane maps"};

    std::string input_path = "-";
    std::string mode;
    long precision = -1, max_order = -1, depth_cap = -1;
    double tol = -1.0;
    long long seed = -1;
    std::string stages;
    bool as_text = false, as_json = false;

    app.add_option("input", input_path, "input JSON file ('-' for stdin)");
    app.add_option("--mode", mode, "exact | ball");
    app.add_option("--precision", precision, "ball precision in bits (>= 64)");
    app.add_option("--max-order", max_order, "series expansion depth");
    app.add_option("--depth-cap", depth_cap, "dicritical tree depth cap");
    app.add_option("--tol", tol, "tolerance for ball-mode comparisons");
    app.add_option("--seed", seed, "random seed for sampling checks");
    app.add_option("--stages", stages, "comma-separated stage list");
    app.add_flag("--text", as_text, "human-readable report");
    app.add_flag("--json", as_json, "JSON report (default)");

    CLI11_PARSE(app, argc, argv);

    Json input;
    try {
        if (input_path == "-") {
            std::stringstream buf;
            buf << std::cin.rdbuf();
            input = Json::parse(buf.str());
        } else {
            std::ifstream in(input_path);
            if (!in) {
                std::cerr << "cannot open " << input_path << "\n";
                return 2;
            }
            input = Json::parse(in);
        }
    } catch (const Json::parse_error& e) {
        std::cerr << "malformed input document: " << e.what() << "\n";
        return 2;
    }

    RunConfig cfg;
    try {
        // Document-level config, overridden by explicit flags.
        if (input.contains("mode")) mode = mode.empty() ? input["mode"].get<std::string>() : mode;
        if (input.contains("precision") && precision < 0) precision = input["precision"].get<long>();
        if (input.contains("max_order") && max_order < 0) max_order = input["max_order"].get<long>();
        if (input.contains("depth_cap") && depth_cap < 0) depth_cap = input["depth_cap"].get<long>();
        if (input.contains("tol") && tol < 0) tol = input["tol"].get<double>();
        if (input.contains("seed") && seed < 0) seed = input["seed"].get<long long>();
        if (input.contains("stages") && stages.empty())
            stages = input["stages"].get<std::string>();

        if (!mode.empty()) {
            if (mode == "exact") cfg.mode = RunConfig::Mode::exact;
            else if (mode == "ball") cfg.mode = RunConfig::Mode::ball;
            else throw input_error("config", "mode must be 'exact' or 'ball'");
        }
        if (precision >= 0) cfg.precision = precision;
        if (max_order >= 0) cfg.max_order = max_order;
        if (depth_cap >= 0) cfg.depth_cap = depth_cap;
        if (tol >= 0) cfg.tol = tol;
        if (seed >= 0) cfg.seed = uint64_t(seed);
        if (!stages.empty()) {
            std::stringstream ss(stages);
            std::string item;
            while (std::getline(ss, item, ',')) cfg.stages.insert(item);
        }
    } catch (const input_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const Json::exception& e) {
        std::cerr << "bad config field: " << e.what() << "\n";
        return 2;
    }

    try {
        RunReport rep = run_pipeline(input, cfg);
        if (as_text && !as_json)
            std::cout << render_text(rep.doc);
        else
            std::cout << rep.doc.dump(2) << "\n";
        if (rep.doc.contains("error"))
            std::cerr << rep.doc["error"].value("code", "") << ": "
                      << rep.doc["error"].value("message", "") << "\n";
        return rep.exit_code;
    } catch (const input_error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const resource_error& e) {
        std::cerr << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 3;
    }
}
