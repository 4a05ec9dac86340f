// Command-line front end: build codes from a config file, encode/decode,
// compute rank weights, run seeded channel simulations and check the
// repository fixtures.

#include <atomic>
#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "gabfield/config.hpp"
#include "gabfield/parse.hpp"
#include "gabfield/serialize.hpp"

namespace {

using namespace gabfield;

constexpr int kExitUsage = 2;
constexpr int kExitValidation = 3;
constexpr int kExitDecodeFailure = 4;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError("cannot read file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write file: " + path);
    out << content;
}

// One element per line; blank lines and '#' comments are skipped.
std::vector<LElement> read_lvector(const std::string& path, const CyclicExtension& ext) {
    std::istringstream in(read_file(path));
    std::vector<LElement> v;
    std::string line;
    while (std::getline(in, line)) {
        std::size_t first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos || line[first] == '#') continue;
        v.push_back(parse_lelement(line, ext));
    }
    return v;
}

std::string render_lvector(std::span<const LElement> v) {
    std::string out;
    for (const LElement& e : v) {
        out += e.to_string();
        out += '\n';
    }
    return out;
}

struct EncodeArtifacts {
    std::vector<LElement> codeword;
    KMatrix matrix;
};

EncodeArtifacts encode_artifacts(const GabCode& code, std::span<const LElement> message) {
    std::vector<LElement> c = code.encode(message);
    KMatrix mc = expand_matrix(c);
    return {std::move(c), std::move(mc)};
}

nlohmann::json decode_report(const DecodeOutcome& out, bool verbose) {
    nlohmann::json doc;
    doc["status"] = to_string(out.status);
    if (out.result) {
        doc["message"] = lvector_to_json(out.result->message);
        doc["error"] = lvector_to_json(out.result->error);
        doc["error_rank"] = out.result->error_rank;
        if (verbose) doc["info_poly"] = out.result->info_poly.to_string();
    }
    if (verbose) {
        if (out.w_poly) doc["W"] = out.w_poly->to_string();
        if (out.n_poly) doc["N"] = out.n_poly->to_string();
    }
    return doc;
}

int cmd_build(const std::string& config_path) {
    BuiltCode built = build_from_config(load_config_file(config_path));
    const GabCode& code = built.code;
    std::cout << built.ext->describe() << "\n";
    std::cout << "n=" << code.n() << " k=" << code.k() << " d=" << code.min_distance()
              << " t=" << code.unique_radius() << "\n";
    std::cout << "G =\n" << generator_grid(code);
    return 0;
}

int cmd_encode(const std::string& config_path, const std::string& message_path,
               bool random_message, std::uint64_t seed, std::size_t deg_bound,
               const std::string& format, const std::string& out_path) {
    BuiltCode built = build_from_config(load_config_file(config_path));
    std::vector<LElement> message;
    if (random_message) {
        Rng rng = Rng::derive(seed, 0x6d657373ULL);
        for (std::size_t i = 0; i < built.code.k(); ++i)
            message.push_back(random_lelement(*built.ext, deg_bound, rng));
    } else {
        message = read_lvector(message_path, *built.ext);
        if (message.size() != built.code.k())
            throw ValidationError("message must have k = " + std::to_string(built.code.k()) +
                                  " lines, got " + std::to_string(message.size()));
    }
    EncodeArtifacts art = encode_artifacts(built.code, message);

    std::string rendered;
    if (format == "json") {
        nlohmann::json doc;
        doc["codeword"] = lvector_to_json(art.codeword);
        doc["matrix"] = matrix_to_json(art.matrix);
        if (random_message) doc["message"] = lvector_to_json(message);
        rendered = doc.dump(2) + "\n";
    } else {
        rendered = render_lvector(art.codeword) + "\n" + to_text_grid(art.matrix);
    }
    if (out_path.empty())
        std::cout << rendered;
    else
        write_file(out_path, rendered);
    return 0;
}

int cmd_decode(const std::string& config_path, const std::string& received_path, bool verbose) {
    BuiltCode built = build_from_config(load_config_file(config_path));
    std::vector<LElement> received = read_lvector(received_path, *built.ext);
    if (received.size() != built.code.n())
        throw ValidationError("received word must have n = " + std::to_string(built.code.n()) +
                              " lines, got " + std::to_string(received.size()));
    DecodeOutcome out = decode(built.code, received);
    std::cout << decode_report(out, verbose).dump(2) << "\n";
    if (!out.ok()) {
        std::cerr << "decoding failure: " << to_string(out.status) << "\n";
        return kExitDecodeFailure;
    }
    return 0;
}

int cmd_weight(const std::string& config_path, const std::string& vector_path, bool verbose) {
    BuiltCode built = build_from_config(load_config_file(config_path));
    std::vector<LElement> v = read_lvector(vector_path, *built.ext);
    if (v.size() != built.code.n())
        throw ValidationError("vector must have n = " + std::to_string(built.code.n()) + " lines");
    std::size_t w = rank_weight(v);
    std::cout << w << "\n";
    if (verbose) {
        std::cout << "matrix_rank=" << rank_over_K(expand_matrix(v)) << "\n";
        std::cout << "min_ideal_generator_degree="
                  << min_ideal_generator(built.ext.get(), v).degree() << "\n";
    }
    return 0;
}

struct TrialRow {
    std::size_t trial;
    std::size_t error_rank_actual;
    bool success;
    long long decode_ms;
};

int cmd_simulate(const std::string& config_path, std::size_t trials, std::size_t error_rank,
                 std::uint64_t seed, std::size_t deg_bound, std::size_t jobs) {
    BuiltCode built = build_from_config(load_config_file(config_path));
    const GabCode& code = built.code;
    if (error_rank > code.n()) throw ValidationError("error rank cannot exceed n");

    std::vector<TrialRow> rows(trials);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= trials) return;
            Rng rng = Rng::derive(seed, i);
            std::vector<LElement> message;
            for (std::size_t j = 0; j < code.k(); ++j)
                message.push_back(random_lelement(*built.ext, deg_bound, rng));
            std::vector<LElement> sent = code.encode(message);
            std::vector<LElement> error =
                random_error(*built.ext, code.n(), error_rank, deg_bound, rng.next());
            std::vector<LElement> received;
            for (std::size_t j = 0; j < code.n(); ++j) received.push_back(sent[j] + error[j]);

            auto start = std::chrono::steady_clock::now();
            DecodeOutcome out = decode(code, received);
            auto stop = std::chrono::steady_clock::now();
            bool success = out.ok() && out.result->message == message;
            rows[i] = TrialRow{
                i, rank_weight(error), success,
                std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count()};
        }
    };
    if (jobs <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (std::size_t j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }

    // Merged by trial index, so the report is stable under --jobs.
    std::cout << "trial,error_rank_actual,success,decode_ms\n";
    std::size_t successes = 0;
    for (const TrialRow& r : rows) {
        successes += r.success ? 1 : 0;
        std::cout << r.trial << "," << r.error_rank_actual << "," << (r.success ? 1 : 0) << ","
                  << r.decode_ms << "\n";
    }
    std::cout << "# trials=" << trials << " error_rank=" << error_rank << " seed=" << seed
              << " deg_bound=" << deg_bound << " success_rate="
              << (trials == 0 ? 1.0 : static_cast<double>(successes) / static_cast<double>(trials))
              << "\n";
    return 0;
}

int cmd_reproduce(const std::string& fixture, const std::string& fixtures_dir, bool update) {
    std::string dir = fixtures_dir + "/" + fixture;
    BuiltCode built = build_from_config(load_config_file(dir + "/config.json"));
    std::vector<LElement> message = read_lvector(dir + "/message.txt", *built.ext);
    EncodeArtifacts art = encode_artifacts(built.code, message);

    std::vector<std::pair<std::string, std::string>> artifacts = {
        {"generator.txt", generator_grid(built.code)},
        {"codeword.txt", render_lvector(art.codeword)},
        {"matrix.txt", to_text_grid(art.matrix)},
        {"matrix.json", matrix_to_json(art.matrix).dump(2) + "\n"},
    };

    if (update) {
        for (const auto& [name, content] : artifacts) write_file(dir + "/" + name, content);
        std::cout << "updated " << artifacts.size() << " golden files in " << dir << "\n";
        return 0;
    }
    bool all_ok = true;
    for (const auto& [name, content] : artifacts) {
        std::string golden = read_file(dir + "/" + name);
        bool ok = golden == content;
        all_ok = all_ok && ok;
        std::cout << (ok ? "ok       " : "MISMATCH ") << fixture << "/" << name << "\n";
    }
    std::cout << (all_ok ? "reproduction passed" : "reproduction FAILED") << "\n";
    return all_ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"rank-metric Gabidulin codes over rational function fields"};
    app.require_subcommand(1);

    std::string config_path, message_path, received_path, vector_path, out_path;
    std::string format = "json";
    std::string fixture, fixtures_dir = "fixtures";
    std::uint64_t seed = 1;
    std::size_t deg_bound = 2, trials = 100, error_rank = 1, jobs = 1;
    bool verbose = false, random_message = false, update = false;

    CLI::App* build = app.add_subcommand("build", "construct a code and print its parameters");
    build->add_option("-c,--config", config_path, "config file")->required();

    CLI::App* encode = app.add_subcommand("encode", "encode a message file or a seeded random message");
    encode->add_option("-c,--config", config_path, "config file")->required();
    auto* msg_opt = encode->add_option("-m,--message", message_path, "message file, k elements");
    auto* rnd_opt = encode->add_flag("--random", random_message, "encode a seeded random message");
    encode->add_option("--seed", seed, "seed for --random");
    encode->add_option("--deg-bound", deg_bound, "degree bound for random coordinates");
    encode->add_option("--format", format, "json|text")->check(CLI::IsMember({"json", "text"}));
    encode->add_option("-o,--out", out_path, "write output to a file instead of stdout");
    msg_opt->excludes(rnd_opt);

    CLI::App* decode_cmd = app.add_subcommand("decode", "decode a received word");
    decode_cmd->add_option("-c,--config", config_path, "config file")->required();
    decode_cmd->add_option("-r,--received", received_path, "received word file, n elements")->required();
    decode_cmd->add_flag("-v,--verbose", verbose, "include W, N and the information polynomial");

    CLI::App* weight = app.add_subcommand("weight", "rank weight of a vector");
    weight->add_option("-c,--config", config_path, "config file")->required();
    weight->add_option("-i,--vector", vector_path, "vector file, n elements")->required();
    weight->add_flag("-v,--verbose", verbose, "show both computation paths");

    CLI::App* simulate = app.add_subcommand("simulate", "seeded error-channel simulation (CSV)");
    simulate->add_option("-c,--config", config_path, "config file")->required();
    simulate->add_option("--trials", trials, "number of trials");
    simulate->add_option("--error-rank", error_rank, "rank of each injected error");
    simulate->add_option("--seed", seed, "simulation seed");
    simulate->add_option("--deg-bound", deg_bound, "degree bound for random coordinates");
    simulate->add_option("--jobs", jobs, "worker threads (merge is deterministic)");

    CLI::App* reproduce = app.add_subcommand("reproduce", "regenerate fixture artifacts and diff them");
    reproduce->add_option("--fixture", fixture, "kummer-f16 | artin-schreier-f5")->required();
    reproduce->add_option("--fixtures-dir", fixtures_dir, "fixtures directory");
    reproduce->add_flag("--update", update, "rewrite golden files instead of diffing");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (build->parsed()) return cmd_build(config_path);
        if (encode->parsed()) {
            if (!random_message && message_path.empty())
                throw ValidationError("encode needs --message or --random");
            return cmd_encode(config_path, message_path, random_message, seed, deg_bound, format,
                              out_path);
        }
        if (decode_cmd->parsed()) return cmd_decode(config_path, received_path, verbose);
        if (weight->parsed()) return cmd_weight(config_path, vector_path, verbose);
        if (simulate->parsed())
            return cmd_simulate(config_path, trials, error_rank, seed, deg_bound, jobs);
        if (reproduce->parsed()) return cmd_reproduce(fixture, fixtures_dir, update);
    } catch (const ValidationError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitValidation;
    }
    return kExitUsage;
}
