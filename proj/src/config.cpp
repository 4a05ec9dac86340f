#include "gabfield/config.hpp"

#include <fstream>

#include "gabfield/parse.hpp"

namespace gabfield {

namespace {

const nlohmann::json& require(const nlohmann::json& doc, const char* key) {
    auto it = doc.find(key);
    if (it == doc.end())
        throw ValidationError(std::string("config is missing the \"") + key + "\" key");
    return *it;
}

}  // namespace

nlohmann::json load_config_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read config file: " + path);
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError("malformed config " + path + ": " + e.what());
    }
    return doc;
}

BuiltCode build_from_config(const nlohmann::json& doc) {
    try {
        const auto& field = require(doc, "field");
        std::uint32_t p = require(field, "p").get<std::uint32_t>();
        std::uint32_t m = require(field, "m").get<std::uint32_t>();
        std::vector<std::uint32_t> modulus;
        if (field.contains("modulus")) modulus = field["modulus"].get<std::vector<std::uint32_t>>();
        std::string symbol = field.value("symbol", std::string{});
        auto ctx = FqContext::make(p, m, std::move(modulus), std::move(symbol));

        const auto& extension = require(doc, "extension");
        std::string kind = require(extension, "kind").get<std::string>();
        RatFunc u = parse_ratfunc(require(extension, "u").get<std::string>(), *ctx);
        std::shared_ptr<const CyclicExtension> ext;
        if (kind == "kummer") {
            std::uint32_t n = require(extension, "n").get<std::uint32_t>();
            std::optional<FqElement> alpha;
            if (extension.contains("alpha"))
                alpha = parse_fq(extension["alpha"].get<std::string>(), *ctx);
            ext = CyclicExtension::make_kummer(ctx, u, n, alpha);
        } else if (kind == "artin-schreier") {
            ext = CyclicExtension::make_artin_schreier(ctx, u);
        } else {
            throw ValidationError("unknown extension kind: " + kind);
        }

        const auto& code_cfg = require(doc, "code");
        std::size_t k = require(code_cfg, "k").get<std::size_t>();
        GabCode code = [&] {
            if (code_cfg.contains("g")) {
                std::vector<LElement> g;
                for (const auto& s : code_cfg["g"])
                    g.push_back(parse_lelement(s.get<std::string>(), *ext));
                return GabCode::build(ext, std::move(g), k);
            }
            return GabCode::build(ext, k);
        }();
        return BuiltCode{std::move(ctx), std::move(ext), std::move(code)};
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("malformed config value: ") + e.what());
    }
}

}  // namespace gabfield
