#include "stabpoly/corpus.hpp"

#include <filesystem>

#include "stabpoly/constructions.hpp"
#include "stabpoly/rng.hpp"

namespace stabpoly {

namespace fs = std::filesystem;

namespace {

MultiPoly variable_sum(int d) {
    MultiPoly f(d);
    for (int i = 0; i < d; ++i) f += MultiPoly::variable(d, i);
    return f;
}

MultiPoly hand_member(std::uint64_t seed) {
    switch (seed) {
    case 0: case 1: case 2: case 3:
        return variable_sum(static_cast<int>(seed) + 1);
    case 4: {
        MultiPoly f = MultiPoly::variable(2, 0) * MultiPoly::variable(2, 1);
        return f - MultiPoly::constant(2, 1.0);
    }
    case 5: {
        MultiPoly x = MultiPoly::variable(1, 0);
        return x * x - MultiPoly::constant(1, 1.0);
    }
    default:
        throw std::invalid_argument("hand example index out of range");
    }
}

// Product of `factors` linear forms Sum a_i x_i + b with a_i > 0. With
// `separate`, factor k uses only variable k mod d, which keeps the product
// multiaffine when factors <= d.
MultiPoly linear_product(int d, int factors, bool separate, std::uint64_t seed) {
    Rng rng(derive_seed(seed, 0x11));
    MultiPoly f = MultiPoly::constant(d, 1.0);
    for (int k = 0; k < factors; ++k) {
        MultiPoly ell = MultiPoly::constant(d, std::round(rng.uniform(-4.0, 4.0) * 4.0) / 4.0);
        for (int i = 0; i < d; ++i) {
            if (separate && i != k % d) continue;
            ell += MultiPoly::variable(d, i, std::round(rng.uniform(0.25, 3.0) * 4.0) / 4.0);
        }
        f = f * ell;
    }
    return f;
}

int param(const Json& p, const char* key) {
    if (!p.contains(key) || !p.at(key).is_number_integer())
        throw ParseError(std::string("corpus params missing '") + key + "'");
    return p.at(key).get<int>();
}

bool flag(const Json& p, const char* key) {
    if (!p.contains(key) || !p.at(key).is_boolean())
        throw ParseError(std::string("corpus params missing '") + key + "'");
    return p.at(key).get<bool>();
}

}  // namespace

MultiPoly generate_member(const std::string& family, std::uint64_t seed, const Json& params) {
    if (family == "hand") return hand_member(seed);
    if (family == "pencil")
        return det_pencil_poly(random_pencil(param(params, "n"), param(params, "d"), seed, flag(params, "with_E")));
    if (family == "johnson")
        return johnson_sum(random_johnson_instance(param(params, "n"), param(params, "m"), param(params, "d"), seed));
    if (family == "recurrence")
        return recurrence_chain(random_recurrence(param(params, "d"), param(params, "steps"), seed,
                                                  flag(params, "unit")))
            .back();
    if (family == "product")
        return linear_product(param(params, "d"), param(params, "factors"), flag(params, "separate"), seed);
    throw ParseError("unknown corpus family '" + family + "'");
}

std::vector<CorpusEntry> build_corpus() {
    std::vector<CorpusEntry> out;
    const auto push = [&](std::string family, std::uint64_t seed, Json params) {
        MultiPoly f = generate_member(family, seed, params);
        out.push_back({std::move(family), seed, std::move(params), std::move(f)});
    };

    for (std::uint64_t s = 0; s < 6; ++s) push("hand", s, Json::object());

    // 80 pencils: n cycles fastest, then d, then with/without E.
    for (std::uint64_t k = 0; k < 80; ++k) {
        const int n = 1 + static_cast<int>(k % 4);
        const int d = 1 + static_cast<int>((k / 4) % 3);
        const bool with_e = (k / 12) % 2 == 1;
        push("pencil", k, {{"n", n}, {"d", d}, {"with_E", with_e}});
    }
    for (std::uint64_t k = 0; k < 30; ++k) {
        const int n = 1 + static_cast<int>(k % 3);
        const int d = 1 + static_cast<int>((k / 3) % 2);
        push("johnson", k, {{"n", n}, {"m", 2}, {"d", d}});
    }
    for (std::uint64_t k = 0; k < 35; ++k) {
        const int d = 1 + static_cast<int>(k % 3);
        const int steps = 1 + static_cast<int>((k / 3) % 6);
        push("recurrence", k, {{"d", d}, {"steps", steps}, {"unit", k % 5 == 0}});
    }
    for (std::uint64_t k = 0; k < 49; ++k) {
        const int d = 1 + static_cast<int>(k % 3);
        const int factors = 1 + static_cast<int>((k / 3) % 4);
        push("product", k, {{"d", d}, {"factors", factors}, {"separate", k % 2 == 1}});
    }
    return out;
}

void write_corpus(const std::string& dir, const std::vector<CorpusEntry>& entries) {
    Json manifest = Json::array();
    for (const auto& e : entries) {
        const fs::path sub = fs::path(dir) / e.family;
        fs::create_directories(sub);
        const std::string file = e.family + "/" + std::to_string(e.seed) + ".json";
        write_json((fs::path(dir) / file).string(), poly_to_json(e.poly));
        manifest.push_back({{"family", e.family}, {"seed", e.seed}, {"params", e.params}, {"file", file}});
    }
    write_json((fs::path(dir) / "manifest.json").string(), {{"entries", std::move(manifest)}});
}

std::vector<CorpusEntry> read_corpus(const std::string& dir) {
    if (!fs::is_directory(dir)) throw ParseError("corpus directory " + dir + " does not exist");
    const Json manifest = read_json_file((fs::path(dir) / "manifest.json").string());
    std::vector<CorpusEntry> out;
    try {
        for (const Json& m : manifest.at("entries")) {
            CorpusEntry e;
            e.family = m.at("family").get<std::string>();
            e.seed = m.at("seed").get<std::uint64_t>();
            e.params = m.at("params");
            e.poly = read_poly_file((fs::path(dir) / m.at("file").get<std::string>()).string());
            out.push_back(std::move(e));
        }
    } catch (const Json::exception& e) {
        throw ParseError(std::string("corpus manifest: ") + e.what());
    }
    return out;
}

}  // namespace stabpoly
