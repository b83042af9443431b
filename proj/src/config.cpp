#include "drendo/config.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "drendo/textio.hpp"

namespace drendo {

namespace {

std::vector<unsigned> modulus_coeffs(const Fq& tmp, const std::string& text, unsigned n) {
    // The modulus is a polynomial in the generator label over F_p; parse it
    // with the label standing in for T.
    Fq fp = Fq::prime_field(tmp.p());
    std::string replaced = text;
    // Replace every occurrence of the label by T for the prime-field parser.
    const std::string& lab = tmp.label();
    size_t pos = 0;
    while ((pos = replaced.find(lab, pos)) != std::string::npos) {
        replaced.replace(pos, lab.size(), "T");
        pos += 1;
    }
    APoly m = parse_poly(fp, replaced);
    if (m.deg() != static_cast<int>(n)) throw invalid_input("fq_modulus: wrong degree");
    std::vector<unsigned> out(n + 1);
    for (unsigned i = 0; i <= n; ++i) out[i] = m.coeff(i);
    return out;
}

}  // namespace

LoadedModule load_module_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    unsigned p = j.at("p").get<unsigned>();
    unsigned n = j.value("n", 1u);
    std::string label = j.value("generator", std::string("w"));

    std::unique_ptr<Fq> F;
    if (n == 1) {
        F = std::make_unique<Fq>(Fq::prime_field(p));
    } else if (j.contains("fq_modulus")) {
        Fq probe = Fq::make(p, n, label);
        F = std::make_unique<Fq>(p, n, modulus_coeffs(probe, j.at("fq_modulus").get<std::string>(), n),
                                 label);
    } else {
        F = std::make_unique<Fq>(Fq::make(p, n, label));
    }

    unsigned rank = j.at("rank").get<unsigned>();
    auto coeffs = j.at("phi_T");
    if (!coeffs.is_array() || coeffs.size() != rank)
        throw invalid_input("config: phi_T must list g_1..g_r");
    std::vector<RatFunc> g;
    for (const auto& item : coeffs) {
        std::string s = item.get<std::string>();
        size_t slash = s.find('/');
        if (slash == std::string::npos) {
            g.push_back(RatFunc::of(parse_poly(*F, s)));
        } else {
            g.push_back(RatFunc{parse_poly(*F, s.substr(0, slash)),
                                parse_poly(*F, s.substr(slash + 1))});
        }
    }
    LoadedModule lm;
    lm.phi = make_global(*F, std::move(g));
    lm.field = std::move(F);
    return lm;
}

LoadedModule load_module_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw invalid_input("config: cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return load_module_json(ss.str());
}

}  // namespace drendo
