#include "tap/serialize.hpp"

#include <fstream>
#include <stdexcept>

namespace tap {

nlohmann::json to_json(const SpectralFunction& f) {
    nlohmann::json j;
    j["d"] = f.dim();
    j["K"] = f.degree();
    j["real"] = f.real_valued();
    nlohmann::json coeffs = nlohmann::json::array();
    for_each_index(f.box(), [&](std::size_t flat, std::span<const int> k, long) {
        const Complex c = f.coeffs()[flat];
        if (c == Complex(0.0, 0.0)) return;
        nlohmann::json kj = nlohmann::json::array();
        for (int comp : k) kj.push_back(comp);
        coeffs.push_back(nlohmann::json::array({kj, c.real(), c.imag()}));
    });
    j["coeffs"] = std::move(coeffs);
    return j;
}

SpectralFunction spectral_function_from_json(const nlohmann::json& j) {
    const int d = j.at("d").get<int>();
    const int K = j.at("K").get<int>();
    const bool real = j.value("real", false);
    SpectralFunction f(d, K, real);
    for (const auto& entry : j.at("coeffs")) {
        if (!entry.is_array() || entry.size() != 3)
            throw std::invalid_argument("spectral_function_from_json: bad coefficient entry");
        std::vector<int> k = entry[0].get<std::vector<int>>();
        if (static_cast<int>(k.size()) != d)
            throw std::invalid_argument("spectral_function_from_json: index length != d");
        f.set_coeff(k, Complex(entry[1].get<double>(), entry[2].get<double>()));
    }
    return f;
}

void save_spectral_function(const std::string& path, const SpectralFunction& f) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("save_spectral_function: cannot open " + path);
    out << to_json(f).dump(2) << "\n";
}

SpectralFunction load_spectral_function(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("load_spectral_function: cannot open " + path);
    nlohmann::json j;
    in >> j;
    return spectral_function_from_json(j);
}

}  // namespace tap
