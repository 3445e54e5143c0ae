#include "lukamax/presets.hpp"

#include <cstdlib>

namespace lukamax {

std::filesystem::path preset_dir() {
    if (const char* env = std::getenv("LUKAMAX_PRESET_DIR")) return env;
    return LUKAMAX_PRESET_DIR_DEFAULT;
}

std::filesystem::path corpus_dir() {
    if (const char* env = std::getenv("LUKAMAX_CORPUS_DIR")) return env;
    return LUKAMAX_CORPUS_DIR_DEFAULT;
}

LoadedAlgebra load_preset(const std::string& name) {
    std::filesystem::path p = name;
    if (name.find('/') == std::string::npos && p.extension() != ".alg")
        p = preset_dir() / (name + ".alg");
    return load_algebra(p);
}

MatrixLogic parse_logic_spec(const std::string& spec) {
    if (spec == "cpl") return MatrixLogic::cpl();
    auto split = [](const std::string& s) {
        std::vector<std::string> out;
        std::size_t start = 0;
        while (true) {
            auto colon = s.find(':', start);
            out.push_back(s.substr(start, colon == std::string::npos ? s.npos : colon - start));
            if (colon == std::string::npos) break;
            start = colon + 1;
        }
        return out;
    };
    std::vector<std::string> parts = split(spec);
    auto want_int = [&](const std::string& t) {
        try {
            return std::stoi(t);
        } catch (...) {
            throw std::runtime_error("bad number '" + t + "' in logic spec " + spec);
        }
    };
    if (parts[0] == "luk" || parts[0] == "lukbar") {
        if (parts.size() != 3)
            throw std::runtime_error("expected " + parts[0] + ":n:i, got " + spec);
        int n = want_int(parts[1]), i = want_int(parts[2]);
        return parts[0] == "luk" ? MatrixLogic::luk(n, i) : MatrixLogic::lukbar(n, i);
    }
    if (parts[0] == "alg") {
        if (parts.size() < 2 || parts.size() > 3)
            throw std::runtime_error("expected alg:name[:designated], got " + spec);
        LoadedAlgebra loaded = load_preset(parts[1]);
        std::optional<DesignatedSet> desig = loaded.designated;
        if (parts.size() == 3) {
            std::vector<Element> members;
            std::size_t start = 0;
            const std::string& list = parts[2];
            while (start <= list.size()) {
                auto comma = list.find(',', start);
                std::string item =
                    list.substr(start, comma == std::string::npos ? list.npos : comma - start);
                if (!item.empty()) {
                    auto e = loaded.algebra.element_by_name(item);
                    if (!e)
                        throw std::runtime_error("unknown element '" + item + "' in " + spec);
                    members.push_back(*e);
                }
                if (comma == std::string::npos) break;
                start = comma + 1;
            }
            desig = DesignatedSet(loaded.algebra.size(), std::move(members));
        }
        if (!desig)
            throw std::runtime_error("algebra " + parts[1] +
                                     " declares no designated elements; pass alg:" + parts[1] +
                                     ":d1,d2,...");
        std::string id = "alg:" + parts[1];
        return MatrixLogic::custom(std::move(loaded.algebra), std::move(*desig), std::move(id));
    }
    throw std::runtime_error("unrecognized logic spec '" + spec + "'");
}

}  // namespace lukamax
