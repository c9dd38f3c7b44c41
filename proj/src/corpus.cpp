#include "tsurf/corpus.hpp"

#include <json.hpp>

#include <fstream>

namespace tsurf {

std::vector<std::string> corpus_lines(const AppendixFamily& fam)
{
    std::vector<std::string> out;
    for (const auto& p : grid_points(fam)) {
        auto rep = appendix_check(fam.id, p);
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [k, v] : p.as_map(fam.param_names)) params[k] = v;
        for (const auto& [zcf, notation] : rep.computed) {
            nlohmann::json rec = {{"family", fam.id}, {"params", params}, {"zcf", zcf}, {"notation", notation}};
            out.push_back(rec.dump());
        }
    }
    return out;
}

std::string corpus_file_name(const std::string& family) { return family + ".jsonl"; }

std::size_t corpus_regen(const std::filesystem::path& dir)
{
    std::filesystem::create_directories(dir);
    std::size_t n = 0;
    for (const auto& fam : appendix_families()) {
        auto lines = corpus_lines(fam);
        std::ofstream f(dir / corpus_file_name(fam.id), std::ios::binary | std::ios::trunc);
        if (!f) throw ValidationError("cannot write " + (dir / corpus_file_name(fam.id)).string());
        for (const auto& l : lines) f << l << '\n';
        n += lines.size();
    }
    return n;
}

DiffReport corpus_check(const std::filesystem::path& dir)
{
    DiffReport rep;
    for (const auto& fam : appendix_families()) {
        auto path = dir / corpus_file_name(fam.id);
        std::ifstream f(path, std::ios::binary);
        if (!f) throw ValidationError("missing corpus file " + path.string());
        std::vector<std::string> stored;
        std::string line;
        while (std::getline(f, line)) {
            if (!nlohmann::json::accept(line))
                throw ValidationError("corrupt corpus line " + path.string() + ":" + std::to_string(stored.size() + 1));
            stored.push_back(line);
        }
        auto fresh = corpus_lines(fam);
        rep.records += fresh.size();
        for (std::size_t i = 0; i < std::max(stored.size(), fresh.size()); ++i) {
            std::string want = i < fresh.size() ? fresh[i] : "";
            std::string got = i < stored.size() ? stored[i] : "";
            if (want != got) rep.entries.push_back({fam.id, i + 1, want, got});
        }
    }
    return rep;
}

}  // namespace tsurf
