#include "cwl/cache.hpp"

#include <json.hpp>

#include <fstream>
#include <iostream>

namespace cwl::io {

namespace {

using nlohmann::json;

bool is_decimal(const std::string& s) {
    if (s.empty()) return false;
    for (char c : s) {
        if (c < '0' || c > '9') return false;
    }
    return true;
}

}  // namespace

std::filesystem::path cache_path(const std::filesystem::path& dir,
                                 counting::TableKind kind, int k) {
    return dir / (counting::to_string(kind) + "_k" + std::to_string(k) + ".json");
}

void cache_store(const counting::CountTable& table, const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    json doc;
    doc["kind"] = counting::to_string(table.kind);
    doc["k"] = table.k;
    doc["provenance"] = counting::to_string(table.provenance);
    json entries = json::array();
    for (const auto& [key, count] : table.entries) {
        entries.push_back({{"n", key.first}, {"t", key.second}, {"count", count.str()}});
    }
    doc["entries"] = std::move(entries);
    std::ofstream out(cache_path(dir, table.kind, table.k));
    out << doc.dump(2) << '\n';
}

std::optional<counting::CountTable> cache_load(counting::TableKind kind, int k,
                                               const std::filesystem::path& dir) {
    const auto path = cache_path(dir, kind, k);
    std::ifstream in(path);
    if (!in) return std::nullopt;  // nothing cached yet
    const auto warn = [&](const std::string& why) {
        std::cerr << "warning: ignoring corrupt cache file " << path.string() << " (" << why
                  << "); recomputing\n";
        return std::nullopt;
    };
    json doc;
    try {
        in >> doc;
    } catch (const json::exception& e) {
        return warn(e.what());
    }
    counting::CountTable table;
    try {
        const auto parsed_kind = counting::table_kind_from(doc.at("kind").get<std::string>());
        const auto parsed_prov =
            counting::provenance_from(doc.at("provenance").get<std::string>());
        if (!parsed_kind || *parsed_kind != kind) return warn("table kind mismatch");
        if (!parsed_prov) return warn("unknown provenance");
        table.kind = *parsed_kind;
        table.provenance = *parsed_prov;
        table.k = doc.at("k").get<int>();
        if (table.k != k) return warn("alphabet size mismatch");
        for (const auto& entry : doc.at("entries")) {
            const int n = entry.at("n").get<int>();
            const int t = entry.at("t").get<int>();
            const auto count = entry.at("count").get<std::string>();
            if (n < 0 || t < 0) return warn("negative table key");
            if (!is_decimal(count)) return warn("malformed count string \"" + count + "\"");
            table.entries[{n, t}] = Count(count);
        }
    } catch (const json::exception& e) {
        return warn(e.what());
    }
    return table;
}

}  // namespace cwl::io
