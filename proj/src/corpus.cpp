#include "salemhk/corpus.hpp"

#include "corpus_data.hpp"

#include <json.hpp>

namespace salemhk {

const std::vector<CorpusEntry>& salem_corpus()
{
    static const std::vector<CorpusEntry> entries = [] {
        std::vector<CorpusEntry> out;
        auto doc = nlohmann::json::parse(generated::corpus_json);
        for (const auto& e : doc.at("polynomials")) {
            std::vector<Int> c;
            for (const auto& v : e.at("coeffs")) c.emplace_back(v.get<std::string>());
            out.push_back({e.at("name"), IntPoly(std::move(c)), e.at("lambda"), e.at("source")});
        }
        return out;
    }();
    return entries;
}

std::optional<CorpusEntry> find_corpus_entry(const std::string& name)
{
    for (const auto& e : salem_corpus())
        if (e.name == name) return e;
    return std::nullopt;
}

} // namespace salemhk
