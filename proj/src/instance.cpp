#include "wpb/instance.hpp"

#include "wpb/errors.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <optional>
#include <sstream>

namespace wpb {

using nlohmann::json;

namespace {

const json& member(const json& obj, const char* key, const char* where)
{
    if (!obj.is_object())
        throw ParseError(0, std::string("'") + where + "' must be an object");
    auto it = obj.find(key);
    if (it == obj.end())
        throw ParseError(0, std::string("missing key '") + key + "' in '" + where + "'");
    return *it;
}

unsigned as_unsigned(const json& v, const char* what)
{
    if (!v.is_number_integer() || v.get<long long>() < 0)
        throw ParseError(0, std::string("'") + what + "' must be a non-negative integer");
    return static_cast<unsigned>(v.get<long long>());
}

std::vector<BlockVector> as_vectors(const json& v, const char* what, unsigned q, std::size_t n)
{
    if (!v.is_array())
        throw ParseError(0, std::string("'") + what + "' must be an array of arrays");
    std::vector<BlockVector> out;
    for (const auto& row : v) {
        if (!row.is_array())
            throw ParseError(0, std::string("'") + what + "' must be an array of arrays");
        if (row.size() != n)
            throw ConsistencyError("code", "vector of length " + std::to_string(row.size()) +
                                               " but the labeling has n = " + std::to_string(n));
        BlockVector vec;
        for (const auto& x : row) {
            const unsigned e = as_unsigned(x, what);
            if (e >= q)
                throw ConsistencyError("code", "symbol " + std::to_string(e) +
                                                   " outside GF(" + std::to_string(q) + ")");
            vec.push_back(static_cast<Element>(e));
        }
        out.push_back(std::move(vec));
    }
    return out;
}

Code build(const json& doc)
{
    if (!doc.is_object())
        throw ParseError(1, "instance must be a JSON object");

    FieldPtr field;
    const unsigned q = as_unsigned(member(member(doc, "field", "instance"), "q", "field"), "q");
    try {
        field = make_field(q);
    } catch (const NotAPrimePower& e) {
        throw ConsistencyError("field", e.what());
    }

    const json& wdoc = member(doc, "weight", "instance");
    const json& kind = member(wdoc, "kind", "weight");
    if (!kind.is_string())
        throw ParseError(0, "'weight.kind' must be a string");
    std::optional<WeightFn> weight;
    try {
        const std::string k = kind.get<std::string>();
        if (k == "hamming") {
            weight = hamming_weight(field);
        } else if (k == "lee") {
            weight = lee_weight(field);
        } else if (k == "table") {
            const json& values = member(wdoc, "values", "weight");
            if (!values.is_array())
                throw ParseError(0, "'weight.values' must be an array");
            std::vector<unsigned> table;
            for (const auto& x : values)
                table.push_back(as_unsigned(x, "weight.values"));
            if (table.size() != q)
                throw ConsistencyError("weight", "table has " + std::to_string(table.size()) +
                                                     " entries for q = " + std::to_string(q));
            weight = custom_weight(field, std::move(table));
        } else {
            throw ParseError(0, "unknown weight kind '" + k + "'");
        }
    } catch (const LeeRequiresPrimeField& e) {
        throw ConsistencyError("weight", e.what());
    } catch (const AxiomViolation& e) {
        throw ConsistencyError("weight", e.what());
    }

    const json& pdoc = member(doc, "poset", "instance");
    const std::size_t s = as_unsigned(member(pdoc, "elements", "poset"), "poset.elements");
    Poset poset;
    try {
        auto pk = pdoc.find("kind");
        if (pk != pdoc.end() && *pk == "chain") {
            poset = Poset::chain(s);
        } else if (pk != pdoc.end() && *pk == "antichain") {
            poset = Poset::antichain(s);
        } else {
            std::vector<Poset::Cover> covers;
            auto cv = pdoc.find("cover");
            if (cv != pdoc.end()) {
                if (!cv->is_array())
                    throw ParseError(0, "'poset.cover' must be an array of pairs");
                for (const auto& pair : *cv) {
                    if (!pair.is_array() || pair.size() != 2)
                        throw ParseError(0, "'poset.cover' entries must be pairs");
                    const unsigned a = as_unsigned(pair[0], "poset.cover");
                    const unsigned b = as_unsigned(pair[1], "poset.cover");
                    if (a < 1 || b < 1 || a > s || b > s)
                        throw ConsistencyError("poset", "cover pair names an element outside 1.." +
                                                            std::to_string(s));
                    covers.emplace_back(a - 1, b - 1);
                }
            }
            poset = Poset::from_cover_relations(s, covers);
        }
    } catch (const CycleDetected& e) {
        throw ConsistencyError("poset", e.what());
    } catch (const OutOfRange& e) {
        throw ConsistencyError("poset", e.what());
    }

    const json& ldoc = member(doc, "labeling", "instance");
    if (!ldoc.is_array())
        throw ParseError(0, "'labeling' must be an array");
    std::vector<std::size_t> sizes;
    for (const auto& k : ldoc) {
        const unsigned v = as_unsigned(k, "labeling");
        if (v == 0)
            throw ConsistencyError("labeling", "block sizes must be positive");
        sizes.push_back(v);
    }
    if (sizes.size() != s)
        throw ConsistencyError("labeling", "labeling has " + std::to_string(sizes.size()) +
                                               " blocks but the poset has " + std::to_string(s) +
                                               " elements");
    BlockSpace space(std::move(poset), Labeling(std::move(sizes)), *weight);

    const json& cdoc = member(doc, "code", "instance");
    const json& ck = member(cdoc, "kind", "code");
    if (ck == "generator")
        return Code::linear(space, as_vectors(member(cdoc, "rows", "code"), "code.rows", q,
                                              space.length()));
    if (ck == "list") {
        auto words = as_vectors(member(cdoc, "words", "code"), "code.words", q, space.length());
        if (words.empty())
            throw ConsistencyError("code", "word list is empty");
        return Code::from_words(space, std::move(words));
    }
    throw ParseError(0, "code.kind must be 'generator' or 'list'");
}

json vectors_json(const std::vector<BlockVector>& vs)
{
    json out = json::array();
    for (const auto& v : vs) {
        json row = json::array();
        for (Element x : v)
            row.push_back(static_cast<unsigned>(x));
        out.push_back(std::move(row));
    }
    return out;
}

} // namespace

Code parse_instance(const std::string& text)
{
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
        const auto line = 1 + std::count(text.begin(), text.begin() + static_cast<std::ptrdiff_t>(upto), '\n');
        throw ParseError(static_cast<std::size_t>(line), e.what());
    }
    return build(doc);
}

Code load_instance(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError(0, "cannot open " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

json instance_to_json(const Code& code)
{
    const BlockSpace& space = code.space();
    json doc;
    doc["field"] = {{"q", space.field().q()}};
    const WeightFn& w = space.weight_fn();
    if (w.kind() == WeightFn::Kind::table)
        doc["weight"] = {{"kind", "table"}, {"values", w.table()}};
    else
        doc["weight"] = {{"kind", w.name()}};
    json cover = json::array();
    for (const auto& [a, b] : space.poset().cover_relations())
        cover.push_back({a + 1, b + 1});
    doc["poset"] = {{"elements", space.blocks()}, {"cover", cover}};
    doc["labeling"] = space.labeling().sizes();
    if (code.is_linear())
        doc["code"] = {{"kind", "generator"}, {"rows", vectors_json(code.generator())}};
    else
        doc["code"] = {{"kind", "list"}, {"words", vectors_json(code.codewords())}};
    return doc;
}

std::string dump_instance(const Code& code) { return instance_to_json(code).dump(2) + "\n"; }

void save_instance(const Code& code, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw Error("cannot write " + path);
    out << dump_instance(code);
}

std::string digest_of(const std::string& text)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string instance_digest(const Code& code) { return digest_of(instance_to_json(code).dump()); }

} // namespace wpb
