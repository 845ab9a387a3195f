#include "wpb/errors.hpp"
#include "wpb/instance.hpp"
#include "wpb/random.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>

using namespace wpb;

namespace {

const char* minimal = R"({"field": {"q": 2}, "weight": {"kind": "hamming"},
  "poset": {"kind": "chain", "elements": 1}, "labeling": [1],
  "code": {"kind": "list", "words": [[0], [1]]}})";

std::string consistency_field(const std::string& text)
{
    try {
        parse_instance(text);
    } catch (const ConsistencyError& e) {
        return e.field();
    }
    return "";
}

} // namespace

TEST_CASE("minimal instance loads")
{
    const Code c = parse_instance(minimal);
    CHECK(c.size() == 2);
    CHECK(c.space().poset() == Poset::chain(1));
}

TEST_CASE("malformed documents")
{
    CHECK_THROWS_AS(parse_instance("{not json"), ParseError);
    CHECK_THROWS_AS(parse_instance("[1, 2]"), ParseError);
    CHECK_THROWS_AS(parse_instance(R"({"field": {"q": 2}})"), ParseError);
    CHECK(consistency_field(R"({"field": {"q": 2}, "weight": {"kind": "hamming"},
      "poset": {"kind": "chain", "elements": 2}, "labeling": [2],
      "code": {"kind": "list", "words": [[0, 0]]}})") == "labeling");
    CHECK(consistency_field(R"({"field": {"q": 6}, "weight": {"kind": "hamming"},
      "poset": {"kind": "chain", "elements": 1}, "labeling": [1],
      "code": {"kind": "list", "words": [[0]]}})") == "field");
    CHECK(consistency_field(R"({"field": {"q": 4}, "weight": {"kind": "lee"},
      "poset": {"kind": "chain", "elements": 1}, "labeling": [1],
      "code": {"kind": "list", "words": [[0]]}})") == "weight");
    CHECK(consistency_field(R"({"field": {"q": 3}, "weight": {"kind": "table", "values": [0, 2, 1]},
      "poset": {"kind": "chain", "elements": 1}, "labeling": [1],
      "code": {"kind": "list", "words": [[0]]}})") == "weight");
    CHECK(consistency_field(R"({"field": {"q": 2}, "weight": {"kind": "hamming"},
      "poset": {"elements": 2, "cover": [[1, 2], [2, 1]]}, "labeling": [1, 1],
      "code": {"kind": "list", "words": [[0, 0]]}})") == "poset");
    CHECK(consistency_field(R"({"field": {"q": 2}, "weight": {"kind": "hamming"},
      "poset": {"kind": "chain", "elements": 1}, "labeling": [1],
      "code": {"kind": "list", "words": [[2]]}})") == "code");
}

TEST_CASE("canonical round trip")
{
    Rng rng(8);
    for (int k = 0; k < 30; ++k) {
        const auto f = make_field(k % 3 == 0 ? 4 : k % 3 == 1 ? 5 : 2);
        const WeightFn w = k % 2 ? random_weight(rng, f) : hamming_weight(f);
        const std::size_t s = rng.between(1, 4);
        const BlockSpace sp(random_poset(rng, s), random_labeling(rng, s, 2), w);
        const Code c = k % 4 == 3 ? Code::from_words(sp, {sp.zero(), sp.vector_at(1)})
                                  : random_linear_code(rng, sp, rng.between(0, sp.length()));
        const auto text = dump_instance(c);
        const Code back = parse_instance(text);
        CHECK(dump_instance(back) == text);
        CHECK(instance_digest(back) == instance_digest(c));
        CHECK(back.codewords() == c.codewords());
        CHECK(back.space() == c.space());
    }
}

TEST_CASE("save and load")
{
    const Code c = parse_instance(minimal);
    const auto path = (std::filesystem::temp_directory_path() / "wpb_instance_test.json").string();
    save_instance(c, path);
    CHECK(dump_instance(load_instance(path)) == dump_instance(c));
    std::remove(path.c_str());
    CHECK_THROWS_AS(load_instance(path), Error);
}

TEST_CASE("digest is FNV-1a 64")
{
    CHECK(digest_of("") == "cbf29ce484222325");
    CHECK(digest_of("a") == "af63dc4c8601ec8c");
}
