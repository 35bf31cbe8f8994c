#include <doctest.h>

#include <functional>

#include "paradoxkit/errors.hpp"
#include "paradoxkit/json.hpp"

using namespace paradoxkit;
using namespace paradoxkit::io;
using exactlin::ratio;

namespace {

std::string parse_error(const std::function<void()>& f)
{
    try {
        f();
    } catch (const ParseError& e) {
        return e.what();
    }
    return "";
}

} // namespace

TEST_CASE("scalars")
{
    CHECK(to_json(ratio(-6, 4)) == "-3/2");
    CHECK(rational_from_json(Json("2/6")) == ratio(1, 3));
    CHECK(rational_from_json(Json(5)) == 5);
    CHECK(to_json(exactlin::Integer(42)) == 42);
    const exactlin::Integer big("123456789012345678901234567890");
    CHECK(to_json(big) == "123456789012345678901234567890");
    CHECK(integer_from_json(to_json(big)) == big);
    CHECK(word_from_json(Json("abAB")).to_string() == "abAB");
    CHECK(parse_error([] { word_from_json(Json("aA"), "/w"); }).rfind("/w:", 0) == 0);
    CHECK(parse_error([] { rational_from_json(Json("x"), "/q"); }).rfind("/q:", 0) == 0);
}

TEST_CASE("certificate round trip is byte-identical")
{
    const auto c = *freeness::certify().certificate;
    const std::string text = to_json(c).dump();
    const auto back = certificate_from_json(parse(text));
    CHECK(to_json(back).dump() == text);
    CHECK(freeness::verify_certificate(back));
    CHECK(back.states == c.states);
    CHECK(back.transitions == c.transitions);
}

TEST_CASE("malformed JSON reports line and column")
{
    const std::string msg = parse_error([] { parse("{\n  \"mode\": \"vector\",\n  oops\n}", "cert.json"); });
    CHECK(msg.rfind("cert.json:3:", 0) == 0);
    CHECK(msg.find("malformed JSON") != std::string::npos);
}

TEST_CASE("semantic errors carry a JSON pointer")
{
    auto j = to_json(*freeness::certify().certificate);
    auto bad_letter = j;
    bad_letter["states"][0]["first"] = "x";
    CHECK(parse_error([&] { certificate_from_json(bad_letter); }).rfind("/states/0/first:", 0) == 0);

    auto bad_residue = j;
    bad_residue["states"][2]["residue"][1] = 9;
    CHECK(parse_error([&] { certificate_from_json(bad_residue); }).rfind("/states/2/residue/1:", 0) == 0);

    auto missing = j;
    missing.erase("initial");
    CHECK(parse_error([&] { certificate_from_json(missing); }).find("missing field \"initial\"") != std::string::npos);

    auto modulus = j;
    modulus["modulus"] = 5;
    CHECK(parse_error([&] { certificate_from_json(modulus); }).rfind("/modulus:", 0) == 0);
}

TEST_CASE("other round trips")
{
    const auto c = sphere::fixed_directions(2);
    const auto c2 = fixed_directions_from_json(parse(to_json(c).dump()));
    CHECK(c2.directions == c.directions);
    CHECK(c2.depth == 2);

    const auto s3 = measures::GroupTable::symmetric3();
    const auto g = group_from_json(to_json(s3));
    CHECK(g.table() == s3.table());
    CHECK(g.name() == s3.name());
    CHECK(parse_error([] { group_from_json(parse(R"({"order": 2, "table": [0, 1, 1]})")); }).rfind("/table:", 0) == 0);

    const auto f = cauchy::demo_model(3);
    const auto f2 = hamel_from_json(to_json(f));
    CHECK(f2.labels() == f.labels());
    CHECK(f2.images() == f.images());
}

TEST_CASE("contradiction input, cell form")
{
    const auto j = parse(R"({
        "cells": ["p", "q"],
        "pieces_a": [["p"]], "moved_a": [["p", "q"]],
        "pieces_b": [["q"]], "moved_b": [["p", "q"]],
        "nu": ["1/2", "1/2"], "invariant": true
    })");
    const auto in = contradiction_input_from_json(j);
    CHECK(in.invariant);
    CHECK(in.witness.cells() == 2);
    CHECK(in.witness.moved_a[0] == 0b11);
    CHECK(to_json(contradiction_input_from_json(to_json(in))) == to_json(in));

    auto unknown = j;
    unknown["pieces_b"][0][0] = "r";
    CHECK(parse_error([&] { contradiction_input_from_json(unknown); }).rfind("/pieces_b/0/0:", 0) == 0);
}

TEST_CASE("contradiction input, model form")
{
    const auto j = parse(R"({
        "model": {"points": 2, "actions": {"s": [1, 0]}, "compositions": [["s", "s", "e"]]},
        "E": [0, 1],
        "pieces_a": [[0]], "movers_a": ["e"],
        "pieces_b": [[1]], "movers_b": ["s"],
        "nu": ["1/2", "1/2"]
    })");
    const auto in = contradiction_input_from_json(j);
    CHECK_FALSE(in.invariant);
    CHECK(in.witness.cells() == 2);
    CHECK(in.witness.moved_b[0] == 0b01);

    auto bad = j;
    bad["model"]["actions"]["s"] = {0, 0};
    CHECK(parse_error([&] { contradiction_input_from_json(bad); }).rfind("/model/actions/s:", 0) == 0);
}
