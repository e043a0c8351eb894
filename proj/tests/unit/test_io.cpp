// Copyright 2026 The qsigma Authors
// SPDX-License-Identifier: Apache-2.0

#include <string>

#include "doctest.h"
#include "qsigma/errors.hpp"
#include "qsigma/io.hpp"

using namespace qsigma;

namespace {
const Scalar s = Scalar::s();
const Scalar q = Scalar::q();

std::string error_of(const std::string& text) {
  try {
    weight_from_json(Json::parse(text));
  } catch (const ParseError& e) {
    return e.what();
  }
  return "";
}
}  // namespace

TEST_CASE("minimal SSq weight") {
  auto w = weight_from_json(Json::parse(R"({"p12":{"terms":[]},"p21":{"terms":[]},"c":"0"})"));
  REQUIRE(std::holds_alternative<SSqWeight>(w));
  CHECK(std::get<SSqWeight>(w) == SSqWeight::zero());
}

TEST_CASE("SSq weight round trip") {
  SSqWeight w;
  w.p12.add_term(q, UPoly({Scalar(1), Scalar(2)}));
  w.p21.add_term(s / q, UPoly({Scalar(-1)}));
  w.c = qp_eval(w.p21, 0) - qp_eval(w.p12, 0);
  Json j = to_json(w);
  CHECK(j.dump() == R"({"p12":{"terms":[{"base":"q","coeffs":["1","2"]}]},"p21":{"terms":[{"base":"s/q","coeffs":["-1"]}]},"c":"-2"})");
  CHECK(ssq_from_json(j) == w);
}

TEST_CASE("inconsistent charge is an input error") {
  std::string e = error_of(R"({"p12":{"terms":[{"base":"q","coeffs":["1"]}]},"p21":{"terms":[]},"c":"0"})");
  CHECK(e.rfind("$: ", 0) == 0);
}

TEST_CASE("JSON path diagnostics") {
  CHECK(error_of(R"({"p12":{"terms":[{"base":"q+","coeffs":[]}]},"p21":{"terms":[]},"c":"0"})").rfind(
            "$.p12.terms[0].base: ", 0) == 0);
  CHECK(error_of(R"({"p12":{"terms":[]},"p21":{"terms":[{"base":"0","coeffs":[]}]},"c":"0"})") ==
        "$.p21.terms[0].base: base must be nonzero");
  CHECK(error_of(R"({"p12":{"terms":[]},"p21":{"terms":[]}})") == "$: missing key \"c\"");
  CHECK(error_of(R"({"m":0,"charges":["0","1"]})") == "$.charges: expected 1 entries, got 2");
  CHECK(error_of(R"({"m":0,"charges":["0"],"labels":{"half":{"except":{"x":"1"}}}})") ==
        "$.labels.half.except: key \"x\" is not an integer");
  CHECK(error_of(R"({"m":1,"charges":["0","0"],"labels":{"int":{"neg_tail":["1"]}}})") ==
        "$.labels.int.neg_tail: expected 2 entries, got 1");
  CHECK(error_of(R"({"m":0,"charges":["0"],"bogus":1})") == "$: unknown key \"bogus\"");
}

TEST_CASE("GlWeight files") {
  auto half = weight_from_json(Json::parse(R"({"m":0,"charges":["0"],"labels":{"half":{"except":{"1":["1"]}}}})"));
  REQUIRE(std::holds_alternative<GlWeight>(half));
  GlWeight w = std::get<GlWeight>(half);
  CHECK(w.label(0, HalfInt::half()) == Scalar(1));
  CHECK(gl_quasifinite(w).quasifinite);

  GlWeight tails = gl_weight_from_json(Json::parse(R"({"m":0,"charges":["0"],"labels":{"int":{"neg_tail":"1","pos_tail":"0"}}})"));
  CHECK_FALSE(gl_quasifinite(tails).quasifinite);

  // Exceptions equal to the tail are dropped.
  GlWeight a = gl_weight_from_json(Json::parse(R"({"m":0,"charges":["0"],"labels":{"int":{"pos_tail":"2","except":{"3":"2"}}}})"));
  CHECK(a.ints[0].except.empty());

  GlWeight b = gl_weight_from_json(
      Json::parse(R"({"m":1,"charges":["1","q"],"labels":{"int":{"except":{"-1":["2","0"]}},"half":{"neg_tail":["1","0"]}}})"));
  CHECK(gl_weight_from_json(to_json(b)) == b);
}

TEST_CASE("descriptors") {
  Json j = Json::parse(R"([{"s":"s","m":0,"weight":{"m":0,"charges":["0"],"labels":{"half":{"except":{"1":"1"}}}}}])");
  auto ds = descriptors_from_json(j);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].s == s);
  CHECK(descriptors_from_json(to_json(ds)) == ds);
  CHECK_THROWS_AS(descriptor_from_json(Json::parse(R"({"s":"s","m":1,"weight":{"m":0,"charges":["0"]}})")),
                  ParseError);
}

TEST_CASE("raw labels") {
  auto r = weight_from_json(Json::parse(R"({"raw":{"lo":-4,"hi":4,"delta1":{"1":"1"},"delta2":{},"c":"0"}})"));
  REQUIRE(std::holds_alternative<RawLabels>(r));
  CHECK(std::get<RawLabels>(r).delta1.at(1) == Scalar(1));
  CHECK(error_of(R"({"raw":{"lo":-4,"hi":4,"delta1":{"9":"1"},"delta2":{},"c":"0"}})") ==
        "$.raw: label at 9 lies outside the window");
}
