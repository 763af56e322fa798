#include "rpf/harness.hpp"

#include "rpf/oracle.hpp"

#include <doctest.h>

#include <algorithm>

using namespace rpf;

TEST_CASE("method and property names") {
    CHECK(parse_method("explicit") == Method::Explicit);
    CHECK(parse_method("recursive") == Method::Recursive);
    CHECK(parse_method("oracle") == Method::Oracle);
    CHECK_THROWS_AS(parse_method("fast"), InputError);
    CHECK(method_name(Method::Recursive) == "recursive");
    CHECK_THROWS_AS(build_certificate(PartList{1}, Method::Oracle), InputError);

    CHECK(parse_properties("all") == all_properties());
    CHECK(all_properties().size() == 6);
    CHECK(parse_properties("parity, zeros") == std::vector<Property>{Property::Parity, Property::Zeros});
    CHECK(property_name(Property::PathAgreement) == "path-agreement");
    CHECK(parse_properties("mean-value") == std::vector<Property>{Property::MeanValue});
    CHECK_THROWS_AS(parse_properties("parity,bogus"), InputError);
    CHECK_THROWS_AS(parse_properties(""), InputError);
}

TEST_CASE("corpus enumeration") {
    const auto lists = corpus(4, 6);
    CHECK(lists.size() == 209);
    CHECK(std::is_sorted(lists.begin(), lists.end(), [](const PartList& a, const PartList& b) { return a.size() < b.size(); }));
    for (const auto& d : lists) {
        CHECK(std::is_sorted(d.begin(), d.end()));
        CHECK(d.back() <= 6);
    }
    CHECK(corpus(1, 3).size() == 3);
    CHECK(corpus(2, 2).size() == 5);
    CHECK_THROWS_AS(corpus(0, 3), InputError);
}

TEST_CASE("verify passes on small lists with every property") {
    for (const auto& d : {PartList{1}, PartList{1, 2}, PartList{2, 3}, PartList{3, 1, 2}, PartList{2, 2, 4, 6}}) {
        const auto report = verify(d, VerifyOptions{});
        CAPTURE(report.to_text());
        CHECK(report.passed());
        CHECK(report.results.size() == 6);
    }
}

TEST_CASE("verify reports structure") {
    VerifyOptions o;
    o.properties = {Property::Oracle, Property::Recurrence, Property::Parity};
    o.n_max = 25;
    o.method = Method::Explicit;
    const auto report = verify(PartList{1}, o);
    CHECK(report.passed());
    CHECK(report.results[0].note == "n in 0..25");
    CHECK(report.results[1].note == "not applicable for m = 1");
    CHECK(report.results[2].note.find("off-grid mismatches: 0") != std::string::npos);

    const auto doc = report.to_json();
    CHECK(doc.at("passed").get<bool>());
    CHECK(doc.at("parts") == nlohmann::ordered_json::array({1}));
    CHECK(doc.at("properties").size() == 3);
    CHECK(doc.at("properties")[0].at("property") == "oracle");
    CHECK(report.to_text().rfind("parts 1: PASS\n", 0) == 0);

    o.n_max = -1;
    CHECK_THROWS_AS(verify(PartList{1}, o), InputError);
}

TEST_CASE("corpus verification keeps order and passes") {
    const auto lists = corpus(3, 4);
    VerifyOptions o;
    o.properties = {Property::Oracle, Property::PathAgreement, Property::MeanValue};
    const auto reports = verify_corpus(lists, o, 3);
    REQUIRE(reports.size() == lists.size());
    for (std::size_t i = 0; i < lists.size(); ++i) {
        CHECK(reports[i].parts == lists[i]);
        CHECK(reports[i].passed());
    }
}

TEST_CASE("bench agrees with the oracle") {
    const auto r = bench(PartList{1, 2, 3}, 500, Method::Recursive, 5);
    CHECK(r.agree());
    CHECK(r.certificate_value == count_dp(PartList{1, 2, 3}, 500).at(500));
    CHECK(r.eval_time.count() >= 0);
    CHECK_THROWS_AS(bench(PartList{1}, -1, Method::Explicit, 1), InputError);
}
