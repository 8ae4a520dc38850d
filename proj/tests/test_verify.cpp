#include <catch2/catch_amalgamated.hpp>

#include "k2n/verify.hpp"

#include <sstream>

using namespace k2n;

namespace {

std::string render(const SuiteReport& r) {
    std::ostringstream out;
    out << r.id << " (" << r.title << "): " << r.instances << " instances, " << r.failures
        << " failures";
    for (const std::string& n : r.notes) out << "\n  " << n;
    return out.str();
}

} // namespace

TEST_CASE("every registered suite passes at quick scale") {
    for (const std::string& id : suite_ids()) {
        SuiteReport r = run_suite(id, Scale::quick, 2026);
        INFO(render(r));
        CHECK(r.passed());
    }
}

TEST_CASE("suite reports are reproducible for a fixed seed") {
    for (const std::string& id : {std::string("2.9"), std::string("6.2"), std::string("roundtrip")}) {
        SuiteReport a = run_suite(id, Scale::quick, 7);
        SuiteReport b = run_suite(id, Scale::quick, 7);
        CHECK(a.instances == b.instances);
        CHECK(a.failures == b.failures);
        CHECK(a.notes == b.notes);
    }
}

TEST_CASE("unknown suite ids are rejected") {
    CHECK_THROWS_AS(run_suite("9.9", Scale::quick, 1), std::invalid_argument);
}

TEST_CASE("changing the seed changes the sampled instances but not the verdict") {
    SuiteReport a = run_suite("6.1", Scale::quick, 11);
    SuiteReport b = run_suite("6.1", Scale::quick, 12);
    CHECK(a.passed());
    CHECK(b.passed());
}
