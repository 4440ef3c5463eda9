#include <doctest.h>

#include "argonaut/af/oracle.hpp"
#include "argonaut/af/semantics.hpp"
#include "argonaut/errors.hpp"
#include "support/fixtures.hpp"

using namespace argonaut;
using testsupport::af1;
using testsupport::af2;
using testsupport::mutual_attack;

namespace {

af::Extension ext(std::vector<af::ArgumentId> members) {
    return af::Extension(std::move(members));
}

} // namespace

TEST_CASE("framework construction") {
    SUBCASE("deduplicates arguments and attacks") {
        af::ArgumentationFramework f({"a", "b", "a"}, {{"a", "b"}, {"a", "b"}});
        CHECK_EQ(f.argument_count(), 2);
        CHECK_EQ(f.attacks().size(), 1);
    }
    SUBCASE("rejects attacks with unknown endpoints") {
        CHECK_THROWS_AS(af::ArgumentationFramework({"a"}, {{"a", "b"}}), InputError);
        CHECK_THROWS_AS(af::ArgumentationFramework({"b"}, {{"a", "b"}}), InputError);
    }
    SUBCASE("rejects empty argument ids") {
        CHECK_THROWS_AS(af::ArgumentationFramework({""}, {}), InputError);
    }
    SUBCASE("self-attacks are legal input") {
        af::ArgumentationFramework f({"a"}, {{"a", "a"}});
        CHECK(f.has_attack("a", "a"));
    }
}

TEST_CASE("is_conflict_free") {
    const auto f = af1();
    CHECK(af::is_conflict_free(f, {"a1", "c1"}));
    CHECK(af::is_conflict_free(f, {}));
    CHECK_FALSE(af::is_conflict_free(f, {"b1", "c1"}));
    CHECK_FALSE(af::is_conflict_free(af::ArgumentationFramework({"a"}, {{"a", "a"}}), {"a"}));
    CHECK_THROWS_AS(af::is_conflict_free(f, {"nope"}), InputError);
}

TEST_CASE("is_acceptable") {
    const auto f = af1();
    CHECK(af::is_acceptable(f, {"b1"}, "b1"));
    CHECK_FALSE(af::is_acceptable(f, {}, "a1"));

    const af::ArgumentationFramework chain({"a", "b"}, {{"a", "b"}});
    CHECK(af::is_acceptable(chain, {}, "a"));  // unattacked

    CHECK_THROWS_AS(af::is_acceptable(f, {"a1"}, "zz"), InputError);
}

TEST_CASE("is_admissible") {
    const auto f = af1();
    CHECK(af::is_admissible(f, {"a1", "c1"}));
    CHECK(af::is_admissible(f, {}));
    CHECK_FALSE(af::is_admissible(f, {"a1"}));
}

TEST_CASE("characteristic_function") {
    SUBCASE("every argument of AF2 is attacked, so F({}) is empty") {
        CHECK_EQ(af::characteristic_function(af2(), {}), std::vector<af::ArgumentId>{});
    }
    SUBCASE("no attacks: everything is defended") {
        const af::ArgumentationFramework f({"p", "q"}, {});
        CHECK_EQ(af::characteristic_function(f, {}),
                 std::vector<af::ArgumentId>{"p", "q"});
    }
    SUBCASE("mutual attack: a defends itself") {
        CHECK_EQ(af::characteristic_function(mutual_attack(), {"a"}),
                 std::vector<af::ArgumentId>{"a"});
    }
}

TEST_CASE("grounded_extension") {
    CHECK_EQ(af::grounded_extension(af1()), ext({}));
    CHECK_EQ(af::grounded_extension(af2()), ext({}));
    CHECK_EQ(af::grounded_extension(af::ArgumentationFramework({"solo"}, {})),
             ext({"solo"}));
}

TEST_CASE("complete_extensions") {
    CHECK_EQ(af::complete_extensions(af1()),
             std::vector<af::Extension>{ext({}), ext({"a1", "c1"}), ext({"b1"})});
    CHECK_EQ(af::complete_extensions(af2()),
             std::vector<af::Extension>{ext({}), ext({"a2", "c2", "e2"})});

    const af::ArgumentationFramework no_attacks({"p", "q"}, {});
    CHECK_EQ(af::complete_extensions(no_attacks),
             std::vector<af::Extension>{ext({"p", "q"})});
}

TEST_CASE("preferred_extensions") {
    CHECK_EQ(af::preferred_extensions(af1()),
             std::vector<af::Extension>{ext({"a1", "c1"}), ext({"b1"})});
    CHECK_EQ(af::preferred_extensions(af2()),
             std::vector<af::Extension>{ext({"a2", "c2", "e2"})});
    CHECK_EQ(af::preferred_extensions(mutual_attack()),
             std::vector<af::Extension>{ext({"a"}), ext({"b"})});

    SUBCASE("nothing admissible but the empty set") {
        const af::ArgumentationFramework f({"a"}, {{"a", "a"}});
        CHECK_EQ(af::preferred_extensions(f), std::vector<af::Extension>{ext({})});
    }
}

TEST_CASE("maximal_ideal_extension") {
    CHECK_EQ(af::maximal_ideal_extension(af1()), ext({}));
    CHECK_EQ(af::maximal_ideal_extension(af2()), ext({"a2", "c2", "e2"}));
    CHECK_EQ(af::maximal_ideal_extension(mutual_attack()), ext({}));

    SUBCASE("intersection of preferred sets need not be admissible") {
        // a<->b, both attack c, c attacks d: preferred {a,d} and {b,d};
        // their intersection {d} is undefended, so the ideal extension is {}.
        const af::ArgumentationFramework f(
            {"a", "b", "c", "d"},
            {{"a", "b"}, {"b", "a"}, {"a", "c"}, {"b", "c"}, {"c", "d"}});
        CHECK_EQ(af::preferred_extensions(f),
                 std::vector<af::Extension>{ext({"a", "d"}), ext({"b", "d"})});
        CHECK_EQ(af::maximal_ideal_extension(f), ext({}));
    }
}

TEST_CASE("solve dispatch") {
    CHECK_EQ(af::solve(af1(), af::Semantics::preferred),
             std::vector<af::Extension>{ext({"a1", "c1"}), ext({"b1"})});
    CHECK_EQ(af::solve(af2(), af::Semantics::maximal_ideal),
             std::vector<af::Extension>{ext({"a2", "c2", "e2"})});

    SUBCASE("empty framework yields the empty extension under every semantics") {
        const af::ArgumentationFramework empty;
        for (af::Semantics s : af::all_semantics()) {
            CHECK_EQ(af::solve(empty, s), std::vector<af::Extension>{ext({})});
        }
    }
    SUBCASE("singleton semantics return singleton lists") {
        CHECK_EQ(af::solve(af1(), af::Semantics::grounded).size(), 1);
        CHECK_EQ(af::solve(mutual_attack(), af::Semantics::maximal_ideal).size(), 1);
    }
}

TEST_CASE("semantics names") {
    for (af::Semantics s : af::all_semantics()) {
        CHECK_EQ(af::parse_semantics(af::to_string(s)), s);
    }
    CHECK_FALSE(af::parse_semantics("stable").has_value());
}

TEST_CASE("oracle replicates the frozen examples") {
    CHECK_EQ(af::oracle_extensions(af1(), af::Semantics::complete),
             std::vector<af::Extension>{ext({}), ext({"a1", "c1"}), ext({"b1"})});
    CHECK_EQ(af::oracle_extensions(af2(), af::Semantics::grounded),
             std::vector<af::Extension>{ext({})});
    CHECK_EQ(af::oracle_extensions(af2(), af::Semantics::maximal_ideal),
             std::vector<af::Extension>{ext({"a2", "c2", "e2"})});

    SUBCASE("size bound") {
        std::vector<af::ArgumentId> many;
        for (int i = 0; i < 21; ++i) many.push_back("m" + std::to_string(i));
        CHECK_THROWS_AS(
            af::oracle_extensions(af::ArgumentationFramework(many, {}),
                                  af::Semantics::grounded),
            SizeError);
    }
}

TEST_CASE("enumeration semantics reject frameworks beyond 64 arguments") {
    std::vector<af::ArgumentId> many;
    for (int i = 0; i < 65; ++i) many.push_back("n" + std::to_string(i));
    const af::ArgumentationFramework f(many, {});
    CHECK_THROWS_AS(af::preferred_extensions(f), SizeError);
    CHECK_THROWS_AS(af::complete_extensions(f), SizeError);
    CHECK_THROWS_AS(af::maximal_ideal_extension(f), SizeError);
    // grounded has no bound
    CHECK_EQ(af::grounded_extension(f).size(), 65);
}

TEST_CASE("extension canonical form") {
    const af::Extension e({"b", "a", "b"});
    CHECK_EQ(e.members(), std::vector<af::ArgumentId>{"a", "b"});
    CHECK_EQ(e.to_string(), "{a,b}");
    CHECK_EQ(ext({}).to_string(), "{}");
    CHECK(ext({}) < ext({"a", "c"}));
    CHECK(ext({"a", "c"}) < ext({"b"}));
    CHECK(ext({"a"}).subset_of(ext({"a", "b"})));
    CHECK_FALSE(ext({"a", "b"}).subset_of(ext({"a"})));
}
