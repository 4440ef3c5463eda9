#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "argonaut/af/oracle.hpp"
#include "argonaut/af/semantics.hpp"
#include "support/fixtures.hpp"

using namespace argonaut;
using testsupport::random_framework;

TEST_CASE("solver agrees with the brute-force oracle on random frameworks") {
    std::mt19937 rng(20240617);
    for (int trial = 0; trial < 150; ++trial) {
        const auto f = random_framework(rng, 8);
        for (af::Semantics s : af::all_semantics()) {
            CAPTURE(trial);
            CAPTURE(af::to_string(s));
            REQUIRE_EQ(af::solve(f, s), af::oracle_extensions(f, s));
        }
    }
}

TEST_CASE("admissible sets are conflict-free") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_framework(rng, 7);
        // Walk all subsets directly; n is small.
        const auto& args = f.arguments();
        for (std::uint32_t mask = 0; mask < (1u << args.size()); ++mask) {
            std::vector<af::ArgumentId> subset;
            for (std::size_t i = 0; i < args.size(); ++i) {
                if ((mask >> i) & 1) subset.push_back(args[i]);
            }
            if (af::is_admissible(f, subset)) CHECK(af::is_conflict_free(f, subset));
        }
    }
}

TEST_CASE("grounded extension is the least complete extension") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_framework(rng, 8);
        const auto grounded = af::grounded_extension(f);
        const auto complete = af::complete_extensions(f);
        CHECK(std::find(complete.begin(), complete.end(), grounded) != complete.end());
        for (const af::Extension& c : complete) CHECK(grounded.subset_of(c));
    }
}

TEST_CASE("preferred extensions are complete") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_framework(rng, 8);
        const auto complete = af::complete_extensions(f);
        for (const af::Extension& p : af::preferred_extensions(f)) {
            CHECK(std::find(complete.begin(), complete.end(), p) != complete.end());
        }
    }
}

TEST_CASE("maximal ideal extension is admissible and inside every preferred") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const auto f = random_framework(rng, 8);
        const auto ideal = af::maximal_ideal_extension(f);
        CHECK(af::is_admissible(f, ideal.members()));
        for (const af::Extension& p : af::preferred_extensions(f)) {
            CHECK(ideal.subset_of(p));
        }
    }
}

TEST_CASE("maximal ideal extension is deterministic across equal frameworks") {
    std::mt19937 rng(19);
    for (int trial = 0; trial < 100; ++trial) {
        const auto f = random_framework(rng, 8);
        const af::ArgumentationFramework copy(f.arguments(), f.attacks());
        CHECK_EQ(af::maximal_ideal_extension(f), af::maximal_ideal_extension(copy));
    }
}

TEST_CASE("a framework without attacks has a single extension with everything") {
    std::mt19937 rng(23);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> n_dist(0, 10);
        std::vector<af::ArgumentId> args;
        for (int i = 0, n = n_dist(rng); i < n; ++i) args.push_back("k" + std::to_string(i));
        const af::ArgumentationFramework f(args, {});
        const af::Extension everything(args);
        for (af::Semantics s : af::all_semantics()) {
            CHECK_EQ(af::solve(f, s), std::vector<af::Extension>{everything});
        }
    }
}

TEST_CASE("argument relabeling commutes with every semantics") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const auto f = random_framework(rng, 8);
        const auto& args = f.arguments();

        // Random bijection onto fresh names.
        std::vector<std::size_t> perm(args.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        auto rename = [&](const af::ArgumentId& id) {
            const auto at = std::find(args.begin(), args.end(), id) - args.begin();
            return "renamed_" + std::to_string(perm[static_cast<std::size_t>(at)]);
        };

        std::vector<af::ArgumentId> renamed_args;
        for (const auto& a : args) renamed_args.push_back(rename(a));
        std::vector<af::Attack> renamed_attacks;
        for (const auto& atk : f.attacks())
            renamed_attacks.push_back({rename(atk.attacker), rename(atk.target)});
        const af::ArgumentationFramework g(renamed_args, renamed_attacks);

        for (af::Semantics s : af::all_semantics()) {
            auto expected = af::solve(f, s);
            std::vector<af::Extension> mapped;
            for (const af::Extension& e : expected) {
                std::vector<af::ArgumentId> members;
                for (const auto& m : e.members()) members.push_back(rename(m));
                mapped.push_back(af::Extension(std::move(members)));
            }
            std::sort(mapped.begin(), mapped.end());
            CHECK_EQ(af::solve(g, s), mapped);
        }
    }
}
