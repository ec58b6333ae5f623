#include <doctest.h>

#include "endscope/covering.hpp"
#include "endscope/finite_tree.hpp"
#include "support.hpp"

using namespace endscope;

TEST_CASE("is_compact") {
    CHECK(is_compact(support::load_tree("bin.tree")));
    CHECK_FALSE(is_compact(support::load_tree("baire.tree")));
    CHECK(is_compact(parse_tree("tree s5\nroot r\nedge r c 5\nedge c c 1\n")));
    // An infinite edge into a dead node does not count.
    CHECK(is_compact(parse_tree("tree d\nroot r\nnode a\nedge r a *\nedge r r 1\n")));
}

TEST_CASE("lindelof_degree and extent") {
    CHECK(lindelof_degree(support::load_tree("baire.tree")) == Cardinal::aleph(0));
    CHECK(lindelof_degree(support::load_tree("uncountable-star.tree")) == Cardinal::aleph(1));
    CHECK(lindelof_degree(support::load_tree("bin.tree")) == Cardinal::aleph(0));
    CHECK(lindelof_degree(TreePresentation::empty()) == Cardinal::aleph(0));
    auto two = parse_tree("tree two\nroot r\nnode c\nedge r c w1\nedge r c w3\nedge c c 1\n");
    CHECK(lindelof_degree(two) == Cardinal::aleph(3));
    CHECK(extent(two) == lindelof_degree(two));
    // An uncountable edge that prunes away leaves the degree at aleph_0.
    auto dead = parse_tree("tree dead\nroot r\nnode a\nedge r a w2\nedge r r 1\n");
    CHECK(lindelof_degree(dead) == Cardinal::aleph(0));
}

TEST_CASE("rothberger and menger") {
    CHECK(is_rothberger(support::load_tree("star.tree")));
    CHECK_FALSE(is_rothberger(support::load_tree("bin.tree")));
    CHECK_FALSE(is_rothberger(support::load_tree("uncountable-star.tree")));
    CHECK(is_menger(support::load_tree("bin.tree")));
    CHECK_FALSE(is_menger(support::load_tree("baire.tree")));
    CHECK(is_menger(support::load_tree("star.tree")));
    CHECK_FALSE(is_menger(support::load_tree("uncountable-star.tree")));
    for (const auto& p : support::corpus(200, 37)) {
        CHECK(is_sigma_compact(p) == is_menger(p));
    }
}

TEST_CASE("sigma_cover") {
    SUBCASE("star") {
        auto pieces = sigma_cover(support::load_tree("star.tree"), 3);
        REQUIRE(pieces);
        REQUIRE(pieces->size() == 3);
        for (std::size_t k = 1; k <= 3; ++k) {
            const auto& q = (*pieces)[k - 1];
            CHECK(q.name() == "star-cap" + std::to_string(k));
            CHECK(q.edge(0).mult == Cardinal::finite(k));
            CHECK(is_compact(q));
            // k arms, each a single ray.
            std::size_t rays = 0;
            truncate(q, 6, 1).visit([&](const UNode&, const FiniteTree::Node& n) {
                rays += n.depth == 6 ? 1 : 0;
                return true;
            });
            CHECK(rays == k);
        }
    }
    SUBCASE("baire") { CHECK_FALSE(sigma_cover(support::load_tree("baire.tree"), 3)); }
    SUBCASE("bin") {
        auto bin = support::load_tree("bin.tree");
        auto pieces = sigma_cover(bin, 4);
        REQUIRE(pieces);
        for (const auto& q : *pieces) {
            CHECK(q.edges() == bin.edges());
        }
    }
    SUBCASE("rays land in the piece after their largest index") {
        std::size_t bad = 0;
        std::size_t menger = 0;
        for (const auto& p : support::corpus(300, 41)) {
            auto pieces = sigma_cover(p, 4);
            if (!is_menger(p)) {
                bad += pieces ? 1 : 0;
                continue;
            }
            ++menger;
            REQUIRE(pieces);
            const TreePresentation base = prune(p);
            for (const auto& ray : support::lasso_rays(base, 12, {0, 2, 1, 3})) {
                bool cycle_infinite = false;
                for (EdgeOrdinal e : ray.cycle) {
                    cycle_infinite = cycle_infinite || base.edge(e).mult.is_infinite();
                }
                bad += cycle_infinite ? 1 : 0;
                const std::size_t k = ray.max_infinite_index + 1;
                bad += is_legal((*pieces)[k - 1], ray.prefix) ? 0 : 1;
            }
        }
        CHECK(menger > 100);
        CHECK(bad == 0);
    }
}

TEST_CASE("report") {
    SUBCASE("bin") {
        auto r = report(support::load_tree("bin.tree"), 3);
        CHECK(r.compact);
        CHECK(r.lindelof_degree == Cardinal::aleph(0));
        CHECK_FALSE(r.scattered);
        CHECK_FALSE(r.rothberger);
        CHECK(r.menger);
        CHECK(r.sigma_compact);
        CHECK(r.binary);
        CHECK_FALSE(r.baire);
    }
    SUBCASE("baire") {
        auto r = report(support::load_tree("baire.tree"), 3);
        CHECK_FALSE(r.compact);
        CHECK(r.lindelof_degree == Cardinal::aleph(0));
        CHECK_FALSE(r.scattered);
        CHECK_FALSE(r.rothberger);
        CHECK_FALSE(r.menger);
        CHECK(r.binary);
        CHECK(r.baire);
    }
    SUBCASE("single loop") {
        auto r = report(support::load_tree("single-loop.tree"), 3);
        CHECK(r.compact);
        CHECK(r.scattered);
        CHECK(r.rothberger);
        CHECK(r.menger);
        CHECK(r.sigma_compact);
        CHECK(r.scatter_rank == 1);
        CHECK(r.kb_rank == 1);
        CHECK_FALSE(r.binary);
        CHECK_FALSE(r.baire);
    }
    SUBCASE("uncountable star carries no pattern") {
        auto r = report(support::load_tree("uncountable-star.tree"), 3);
        CHECK_FALSE(r.menger);
        CHECK_FALSE(r.baire);
        CHECK(report_invariant_violations(r).empty());
    }
    SUBCASE("empty") {
        auto r = report(TreePresentation::empty(), 3);
        CHECK(r.empty);
        CHECK(r.compact);
        CHECK(r.rothberger);
        CHECK(r.menger);
    }
    SUBCASE("not yet pruned") {
        auto r = report(support::load_tree("dangling.tree"), 3);
        CHECK_FALSE(r.pruned);
        CHECK_FALSE(r.empty);
    }
    SUBCASE("implications on the corpus") {
        std::size_t bad = 0;
        for (const auto& p : support::corpus(500, 43)) {
            auto r = report(p, 3);
            bad += report_invariant_violations(r).size();
            // Checked again directly, not through the helper.
            const bool lindelof = r.lindelof_degree == Cardinal::aleph(0);
            bad += (r.rothberger && !r.menger) ? 1 : 0;
            bad += (r.menger && !lindelof) ? 1 : 0;
            bad += (r.compact && !r.menger) ? 1 : 0;
            bad += r.menger != r.sigma_compact ? 1 : 0;
            bad += r.extent != r.lindelof_degree ? 1 : 0;
        }
        CHECK(bad == 0);
    }
}
