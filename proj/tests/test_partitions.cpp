#include <doctest.h>

#include "endscope/error.hpp"
#include "endscope/finite_tree.hpp"
#include "endscope/oracle.hpp"
#include "endscope/partitions.hpp"
#include "support.hpp"

using namespace endscope;

namespace {

std::vector<UNode> cones(const std::string& list) { return parse_unode_list(list); }

std::vector<std::string> spelled(const std::vector<UNode>& family) {
    std::vector<std::string> out;
    for (const auto& u : family) {
        out.push_back(u.to_string());
    }
    return out;
}

ConeFamily partition_of(const std::string& list) { return {cones(list), ConeFamily::Kind::Partition}; }

// Truncation deep and wide enough that the oracle sees every index a family
// mentions plus one unmentioned sibling.
FiniteTree oracle_tree(const TreePresentation& p, const std::vector<UNode>& family) {
    std::size_t depth = 0;
    std::uint64_t width = 1;
    for (const auto& u : family) {
        depth = std::max(depth, u.depth());
        for (const Step& s : u.steps) {
            width = std::max<std::uint64_t>(width, s.index + 2);
        }
    }
    return truncate(p, static_cast<std::uint32_t>(depth + 1), width);
}

// Plain pairwise check, independent of is_partition.
bool pairwise_disjoint(const std::vector<UNode>& family) {
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (!disjoint(family[i], family[j])) {
                return false;
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("cone_cover_check") {
    auto bin = support::load_tree("bin.tree");
    CHECK(cone_cover_check(bin, cones("e0.0,e0.1")));
    auto v = cone_cover_check(bin, cones("e0.0"));
    CHECK_FALSE(v);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->to_string() == "e0.1");
    CHECK(cone_cover_check(support::load_tree("star.tree"), cones("@")));
    CHECK_FALSE(cone_cover_check(bin, {}));
    CHECK(cone_cover_check(TreePresentation::empty(), {}));
    CHECK_THROWS_AS(cone_cover_check(bin, cones("e0.2")), PreconditionError);
    // A tail cone covers every sibling from its index on.
    auto baire = support::load_tree("baire.tree");
    CHECK(cone_cover_check(baire, cones("e0.0,e0.1+")));
    CHECK_FALSE(cone_cover_check(baire, cones("e0.0,e0.2+")));
}

TEST_CASE("antichain_normalize") {
    auto bin = support::load_tree("bin.tree");
    auto star = support::load_tree("star.tree");
    CHECK(spelled(antichain_normalize(bin, cones("@,e0.0")).members) == std::vector<std::string>{"@"});
    auto f = antichain_normalize(bin, cones("e0.0,e0.1,e0.0/e0.1"));
    CHECK(spelled(f.members) == std::vector<std::string>{"e0.0", "e0.1"});
    CHECK(f.kind == ConeFamily::Kind::Partition);
    CHECK(spelled(antichain_normalize(star, cones("e0.0,e0.1,@")).members) == std::vector<std::string>{"@"});
    CHECK(spelled(antichain_normalize(bin, cones("e0.1,e0.0,e0.1")).members) ==
          std::vector<std::string>{"e0.0", "e0.1"});
    CHECK_THROWS_AS(antichain_normalize(bin, cones("e0.0")), PreconditionError);
    CHECK(is_partition(bin, cones("e0.0,e0.1")));
    CHECK_FALSE(is_partition(bin, cones("@,e0.0")));
}

TEST_CASE("refine_partition") {
    auto bin = support::load_tree("bin.tree");
    SUBCASE("forced split") {
        auto r = refine_partition(bin, partition_of("@"), cones("@"));
        CHECK(spelled(r.partition.members) == std::vector<std::string>{"e0.0", "e0.1"});
        CHECK(r.parent == std::vector<std::size_t>{0, 0});
    }
    SUBCASE("descend until inside a cover cone") {
        auto r = refine_partition(bin, partition_of("@"), cones("e0.0,e0.1/e0.0,e0.1/e0.1"));
        CHECK(spelled(r.partition.members) == std::vector<std::string>{"e0.0", "e0.1/e0.0", "e0.1/e0.1"});
        CHECK(r.parent == std::vector<std::size_t>{0, 0, 0});
    }
    SUBCASE("star cover escapes") {
        auto star = support::load_tree("star.tree");
        try {
            refine_partition(star, partition_of("@"), cones("e0.0,e0.1"));
            FAIL("expected a precondition error");
        } catch (const PreconditionError& e) {
            CHECK(std::string(e.what()).find("e0.2") != std::string::npos);
        }
    }
    SUBCASE("part must be a partition") {
        CHECK_THROWS_AS(refine_partition(bin, partition_of("e0.0"), cones("@")), PreconditionError);
        CHECK_THROWS_AS(refine_partition(bin, partition_of("@,e0.0"), cones("@")), PreconditionError);
    }
    SUBCASE("baire keeps a tail") {
        auto baire = support::load_tree("baire.tree");
        auto r = refine_partition(baire, partition_of("@"), cones("e0.0,e0.1+"));
        CHECK(spelled(r.partition.members) == std::vector<std::string>{"e0.0", "e0.1+"});
    }
    SUBCASE("overlapping tails are split") {
        auto baire = support::load_tree("baire.tree");
        auto f = antichain_normalize(baire, cones("@,e0.0+/e0.1"));
        CHECK(spelled(f.members) == std::vector<std::string>{"@"});
        auto g = antichain_normalize(baire, cones("e0.0+/e0.0,e0.0+/e0.1+,e0.2+/e0.3"));
        CHECK(pairwise_disjoint(g.members));
        CHECK(cone_cover_check(baire, g.members));
    }
}

TEST_CASE("refine_partition contract on random instances") {
    Rng rng(53);
    RandomPresentationOptions small;
    small.max_nodes = 5;
    std::size_t instances = 0;
    std::size_t bad = 0;
    while (instances < 200) {
        const auto p = prune(random_presentation(rng, small));
        if (p.is_empty()) {
            continue;
        }
        ++instances;
        const auto part = random_partition(p, rng, 2, 2);
        const auto cover = random_partition(p, rng, 3, 3);
        const auto r = refine_partition(p, {part, ConeFamily::Kind::Partition}, cover);
        const auto& q = r.partition.members;
        bad += pairwise_disjoint(q) ? 0 : 1;
        bad += cone_cover_check(p, q) ? 0 : 1;
        std::vector<UNode> all = q;
        all.insert(all.end(), part.begin(), part.end());
        all.insert(all.end(), cover.begin(), cover.end());
        bad += oracle_cover_check(oracle_tree(p, all), q) ? 0 : 1;
        bad += r.parent.size() == q.size() ? 0 : 1;
        for (std::size_t j = 0; j < q.size() && j < r.parent.size(); ++j) {
            std::size_t below = 0;
            for (const auto& t : part) {
                below += (contains(t, q[j]) && !(t == q[j])) ? 1 : 0;
            }
            bad += below == 1 ? 0 : 1;
            bad += contains(part.at(r.parent[j]), q[j]) && !(part[r.parent[j]] == q[j]) ? 0 : 1;
            bad += std::any_of(cover.begin(), cover.end(), [&](const UNode& c) { return contains(c, q[j]); }) ? 0 : 1;
        }
    }
    CHECK(bad == 0);
}

TEST_CASE("d_kernel") {
    SUBCASE("bin") {
        auto k = d_kernel(support::load_tree("bin.tree"), partition_of("e0.0,e0.1"));
        REQUIRE(k.size() == 2);
        CHECK(k[0].ray.to_string() == "e0.0/e0.0");
        CHECK(k[0].cycle_start == 1);
        CHECK(k[1].ray.to_string() == "e0.1/e0.0");
    }
    SUBCASE("star") {
        auto k = d_kernel(support::load_tree("star.tree"), {cones("@"), ConeFamily::Kind::Cover});
        REQUIRE(k.size() == 1);
        CHECK(k[0].ray.to_string() == "e0.0/e1.0");
        CHECK(k[0].cycle_start == 1);
    }
    SUBCASE("comb") {
        auto k = d_kernel(support::load_tree("comb.tree"), {cones("@"), ConeFamily::Kind::Cover});
        REQUIRE(k.size() == 1);
        CHECK(k[0].ray.to_string() == "e0.0");
        CHECK(k[0].cycle_start == 0);
    }
    SUBCASE("non-covering") {
        CHECK_THROWS_AS(d_kernel(support::load_tree("bin.tree"), partition_of("e0.0")), PreconditionError);
    }
    SUBCASE("random assignments") {
        Rng rng(59);
        std::size_t bad = 0;
        for (const auto& raw : support::corpus(150, 61)) {
            const auto p = prune(raw);
            if (p.is_empty()) {
                continue;
            }
            auto family = random_partition(p, rng, 3, 3);
            const auto extra = random_cones(p, rng, 3, 2);
            family.insert(family.end(), extra.begin(), extra.end());
            const auto k = d_kernel(p, {family, ConeFamily::Kind::Cover});
            std::vector<UNode> kernel_cones;
            for (const auto& pt : k) {
                kernel_cones.push_back(pt.cone);
                bad += contains(pt.cone, pt.ray) ? 0 : 1;
                bad += is_legal(p, pt.ray) ? 0 : 1;
                bad += pt.cycle_start < pt.ray.depth() ? 0 : 1;
            }
            bad += pairwise_disjoint(kernel_cones) ? 0 : 1;
            bad += cone_cover_check(p, kernel_cones) ? 0 : 1;
            // Normalizing again changes nothing and never grows the family.
            const auto once = antichain_normalize(p, family);
            // Without tails it only drops members; overlapping tails get split.
            const bool concrete = std::all_of(family.begin(), family.end(), [](const UNode& u) { return u.is_concrete(); });
            bad += (!concrete || once.members.size() <= family.size()) ? 0 : 1;
            bad += antichain_normalize(p, once.members).members == once.members ? 0 : 1;
        }
        CHECK(bad == 0);
    }
}

TEST_CASE("cover checker agrees with the oracle") {
    Rng rng(67);
    std::size_t instances = 0;
    std::size_t covered = 0;
    std::size_t bad = 0;
    while (instances < 200) {
        const auto p = prune(random_presentation(rng));
        if (p.is_empty()) {
            continue;
        }
        ++instances;
        // Half are partitions with a member dropped, half are random cones.
        std::vector<UNode> family = random_partition(p, rng, 3, 3);
        if (instances % 2 == 0 && family.size() > 1) {
            family.erase(family.begin() + static_cast<std::ptrdiff_t>(rng() % family.size()));
        } else if (instances % 2 == 1) {
            family = random_cones(p, rng, 3, 4);
        }
        const bool ours = cone_cover_check(p, family).covered;
        covered += ours ? 1 : 0;
        if (ours != oracle_cover_check(oracle_tree(p, family), family)) {
            ++bad;
            MESSAGE("cover disagreement on\n" << format_tree(p));
        }
    }
    CHECK(covered > 10);
    CHECK(covered < 190);
    CHECK(bad == 0);
}
