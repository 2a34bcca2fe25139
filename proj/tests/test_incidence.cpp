// Bipartite incidence structures: regularity tests, the non-degeneracy
// criterion for (16_6) structures, and the canonical form used to decide
// isomorphism (checked invariant under random relabelings).

#include <catch2/catch_amalgamated.hpp>

#include "k3k/configs.hpp"
#include "k3k/incidence.hpp"
#include "k3k/rng.hpp"

using namespace k3k;

namespace {

std::vector<std::string> labels(const std::string& stem, size_t n) {
    std::vector<std::string> out;
    for (size_t i = 0; i < n; ++i) out.push_back(stem + std::to_string(i));
    return out;
}

IncidenceStructure permuted(const IncidenceStructure& inc, Rng& rng) {
    size_t na = inc.rows(), nb = inc.cols();
    std::vector<size_t> ra(na), cb(nb);
    for (size_t i = 0; i < na; ++i) ra[i] = i;
    for (size_t j = 0; j < nb; ++j) cb[j] = j;
    for (size_t i = na; i > 1; --i) std::swap(ra[i - 1], ra[rng.below(i)]);
    for (size_t j = nb; j > 1; --j) std::swap(cb[j - 1], cb[rng.below(j)]);
    BitMatrix m(na, std::vector<uint8_t>(nb));
    for (size_t i = 0; i < na; ++i)
        for (size_t j = 0; j < nb; ++j) m[i][j] = inc.matrix[ra[i]][cb[j]];
    return IncidenceStructure(labels("r", na), labels("c", nb), std::move(m));
}

}  // namespace

TEST_CASE("construction validation") {
    CHECK_THROWS(IncidenceStructure(labels("a", 2), labels("b", 2), BitMatrix{{1, 0}}));
    CHECK_THROWS(IncidenceStructure({"x", "x"}, labels("b", 2), BitMatrix{{1, 0}, {0, 1}}));
    IncidenceStructure inc(labels("a", 2), labels("b", 2), BitMatrix{{1, 0}, {0, 1}});
    CHECK(inc.at("a0", "b0") == 1);
    CHECK(inc.at("a0", "b1") == 0);
    CHECK(inc.transposed().at("b1", "a1") == 1);
}

TEST_CASE("symmetric configuration test") {
    BitMatrix id(16, std::vector<uint8_t>(16, 0));
    for (int i = 0; i < 16; ++i) id[size_t(i)][size_t(i)] = 1;
    IncidenceStructure ident(labels("a", 16), labels("b", 16), id);
    CHECK(is_symmetric_config(ident, 1));
    CHECK(!is_symmetric_config(ident, 2));

    BitMatrix ones(16, std::vector<uint8_t>(16, 1));
    CHECK(is_symmetric_config(IncidenceStructure(labels("a", 16), labels("b", 16), ones), 16));

    CHECK(is_symmetric_config(abstract_kummer(), 6));
}

TEST_CASE("non-degeneracy of 16_6 structures") {
    CHECK(nondegenerate_16_6(abstract_kummer()));
    CHECK(is_symmetric_config(degenerate_16_6(), 6));
    CHECK(!nondegenerate_16_6(degenerate_16_6()));
    // duplicated column: two B-objects share all 6 neighbors
    auto inc = abstract_kummer();
    BitMatrix m = inc.matrix;
    for (size_t i = 0; i < 16; ++i) m[i][1] = m[i][0];
    IncidenceStructure dup(labels("a", 16), labels("b", 16), std::move(m));
    CHECK(!nondegenerate_16_6(dup));
}

TEST_CASE("canonical form is invariant under relabeling") {
    Rng rng(17);
    auto base = abstract_kummer();
    BitMatrix canon = canonical_bipartite_form(base);
    for (int i = 0; i < 10; ++i) {
        IncidenceStructure shuffled = permuted(base, rng);
        CHECK(canonical_bipartite_form(shuffled) == canon);
        CHECK(incidence_isomorphic(base, shuffled));
    }
}

TEST_CASE("canonical form separates non-isomorphic structures") {
    CHECK(!incidence_isomorphic(abstract_kummer(), degenerate_16_6()));
    Rng rng(18);
    IncidenceStructure shuffled = permuted(degenerate_16_6(), rng);
    CHECK(incidence_isomorphic(degenerate_16_6(), shuffled));
    CHECK(!incidence_isomorphic(abstract_kummer(), shuffled));
}
