#include "support/fixtures.hpp"

namespace fixtures {

using namespace arakelov;

Plf min_t(const Rational& cap) { return Plf::from_vertices({{0, 0}, {cap, cap}}, 0); }

std::shared_ptr<const CurveModel> two_point_curve() {
    static const auto c = std::make_shared<const CurveModel>(0, std::map<PointId, std::int64_t>{{"p0", 1}, {"pinf", 1}});
    return c;
}

MetrisedRDivisor w1_scaled_phi(const Rational& k) {
    std::map<PointId, EdgeData> edges;
    edges.emplace("pinf", EdgeData{1, Plf()});
    edges.emplace("p0", EdgeData{0, plf_lin_comb(-k / 2, min_t(1), 0, Plf())});
    return make_metrised(two_point_curve(), 0, std::move(edges));
}

MetrisedRDivisor w1() { return w1_scaled_phi(1); }

}  // namespace fixtures
