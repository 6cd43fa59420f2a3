#include "srgb/connection.hpp"

namespace srgb {

ConnectionContext make_context(ModelSpaceId space, DistributionKind dist, double param, double L) {
    if (!(L > 0)) throw std::invalid_argument("make_context: L must be positive");
    ConnectionContext ctx;
    ctx.space = space;
    ctx.dist = dist;
    ctx.param = param;
    ctx.L = L;
    ctx.brackets = bracket_table(space, BracketSource::CoordinateDerived);
    auto lc = koszul_levi_civita<double>(L, ctx.brackets);
    ctx.gamma = deform<double>(lc, svk_connection<double>(lc, dist), param);
    return ctx;
}

ConnectionContext with_L(const ConnectionContext& ctx, double L) {
    return make_context(ctx.space, ctx.dist, ctx.param, L);
}

FrameVec covariant_derivative(const ConnectionTable& tab, const FrameVec& field_coeffs,
                              const FrameVec& direction, const FrameVec& coeff_derivs) {
    FrameVec out = coeff_derivs;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) out += (direction[i] * field_coeffs[j]) * tab(i, j);
    return out;
}

}  // namespace srgb
