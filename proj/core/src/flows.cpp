#include <gz/flows.hpp>

namespace gz {

namespace {

void check_indices(const Mat& x, int i, int j) {
    if (i < 1 || i > x.size() - 1 || j < 1 || j > i)
        throw Error(ErrorKind::Index, "flow indices require 1 <= j <= i <= n-1");
}

} // namespace

Mat vector_field(const Mat& x, int i, int j) {
    check_indices(x, i, j);
    Mat gen = Scalar::integer(j, x.mode()) * mat_pow(cutoff(x, i), j - 1);
    return commutator(embed(gen, x.size()), x);
}

Mat flow(const Mat& x, const FlowStep& step, const ToleranceContext& ctx) {
    check_indices(x, step.level, step.power);
    if (step.time.mode() != x.mode())
        throw Error(ErrorKind::MixedMode, "flow time mode mismatch");
    Scalar tj = step.time * Scalar::integer(step.power, x.mode());
    Mat gen = tj * mat_pow(cutoff(x, step.level), step.power - 1);
    Mat e = mat_exp(gen, ctx);       // exact mode throws unless nilpotent
    Mat einv = mat_exp(-gen, ctx);
    const int n = x.size();
    return embed_group(e, n) * x * embed_group(einv, n);
}

Mat flow_word(const Mat& x, const std::vector<FlowStep>& steps, const ToleranceContext& ctx) {
    Mat y = x;
    for (const auto& s : steps) y = flow(y, s, ctx);
    return y;
}

} // namespace gz
