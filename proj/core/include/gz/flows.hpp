#pragma once

#include <gz/moment.hpp>

namespace gz {

/// One flow parameter of the commuting family: level i, power j, time t.
struct FlowStep {
    int level = 1; // 1..n-1
    int power = 1; // 1..level
    Scalar time;
};

/// Infinitesimal generator [j * embed(x_i^{j-1}), x]; the t-derivative of
/// flow(x, {i, j, t}) at t = 0.
Mat vector_field(const Mat& x, int i, int j);

/// Ad(exp(t j x_i^{j-1})) . x.  Exact mode requires x_i^{j-1} nilpotent.
Mat flow(const Mat& x, const FlowStep& step, const ToleranceContext& ctx = {});

/// Left-to-right composition; the result is order-independent because
/// the fields commute.
Mat flow_word(const Mat& x, const std::vector<FlowStep>& steps, const ToleranceContext& ctx = {});

} // namespace gz
