#pragma once

#include <gz/moment.hpp>

namespace gz {

/// Unit subdiagonal, zeros below it.
bool is_hessenberg(const Mat& x, const ToleranceContext& ctx = {});

/// The unique upper Hessenberg matrix in the fibre of c: inverts phi on
/// the Hessenberg section, solving one linear system per level.
Mat hessenberg_from_spec(const GZSpec& c, const ToleranceContext& ctx = {});

} // namespace gz
