#pragma once

#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "core/based_algebra.hpp"
#include "core/classical.hpp"
#include "core/gamma_ideal.hpp"
#include "core/linear_geometry.hpp"
#include "core/oracle.hpp"
#include "core/verify.hpp"

namespace hilbworst {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchema = "hilbworst/1";

enum class TextFormat { Canonical, Cas };

Json to_json(const IdealPresentation& p, TextFormat fmt = TextFormat::Canonical);
Json to_json(const Family& f, TextFormat fmt = TextFormat::Canonical);
Json to_json(const VerifyReport& r);
Json to_json(const OracleSample& s, int n);
Json to_json(const SubspaceSummary& s, const std::vector<LinearSubspaceSpec>& optimal);
/// The dense table s[i][j][k] as "p/q" strings plus the nonzero residual vectors.
Json table_json(const MulTable& T, const std::map<Triple, std::vector<Rational>>& residuals);

/// [[i,j,k,"p/q"], ...] with zero values omitted, in variable order.
Json tvals_json(const Assignment& tvals);

/// Reads {"n": n, "t": [[i,j,k,"p/q"], ...]}; numbers are accepted for values as well.
/// Throws Error(Parse) or Error(IndexOutOfRange).
std::pair<int, Assignment> parse_tvals(const std::string& text);

/// One polynomial per line; `name(i,j) = poly` for families, `label: poly` for ideals.
std::string to_text(const IdealPresentation& p, TextFormat fmt);
std::string to_text(const Family& f, TextFormat fmt);
std::string to_text(const VerifyReport& r);
std::string to_text(const SubspaceSummary& s, const std::vector<LinearSubspaceSpec>& optimal);

}  // namespace hilbworst
