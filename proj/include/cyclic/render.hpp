#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "cyclic/algebra.hpp"
#include "cyclic/coach.hpp"
#include "cyclic/icos.hpp"
#include "cyclic/mds.hpp"
#include "cyclic/schick.hpp"
#include "cyclic/tour.hpp"

namespace cyclic {

using json = nlohmann::json;

// Canonical text renderings. These strings are part of the output
// contract: system rows are byte-stable and used for golden comparisons.

std::string render_list(const std::vector<i64>& values,
                        char open = '[', char close = ']');

// "[2, 4, 8, 16, 31, 1], [10, 20, 23, 17, 29, 5], ..."
std::string render_mds_row(const MdsSystem& system);

// "(1, 15, 13, 9), (3, 11, 5, 7)"
std::string render_sbb_row(const SbbSystem& system);

std::string render_signed_row(const std::vector<SignedCycle>& cycles);

// Two-row aligned coach display with coaches separated by '|'.
std::string render_coach_display(const CoachSystem& system);

// "[(+,2), (+,4), (+,8), (-,1)], ..."
std::string render_icos_row(const std::vector<IcosCycle>& cycles);

// "x^3 - 3*x - 1"
std::string render_int_poly(const IntPoly& p);

// Descending x, coefficients in ascending rho powers:
// "x^3 - 2*rho*x^2 + (-3 + 2*rho^2)*x - 1"
std::string render_rho_poly(const RhoPoly& p);

json to_json(const CoachSystem& system);
json to_json(const SbbSystem& system);
json to_json(const std::vector<SignedCycle>& cycles, i64 b);
json to_json(const MdsSystem& system);
json to_json(const std::vector<IcosCycle>& cycles, i64 b);
json to_json(const EulerTour& tour);
json to_json(const IntPoly& p);
json to_json(const RhoPoly& p);

// Long-format CSV (RFC 4180, CRLF line endings).
std::string to_csv(const CoachSystem& system);
std::string to_csv(const SbbSystem& system);
std::string to_csv(const std::vector<SignedCycle>& cycles, i64 b);
std::string to_csv(const MdsSystem& system);
std::string to_csv(const std::vector<IcosCycle>& cycles, i64 b);

} // namespace cyclic
