#pragma once

// The symmetry properties of a net, checked exactly over every piece.
//
//   C1: on each line l_i the interior segment vectors a_i^{j+} are the
//       same for every admissible j, and the crossing segment satisfies
//       b_i = 2 a_i^{j+}.
//   C2: every quadrilateral's diagonal P_{i,j+1}P_{i+1,j} bisects it,
//       area_T = area_Tprime.
//   C3: quadrilateral areas are constant along each diagonal d = j - i.
//   C4: all boundary triangles have the same area.
//
// check_all additionally re-verifies triangulation independence (both
// diagonal splits against the shoelace value), the diagonal-length
// identity d_{i,j} = d_{i+1,j+1}, b = 2a on its own, s-symmetry
// s_i = s_{N-i} together with distinctness of all other pairs (right
// frame, equidistant spacing only; vacuous otherwise), and, for skew
// frames, that the mirrored frame (a, -b) encloses the same total area.
//
// Checks whose index ranges are empty hold vacuously.  Witnesses are
// retained in full for N <= 12; above that only the first violation is
// kept, though the verdict always reflects a full scan.

#include "stringart/net.hpp"
#include "stringart/rational.hpp"

#include <optional>
#include <string>
#include <vector>

namespace stringart {

struct Violation {
    std::string id;
    std::string lhs;
    std::string rhs;
};

struct Witness {
    std::string id;
    std::vector<std::string> values;
};

struct CheckResult {
    bool holds = true;
    std::vector<Witness> witnesses;
    std::optional<Violation> first_violation;
};

struct PropertyReport {
    CheckResult c1;
    CheckResult c2;
    CheckResult c3;
    CheckResult c4;
    CheckResult triangulation_independence;
    CheckResult diagonal_identity;
    CheckResult b_equals_2a;
    CheckResult s_symmetry;
    CheckResult acute_obtuse_area;

    bool all_hold() const {
        return c1.holds && c2.holds && c3.holds && c4.holds && triangulation_independence.holds &&
               diagonal_identity.holds && b_equals_2a.holds && s_symmetry.holds &&
               acute_obtuse_area.holds;
    }
};

CheckResult check_C1(const Net& net);
CheckResult check_C2(const Net& net);
CheckResult check_C3(const Net& net);
CheckResult check_C4(const Net& net);

PropertyReport check_all(const Net& net);

} // namespace stringart
