#include "stringart/invariants.hpp"

#include "stringart/areas.hpp"
#include "stringart/geometry.hpp"

#include <map>
#include <utility>

namespace stringart {

namespace {

// Full witness lists are kept only up to this size; the scan itself
// always covers every piece.
constexpr int witness_cap = 12;

void record_violation(CheckResult& result, std::string id, std::string lhs, std::string rhs) {
    result.holds = false;
    if (!result.first_violation) {
        result.first_violation = Violation{std::move(id), std::move(lhs), std::move(rhs)};
    }
}

std::string index_id(const char* name, int i) { return std::string(name) + "=" + std::to_string(i); }

std::string quad_id(int i, int j) {
    return "Q(" + std::to_string(i) + "," + std::to_string(j) + ")";
}

} // namespace

CheckResult check_C1(const Net& net) {
    const NetConfig& config = net.config();
    const int n = config.n();
    const bool keep = n <= witness_cap;
    CheckResult result;
    for (int i = 1; i <= n - 1; ++i) {
        bool have_first = false;
        int first_j = -1;
        Vec2 first{Rational(0), Rational(0)};
        bool line_ok = true;
        for (int j = 0; j <= n - 1; ++j) {
            if (j == i || j == i - 1) continue;
            Vec2 a = net.at(i, j + 1) - net.at(i, j);
            if (!have_first) {
                first = a;
                first_j = j;
                have_first = true;
                continue;
            }
            if (a != first) {
                line_ok = false;
                record_violation(result,
                                 "i=" + std::to_string(i) + ", j=" + std::to_string(first_j) +
                                     " vs j=" + std::to_string(j),
                                 to_string(first), to_string(a));
            }
        }
        if (have_first) {
            Vec2 b = net.at(i, i + 1) - net.at(i, i - 1);
            if (b != Rational(2) * first) {
                line_ok = false;
                record_violation(result, "i=" + std::to_string(i) + ", b vs 2a", to_string(b),
                                 to_string(Rational(2) * first));
            }
        }
        if (keep && line_ok && have_first) {
            result.witnesses.push_back({index_id("i", i), {first.dx.to_string(), first.dy.to_string()}});
        }
    }
    return result;
}

CheckResult check_C2(const Net& net) {
    const NetConfig& config = net.config();
    const int n = config.n();
    const bool keep = n <= witness_cap;
    CheckResult result;
    for (int i = 0; i + 3 <= n; ++i) {
        for (int j = i + 2; j + 1 <= n; ++j) {
            Rational t = area_T(config, i, j);
            Rational tp = area_Tprime(config, i, j);
            if (t != tp) {
                record_violation(result, quad_id(i, j), t.to_string(), tp.to_string());
            } else if (keep) {
                result.witnesses.push_back({quad_id(i, j), {t.to_string()}});
            }
        }
    }
    return result;
}

CheckResult check_C3(const Net& net) {
    const NetConfig& config = net.config();
    const int n = config.n();
    const bool keep = n <= witness_cap;
    CheckResult result;
    for (int d = 2; d <= n - 1; ++d) {
        Rational reference = area_Q(config, 0, d);
        bool diagonal_ok = true;
        for (int i = 1; i + d + 1 <= n; ++i) {
            Rational q = area_Q(config, i, i + d);
            if (q != reference) {
                diagonal_ok = false;
                record_violation(result,
                                 "d=" + std::to_string(d) + ": " + quad_id(i, i + d) + " vs " + quad_id(0, d),
                                 q.to_string(), reference.to_string());
            }
        }
        if (keep && diagonal_ok) {
            result.witnesses.push_back({index_id("d", d), {reference.to_string()}});
        }
    }
    return result;
}

CheckResult check_C4(const Net& net) {
    const NetConfig& config = net.config();
    const int n = config.n();
    const bool keep = n <= witness_cap;
    CheckResult result;
    if (n < 2) return result;
    Rational reference = area_Tboundary(config, 0);
    if (keep) result.witnesses.push_back({"T_0", {reference.to_string()}});
    for (int i = 1; i + 2 <= n; ++i) {
        Rational t = area_Tboundary(config, i);
        if (t != reference) {
            record_violation(result, "T_" + std::to_string(i) + " vs T_0", t.to_string(),
                             reference.to_string());
        } else if (keep) {
            result.witnesses.push_back({"T_" + std::to_string(i), {t.to_string()}});
        }
    }
    return result;
}

namespace {

CheckResult check_triangulation_independence(const Net& net) {
    const NetConfig& config = net.config();
    const int n = config.n();
    const bool keep = n <= witness_cap;
    CheckResult result;
    for (int i = 0; i + 3 <= n; ++i) {
        for (int j = i + 2; j + 1 <= n; ++j) {
            Rational q = area_Q(config, i, j);
            Rational split = area_T(config, i, j) + area_Tprime(config, i, j);
            Rational other = area_Tbar(config, i, j) + area_Tbarprime(config, i, j);
            bool ok = true;
            if (split != q) {
                ok = false;
                record_violation(result, quad_id(i, j) + ": T+T' vs shoelace", split.to_string(),
                                 q.to_string());
            }
            if (other != q) {
                ok = false;
                record_violation(result, quad_id(i, j) + ": Tbar+Tbar' vs shoelace", other.to_string(),
                                 q.to_string());
            }
            if (keep && ok) result.witnesses.push_back({quad_id(i, j), {q.to_string()}});
        }
    }
    return result;
}

CheckResult check_diagonal_identity(const Net& net) {
    const NetConfig& config = net.config();
    const int n = config.n();
    const bool keep = n <= witness_cap;
    CheckResult result;
    for (int d = 2; d <= n - 1; ++d) {
        for (int i = 0; i + d + 2 <= n; ++i) {
            Rational lhs = diagonal_length_sq(config, i, i + d);
            Rational rhs = diagonal_length_sq(config, i + 1, i + d + 1);
            if (lhs != rhs) {
                record_violation(result,
                                 "d(" + std::to_string(i) + "," + std::to_string(i + d) + ") vs d(" +
                                     std::to_string(i + 1) + "," + std::to_string(i + d + 1) + ")",
                                 lhs.to_string(), rhs.to_string());
            } else if (keep) {
                result.witnesses.push_back(
                    {"d(" + std::to_string(i) + "," + std::to_string(i + d) + ")", {lhs.to_string()}});
            }
        }
    }
    return result;
}

CheckResult check_b_equals_2a(const Net& net) {
    const NetConfig& config = net.config();
    const int n = config.n();
    const bool keep = n <= witness_cap;
    CheckResult result;
    for (int i = 1; i <= n - 1; ++i) {
        Vec2 b = net.at(i, i + 1) - net.at(i, i - 1);
        bool line_ok = true;
        for (int j = 0; j <= n - 1; ++j) {
            if (j == i || j == i - 1) continue;
            Vec2 twice_a = Rational(2) * (net.at(i, j + 1) - net.at(i, j));
            if (b != twice_a) {
                line_ok = false;
                record_violation(result, "i=" + std::to_string(i) + ", j=" + std::to_string(j),
                                 to_string(b), to_string(twice_a));
            }
        }
        if (keep && line_ok) {
            result.witnesses.push_back({index_id("i", i), {b.dx.to_string(), b.dy.to_string()}});
        }
    }
    return result;
}

CheckResult check_s_symmetry(const Net& net) {
    const NetConfig& config = net.config();
    const int n = config.n();
    const bool keep = n <= witness_cap;
    CheckResult result;
    if (!config.frame().is_right() || !config.spacing().is_equidistant()) return result;

    std::map<Rational, std::vector<int>> groups;
    for (int i = 1; i <= n - 1; ++i) {
        groups[segment_length_sq(config, i)].push_back(i);
    }
    for (const auto& [value, indexes] : groups) {
        // The mirror pair {i, N-i} must share a value and nothing else may.
        const int i = indexes.front();
        std::vector<int> expected = (i == n - i) ? std::vector<int>{i} : std::vector<int>{i, n - i};
        if (indexes != expected) {
            std::string members;
            for (int k : indexes) members += (members.empty() ? "s(" : ", s(") + std::to_string(k) + ")";
            record_violation(result, members + " share a squared length", value.to_string(),
                             value.to_string());
        } else if (keep && i <= n - i) {
            result.witnesses.push_back(
                {"s(" + std::to_string(i) + ")=s(" + std::to_string(n - i) + ")", {value.to_string()}});
        }
    }
    // Mirror equality itself (the grouping above catches asymmetry as a
    // group of the wrong shape, but state it directly as well).
    for (int i = 1; i <= n - 1; ++i) {
        if (segment_length_sq(config, i) != segment_length_sq(config, n - i)) {
            record_violation(result, "s(" + std::to_string(i) + ") vs s(" + std::to_string(n - i) + ")",
                             segment_length_sq(config, i).to_string(),
                             segment_length_sq(config, n - i).to_string());
        }
    }
    return result;
}

CheckResult check_acute_obtuse(const Net& net) {
    const NetConfig& config = net.config();
    CheckResult result;
    if (config.frame().b.is_zero()) return result;
    NetConfig mirrored(config.n(), FrameParams{config.frame().a, -config.frame().b}, config.spacing());
    Rational lhs = total_area(config);
    Rational rhs = total_area(mirrored);
    if (lhs != rhs) {
        record_violation(result, "total(a,b) vs total(a,-b)", lhs.to_string(), rhs.to_string());
    } else {
        result.witnesses.push_back({"total", {lhs.to_string(), rhs.to_string()}});
    }
    return result;
}

} // namespace

PropertyReport check_all(const Net& net) {
    PropertyReport report;
    report.c1 = check_C1(net);
    report.c2 = check_C2(net);
    report.c3 = check_C3(net);
    report.c4 = check_C4(net);
    report.triangulation_independence = check_triangulation_independence(net);
    report.diagonal_identity = check_diagonal_identity(net);
    report.b_equals_2a = check_b_equals_2a(net);
    report.s_symmetry = check_s_symmetry(net);
    report.acute_obtuse_area = check_acute_obtuse(net);
    return report;
}

} // namespace stringart
