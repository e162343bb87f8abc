#include "tilekit/classifier.hpp"

#include <algorithm>
#include <cmath>

#include "tilekit/errors.hpp"

namespace tilekit {

std::string tile_type_name(TileType t) {
    switch (t) {
        case TileType::Triangle: return "Triangle";
        case TileType::Quadrilateral: return "Quadrilateral";
        case TileType::Hex1: return "Hex1";
        case TileType::Hex2: return "Hex2";
        case TileType::Hex3: return "Hex3";
        default: break;
    }
    int k = static_cast<int>(t) - static_cast<int>(TileType::Pent1) + 1;
    return "Pent" + std::to_string(k);
}

Rational default_epsilon() {
    return Rational(mpq_class(mpz_class(1), mpz_class(1) << 40));
}

namespace {

struct BaseMetrics {
    std::vector<Rational> sq_len;   // sq_len[k]: edge arriving at vertex k
    std::vector<BigFloat> angle;    // angle[k]: inner angle at vertex k
};

BaseMetrics base_metrics(const ConvexPolygon& p, const Rational& eps_angle) {
    const int n = p.size();
    BaseMetrics m;
    m.sq_len.reserve(n);
    m.angle.reserve(n);
    for (int k = 0; k < n; ++k) m.sq_len.push_back(p.edge_vector(k).norm_sq());
    for (int k = 0; k < n; ++k) {
        Vec2 in = p.edge_vector(k);
        Vec2 out = p.edge_vector(k + 1);
        // Inner angle at vertex k: atan2(cross, -dot) lands in (0, pi) for a
        // strictly convex counterclockwise polygon.
        m.angle.push_back(BigFloat::atan2(cross(in, out), -dot(in, out)));
    }
    BigFloat pi = BigFloat::pi();
    BigFloat sum(0L);
    for (const BigFloat& a : m.angle) {
        if (a.within(eps_angle)) throw DegenerateAngle("inner angle too close to 0");
        if ((a - pi).within(eps_angle)) throw DegenerateAngle("inner angle too close to pi");
        sum += a;
    }
    if (!(sum - pi * long(n - 2)).within(eps_angle))
        throw DegenerateAngle("angle sum differs from (n-2)*pi");
    return m;
}

int mod(int a, int n) { return ((a % n) + n) % n; }

PolygonMetrics remap(const BaseMetrics& base, int n, Labeling lab) {
    PolygonMetrics out;
    out.n = n;
    out.labeling = lab;
    out.sq_edge_lengths.reserve(n);
    out.angles_hp.reserve(n);
    out.angles.reserve(n);
    for (int j = 0; j < n; ++j) {
        int va = lab.reflected ? mod(lab.offset - j, n) : mod(lab.offset + j, n);
        int ea = lab.reflected ? mod(lab.offset - j + 1, n) : mod(lab.offset + j, n);
        out.angles_hp.push_back(base.angle[va]);
        out.angles.push_back(base.angle[va].to_double());
        out.sq_edge_lengths.push_back(base.sq_len[ea]);
    }
    return out;
}

// deviation of sum(coeffs*alpha) from rhs*pi
BigFloat angle_deviation(const AngleCondition& c, const PolygonMetrics& m) {
    BigFloat acc(0L);
    for (size_t i = 0; i < c.coeffs.size(); ++i)
        if (c.coeffs[i] != 0) acc += m.angles_hp[i] * long(c.coeffs[i]);
    acc -= BigFloat::pi() * c.rhs_pi;
    return acc;
}

struct SideTerm {
    Rational coef_sq;  // squared coefficient
    Rational len_sq;   // squared edge length
};

std::vector<SideTerm> side_terms(const std::vector<LengthCondition::Term>& ts,
                                 const PolygonMetrics& m) {
    std::vector<SideTerm> out;
    out.reserve(ts.size());
    for (const auto& t : ts) {
        Rational c(t.coef);
        out.push_back({c * c, m.sq_edge_lengths[t.edge - 1]});
    }
    return out;
}

BigFloat side_value(const std::vector<SideTerm>& side) {
    BigFloat acc(0L);
    for (const auto& t : side) acc += (BigFloat(t.coef_sq * t.len_sq)).sqrt();
    return acc;
}

// Exactly decides sqrt(a.coef_sq*a.len_sq) + sqrt(b...) == sqrt(c...).
bool two_vs_one_equal(const SideTerm& a, const SideTerm& b, const SideTerm& c) {
    Rational x = a.coef_sq * a.len_sq;
    Rational y = b.coef_sq * b.len_sq;
    Rational z = c.coef_sq * c.len_sq;
    Rational t = z - x - y;
    if (t.sign() < 0) return false;
    return t * t == Rational(4) * x * y;
}

bool length_condition_holds(const LengthCondition& cond, const PolygonMetrics& m,
                            const Rational& eps_len, double* deviation) {
    auto lhs = side_terms(cond.lhs, m);
    auto rhs = side_terms(cond.rhs, m);
    if (deviation) *deviation = std::abs((side_value(lhs) - side_value(rhs)).to_double());

    if (lhs.size() == 1 && rhs.size() == 1)
        return lhs[0].coef_sq * lhs[0].len_sq == rhs[0].coef_sq * rhs[0].len_sq;
    if (lhs.size() == 2 && rhs.size() == 1) return two_vs_one_equal(lhs[0], lhs[1], rhs[0]);
    if (lhs.size() == 1 && rhs.size() == 2) return two_vs_one_equal(rhs[0], rhs[1], lhs[0]);
    return (side_value(lhs) - side_value(rhs)).within(eps_len);
}

MatchReport classify_core(const ConvexPolygon& p, const std::vector<TypeRule>& rules,
                          const Rational& eps_angle, const Rational& eps_len) {
    const int n = p.size();
    BaseMetrics base = base_metrics(p, eps_angle);

    MatchReport report;
    for (int offset = 0; offset < n; ++offset) {
        for (bool reflected : {false, true}) {
            PolygonMetrics m = remap(base, n, {offset, reflected});
            for (const TypeRule& rule : rules) {
                bool ok = true;
                double worst = 0.0;
                for (const AngleCondition& c : rule.angle_conditions) {
                    BigFloat dev = angle_deviation(c, m);
                    worst = std::max(worst, std::abs(dev.to_double()));
                    if (!dev.within(eps_angle)) ok = false;
                }
                for (const LengthCondition& c : rule.length_conditions) {
                    double dev = 0.0;
                    if (!length_condition_holds(c, m, eps_len, &dev)) ok = false;
                    worst = std::max(worst, dev);
                }
                auto it = report.residuals.find(rule.tag);
                if (it == report.residuals.end() || worst < it->second)
                    report.residuals[rule.tag] = worst;
                if (ok) report.matches.push_back({rule.tag, {offset, reflected}});
            }
        }
    }
    report.verdict = report.matches.empty() ? Verdict::NotTile : Verdict::Tile;
    return report;
}

}  // namespace

PolygonMetrics compute_metrics(const ConvexPolygon& p, Labeling labeling,
                               const Rational& eps_angle) {
    return remap(base_metrics(p, eps_angle), p.size(), labeling);
}

std::set<TileType> MatchReport::matched_types() const {
    std::set<TileType> out;
    for (const Match& m : matches) out.insert(m.type);
    return out;
}

const std::vector<TypeRule>& pentagon_rules() {
    // Condition groups for the fifteen pentagon tile types. Two printed
    // constants contradict the pentagon angle sum 3*pi and are corrected here:
    // group 15 uses alpha2 = 3pi/4, and group 9 uses 2*alpha3 + alpha4 = 2pi.
    static const std::vector<TypeRule> rules = {
        {TileType::Pent1, {{{1, 1, 1, 0, 0}, 2}}, {}},
        {TileType::Pent2, {{{1, 1, 0, 1, 0}, 2}}, {{{{1, 1}}, {{1, 4}}}}},
        {TileType::Pent3,
         {{{1, 0, 0, 0, 0}, {2, 3}}, {{0, 0, 1, 0, 0}, {2, 3}}, {{0, 0, 0, 1, 0}, {2, 3}}},
         {{{{1, 1}}, {{1, 2}}}, {{{1, 4}}, {{1, 3}, {1, 5}}}}},
        {TileType::Pent4,
         {{{1, 0, 0, 0, 0}, {1, 2}}, {{0, 0, 1, 0, 0}, {1, 2}}},
         {{{{1, 1}}, {{1, 2}}}, {{{1, 3}}, {{1, 4}}}}},
        {TileType::Pent5,
         {{{1, 0, 0, 0, 0}, {1, 3}}, {{0, 0, 1, 0, 0}, {2, 3}}},
         {{{{1, 1}}, {{1, 2}}}, {{{1, 3}}, {{1, 4}}}}},
        {TileType::Pent6,
         {{{1, 1, 0, 1, 0}, 2}, {{1, 0, -2, 0, 0}, 0}},
         {{{{1, 1}}, {{1, 2}}}, {{{1, 1}}, {{1, 5}}}, {{{1, 3}}, {{1, 4}}}}},
        {TileType::Pent7,
         {{{0, 2, 1, 0, 0}, 2}, {{1, 0, 0, 2, 0}, 2}},
         {{{{1, 1}}, {{1, 2}}}, {{{1, 2}}, {{1, 3}}}, {{{1, 3}}, {{1, 4}}}}},
        {TileType::Pent8,
         {{{2, 1, 0, 0, 0}, 2}, {{0, 0, 1, 2, 0}, 2}},
         {{{{1, 1}}, {{1, 2}}}, {{{1, 2}}, {{1, 3}}}, {{{1, 3}}, {{1, 4}}}}},
        {TileType::Pent9,
         {{{0, 0, 0, 0, 1}, {1, 2}},
          {{1, 0, 0, 1, 0}, 1},
          {{0, 2, 0, -1, 0}, 1},
          {{0, 0, 2, 1, 0}, 2}},
         {{{{1, 1}}, {{1, 5}}}, {{{1, 1}}, {{1, 2}, {1, 4}}}}},
        {TileType::Pent10,
         {{{0, 1, 0, 0, 2}, 2}, {{0, 0, 1, 2, 0}, 2}},
         {{{{1, 1}}, {{1, 2}}}, {{{1, 2}}, {{1, 3}}}, {{{1, 3}}, {{1, 4}}}}},
        {TileType::Pent11,
         {{{1, 0, 0, 0, 0}, {1, 2}}, {{0, 0, 1, 0, 1}, 1}, {{0, 2, 1, 0, 0}, 2}},
         {{{{2, 1}, {1, 3}}, {{1, 4}}}, {{{1, 4}}, {{1, 5}}}}},
        {TileType::Pent12,
         {{{1, 0, 0, 0, 0}, {1, 2}}, {{0, 0, 1, 0, 1}, 1}, {{0, 2, 1, 0, 0}, 2}},
         {{{{2, 1}}, {{1, 4}}}, {{{1, 3}, {1, 5}}, {{1, 4}}}}},
        {TileType::Pent13,
         {{{1, 0, 0, 0, 0}, {1, 2}},
          {{0, 0, 1, 0, 0}, {1, 2}},
          {{0, 2, 0, 1, 0}, 2},
          {{0, 0, 0, 1, 2}, 2}},
         {{{{1, 3}}, {{1, 4}}}, {{{2, 3}}, {{1, 5}}}}},
        {TileType::Pent14,
         {{{1, 0, 0, 0, 0}, {1, 2}}, {{0, 2, 1, 0, 0}, 2}, {{0, 0, 1, 0, 1}, 1}},
         {{{{1, 1}}, {{1, 3}}}, {{{2, 1}}, {{1, 4}}}, {{{1, 4}}, {{1, 5}}}}},
        {TileType::Pent15,
         {{{1, 0, 0, 0, 0}, {1, 3}},
          {{0, 1, 0, 0, 0}, {3, 4}},
          {{0, 0, 1, 0, 0}, {7, 12}},
          {{0, 0, 0, 1, 0}, {1, 2}},
          {{0, 0, 0, 0, 1}, {5, 6}}},
         {{{{1, 1}}, {{2, 2}}}, {{{1, 2}}, {{1, 4}}}, {{{1, 4}}, {{1, 5}}}}},
    };
    return rules;
}

const std::vector<TypeRule>& hexagon_rules() {
    static const std::vector<TypeRule> rules = {
        {TileType::Hex1, {{{1, 1, 1, 0, 0, 0}, 2}}, {{{{1, 1}}, {{1, 4}}}}},
        {TileType::Hex2,
         {{{1, 1, 0, 1, 0, 0}, 2}},
         {{{{1, 1}}, {{1, 4}}}, {{{1, 3}}, {{1, 5}}}}},
        {TileType::Hex3,
         {{{1, 0, 0, 0, 0, 0}, {2, 3}},
          {{0, 0, 1, 0, 0, 0}, {2, 3}},
          {{0, 0, 0, 0, 1, 0}, {2, 3}}},
         {{{{1, 1}}, {{1, 2}}}, {{{1, 3}}, {{1, 4}}}, {{{1, 5}}, {{1, 6}}}}},
    };
    return rules;
}

MatchReport classify_hexagon(const ConvexPolygon& p, const Rational& eps_angle,
                             const Rational& eps_len) {
    if (p.size() != 6) throw WrongArity("hexagon classifier needs a 6-gon");
    return classify_core(p, hexagon_rules(), eps_angle, eps_len);
}

MatchReport classify_pentagon(const ConvexPolygon& p, const Rational& eps_angle,
                              const Rational& eps_len) {
    if (p.size() != 5) throw WrongArity("pentagon classifier needs a 5-gon");
    return classify_core(p, pentagon_rules(), eps_angle, eps_len);
}

MatchReport classify(const ConvexPolygon& p, const Rational& eps_angle, const Rational& eps_len) {
    MatchReport report;
    switch (p.size()) {
        case 3:
            report.verdict = Verdict::Tile;
            report.matches.push_back({TileType::Triangle, {0, false}});
            return report;
        case 4:
            report.verdict = Verdict::Tile;
            report.matches.push_back({TileType::Quadrilateral, {0, false}});
            return report;
        case 5: return classify_pentagon(p, eps_angle, eps_len);
        case 6: return classify_hexagon(p, eps_angle, eps_len);
        default:
            report.verdict = Verdict::NotTile;
            return report;
    }
}

bool edge_count_gate(const ConvexPolygon& p) { return p.size() <= 6; }

bool fedorov_check(const ConvexPolygon& p) {
    if (p.size() != 4 && p.size() != 6) return false;
    return centrally_symmetric_center(p).has_value();
}

const std::vector<std::vector<int>>& archimedean_listed_types() {
    static const std::vector<std::vector<int>> listed = {
        {3, 3, 3, 3, 3, 3}, {3, 3, 3, 3, 6}, {3, 3, 3, 4, 4}, {3, 3, 4, 3, 4},
        {3, 4, 6, 4},       {3, 6, 3, 6},    {3, 12, 12},     {4, 4, 4, 4},
        {4, 6, 12},         {4, 8, 8},       {6, 6, 6},
    };
    return listed;
}

namespace {

bool cyclic_equal(const std::vector<int>& a, const std::vector<int>& b) {
    if (a.size() != b.size()) return false;
    const int n = static_cast<int>(a.size());
    for (int off = 0; off < n; ++off) {
        bool fwd = true, rev = true;
        for (int i = 0; i < n; ++i) {
            if (a[i] != b[(off + i) % n]) fwd = false;
            if (a[i] != b[mod(off - i, n)]) rev = false;
        }
        if (fwd || rev) return true;
    }
    return false;
}

}  // namespace

ArchimedeanStatus archimedean_vertex_check(const std::vector<int>& seq) {
    if (seq.size() < 3 || seq.size() > 6) throw Error("vertex sequence length must be 3..6");
    Rational sum(0);
    for (int k : seq) {
        if (k < 3) throw Error("vertex sequence entries must be >= 3");
        sum += Rational(1) - Rational(2, k);
    }
    if (sum != Rational(2)) return ArchimedeanStatus::Invalid;
    for (const auto& type : archimedean_listed_types())
        if (cyclic_equal(seq, type)) return ArchimedeanStatus::Listed;
    return ArchimedeanStatus::AngleValidOnly;
}

}  // namespace tilekit
