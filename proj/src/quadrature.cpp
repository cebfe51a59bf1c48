#include "ns2g/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace ns2g {

namespace {

QuadratureRule make_degree2() {
    // Edge-midpoint rule.
    QuadratureRule r;
    r.exactness_degree = 2;
    r.points = {{0.5, 0.5, 0.0}, {0.0, 0.5, 0.5}, {0.5, 0.0, 0.5}};
    r.weights = {1.0 / 6.0, 1.0 / 6.0, 1.0 / 6.0};
    return r;
}

QuadratureRule make_degree5() {
    // Classical symmetric 7-point rule.
    QuadratureRule r;
    r.exactness_degree = 5;
    const double s15 = std::sqrt(15.0);
    const double a = (6.0 + s15) / 21.0;
    const double b = (6.0 - s15) / 21.0;
    const double wc = 9.0 / 80.0;
    const double wa = (155.0 + s15) / 2400.0;
    const double wb = (155.0 - s15) / 2400.0;
    r.points.push_back({1.0 / 3.0, 1.0 / 3.0, 1.0 / 3.0});
    r.weights.push_back(wc);
    for (auto [alpha, w] : {std::pair{a, wa}, std::pair{b, wb}}) {
        const double c = 1.0 - 2.0 * alpha;
        r.points.push_back({c, alpha, alpha});
        r.points.push_back({alpha, c, alpha});
        r.points.push_back({alpha, alpha, c});
        r.weights.insert(r.weights.end(), 3, w);
    }
    return r;
}

QuadratureRule make_degree7() {
    // 4x4 conical product of Gauss-Legendre and Gauss-Jacobi(1,0) rules.
    // All 16 weights positive.
    static const double pts[16][3] = {
        {0.06546699455501446386, 0.05710419611451768219, 0.02356836819338233237},
        {0.05021012321136977211, 0.27684301363812382770, 0.03538806789808594616},
        {0.02891208422438901272, 0.58359043236891682010, 0.02258404928236993136},
        {0.00970378512694611218, 0.86024013565621944780, 0.00542322591052525445},
        {0.31116455224435703440, 0.05710419611451768219, 0.04418508852236172574},
        {0.23864865973144292100, 0.27684301363812382770, 0.06634421610704973423},
        {0.13741910413457436840, 0.58359043236891682010, 0.04233972452174628905},
        {0.04612207990645204862, 0.86024013565621944780, 0.01016725956447878663},
        {0.63173125164112528340, 0.05710419611451768219, 0.04418508852236172574},
        {0.48450832663043325140, 0.27684301363812382770, 0.06634421610704973423},
        {0.27899046349650881150, 0.58359043236891682010, 0.04233972452174628905},
        {0.09363778443732850353, 0.86024013565621944780, 0.01016725956447878663},
        {0.87742880933046785390, 0.05710419611451768219, 0.02356836819338233237},
        {0.67294686315050640020, 0.27684301363812382770, 0.03538806789808594616},
        {0.38749748340669416720, 0.58359043236891682010, 0.02258404928236993136},
        {0.13005607921683444000, 0.86024013565621944780, 0.00542322591052525445},
    };
    QuadratureRule r;
    r.exactness_degree = 7;
    for (const auto& p : pts) {
        r.points.push_back({1.0 - p[0] - p[1], p[0], p[1]});
        r.weights.push_back(p[2]);
    }
    return r;
}

}  // namespace

const QuadratureRule& quadrature_rule(int degree) {
    static const QuadratureRule deg2 = make_degree2();
    static const QuadratureRule deg5 = make_degree5();
    static const QuadratureRule deg7 = make_degree7();
    switch (degree) {
        case 2: return deg2;
        case 5: return deg5;
        case 7: return deg7;
        default: throw std::invalid_argument("unsupported quadrature degree");
    }
}

}  // namespace ns2g
