#include "mq/poly.hpp"
#include <sstream>

namespace mq {

long grade_w(const Monomial7& m) { return m.weighted_degree(QuinticWeights::weights); }

long grade_e0(const Monomial7& m) {
    static constexpr std::array<int, 7> w{1, 2, 3, 4, 5, 3, 2};
    return m.weighted_degree(w);
}

long grade_e1(const Monomial7& m) {
    static constexpr std::array<int, 7> w{0, 0, 0, 0, 0, 1, 1};
    return m.weighted_degree(w);
}

WeightedPoly wp_var(int i, int power) { return WeightedPoly::variable(i, power); }
WeightedPoly wp_const(const Rat& c) { return WeightedPoly::constant(c); }

WeightedPoly wp_disc() { return wp_var(4) - wp_var(0, 5); }

std::vector<Monomial7> enumerate_monomials(int e0, int e1) {
    // e1 = i5 + i6, e0 = i0 + 2 i1 + 3 i2 + 4 i3 + 5 i4 + 3 i5 + 2 i6
    std::vector<Monomial7> out;
    if (e0 < 0 || e1 < 0) return out;
    for (int i5 = 0; i5 <= e1; ++i5) {
        int i6 = e1 - i5;
        int rem = e0 - 3 * i5 - 2 * i6;
        if (rem < 0) continue;
        for (int i4 = 0; 5 * i4 <= rem; ++i4)
            for (int i3 = 0; 5 * i4 + 4 * i3 <= rem; ++i3)
                for (int i2 = 0; 5 * i4 + 4 * i3 + 3 * i2 <= rem; ++i2)
                    for (int i1 = 0; 5 * i4 + 4 * i3 + 3 * i2 + 2 * i1 <= rem; ++i1) {
                        int i0 = rem - 5 * i4 - 4 * i3 - 3 * i2 - 2 * i1;
                        Monomial7 m;
                        m.e = {static_cast<int16_t>(i0), static_cast<int16_t>(i1),
                               static_cast<int16_t>(i2), static_cast<int16_t>(i3),
                               static_cast<int16_t>(i4), static_cast<int16_t>(i5),
                               static_cast<int16_t>(i6)};
                        out.push_back(m);
                    }
    }
    // canonical order
    std::sort(out.begin(), out.end(), MonoCmp<7, QuinticWeights>{});
    return out;
}

std::string wpoly_str(const WeightedPoly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : p.terms()) {
        Rat a = c;
        if (first) {
            if (a < 0) { os << "-"; a = -a; }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        bool is_const = true;
        for (int i = 0; i < 7; ++i) if (m.e[i] != 0) is_const = false;
        if (is_const) {
            os << rat_str(a);
            continue;
        }
        bool need_star = false;
        if (a != 1) { os << rat_str(a); need_star = true; }
        for (int i = 0; i < 7; ++i) {
            if (m.e[i] == 0) continue;
            if (need_star) os << "*";
            os << "t" << i;
            if (m.e[i] > 1) os << "^" << static_cast<int>(m.e[i]);
            need_star = true;
        }
    }
    return os.str();
}

WeightedPoly wpoly_parse(const std::string& text) {
    auto fail = [&]() { throw std::invalid_argument("wpoly_parse: bad input '" + text + "'"); };
    WeightedPoly p;
    size_t i = 0;
    const std::string& s = text;
    auto skipws = [&]() { while (i < s.size() && isspace(static_cast<unsigned char>(s[i]))) ++i; };
    int sign = 1;
    skipws();
    if (i < s.size() && s[i] == '0' && i + 1 >= s.size()) return p;
    while (i < s.size()) {
        skipws();
        if (i >= s.size()) break;
        if (s[i] == '+') { sign = 1; ++i; continue; }
        if (s[i] == '-') { sign = -1; ++i; continue; }
        Rat coef(1);
        size_t j = i;
        while (j < s.size() && (isdigit(static_cast<unsigned char>(s[j])) || s[j] == '/')) ++j;
        if (j > i) { coef = rat_from_string(s.substr(i, j - i)); i = j; }
        Monomial7 m;
        while (true) {
            skipws();
            if (i < s.size() && s[i] == '*') { ++i; skipws(); }
            if (i < s.size() && s[i] == 't') {
                ++i;
                if (i >= s.size() || !isdigit(static_cast<unsigned char>(s[i]))) fail();
                int var = s[i] - '0';
                if (var > 6) fail();
                ++i;
                int ex = 1;
                if (i < s.size() && s[i] == '^') {
                    ++i;
                    size_t k = i;
                    while (k < s.size() && isdigit(static_cast<unsigned char>(s[k]))) ++k;
                    if (k == i) fail();
                    ex = std::stoi(s.substr(i, k - i));
                    i = k;
                }
                m.e[var] = static_cast<int16_t>(m.e[var] + ex);
            } else {
                break;
            }
        }
        p.add_term(m, Rat(sign) * coef);
        sign = 1;
    }
    return p;
}

} // namespace mq
