#include "thetalift/format.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <vector>

namespace thetalift {

namespace {

std::string strip(const std::string& s) {
    size_t b = s.find_first_not_of(" \t");
    size_t e = s.find_last_not_of(" \t");
    if (b == std::string::npos) return "";
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char ch : s) {
        if (ch == sep) {
            out.push_back(strip(cur));
            cur.clear();
        } else {
            cur.push_back(ch);
        }
    }
    out.push_back(strip(cur));
    return out;
}

long long parse_ll(const std::string& s) {
    long long v = 0;
    auto t = strip(s);
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc() || p != t.data() + t.size())
        throw ParseError("bad integer '" + s + "'");
    return v;
}

}  // namespace

Rat parse_rat(const std::string& s) {
    auto parts = split(s, '/');
    if (parts.size() == 1) return Rat(parse_ll(parts[0]));
    if (parts.size() == 2) return Rat(parse_ll(parts[0]), parse_ll(parts[1]));
    throw ParseError("bad rational '" + s + "'");
}

TorsionCoord parse_coord(const std::string& s) {
    auto parts = split(s, ',');
    if (parts.size() != 2) throw ParseError("torsion coordinate must be 'u,v': '" + s + "'");
    return TorsionCoord(parse_rat(parts[0]), parse_rat(parts[1]));
}

TorsionPoint parse_point(const std::string& s) {
    auto parts = split(s, ';');
    if (parts.size() != 2) throw ParseError("torsion point must be 'u1,v1;u2,v2': '" + s + "'");
    return TorsionPoint(parse_coord(parts[0]), parse_coord(parts[1]));
}

Mat2Q parse_mat(const std::string& s) {
    auto rows = split(s, ';');
    if (rows.size() != 2) throw ParseError("matrix must be 'a,b;c,d': '" + s + "'");
    auto r0 = split(rows[0], ',');
    auto r1 = split(rows[1], ',');
    if (r0.size() != 2 || r1.size() != 2) throw ParseError("matrix must be 'a,b;c,d': '" + s + "'");
    return Mat2Q(parse_rat(r0[0]), parse_rat(r0[1]), parse_rat(r1[0]), parse_rat(r1[1]));
}

cplx parse_complex(const std::string& raw) {
    std::string s = strip(raw);
    if (s.empty()) throw ParseError("empty complex literal");
    if (s == "i") return cplx(0, 1);
    if (s == "-i") return cplx(0, -1);
    // forms: re, im*i, imi, re+im*i, re-im*i
    auto read_double = [&](const std::string& t) -> double {
        try {
            size_t pos = 0;
            double v = std::stod(t, &pos);
            if (pos != t.size()) throw ParseError("bad number '" + t + "'");
            return v;
        } catch (const std::invalid_argument&) {
            throw ParseError("bad number '" + t + "'");
        } catch (const std::out_of_range&) {
            throw ParseError("number out of range '" + t + "'");
        }
    };
    auto read_im = [&](std::string t) -> double {
        if (!t.empty() && t.back() == 'i') t.pop_back();
        if (!t.empty() && t.back() == '*') t.pop_back();
        if (t.empty() || t == "+") return 1.0;
        if (t == "-") return -1.0;
        return read_double(t);
    };
    if (s.back() == 'i') {
        // locate split between real and imaginary part: last +/- not at front
        // and not part of an exponent
        for (size_t k = s.size() - 1; k > 0; --k) {
            if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
                return cplx(read_double(s.substr(0, k)), read_im(s.substr(k)));
            }
        }
        return cplx(0.0, read_im(s));
    }
    return cplx(read_double(s), 0.0);
}

UpperHalfPoint parse_tau(const std::string& raw) {
    std::string s = strip(raw);
    if (s.rfind("cm:", 0) == 0) {
        auto parts = split(s.substr(3), ',');
        if (parts.size() != 2) throw ParseError("cm tau must be 'cm:p,q': '" + raw + "'");
        return UpperHalfPoint::from_cm(parse_ll(parts[0]), parse_ll(parts[1]));
    }
    return UpperHalfPoint(parse_complex(s));
}

TorsionCycle parse_cycle(const std::string& raw) {
    // terms separated by '+', each "c*point" or "point"
    std::vector<std::pair<long long, TorsionPoint>> terms;
    for (const auto& term : split(raw, '+')) {
        if (term.empty()) continue;
        auto star = term.find('*');
        if (star == std::string::npos) {
            terms.emplace_back(1, parse_point(term));
        } else {
            terms.emplace_back(parse_ll(term.substr(0, star)), parse_point(term.substr(star + 1)));
        }
    }
    return TorsionCycle(std::move(terms));
}

std::string to_string(const Rat& r) {
    if (r.den == 1) return std::to_string(r.num);
    return std::to_string(r.num) + "/" + std::to_string(r.den);
}

std::string to_string(const TorsionCoord& c) { return to_string(c.u) + "," + to_string(c.v); }

std::string to_string(const TorsionPoint& p) { return to_string(p.x1) + ";" + to_string(p.x2); }

std::string to_string(const Mat2Q& m) {
    return to_string(m.a) + "," + to_string(m.b) + ";" + to_string(m.c) + "," + to_string(m.d);
}

std::string to_string(const cplx& z) {
    char buf[80];
    std::snprintf(buf, sizeof(buf), "%.17g%+.17g*i", z.real(), z.imag());
    return buf;
}

}  // namespace thetalift
