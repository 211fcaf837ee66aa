#include "walkclass/stepset.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <stdexcept>

namespace walkclass {

const std::vector<Step>& StepSet::candidates(int dim) {
    static const std::vector<Step> two = [] {
        std::vector<Step> v;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                if (dx || dy) v.push_back({dx, dy, 0});
        return v;
    }();
    static const std::vector<Step> three = [] {
        std::vector<Step> v;
        for (int dx = -1; dx <= 1; ++dx)
            for (int dy = -1; dy <= 1; ++dy)
                for (int dz = -1; dz <= 1; ++dz)
                    if (dx || dy || dz) v.push_back({dx, dy, dz});
        return v;
    }();
    if (dim == 2) return two;
    if (dim == 3) return three;
    throw std::invalid_argument("StepSet: dimension must be 2 or 3");
}

StepSet StepSet::from_bits(const std::string& bits) {
    StepSet s;
    if (bits.size() == 8) s.dim = 2;
    else if (bits.size() == 26) s.dim = 3;
    else throw std::invalid_argument("StepSet: bitstring length must be 8 or 26");
    const auto& cand = candidates(s.dim);
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits[i] == '1') s.steps.push_back(cand[i]);
        else if (bits[i] != '0') throw std::invalid_argument("StepSet: bad bitstring char");
    }
    return s;
}

StepSet StepSet::from_compass(const std::string& names) {
    static const std::map<std::string, Step> compass = {
        {"N", {0, 1, 0}},  {"S", {0, -1, 0}},  {"E", {1, 0, 0}},   {"W", {-1, 0, 0}},
        {"NE", {1, 1, 0}}, {"NW", {-1, 1, 0}}, {"SE", {1, -1, 0}}, {"SW", {-1, -1, 0}}};
    StepSet s;
    s.dim = 2;
    std::stringstream ss(names);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
        if (tok.empty()) continue;
        auto it = compass.find(tok);
        if (it == compass.end()) throw std::invalid_argument("StepSet: unknown compass name " + tok);
        s.steps.push_back(it->second);
    }
    std::sort(s.steps.begin(), s.steps.end());
    s.steps.erase(std::unique(s.steps.begin(), s.steps.end()), s.steps.end());
    return s;
}

std::string StepSet::bits() const {
    const auto& cand = candidates(dim);
    std::string b(cand.size(), '0');
    for (const auto& st : steps) {
        auto it = std::lower_bound(cand.begin(), cand.end(), st);
        b[static_cast<std::size_t>(it - cand.begin())] = '1';
    }
    return b;
}

bool StepSet::contains(const Step& s) const {
    return std::binary_search(steps.begin(), steps.end(), s);
}

bool operator==(const StepSet& a, const StepSet& b) {
    return a.dim == b.dim && a.steps == b.steps;
}

std::vector<StepSet> enumerate_stepsets(int dim, int max_size) {
    const auto& cand = StepSet::candidates(dim);
    std::size_t n = cand.size();
    std::vector<std::string> bitstrings;
    std::string cur(n, '0');
    // depth-first in lexicographic string order with a popcount cap
    struct Rec {
        std::size_t n;
        int cap;
        std::vector<std::string>& out;
        std::string& cur;
        void go(std::size_t i, int used) {
            if (i == n) { out.push_back(cur); return; }
            go(i + 1, used); // '0' first keeps lexicographic order
            if (used < cap) {
                cur[i] = '1';
                go(i + 1, used + 1);
                cur[i] = '0';
            }
        }
    } rec{n, max_size, bitstrings, cur};
    rec.go(0, 0);
    std::sort(bitstrings.begin(), bitstrings.end());
    std::vector<StepSet> out;
    out.reserve(bitstrings.size());
    for (const auto& b : bitstrings) out.push_back(StepSet::from_bits(b));
    return out;
}

StepSet reverse_steps(const StepSet& s) {
    StepSet r;
    r.dim = s.dim;
    r.steps = s.steps;
    for (auto& st : r.steps) { st[0] = -st[0]; st[1] = -st[1]; st[2] = -st[2]; }
    std::sort(r.steps.begin(), r.steps.end());
    return r;
}

} // namespace walkclass
